#include "fpg/word.hpp"

#include "fpg/errors.hpp"
#include "scanner.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <stdexcept>

namespace fpg {

namespace {

void push_reduced(std::vector<Syllable>& out, const Generator& g,
                  const BigInt& e) {
  if (e == 0) return;
  if (!out.empty() && out.back().gen == g) {
    out.back().exponent += e;
    if (out.back().exponent == 0) out.pop_back();
  } else {
    out.push_back({g, e});
  }
}

constexpr long kMaxRepeat = 1'000'000;

}  // namespace

Generator::Generator(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_)) {
    throw UsageError("invalid generator name '" + name_ + "'");
  }
}

bool Generator::is_valid_name(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  std::size_t i = 1;
  auto body = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  while (i < name.size() && body(name[i])) ++i;
  if (i == name.size()) return true;
  if (name[i] != '#' || i + 1 == name.size()) return false;
  for (++i; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  }
  return true;
}

Word Word::reduce(std::span<const Syllable> raw) {
  std::vector<Syllable> out;
  out.reserve(raw.size());
  for (const auto& s : raw) push_reduced(out, s.gen, s.exponent);
  return Word(std::move(out));
}

Word Word::letter(const Generator& g, BigInt exponent) {
  if (exponent == 0) return {};
  return Word({Syllable{g, std::move(exponent)}});
}

BigInt Word::length() const {
  BigInt total = 0;
  for (const auto& s : syllables_) total += abs(s.exponent);
  return total;
}

std::size_t Word::letter_count() const {
  BigInt total = length();
  if (total > std::numeric_limits<std::size_t>::max() / 2) {
    throw std::overflow_error("word too long to expand");
  }
  return static_cast<std::size_t>(total);
}

BigInt Word::exponent_sum(const Generator& g) const {
  BigInt total = 0;
  for (const auto& s : syllables_) {
    if (s.gen == g) total += s.exponent;
  }
  return total;
}

std::set<Generator> Word::support() const {
  std::set<Generator> out;
  for (const auto& s : syllables_) out.insert(s.gen);
  return out;
}

int Word::compare(const Word& other) const {
  const auto& a = syllables_;
  const auto& b = other.syllables_;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i].gen != b[i].gen) return a[i].gen < b[i].gen ? -1 : 1;
    if (a[i].exponent != b[i].exponent) {
      return a[i].exponent < b[i].exponent ? -1 : 1;
    }
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Syllable> raw;
  raw.reserve(u.syllable_count() + v.syllable_count());
  raw.insert(raw.end(), u.syllables().begin(), u.syllables().end());
  raw.insert(raw.end(), v.syllables().begin(), v.syllables().end());
  return Word::reduce(raw);
}

Word invert(const Word& w) {
  std::vector<Syllable> raw;
  raw.reserve(w.syllable_count());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it) {
    raw.push_back({it->gen, -it->exponent});
  }
  return Word::reduce(raw);
}

Word power(const Word& w, const BigInt& n) {
  if (n == 0 || w.empty()) return {};
  if (n < 0) return power(invert(w), -n);
  if (n == 1) return w;
  auto [core, conj] = cyclic_reduce(w);
  Word body;
  if (core.syllable_count() == 1) {
    const auto& s = core.syllables().front();
    body = Word::letter(s.gen, s.exponent * n);
  } else {
    if (n > kMaxRepeat) throw std::overflow_error("power too large to expand");
    std::vector<Syllable> raw;
    long count = static_cast<long>(n);
    raw.reserve(core.syllable_count() * static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
      raw.insert(raw.end(), core.syllables().begin(), core.syllables().end());
    }
    body = Word::reduce(raw);
  }
  return conj * body * invert(conj);
}

Word commutator(const Word& u, const Word& v) {
  return invert(u) * invert(v) * u * v;
}

std::vector<std::pair<Generator, int>> letters(const Word& w) {
  std::vector<std::pair<Generator, int>> out;
  out.reserve(w.letter_count());
  for (const auto& s : w.syllables()) {
    int sign = s.exponent > 0 ? 1 : -1;
    for (BigInt i = 0; i < abs(s.exponent); ++i) out.emplace_back(s.gen, sign);
  }
  return out;
}

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& s = w.syllables();
  std::size_t lo = 0;
  std::size_t hi = s.size();
  std::vector<Syllable> conj;
  std::optional<Syllable> merged_tail;
  while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen) {
    BigInt total = s[lo].exponent + s[hi - 1].exponent;
    conj.push_back(s[lo]);
    if (total == 0) {
      ++lo;
      --hi;
      continue;
    }
    // g^e M g^f = g^e (M g^(e+f)) g^-e
    merged_tail = Syllable{s[lo].gen, total};
    ++lo;
    --hi;
    break;
  }
  std::vector<Syllable> core(s.begin() + static_cast<std::ptrdiff_t>(lo),
                             s.begin() + static_cast<std::ptrdiff_t>(hi));
  if (merged_tail) core.push_back(*merged_tail);
  return {Word::reduce(core), Word::reduce(conj)};
}

bool is_cyclically_reduced(const Word& w) {
  const auto& s = w.syllables();
  return s.size() < 2 || s.front().gen != s.back().gen;
}

const Word& GeneratorMap::at(const Generator& g) const {
  auto it = assignments_.find(g);
  if (it == assignments_.end()) {
    throw UnmappedGenerator("generator '" + g.name() + "' is not mapped");
  }
  return it->second;
}

std::set<Generator> GeneratorMap::source() const {
  std::set<Generator> out;
  for (const auto& [g, _] : assignments_) out.insert(g);
  return out;
}

GeneratorMap GeneratorMap::identity(std::span<const Generator> gens) {
  GeneratorMap out;
  for (const auto& g : gens) out.assign(g, Word::letter(g));
  return out;
}

Word substitute(const Word& w, const GeneratorMap& f) {
  std::vector<Syllable> raw;
  for (const auto& s : w.syllables()) {
    Word image = power(f.at(s.gen), s.exponent);
    raw.insert(raw.end(), image.syllables().begin(), image.syllables().end());
  }
  return Word::reduce(raw);
}

GeneratorMap compose(const GeneratorMap& g, const GeneratorMap& f) {
  GeneratorMap out;
  for (const auto& [x, image] : f.assignments()) {
    out.assign(x, substitute(image, g));
  }
  return out;
}

Alphabet::Alphabet(std::vector<Generator> gens) {
  for (auto& g : gens) add(g);
}

bool Alphabet::covers(const Word& w) const {
  return std::all_of(w.syllables().begin(), w.syllables().end(),
                     [&](const Syllable& s) { return contains(s.gen); });
}

std::size_t Alphabet::index_of(const Generator& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) {
    throw AlphabetMismatch("generator '" + g.name() + "' not in alphabet");
  }
  return it->second;
}

void Alphabet::add(const Generator& g) {
  if (!index_.emplace(g, gens_.size()).second) {
    throw NameCollision("generator '" + g.name() + "' already present");
  }
  gens_.push_back(g);
}

Generator Alphabet::fresh(const std::string& base) const {
  std::string stem = base.substr(0, base.find('#'));
  Generator plain(stem);
  if (!contains(plain)) return plain;
  for (std::size_t k = 1;; ++k) {
    Generator g(stem + "#" + std::to_string(k));
    if (!contains(g)) return g;
  }
}

Alphabet Alphabet::merge(const Alphabet& other) const {
  Alphabet out = *this;
  for (const auto& g : other.gens_) {
    if (!out.contains(g)) out.add(g);
  }
  return out;
}

Word multiply(const Alphabet& alphabet, const Word& u, const Word& v) {
  for (const Word* w : {&u, &v}) {
    for (const auto& s : w->syllables()) {
      if (!alphabet.contains(s.gen)) {
        throw AlphabetMismatch("generator '" + s.gen.name() +
                               "' is outside the alphabet");
      }
    }
  }
  return u * v;
}

namespace detail {

namespace {

bool ends_word(char c) {
  return c == '\0' || c == ',' || c == '|' || c == '>' || c == ')' || c == '=';
}

Word parse_factor(Scanner& in) {
  Word base;
  if (in.accept('(')) {
    base = parse_word(in);
    in.expect(')');
  } else if (in.peek() == '1') {
    in.integer();
    return {};
  } else {
    base = Word::letter(Generator(in.identifier()));
  }
  if (in.accept('^')) return power(base, in.integer());
  return base;
}

}  // namespace

Word parse_word(Scanner& in) {
  Word out = parse_factor(in);
  while (true) {
    if (in.accept('*')) {
      out = out * parse_factor(in);
    } else if (ends_word(in.peek())) {
      return out;
    } else {
      out = out * parse_factor(in);
    }
  }
}

}  // namespace detail

Word parse_word(std::string_view text) {
  detail::Scanner in(text);
  Word w = detail::parse_word(in);
  if (!in.at_end()) in.fail("unexpected trailing input");
  return w;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += '*';
    out += s.gen.name();
    if (s.exponent != 1) out += "^" + s.exponent.str();
  }
  return out;
}

}  // namespace fpg
