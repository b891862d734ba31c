#include "fpg/presentation.hpp"

#include "fpg/errors.hpp"
#include "scanner.hpp"

#include <algorithm>

namespace fpg {

namespace {

void check_relator(const Alphabet& alphabet, const Word& w) {
  for (const auto& s : w.syllables()) {
    if (!alphabet.contains(s.gen)) {
      throw UndeclaredGenerator("generator '" + s.gen.name() +
                                "' used in a relator is not declared");
    }
  }
}

Word normalize_relator(const Alphabet& alphabet, const Word& w) {
  check_relator(alphabet, w);
  Word core = cyclic_reduce(w).core;
  if (core.empty()) throw EmptyRelator("relator reduces to the identity");
  return core;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

}  // namespace

Presentation::Presentation(std::vector<Generator> generators,
                           std::vector<Word> relators, Trace trace)
    : alphabet_(std::move(generators)), trace_(std::move(trace)) {
  relators_.reserve(relators.size());
  for (const auto& r : relators) {
    relators_.push_back(normalize_relator(alphabet_, r));
  }
}

Trace Presentation::effective_trace() const {
  if (trace_) return trace_;
  return relators_.empty() ? TraceNode::free_base() : TraceNode::input();
}

Presentation Presentation::with_trace(Trace trace) const {
  Presentation out = *this;
  out.trace_ = std::move(trace);
  return out;
}

std::size_t Presentation::max_relator_length() const {
  std::size_t out = 0;
  for (const auto& r : relators_) out = std::max(out, r.letter_count());
  return out;
}

bool operator==(const Presentation& a, const Presentation& b) {
  return a.alphabet_ == b.alphabet_ && a.relators_ == b.relators_ &&
         traces_equal(a.trace_, b.trace_);
}

Presentation parse_presentation(std::string_view text) {
  Trace trace;
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos &&
        line.substr(first).starts_with("#@trace")) {
      trace = parse_trace(line.substr(first + 7));
    }
    line_start = line_end + 1;
  }

  detail::Scanner in(text);
  in.expect('<');
  std::vector<Generator> gens;
  if (in.at_identifier()) {
    gens.emplace_back(in.identifier());
    while (in.accept(',')) gens.emplace_back(in.identifier());
  }
  in.expect('|');
  Alphabet alphabet;
  for (const auto& g : gens) {
    if (alphabet.contains(g)) in.fail("generator '" + g.name() + "' repeated");
    alphabet.add(g);
  }
  std::vector<Word> relators;
  if (in.peek() != '>') {
    while (true) {
      std::size_t line = in.line();
      std::size_t column = in.column();
      Word w = detail::parse_word(in);
      if (in.accept('=')) w = w * invert(detail::parse_word(in));
      try {
        relators.push_back(normalize_relator(alphabet, w));
      } catch (const EmptyRelator&) {
        throw EmptyRelator("line " + std::to_string(line) + ", column " +
                           std::to_string(column) +
                           ": relator reduces to the identity");
      }
      if (!in.accept(',')) break;
    }
  }
  in.expect('>');
  if (!in.at_end()) in.fail("unexpected trailing input");
  return Presentation(std::move(gens), std::move(relators), std::move(trace));
}

std::string emit(const Presentation& p) {
  std::string out;
  if (p.trace()) out = "#@trace " + to_string(p.trace()) + "\n";
  std::vector<std::string> gens, rels;
  for (const auto& g : p.generators()) gens.push_back(g.name());
  for (const auto& r : p.relators()) rels.push_back(to_string(r));
  out += "< ";
  if (!gens.empty()) out += join(gens) + " ";
  out += "|";
  if (!rels.empty()) out += " " + join(rels);
  out += " >";
  return out;
}

std::vector<BigInt> abelianize(const Word& w,
                               const std::vector<Generator>& gens) {
  std::vector<BigInt> out(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) out[j] = w.exponent_sum(gens[j]);
  return out;
}

IntMatrix abelianization_matrix(const Presentation& p) {
  const auto& gens = p.generators();
  IntMatrix out(p.relators().size(), gens.size());
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    for (const auto& s : p.relators()[i].syllables()) {
      out(i, p.alphabet().index_of(s.gen)) += s.exponent;
    }
  }
  return out;
}

AbelianInvariants h1(const Presentation& p) {
  return abelian_invariants(abelianization_matrix(p));
}

Word evaluate(const Presentation& p, const Certificate& certificate) {
  std::vector<Syllable> raw;
  for (const auto& f : certificate) {
    if (f.relator >= p.relators().size()) {
      throw InvalidCertificate("certificate refers to relator " +
                               std::to_string(f.relator) + " of " +
                               std::to_string(p.relators().size()));
    }
    if (f.sign != 1 && f.sign != -1) {
      throw InvalidCertificate("certificate sign must be +1 or -1");
    }
    Word term = f.conjugator * power(p.relators()[f.relator], f.sign) *
                invert(f.conjugator);
    raw.insert(raw.end(), term.syllables().begin(), term.syllables().end());
  }
  return Word::reduce(raw);
}

namespace {

struct TietzeApplier {
  const Presentation& p;

  Presentation operator()(const tietze::AddGenerator& m) const {
    auto gens = p.generators();
    if (p.alphabet().contains(m.name)) {
      throw NameCollision("generator '" + m.name.name() + "' already present");
    }
    check_relator(p.alphabet(), m.definition);
    gens.push_back(m.name);
    auto rels = p.relators();
    rels.push_back(Word::letter(m.name, -1) * m.definition);
    return Presentation(std::move(gens), std::move(rels), p.trace());
  }

  Presentation operator()(const tietze::RemoveGenerator& m) const {
    if (!p.alphabet().contains(m.name)) {
      throw UndeclaredGenerator("generator '" + m.name.name() +
                                "' is not declared");
    }
    const auto& rels = p.relators();
    // A defining relator mentions the generator exactly once.
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const auto& syl = rels[i].syllables();
      std::size_t hits = 0, at = 0;
      for (std::size_t k = 0; k < syl.size(); ++k) {
        if (syl[k].gen == m.name) {
          hits += 1;
          at = k;
        }
      }
      if (hits != 1 || abs(syl[at].exponent) != 1) continue;
      // r = A g^e B  ⇒  g = (A⁻¹ B⁻¹)^e
      std::vector<Syllable> before(syl.begin(), syl.begin() + at);
      std::vector<Syllable> after(syl.begin() + at + 1, syl.end());
      Word definition = invert(Word::reduce(before)) * invert(Word::reduce(after));
      if (syl[at].exponent < 0) definition = invert(definition);

      GeneratorMap sub;
      std::vector<Generator> gens;
      for (const auto& g : p.generators()) {
        if (g == m.name) continue;
        gens.push_back(g);
        sub.assign(g, Word::letter(g));
      }
      sub.assign(m.name, definition);
      std::vector<Word> out;
      for (std::size_t j = 0; j < rels.size(); ++j) {
        if (j == i) continue;
        Word image = cyclic_reduce(substitute(rels[j], sub)).core;
        if (!image.empty()) out.push_back(image);
      }
      return Presentation(std::move(gens), std::move(out), p.trace());
    }
    throw GeneratorInUse("no relator defines generator '" + m.name.name() + "'");
  }

  Presentation operator()(const tietze::AddRelator& m) const {
    check_relator(p.alphabet(), m.consequence);
    if (evaluate(p, m.certificate) != m.consequence) {
      throw InvalidCertificate("certificate does not evaluate to the relator");
    }
    auto rels = p.relators();
    rels.push_back(m.consequence);
    return Presentation(p.generators(), std::move(rels), p.trace());
  }

  Presentation operator()(const tietze::RemoveRelator& m) const {
    if (m.index >= p.relators().size()) {
      throw InvalidCertificate("no relator " + std::to_string(m.index));
    }
    for (const auto& f : m.certificate) {
      if (f.relator == m.index) {
        throw InvalidCertificate("certificate uses the relator it removes");
      }
    }
    if (evaluate(p, m.certificate) != p.relators()[m.index]) {
      throw InvalidCertificate("certificate does not evaluate to the relator");
    }
    auto rels = p.relators();
    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(m.index));
    return Presentation(p.generators(), std::move(rels), p.trace());
  }
};

}  // namespace

Presentation apply_tietze(const Presentation& p, const TietzeMove& move) {
  return std::visit(TietzeApplier{p}, move);
}

Presentation rename_generators(const Presentation& p,
                               const std::map<Generator, Generator>& renaming) {
  GeneratorMap sub;
  std::vector<Generator> gens;
  for (const auto& g : p.generators()) {
    auto it = renaming.find(g);
    Generator target = it == renaming.end() ? g : it->second;
    gens.push_back(target);
    sub.assign(g, Word::letter(target));
  }
  std::vector<Word> rels;
  for (const auto& r : p.relators()) rels.push_back(substitute(r, sub));
  return Presentation(std::move(gens), std::move(rels), p.trace());
}

std::map<Generator, Generator> rename_apart(const Presentation& q,
                                            const Alphabet& taken) {
  Alphabet used = taken.merge(q.alphabet());
  std::map<Generator, Generator> out;
  for (const auto& g : q.generators()) {
    if (!taken.contains(g)) continue;
    Generator fresh = used.fresh(g.name());
    used.add(fresh);
    out.emplace(g, fresh);
  }
  return out;
}

Presentation free_product(const Presentation& p, const Presentation& q,
                          FreeProductOptions options) {
  Presentation right = q;
  auto renaming = rename_apart(q, p.alphabet());
  if (!renaming.empty()) {
    if (!options.rename) {
      throw NameCollision("generator '" + renaming.begin()->first.name() +
                          "' occurs in both factors");
    }
    right = rename_generators(q, renaming);
  }
  auto gens = p.generators();
  gens.insert(gens.end(), right.generators().begin(), right.generators().end());
  auto rels = p.relators();
  rels.insert(rels.end(), right.relators().begin(), right.relators().end());
  return Presentation(
      std::move(gens), std::move(rels),
      TraceNode::amalgam(SubgroupKind::Free, p.effective_trace(),
                         right.effective_trace()));
}

Presentation quotient_add_relators(const Presentation& p,
                                   const std::vector<Word>& words,
                                   Trace trace) {
  auto rels = p.relators();
  rels.insert(rels.end(), words.begin(), words.end());
  if (!trace) trace = TraceNode::quotient(p.effective_trace());
  return Presentation(p.generators(), std::move(rels), std::move(trace));
}

}  // namespace fpg
