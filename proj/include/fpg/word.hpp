#pragma once

// Free-group words in syllable form over named generators.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fpg {

using BigInt = boost::multiprecision::cpp_int;

/// A generator symbol. Names start with a letter, continue with letters,
/// digits or underscores, and may carry a copy suffix `#k` (see
/// Alphabet::fresh).
class Generator {
 public:
  explicit Generator(std::string name);

  const std::string& name() const noexcept { return name_; }

  static bool is_valid_name(std::string_view name) noexcept;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;

 private:
  std::string name_;
};

struct Syllable {
  Generator gen;
  BigInt exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A freely reduced word. Adjacent syllables never share a generator and no
/// exponent is zero; the empty word is the identity.
class Word {
 public:
  Word() = default;

  /// Freely reduces an arbitrary syllable sequence. Zero exponents are
  /// dropped.
  static Word reduce(std::span<const Syllable> raw);
  static Word reduce(std::initializer_list<Syllable> raw) {
    return reduce(std::span<const Syllable>(raw.begin(), raw.size()));
  }
  static Word letter(const Generator& g, BigInt exponent = 1);
  static Word letter(std::string name, BigInt exponent = 1) {
    return letter(Generator(std::move(name)), std::move(exponent));
  }

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }
  std::size_t syllable_count() const noexcept { return syllables_.size(); }

  /// Letter length: sum of |exponent| over syllables.
  BigInt length() const;
  /// Letter length as a machine integer; throws std::overflow_error when the
  /// word is too long to be expanded letter by letter.
  std::size_t letter_count() const;

  BigInt exponent_sum(const Generator& g) const;
  std::set<Generator> support() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.compare(b) <=> 0;
  }

 private:
  explicit Word(std::vector<Syllable> reduced)
      : syllables_(std::move(reduced)) {}
  int compare(const Word& other) const;

  std::vector<Syllable> syllables_;
};

Word multiply(const Word& u, const Word& v);
inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }
Word invert(const Word& w);
Word power(const Word& w, const BigInt& n);

/// u⁻¹v⁻¹uv, reduced.
Word commutator(const Word& u, const Word& v);

/// One entry per letter, in order, with exponent ±1.
std::vector<std::pair<Generator, int>> letters(const Word& w);

struct CyclicReduction {
  Word core;
  Word conjugator;
};

/// w = conjugator · core · conjugator⁻¹ with core cyclically reduced.
CyclicReduction cyclic_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w);

/// A free-group homomorphism given on generators. Total on its source.
class GeneratorMap {
 public:
  GeneratorMap() = default;
  explicit GeneratorMap(std::map<Generator, Word> assignments)
      : assignments_(std::move(assignments)) {}

  void assign(const Generator& g, Word image) {
    assignments_.insert_or_assign(g, std::move(image));
  }
  bool maps(const Generator& g) const { return assignments_.contains(g); }
  const Word& at(const Generator& g) const;
  std::set<Generator> source() const;
  const std::map<Generator, Word>& assignments() const noexcept {
    return assignments_;
  }

  static GeneratorMap identity(std::span<const Generator> gens);

  friend bool operator==(const GeneratorMap&, const GeneratorMap&) = default;

 private:
  std::map<Generator, Word> assignments_;
};

/// Image of w under the homomorphism induced by f. Throws UnmappedGenerator.
Word substitute(const Word& w, const GeneratorMap& f);

/// Pointwise composition: (g ∘ f)(x) = g(f(x)).
GeneratorMap compose(const GeneratorMap& g, const GeneratorMap& f);

/// An ordered, duplicate-free generator set.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> gens);

  bool contains(const Generator& g) const { return index_.contains(g); }
  bool covers(const Word& w) const;
  const std::vector<Generator>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  std::size_t index_of(const Generator& g) const;

  /// Appends g; throws NameCollision if already present.
  void add(const Generator& g);

  /// `base` itself when unused, otherwise the first unused `base#k`, k ≥ 1.
  /// Any existing copy suffix on `base` is stripped first.
  Generator fresh(const std::string& base) const;

  /// Union keeping this alphabet's order, then other's new generators.
  Alphabet merge(const Alphabet& other) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.gens_ == b.gens_;
  }

 private:
  std::vector<Generator> gens_;
  std::map<Generator, std::size_t> index_;
};

/// Product checked against an alphabet; throws AlphabetMismatch if either
/// word uses a generator outside it.
Word multiply(const Alphabet& alphabet, const Word& u, const Word& v);

/// Parses the word syntax: juxtaposition or `*`, `^integer`, parentheses,
/// and `1` for the identity.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

}  // namespace fpg
