#pragma once

// Finite presentations ⟨X | R⟩: the text format, abelianization, Tietze
// moves, free products and relator addition.

#include "fpg/int_matrix.hpp"
#include "fpg/trace.hpp"
#include "fpg/word.hpp"

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fpg {

class Presentation {
 public:
  Presentation() = default;
  /// Throws NameCollision on repeated generators, UndeclaredGenerator when a
  /// relator leaves the alphabet, EmptyRelator when one reduces to ε.
  /// Relators are stored cyclically reduced.
  Presentation(std::vector<Generator> generators, std::vector<Word> relators,
               Trace trace = nullptr);

  const std::vector<Generator>& generators() const noexcept {
    return alphabet_.generators();
  }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }

  /// The recorded trace, possibly null.
  const Trace& trace() const noexcept { return trace_; }
  /// The recorded trace, or a leaf when none was recorded: FreeBase for a
  /// presentation without relators, DiscreteSubgroupInput otherwise.
  Trace effective_trace() const;
  Presentation with_trace(Trace trace) const;

  std::size_t max_relator_length() const;

  /// Same generators in the same order and the same relators in the same
  /// order. Traces are compared too.
  friend bool operator==(const Presentation& a, const Presentation& b);

 private:
  Alphabet alphabet_;
  std::vector<Word> relators_;
  Trace trace_;
};

/// Parses `< a, b | a^2, b^3, (a*b)^5 >`. A relator may be written as an
/// equation `u = v`, read as u·v⁻¹. A line `#@trace SEXPR` before the
/// presentation restores a recorded trace; other `#` lines are comments.
Presentation parse_presentation(std::string_view text);

/// Canonical text; preceded by a `#@trace` line when a trace is recorded.
std::string emit(const Presentation& p);

/// Entry (i, j) is the exponent sum of generator j in relator i.
IntMatrix abelianization_matrix(const Presentation& p);
AbelianInvariants h1(const Presentation& p);

/// Exponent-sum vector of w over the given generator order.
std::vector<BigInt> abelianize(const Word& w, const std::vector<Generator>& gens);

/// conjugator · relator^sign · conjugator⁻¹
struct ConjugateFactor {
  std::size_t relator;
  Word conjugator;
  int sign = 1;

  friend bool operator==(const ConjugateFactor&, const ConjugateFactor&) = default;
};
using Certificate = std::vector<ConjugateFactor>;

/// The product of the certificate's factors, as a free-group word. Throws
/// InvalidCertificate on an out-of-range relator index or a sign not ±1.
Word evaluate(const Presentation& p, const Certificate& certificate);

namespace tietze {

struct AddGenerator {
  Generator name;
  Word definition;
};
struct RemoveGenerator {
  Generator name;
};
struct AddRelator {
  Word consequence;
  Certificate certificate;
};
struct RemoveRelator {
  std::size_t index;
  Certificate certificate;  // may not use relator `index` itself
};

}  // namespace tietze

using TietzeMove = std::variant<tietze::AddGenerator, tietze::RemoveGenerator,
                                tietze::AddRelator, tietze::RemoveRelator>;

/// Applies one move; the result presents an isomorphic group. Throws
/// InvalidCertificate, GeneratorInUse (no relator defines the generator),
/// NameCollision, UndeclaredGenerator.
Presentation apply_tietze(const Presentation& p, const TietzeMove& move);

/// Renames generators; names absent from the map are kept.
Presentation rename_generators(const Presentation& p,
                               const std::map<Generator, Generator>& renaming);

/// Renaming that moves q's generators off `taken` using Alphabet::fresh.
std::map<Generator, Generator> rename_apart(const Presentation& q,
                                            const Alphabet& taken);

struct FreeProductOptions {
  bool rename = false;
};

/// P * Q. With rename set, Q's clashing generators receive fresh copy names;
/// otherwise a clash throws NameCollision. The trace records an amalgam over
/// the trivial (free, rank 0) subgroup.
Presentation free_product(const Presentation& p, const Presentation& q,
                          FreeProductOptions options = {});

/// Appends relators. Throws EmptyRelator, UndeclaredGenerator. The trace
/// records a Quotient step unless `trace` is supplied.
Presentation quotient_add_relators(const Presentation& p,
                                   const std::vector<Word>& words,
                                   Trace trace = nullptr);

}  // namespace fpg
