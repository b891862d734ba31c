#pragma once

// Group constructions: witness groups, cyclic joins, H₁-killing, universal
// central extensions, commutator collection and the class-P audit.

#include "fpg/presentation.hpp"
#include "fpg/trace.hpp"
#include "fpg/word.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace fpg {

struct WitnessOptions {
  std::optional<BigInt> torsion_order;  // ≥ 2; appends w^p
};

struct WitnessLetters {
  Generator a;
  Generator b;
  Generator c;
};

/// Fresh names for a, b, c over P's alphabet.
WitnessLetters witness_letters(const Presentation& p);

/// P plus three letters a, b, c and the relators
///   a⁻¹ba = c⁻¹b⁻¹cbc,  a⁻²b⁻¹aba² = c⁻²b⁻¹cbc²,  a⁻³[w,b]a³ = c⁻³bc³,
///   a^-(3+j) x_j b a^(3+j) = c^-(3+j) b c^(3+j) for each generator x_j,
/// after P's own relators. The group is trivial iff w = 1 in P. Throws
/// EmptyWitnessWord, UndeclaredGenerator, Unsupported (torsion below 2).
Presentation witness(const Presentation& p, const Word& w,
                     const WitnessOptions& opts = {});

/// Appends w and b to witness(p, w) by certified Tietze moves, given a
/// certificate for w over p's relators. The result presents the same group
/// and makes its triviality visible to coset enumeration.
Presentation add_witness_consequences(const Presentation& witness_group,
                                      const Presentation& p, const Word& w,
                                      const Certificate& w_certificate);

struct Attachment {
  Presentation group;
  Word g;           // over the base
  Generator c;      // generator of `group` identified with g
};

/// Free product of base and the attachments (renamed apart) with g_j = c_j.
/// Throws AlphabetError when g_j leaves the base or c_j is not a generator of
/// its attachment.
Presentation amalgam_join(const Presentation& base,
                          const std::vector<Attachment>& attachments);

/// Joins a witness copy to P for each non-unit invariant factor of H₁(P),
/// at words given by the rows of the inverse column transform of the Smith
/// form. Unchanged when P is already perfect.
Presentation kill_h1(const Presentation& p);

/// The words kill_h1 attaches at, with their invariant factors (0 = infinite).
std::vector<std::pair<Word, BigInt>> h1_generators(const Presentation& p);

/// For each generator f_i a product of relator powers r_1^e_1 r_2^e_2 ⋯ with
/// the same abelianization as f_i. The exponents are the solve_integer
/// solution reduced modulo the integer kernel, which keeps them small.
/// Throws NotPerfect.
std::vector<Word> lambda_words(const Presentation& p);

/// Same generators; relators [f_i, r_j] (freely trivial ones dropped) and
/// the λ words. Throws NotPerfect.
Presentation universal_central_extension(const Presentation& p);

/// Inclusion of UCE(sub) into UCE(super) by generator names, after checking
/// that every relator of UCE(sub) is a relator of UCE(super). Throws
/// NotSubpresentation.
GeneratorMap uce_morphism(const Presentation& sub, const Presentation& super);

struct CollectedFactor {
  Word conjugator;
  Generator letter;
  int sign = 1;

  friend bool operator==(const CollectedFactor&, const CollectedFactor&) = default;
};

/// w = residual · ∏ conjugator·letter^sign·conjugator⁻¹ in the free group.
struct CollectionResult {
  Word residual;
  std::vector<CollectedFactor> factors;

  Word reconstruct() const;
};

/// Moves every marked letter to the right end of w, leaving conjugates of
/// marked letters behind. Adjacent factors that cancel are dropped.
CollectionResult push_marked_right(const Word& w,
                                   const std::set<Generator>& marked);

/// x_j = (∏ [g, h]) · λ_j
struct CommutatorFactorization {
  std::vector<std::pair<Word, Word>> commutators;
  Word lambda;
};

/// For each x_j, e_j = λ_j x_j⁻¹ f(x_j) f(λ_j)⁻¹ collected over the letters
/// z_k of f(x_k) = x_k·z_k. Every residual is ε. Throws InconsistentData when
/// a factorization fails in the free group or f is not of that form.
std::vector<CollectionResult> step4_identity(
    const std::vector<Generator>& base_gens,
    const std::vector<CommutatorFactorization>& data, const GeneratorMap& f);

/// e_j itself, before collection.
Word step4_element(const CommutatorFactorization& data, const GeneratorMap& f);

/// Every amalgam is over a free, abelian or cyclic subgroup, every HNN step
/// over a free, abelian or cyclic associated subgroup, central extensions
/// are allowed, and no Quotient step occurs. False for a null trace.
bool verify_class_P(const Trace& trace);

}  // namespace fpg
