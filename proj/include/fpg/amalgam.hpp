#pragma once

// Normal forms in amalgamated products A *_H B of free groups, where H is
// given by matching free bases of subgroups of A and B.

#include "fpg/presentation.hpp"
#include "fpg/subgroup_graph.hpp"
#include "fpg/word.hpp"

#include <vector>

namespace fpg {

enum class Side { Left, Right };

class AmalgamSpec {
 public:
  /// Throws AlphabetError when the alphabets overlap or a subgroup generator
  /// leaves its factor, Unsupported when either generator list is not a free
  /// basis of the subgroup it generates (the identification would not be
  /// well defined from the lists alone).
  AmalgamSpec(Alphabet left_alphabet, Alphabet right_alphabet,
              std::vector<Word> left_generators,
              std::vector<Word> right_generators);

  const Alphabet& alphabet(Side s) const {
    return s == Side::Left ? left_alphabet_ : right_alphabet_;
  }
  const SubgroupGraph& subgroup(Side s) const {
    return s == Side::Left ? left_subgroup_ : right_subgroup_;
  }
  const std::vector<Word>& subgroup_generators(Side s) const {
    return s == Side::Left ? left_generators_ : right_generators_;
  }

  /// Throws MixedLetterError for a generator of neither factor.
  Side side_of(const Generator& g) const;

  /// Image under the identification of an element of the subgroup on side
  /// `from`; throws DomainError when h is not in that subgroup.
  Word transfer(const Word& h, Side from) const;

 private:
  Alphabet left_alphabet_;
  Alphabet right_alphabet_;
  std::vector<Word> left_generators_;
  std::vector<Word> right_generators_;
  SubgroupGraph left_subgroup_;
  SubgroupGraph right_subgroup_;
};

struct FactorWord {
  Side side;
  Word word;

  friend bool operator==(const FactorWord&, const FactorWord&) = default;
};

/// h · r₁ ⋯ r_k with h in the amalgamated subgroup (left-factor letters) and
/// rᵢ shortlex-least right coset representatives from alternating factors,
/// none in the subgroup.
struct NormalForm {
  Word prefix;
  std::vector<FactorWord> syllables;

  bool is_identity() const { return prefix.empty() && syllables.empty(); }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Splits w into maximal single-factor pieces. Throws MixedLetterError.
std::vector<FactorWord> factor_pieces(const AmalgamSpec& a, const Word& w);

NormalForm normal_form(const AmalgamSpec& a, const Word& w);
bool is_trivial_word(const AmalgamSpec& a, const Word& w);
/// prefix · r₁ ⋯ r_k as a word over both alphabets.
Word reconstruct(const NormalForm& nf);

/// The amalgam decomposition of the witness group over a free base, with the
/// names chosen for the new letters.
struct WitnessAmalgam {
  AmalgamSpec spec;
  Generator a;
  Generator b_left;
  Generator b_right;
  Generator c;
};

/// Left factor F(base ∪ {a, b₁}), right factor F(b₂, c), subgroups spanned
/// by b and the two sides of the witness relations. Throws NotFreeBase,
/// TrivialWitnessWord.
WitnessAmalgam build_witness_amalgam(const Presentation& base, const Word& w);

}  // namespace fpg
