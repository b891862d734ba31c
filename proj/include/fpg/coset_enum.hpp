#pragma once

// Todd-Coxeter coset enumeration (HLT with lookahead).

#include "fpg/presentation.hpp"
#include "fpg/word.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fpg {

inline constexpr std::size_t kDefaultMaxCosets = 100000;

enum class TableStatus { Complete, Overflowed };

/// Coset action table. Cosets are numbered from 0; coset 0 is the subgroup.
struct CosetTable {
  std::vector<Generator> generators;
  /// action[g][k]: coset k times generator g.
  std::vector<std::vector<std::size_t>> action;
  TableStatus status = TableStatus::Overflowed;
  std::size_t max_cosets = 0;

  std::size_t size() const { return action.empty() ? 0 : action[0].size(); }
  friend bool operator==(const CosetTable&, const CosetTable&) = default;
};

struct EnumerationResult {
  enum class Outcome { Completed, Indeterminate };

  Outcome outcome = Outcome::Indeterminate;
  std::size_t index = 0;         // Completed only
  std::size_t cosets_used = 0;   // peak number of live cosets
  std::size_t limit = 0;
  std::size_t total_defined = 0;
  CosetTable table;              // Complete when outcome is Completed

  bool completed() const { return outcome == Outcome::Completed; }
};

/// Enumerates the cosets of ⟨subgroup⟩ in the group presented by p, holding
/// at most max_cosets rows at a time. Throws LimitTooSmall when max_cosets
/// is 0, UndeclaredGenerator when a subgroup word leaves p's alphabet.
/// A completed table is checked with check_permutation_rep before return.
EnumerationResult enumerate(const Presentation& p,
                            const std::vector<Word>& subgroup,
                            std::size_t max_cosets = kDefaultMaxCosets);

/// enumerate with the trivial subgroup.
EnumerationResult order(const Presentation& p,
                        std::size_t max_cosets = kDefaultMaxCosets);

using Permutation = std::vector<std::size_t>;

/// One permutation of {0, …, index−1} per generator. Throws IncompleteTable.
std::vector<Permutation> permutation_rep(const CosetTable& t);

/// Image of a point under a word, acting on the right.
std::size_t act(const CosetTable& t, const std::vector<Permutation>& perms,
                std::size_t point, const Word& w);

/// Relators act trivially, the action is transitive and every subgroup word
/// fixes point 0.
bool check_permutation_rep(const Presentation& p,
                           const std::vector<Word>& subgroup,
                           const CosetTable& t);

}  // namespace fpg
