#pragma once

// Stallings graphs of finitely generated subgroups of free groups.

#include "fpg/word.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace fpg {

/// A signed letter: generator and direction (+1 or -1).
using Letter = std::pair<Generator, int>;

/// Shortlex letter order: by generator name, a before a⁻¹.
bool letter_less(const Letter& a, const Letter& b);

class SubgroupGraph {
 public:
  static constexpr std::size_t kBase = 0;

  /// Folds the wedge of loops spelled by `gens`. ε generators are ignored.
  static SubgroupGraph fold(const std::vector<Word>& gens);

  /// Symbol standing for the i-th input generator in `express` results.
  static Generator input_symbol(std::size_t i);

  bool contains(const Word& w) const;
  /// Edges − vertices + 1.
  std::size_t rank() const;
  /// Free basis read off a breadth-first spanning tree.
  std::vector<Word> basis() const;

  /// w as a word in input_symbol(0), input_symbol(1), …, or nullopt when w is
  /// not in the subgroup. Substituting the input generators gives back w.
  std::optional<Word> express(const Word& w) const;

  struct Reading {
    std::size_t vertex;  // where reading stopped
    Word read;           // the consumed prefix
    Word remainder;      // the unread suffix
  };
  /// Follows w from the base as far as the graph allows.
  Reading read(const Word& w) const;

  /// Shortlex-least label of a path from the base to v.
  const Word& geodesic(std::size_t v) const { return geodesics_.at(v); }

  /// Shortlex-least element of the right coset H·w.
  Word coset_representative(const Word& w) const;

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t input_count() const noexcept { return inputs_.size(); }
  const std::vector<Word>& inputs() const noexcept { return inputs_; }

  struct HalfEdge {
    std::size_t target;
    Word tag;  // in input symbols
  };
  /// Outgoing half-edges of v keyed by signed label.
  const std::map<Letter, HalfEdge, bool (*)(const Letter&, const Letter&)>&
  half_edges(std::size_t v) const {
    return adjacency_.at(v);
  }

 private:
  using Adjacency =
      std::map<Letter, HalfEdge, bool (*)(const Letter&, const Letter&)>;

  void compute_geodesics();

  std::vector<Word> inputs_;
  std::vector<Adjacency> adjacency_;
  std::vector<Word> geodesics_;
  std::size_t edge_count_ = 0;
};

}  // namespace fpg
