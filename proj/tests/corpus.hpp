#pragma once

// Seeded random inputs shared by the unit and acceptance suites.

#include "fpg/presentation.hpp"
#include "fpg/word.hpp"
#include "oracles.hpp"

#include <random>
#include <string>
#include <vector>

namespace corpus {

inline std::vector<fpg::Generator> names(std::size_t n, const std::string& stem) {
  std::vector<fpg::Generator> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(stem + std::to_string(i));
  return out;
}

inline std::vector<std::string> strings(const std::vector<fpg::Generator>& gens) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(g.name());
  return out;
}

// Presentation with H₁ = ⊕ ℤ/d_i, scrambled by conjugated commutators
// folded into the torsion relators and extra commutator relators.
inline fpg::Presentation random_finite_h1(std::mt19937_64& rng) {
  using namespace fpg;
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> factor(2, 12);
  const std::size_t n = static_cast<std::size_t>(count(rng));
  auto gens = names(n, "g");
  std::vector<Word> rels;
  for (std::size_t i = 0; i < n; ++i) {
    // g_i^d with a random conjugate of a neighbour folded in
    Word r = power(Word::letter(gens[i]), factor(rng));
    if (n > 1) {
      Word u = oracle::random_word(rng, strings(gens), 3);
      const Generator& h = gens[(i + 1) % n];
      r = r * u * commutator(Word::letter(h), Word::letter(gens[i])) * invert(u);
    }
    if (!cyclic_reduce(r).core.empty()) rels.push_back(r);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    rels.push_back(commutator(Word::letter(gens[i]), Word::letter(gens[i + 1])));
  }
  return Presentation(gens, rels);
}

// 1 to max_gens generators, up to 3 relators of length ≤ 6.
inline fpg::Presentation random_presentation(std::mt19937_64& rng,
                                             std::size_t max_gens) {
  using namespace fpg;
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::uniform_int_distribution<std::size_t> rel_count(0, 3);
  auto gens = names(count(rng), "y");
  std::vector<Word> rels;
  for (std::size_t k = rel_count(rng); k > 0; --k) {
    Word r = oracle::random_word(rng, strings(gens), 6);
    if (!cyclic_reduce(r).core.empty()) rels.push_back(r);
  }
  return Presentation(gens, rels);
}

}  // namespace corpus
