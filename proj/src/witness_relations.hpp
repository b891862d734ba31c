#pragma once

// Both sides of the witness relations, shared by the witness construction
// and its amalgam decomposition.

#include "fpg/word.hpp"

#include <vector>

namespace fpg::detail {

struct WitnessSides {
  std::vector<Word> left;   // over the base, a and b_left
  std::vector<Word> right;  // over b_right and c
};

// (1) a⁻¹ba = c⁻¹b⁻¹cbc
// (2) a⁻²b⁻¹aba² = c⁻²b⁻¹cbc²
// (3) a⁻³[w,b]a³ = c⁻³bc³
// (4,j) a^-(3+j) x_j b a^(3+j) = c^-(3+j) b c^(3+j), j = 1..k
inline WitnessSides witness_sides(const std::vector<Generator>& base,
                                  const Word& w, const Generator& a,
                                  const Generator& b_left,
                                  const Generator& b_right,
                                  const Generator& c) {
  const Word A = Word::letter(a);
  const Word L = Word::letter(b_left);
  const Word R = Word::letter(b_right);
  const Word C = Word::letter(c);
  auto conj = [](const Word& x, const Word& by, long n) {
    return power(by, -n) * x * power(by, n);
  };
  WitnessSides out;
  out.left.push_back(conj(L, A, 1));
  out.right.push_back(conj(invert(R) * C * R, C, 1));
  out.left.push_back(conj(invert(L) * A * L, A, 2));
  out.right.push_back(conj(invert(R) * C * R, C, 2));
  out.left.push_back(conj(commutator(w, L), A, 3));
  out.right.push_back(conj(R, C, 3));
  for (std::size_t j = 1; j <= base.size(); ++j) {
    const long e = 3 + static_cast<long>(j);
    out.left.push_back(conj(Word::letter(base[j - 1]) * L, A, e));
    out.right.push_back(conj(R, C, e));
  }
  return out;
}

}  // namespace fpg::detail
