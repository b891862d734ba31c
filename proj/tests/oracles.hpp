#pragma once

// Test-side reference implementations. These deliberately avoid the
// library's algorithms so they can serve as independent checks.

#include "fpg/amalgam.hpp"
#include "fpg/int_matrix.hpp"
#include "fpg/presentation.hpp"
#include "fpg/word.hpp"

#ifndef FPG_ORACLES_STANDALONE
#include <doctest.h>
#endif

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Letter = std::pair<std::string, int>;

// Letter-by-letter stack reduction.
inline std::vector<Letter> stack_reduce(const std::vector<Letter>& raw) {
  std::vector<Letter> out;
  for (const auto& l : raw) {
    if (!out.empty() && out.back().first == l.first &&
        out.back().second == -l.second) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

inline std::vector<Letter> expand(const fpg::Word& w) {
  std::vector<Letter> out;
  for (const auto& [g, s] : fpg::letters(w)) out.emplace_back(g.name(), s);
  return out;
}

inline fpg::Word from_letters(const std::vector<Letter>& ls) {
  std::vector<fpg::Syllable> raw;
  for (const auto& [n, s] : ls) raw.push_back({fpg::Generator(n), s});
  return fpg::Word::reduce(raw);
}

// Equality in the free group via the stack oracle on u·v⁻¹.
inline bool free_equal(const fpg::Word& u, const fpg::Word& v) {
  auto a = stack_reduce(expand(u));
  auto b = stack_reduce(expand(v));
  return a == b;
}

// Product of relator conjugates, multiplied out letter by letter.
inline std::vector<Letter> certificate_product(const fpg::Presentation& p,
                                               const fpg::Certificate& cert) {
  std::vector<Letter> raw;
  auto append = [&raw](const std::vector<Letter>& ls, bool inverse) {
    if (!inverse) {
      raw.insert(raw.end(), ls.begin(), ls.end());
      return;
    }
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
      raw.emplace_back(it->first, -it->second);
    }
  };
  for (const auto& f : cert) {
    auto c = expand(f.conjugator);
    append(c, false);
    append(expand(p.relators().at(f.relator)), f.sign < 0);
    append(c, true);
    raw = stack_reduce(raw);
  }
  return raw;
}

inline fpg::Word random_word(std::mt19937_64& rng,
                             const std::vector<std::string>& gens,
                             std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> raw;
  std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    raw.emplace_back(gens[pick(rng)], sign(rng) ? 1 : -1);
  }
  return from_letters(raw);
}

// Cofactor-expansion determinant over BigInt; fine for k ≤ 4.
inline fpg::BigInt cofactor_det(const std::vector<std::vector<fpg::BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  fpg::BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<fpg::BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<fpg::BigInt> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    fpg::BigInt term = m[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : fpg::BigInt(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start,
                    std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Fraction-free Gaussian elimination with row pivoting.
inline fpg::BigInt bareiss_det(const fpg::IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<fpg::BigInt>> m(n, std::vector<fpg::BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
  fpg::BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return n == 0 ? fpg::BigInt(1) : fpg::BigInt(sign * m[n - 1][n - 1]);
}

// Invariant factors dᵢ = gᵢ / gᵢ₋₁, gᵢ the gcd of all i×i minors.
inline std::vector<fpg::BigInt> invariant_factors_by_minors(
    const fpg::IntMatrix& a) {
  std::vector<fpg::BigInt> out;
  fpg::BigInt prev = 1;
  const std::size_t kmax = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    fpg::BigInt g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        std::vector<std::vector<fpg::BigInt>> m(k, std::vector<fpg::BigInt>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a(r[i], c[j]);
        }
        g = boost::multiprecision::gcd(g, abs(cofactor_det(m)));
      }
    }
    if (g == 0) {
      for (; k <= kmax; ++k) out.push_back(0);
      break;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline fpg::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                                    std::size_t cols, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  fpg::IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  }
  return m;
}

// Rewriting oracle: repeatedly move a factor piece that lies in the
// amalgamated subgroup across to the other factor, merging neighbours,
// until no interior piece lies in the subgroup. By the reduced-form theorem
// for amalgams the word is trivial iff this reaches ε.
inline bool pinch_trivial(const fpg::AmalgamSpec& a, const fpg::Word& w) {
  fpg::Word cur = w;
  while (true) {
    auto pieces = factor_pieces(a, cur);
    if (pieces.empty()) return true;
    if (pieces.size() == 1) return false;
    bool changed = false;
    for (auto& p : pieces) {
      if (a.subgroup(p.side).contains(p.word)) {
        p.word = a.transfer(p.word, p.side);
        changed = true;
        break;
      }
    }
    if (!changed) return false;
    fpg::Word next;
    for (const auto& p : pieces) next = next * p.word;
    cur = next;
  }
}

// Whether the rows span ℤ^n, by Euclidean row elimination column by column.
inline bool rows_span_lattice(std::vector<std::vector<fpg::BigInt>> rows,
                              std::size_t n) {
  std::size_t top = 0;
  for (std::size_t col = 0; col < n; ++col) {
    while (true) {
      // smallest nonzero |entry| at or below top
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] != 0 &&
            (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col]))) {
          best = r;
        }
      }
      if (best == rows.size()) return false;
      std::swap(rows[top], rows[best]);
      bool cleared = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        fpg::BigInt q = rows[r][col] / rows[top][col];
        for (std::size_t k = 0; k < n; ++k) rows[r][k] -= q * rows[top][k];
        if (rows[r][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (abs(rows[top][col]) != 1) return false;
    ++top;
  }
  return true;
}

// Exponent-sum rows of the relators, computed letter by letter.
inline std::vector<std::vector<fpg::BigInt>> exponent_rows(
    const fpg::Presentation& p) {
  std::vector<std::vector<fpg::BigInt>> rows;
  const auto& gens = p.generators();
  for (const auto& r : p.relators()) {
    std::vector<fpg::BigInt> row(gens.size());
    for (const auto& [g, s] : fpg::letters(r)) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (gens[j] == g) row[j] += s;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline bool perfect(const fpg::Presentation& p) {
  return rows_span_lattice(exponent_rows(p), p.generators().size());
}

}  // namespace oracle

#ifndef FPG_ORACLES_STANDALONE
namespace doctest {
template <>
struct StringMaker<fpg::Word> {
  static String convert(const fpg::Word& w) {
    return fpg::to_string(w).c_str();
  }
};
}  // namespace doctest
#endif
