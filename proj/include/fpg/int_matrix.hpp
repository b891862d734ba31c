#pragma once

// Exact integer matrices: Smith normal form, abelian invariants and integer
// linear solving.

#include "fpg/word.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fpg {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Row-major nested initializer; all rows must have equal length.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  IntMatrix transpose() const;
  bool is_diagonal() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& factor);
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

std::vector<BigInt> operator*(const IntMatrix& a, const std::vector<BigInt>& x);

/// Exact determinant of a square matrix (fraction-free elimination).
BigInt determinant(const IntMatrix& a);

std::string to_string(const IntMatrix& a);

/// U·A·V = D with U, V unimodular and D diagonal, d₁ | d₂ | … , dᵢ ≥ 0,
/// zeros trailing. V_inverse is carried along for callers that need the
/// generator change of basis.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix V_inverse;

  std::size_t rank() const;
  std::vector<BigInt> diagonal() const;
};

/// Pivot rule: smallest nonzero |entry| in the active block, ties broken by
/// lowest (row, col). Deterministic for a given input.
SmithDecomposition smith_normal_form(const IntMatrix& a);

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // each ≥ 2, divisibility chain

  bool trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianInvariants&,
                         const AbelianInvariants&) = default;
};

/// Invariants of ℤ^cols / (row space of a), for a relators×generators matrix.
AbelianInvariants abelian_invariants(const IntMatrix& a);

/// "Z^2 + Z/2 + Z/4", or "trivial".
std::string to_string(const AbelianInvariants& inv);

/// Some x with a·x = b, taken from the Smith form with every free parameter
/// set to zero; nullopt when no integer solution exists.
std::optional<std::vector<BigInt>> solve_integer(const IntMatrix& a,
                                                 const std::vector<BigInt>& b);

/// A basis of {x : a·x = 0}, the trailing columns of V in the Smith form.
std::vector<std::vector<BigInt>> integer_kernel(const IntMatrix& a);

/// LLL reduction (δ = 3/4) of linearly independent integer vectors, in
/// exact integer arithmetic. Throws std::invalid_argument on a dependent set.
std::vector<std::vector<BigInt>> lll_reduce(std::vector<std::vector<BigInt>> basis);

/// x minus a lattice vector close to it (nearest plane over the LLL-reduced
/// basis). Deterministic; leaves x unchanged when the basis is empty.
std::vector<BigInt> reduce_modulo_lattice(std::vector<BigInt> x,
                                          const std::vector<std::vector<BigInt>>& basis);

}  // namespace fpg
