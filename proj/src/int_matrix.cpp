#include "fpg/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r != c && (*this)(r, c) != 0) return false;
    }
  }
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    (*this)(dst, c) += factor * (*this)(src, c);
  }
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    (*this)(r, dst) += factor * (*this)(r, src);
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

std::vector<BigInt> operator*(const IntMatrix& a, const std::vector<BigInt>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("dimension mismatch");
  std::vector<BigInt> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  }
  return out;
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string to_string(const IntMatrix& a) {
  std::string out = "[";
  for (std::size_t r = 0; r < a.rows(); ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c) out += ',';
      out += a(r, c).str();
    }
    out += ']';
  }
  return out + "]";
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  while (r < std::min(D.rows(), D.cols()) && D(r, r) != 0) ++r;
  return r;
}

std::vector<BigInt> SmithDecomposition::diagonal() const {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) {
    out.push_back(D(i, i));
  }
  return out;
}

namespace {

// Carries A together with U, V and V⁻¹ so every elementary operation is
// applied consistently to all four.
struct SmithState {
  IntMatrix A, U, V, Vi;

  void swap_rows(std::size_t a, std::size_t b) {
    A.swap_rows(a, b);
    U.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    A.swap_cols(a, b);
    V.swap_cols(a, b);
    Vi.swap_rows(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const BigInt& f) {
    A.add_row(dst, src, f);
    U.add_row(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& f) {
    A.add_col(dst, src, f);
    V.add_col(dst, src, f);
    Vi.add_row(src, dst, -f);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithState s{a, IntMatrix::identity(m), IntMatrix::identity(n),
               IntMatrix::identity(n)};
  auto& A = s.A;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // smallest nonzero |entry| in the active block, lowest (row, col) on ties
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (A(i, j) == 0) continue;
        if (pi == m || abs(A(i, j)) < abs(A(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == m) break;
    s.swap_rows(t, pi);
    s.swap_cols(t, pj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        s.add_row(i, t, -(A(i, t) / A(t, t)));
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        s.add_col(j, t, -(A(t, j) / A(t, t)));
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) {
        // a remainder is now smaller than the pivot: bring it in
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (A(i, t) != 0 && abs(A(i, t)) < abs(A(bi, bj))) {
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (A(t, j) != 0 && abs(A(t, j)) < abs(A(bi, bj))) {
            bi = t;
            bj = j;
          }
        }
        s.swap_rows(t, bi);
        s.swap_cols(t, bj);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (A(i, j) % A(t, t) != 0) {
            s.add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (A(t, t) < 0) {
      A.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return {std::move(s.U), std::move(s.A), std::move(s.V), std::move(s.Vi)};
}

AbelianInvariants abelian_invariants(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  AbelianInvariants out;
  out.free_rank = a.cols() - snf.rank();
  for (const auto& d : snf.diagonal()) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

std::string to_string(const AbelianInvariants& inv) {
  if (inv.trivial()) return "trivial";
  std::string out;
  if (inv.free_rank > 0) {
    out = inv.free_rank == 1 ? "Z" : "Z^" + std::to_string(inv.free_rank);
  }
  for (const auto& t : inv.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.str();
  }
  return out;
}

std::optional<std::vector<BigInt>> solve_integer(const IntMatrix& a,
                                                 const std::vector<BigInt>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("dimension mismatch");
  auto snf = smith_normal_form(a);
  std::vector<BigInt> c = snf.U * b;
  const std::size_t r = snf.rank();
  std::vector<BigInt> y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < r) {
      if (c[i] % snf.D(i, i) != 0) return std::nullopt;
      y[i] = c[i] / snf.D(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V * y;
}

std::vector<std::vector<BigInt>> integer_kernel(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  std::vector<std::vector<BigInt>> out;
  for (std::size_t j = snf.rank(); j < a.cols(); ++j) {
    std::vector<BigInt> v(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) v[i] = snf.V(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

using Vec = std::vector<BigInt>;

BigInt dot(const Vec& u, const Vec& v) {
  BigInt s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

// Nearest integer to n / d for d > 0, halves rounded up.
BigInt round_div(const BigInt& n, const BigInt& d) {
  BigInt num = 2 * n + d;
  BigInt den = 2 * d;
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

// Integral Gram-Schmidt data: d[i] is the Gram determinant of b[0..i-1]
// (d[0] = 1) and lambda[k][j] = d[j+1]·μ_kj.
struct IntegralLll {
  std::vector<Vec> b;
  std::vector<BigInt> d;
  std::vector<std::vector<BigInt>> lambda;

  // Gram-Schmidt coefficients of v against b[0..count-1].
  std::vector<BigInt> coefficients(const Vec& v, std::size_t count) const {
    std::vector<BigInt> lam(count);
    for (std::size_t j = 0; j < count; ++j) {
      BigInt u = dot(v, b[j]);
      for (std::size_t i = 0; i < j; ++i) {
        u = (d[i + 1] * u - lam[i] * lambda[j][i]) / d[i];
      }
      lam[j] = u;
    }
    return lam;
  }

  // v -= q·b[l] where v has coefficients lam.
  void reduce(Vec& v, std::vector<BigInt>& lam, std::size_t l) const {
    if (2 * abs(lam[l]) <= d[l + 1]) return;
    BigInt q = round_div(lam[l], d[l + 1]);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= q * b[l][i];
    lam[l] -= q * d[l + 1];
    for (std::size_t i = 0; i < l; ++i) lam[i] -= q * lambda[l][i];
  }

  void swap(std::size_t k, std::size_t kmax) {
    std::swap(b[k], b[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lambda[k][j], lambda[k - 1][j]);
    const BigInt lam = lambda[k][k - 1];
    const BigInt B = (d[k - 1] * d[k + 1] + lam * lam) / d[k];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      BigInt t = lambda[i][k];
      lambda[i][k] = (d[k + 1] * lambda[i][k - 1] - lam * t) / d[k];
      lambda[i][k - 1] = (B * t + lam * lambda[i][k]) / d[k + 1];
    }
    d[k] = B;
  }

  explicit IntegralLll(std::vector<Vec> basis) : b(std::move(basis)) {
    const std::size_t n = b.size();
    d.assign(n + 1, 0);
    d[0] = 1;
    lambda.assign(n, std::vector<BigInt>(n));
    if (n == 0) return;
    d[1] = dot(b[0], b[0]);
    if (d[1] == 0) throw std::invalid_argument("dependent lattice basis");
    std::size_t k = 1, kmax = 0;
    while (k < n) {
      if (k > kmax) {
        kmax = k;
        auto lam = coefficients(b[k], k);
        for (std::size_t j = 0; j < k; ++j) lambda[k][j] = lam[j];
        BigInt u = dot(b[k], b[k]);
        for (std::size_t i = 0; i < k; ++i) {
          u = (d[i + 1] * u - lam[i] * lam[i]) / d[i];
        }
        if (u == 0) throw std::invalid_argument("dependent lattice basis");
        d[k + 1] = u;
      }
      reduce(b[k], lambda[k], k - 1);
      const BigInt& l = lambda[k][k - 1];
      if (4 * d[k + 1] * d[k - 1] < 3 * d[k] * d[k] - 4 * l * l) {
        swap(k, kmax);
        if (k > 1) --k;
      } else {
        for (std::size_t j = k - 1; j-- > 0;) reduce(b[k], lambda[k], j);
        ++k;
      }
    }
  }
};

}  // namespace

std::vector<Vec> lll_reduce(std::vector<Vec> basis) {
  return IntegralLll(std::move(basis)).b;
}

Vec reduce_modulo_lattice(Vec x, const std::vector<Vec>& basis) {
  if (basis.empty()) return x;
  IntegralLll lll(basis);
  auto lam = lll.coefficients(x, basis.size());
  for (std::size_t l = basis.size(); l-- > 0;) lll.reduce(x, lam, l);
  return x;
}

}  // namespace fpg
