#include "fpg/int_matrix.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

using namespace fpg;

namespace {

void check_decomposition(const IntMatrix& a) {
  auto s = smith_normal_form(a);
  REQUIRE(s.U * a * s.V == s.D);
  CHECK(s.D.is_diagonal());
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
  CHECK(s.V * s.V_inverse == IntMatrix::identity(a.cols()));
  auto d = s.diagonal();
  bool seen_zero = false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (d[i] == 0) seen_zero = true;
    else CHECK_FALSE(seen_zero);
    if (i > 0 && d[i - 1] != 0) CHECK(d[i] % d[i - 1] == 0);
  }
}

}  // namespace

TEST_CASE("smith normal form examples") {
  CHECK(smith_normal_form(IntMatrix{{0, 0}, {0, 0}}).D == IntMatrix{{0, 0}, {0, 0}});
  CHECK(smith_normal_form(IntMatrix{{1}}).D == IntMatrix{{1}});
  auto s = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(s.D == IntMatrix{{2, 0}, {0, 4}});
  CHECK(oracle::invariant_factors_by_minors(IntMatrix{{2, 4}, {6, 8}}) ==
        std::vector<BigInt>{2, 4});
  CHECK(smith_normal_form(IntMatrix(0, 0)).D == IntMatrix(0, 0));
  check_decomposition(IntMatrix(0, 3));
  check_decomposition(IntMatrix(3, 0));
}

TEST_CASE("smith normal form is deterministic") {
  IntMatrix a{{3, -7, 2}, {0, 5, 5}, {4, 1, -6}};
  auto s1 = smith_normal_form(a);
  auto s2 = smith_normal_form(a);
  CHECK(s1.U == s2.U);
  CHECK(s1.V == s2.V);
}

TEST_CASE("smith normal form reconstruction on random matrices") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    check_decomposition(oracle::random_matrix(rng, dim(rng), dim(rng), 20));
  }
}

TEST_CASE("invariant factors agree with gcd of minors") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = oracle::random_matrix(rng, dim(rng), dim(rng), 5);
    CHECK(smith_normal_form(a).diagonal() ==
          oracle::invariant_factors_by_minors(a));
  }
}

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = oracle::random_matrix(rng, 4, 4, 9);
    std::vector<std::vector<BigInt>> m(4, std::vector<BigInt>(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m[i][j] = a(i, j);
    CHECK(determinant(a) == oracle::cofactor_det(m));
  }
}

TEST_CASE("abelian invariants") {
  auto z5 = abelian_invariants(IntMatrix{{5}});
  CHECK(z5.free_rank == 0);
  CHECK(z5.torsion == std::vector<BigInt>{5});
  CHECK(to_string(z5) == "Z/5");
  auto f2 = abelian_invariants(IntMatrix(0, 2));
  CHECK(f2.free_rank == 2);
  CHECK(f2.torsion.empty());
  CHECK(to_string(f2) == "Z^2");
  CHECK(abelian_invariants(IntMatrix{{0, -1}, {-1, 0}}).trivial());
  CHECK(to_string(abelian_invariants(IntMatrix{{0, -1}, {-1, 0}})) == "trivial");
}

TEST_CASE("solve_integer") {
  CHECK(solve_integer(IntMatrix{{2}}, {4}) == std::vector<BigInt>{2});
  CHECK_FALSE(solve_integer(IntMatrix{{2}}, {3}).has_value());
  CHECK(solve_integer(IntMatrix{{0, -1}, {-1, 0}}, {0, -1}) ==
        std::vector<BigInt>{1, 0});

  std::mt19937_64 rng(19);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::uniform_int_distribution<long> entry(-6, 6);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = oracle::random_matrix(rng, dim(rng), dim(rng), 6);
    std::vector<BigInt> b(a.rows());
    for (auto& v : b) v = entry(rng);
    auto x = solve_integer(a, b);
    auto s = smith_normal_form(a);
    auto c = s.U * b;
    bool obstructed = false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i < s.rank()) obstructed |= c[i] % s.D(i, i) != 0;
      else obstructed |= c[i] != 0;
    }
    if (x) CHECK(a * *x == b);
    else CHECK(obstructed);
    // a consistent right-hand side always has a solution
    std::vector<BigInt> y(a.cols());
    for (auto& v : y) v = entry(rng);
    auto x2 = solve_integer(a, a * y);
    REQUIRE(x2.has_value());
    CHECK(a * *x2 == a * y);
  }
}

TEST_CASE("integer kernel and lattice reduction") {
  CHECK(integer_kernel(IntMatrix{{1, 0}, {0, 1}}).empty());
  auto k = integer_kernel(IntMatrix{{2, 0, 1}, {0, 3, 1}});
  REQUIRE(k.size() == 1);
  CHECK((k[0] == std::vector<BigInt>{3, 2, -6} ||
         k[0] == std::vector<BigInt>{-3, -2, 6}));

  auto basis = lll_reduce({{1, 0}, {1000, 1}});
  CHECK(basis == std::vector<std::vector<BigInt>>{{1, 0}, {0, 1}});
  CHECK(reduce_modulo_lattice({7, -3}, {}) == std::vector<BigInt>{7, -3});
  CHECK(reduce_modulo_lattice({1003, 5}, {{1, 0}, {1000, 1}}) ==
        std::vector<BigInt>{0, 0});

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> rows(1, 4);
  std::uniform_int_distribution<std::size_t> extra(1, 4);
  std::uniform_int_distribution<long> entry(-50, 50);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = rows(rng);
    auto a = oracle::random_matrix(rng, r, r + extra(rng), 9);
    auto kernel = integer_kernel(a);
    CHECK(kernel.size() == a.cols() - smith_normal_form(a).rank());
    auto reduced = lll_reduce(kernel);
    REQUIRE(reduced.size() == kernel.size());
    for (const auto& v : reduced) {
      CHECK(a * v == std::vector<BigInt>(a.rows(), 0));
    }
    std::vector<BigInt> x(a.cols());
    for (auto& v : x) v = entry(rng);
    auto y = reduce_modulo_lattice(x, kernel);
    CHECK(a * y == a * x);
    CHECK(reduce_modulo_lattice(y, kernel) == y);
    std::vector<BigInt> in_lattice(a.cols());
    for (const auto& v : kernel) {
      const long c = entry(rng);
      for (std::size_t i = 0; i < v.size(); ++i) in_lattice[i] += c * v[i];
    }
    CHECK(reduce_modulo_lattice(in_lattice, kernel) ==
          std::vector<BigInt>(a.cols(), 0));
  }
}

TEST_CASE("lll output is size reduced and satisfies the exchange condition") {
  using Q = boost::multiprecision::cpp_rational;
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> entry(-40, 40);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = dim(rng);
    std::vector<std::vector<BigInt>> basis(n, std::vector<BigInt>(n + 1));
    for (auto& v : basis) for (auto& e : v) e = entry(rng);
    IntMatrix m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= n; ++j) m(i, j) = basis[i][j];
    if (smith_normal_form(m).rank() < n) continue;
    auto b = lll_reduce(basis);
    // rational Gram-Schmidt
    std::vector<std::vector<Q>> star;
    std::vector<std::vector<Q>> mu(n, std::vector<Q>(n));
    auto dot = [](const auto& u, const auto& v) {
      Q s = 0;
      for (std::size_t i = 0; i < u.size(); ++i) s += Q(u[i]) * Q(v[i]);
      return s;
    };
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Q> w(b[i].begin(), b[i].end());
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = dot(b[i], star[j]) / dot(star[j], star[j]);
        for (std::size_t k = 0; k < w.size(); ++k) w[k] -= mu[i][j] * star[j][k];
      }
      star.push_back(w);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) CHECK(abs(mu[i][j]) <= Q(1, 2));
      if (i > 0) {
        CHECK(dot(star[i], star[i]) >=
              (Q(3, 4) - mu[i][i - 1] * mu[i][i - 1]) *
                  dot(star[i - 1], star[i - 1]));
      }
    }
    // same lattice: b inside the original one, with the same covolume
    IntMatrix g1(n, n), g2(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        g1(i, j) = dot(basis[i], basis[j]).convert_to<BigInt>();
        g2(i, j) = dot(b[i], b[j]).convert_to<BigInt>();
      }
    CHECK(determinant(g1) == determinant(g2));
    for (const auto& v : b) CHECK(solve_integer(m.transpose(), v).has_value());
  }
}
