#include "fpg/coset_enum.hpp"
#include "fpg/errors.hpp"

#include <doctest.h>

#include <set>

using namespace fpg;

namespace {

Word W(const char* s) { return parse_word(s); }
Presentation P(const char* s) { return parse_presentation(s); }

using Perm = std::vector<int>;

Perm compose(const Perm& x, const Perm& y) {  // x then y
  Perm out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = y[static_cast<std::size_t>(x[i])];
  return out;
}

// Size of the permutation group generated by gens, by closure.
std::size_t closure_size(const std::vector<Perm>& gens) {
  std::set<Perm> seen;
  Perm id(gens[0].size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  std::vector<Perm> stack{id};
  seen.insert(id);
  while (!stack.empty()) {
    Perm p = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      Perm q = compose(p, g);
      if (seen.insert(q).second) stack.push_back(q);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("cyclic and trivial groups") {
  auto r = order(P("< a | a^5 >"));
  REQUIRE(r.completed());
  CHECK(r.index == 5);
  auto perms = permutation_rep(r.table);
  // a acts as a 5-cycle
  std::size_t k = 0;
  for (int i = 0; i < 5; ++i) k = perms[0][k];
  CHECK(k == 0);
  CHECK(perms[0][0] != 0);

  auto t = order(P("< a | a >"));
  REQUIRE(t.completed());
  CHECK(t.index == 1);
  CHECK(permutation_rep(t.table) == std::vector<Permutation>{{0}});
}

TEST_CASE("icosahedral group has order 60") {
  auto ico = P("< a, b | a^2, b^3, (a*b)^5 >");
  auto r = order(ico);
  REQUIRE(r.completed());
  CHECK(r.index == 60);
  CHECK(check_permutation_rep(ico, {}, r.table));
  auto perms = permutation_rep(r.table);
  for (const auto& rel : ico.relators()) {
    for (std::size_t k = 0; k < 60; ++k) CHECK(act(r.table, perms, k, rel) == k);
  }
  // Oracle: (1 2)(3 4) and (1 3 5) satisfy the relators and generate a
  // group of order 60, so the presented group has order at least 60.
  Perm a{1, 0, 3, 2, 4};
  Perm b{2, 1, 4, 3, 0};
  CHECK(closure_size({a, b}) == 60);
  Perm ab = compose(a, b);
  Perm x = ab;
  for (int i = 1; i < 5; ++i) x = compose(x, ab);
  CHECK(x == Perm{0, 1, 2, 3, 4});
}

TEST_CASE("subgroup index") {
  auto ico = P("< a, b | a^2, b^3, (a*b)^5 >");
  auto r = enumerate(ico, {W("a")});
  REQUIRE(r.completed());
  CHECK(r.index == 30);
  auto perms = permutation_rep(r.table);
  CHECK(act(r.table, perms, 0, W("a")) == 0);
  auto s = enumerate(ico, {W("b"), W("a b a b^-1 a")});
  REQUIRE(s.completed());
  CHECK(60 % s.index == 0);
  CHECK(enumerate(ico, {W("a"), W("b")}).index == 1);
}

TEST_CASE("further finite groups") {
  CHECK(order(P("< a, b | a^2, b^3, (a*b)^7, (a^-1 b^-1 a b)^4 >")).index == 168);
  CHECK(order(P("< s, t, u, v | s^2, t^2, u^2, v^2, (s t)^3, (t u)^3, (u v)^3,"
                " (s u)^2, (s v)^2, (t v)^2 >")).index == 120);
  CHECK(order(P("< a, b | a^8, b^7, (a b)^2, (a^-1 b)^3 >")).index == 10752);
  CHECK(order(P("< x, y | x^2, y^2 , (x y)^6 >")).index == 12);
  CHECK(order(P("< a, b | a b a^-1 b^-2, b a b^-1 a^-2 >")).index == 1);
}

TEST_CASE("infinite groups stay indeterminate") {
  auto r = order(P("< x | >"), 1000);
  CHECK_FALSE(r.completed());
  CHECK(r.limit == 1000);
  CHECK(r.cosets_used <= 1000);
  CHECK_THROWS_AS(permutation_rep(r.table), IncompleteTable);
  CHECK_FALSE(order(P("< a, b | a^2, b^2 >"), 2000).completed());
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(order(P("< a | a^5 >"), 0), LimitTooSmall);
  CHECK_FALSE(order(P("< a | a^5 >"), 3).completed());
  CHECK_THROWS_AS(enumerate(P("< a | a^5 >"), {W("b")}), UndeclaredGenerator);
}

TEST_CASE("determinism and monotonicity") {
  auto ico = P("< a, b | a^2, b^3, (a*b)^5 >");
  auto r1 = order(ico);
  auto r2 = order(ico);
  CHECK(r1.table == r2.table);
  for (std::size_t limit : {60, 61, 70, 100, 500, 5000}) {
    auto r = order(ico, limit);
    if (r.completed()) {
      CHECK(r.index == 60);
      for (std::size_t bigger : {limit + 1, 2 * limit, 10 * limit}) {
        auto s = order(ico, bigger);
        REQUIRE(s.completed());
        CHECK(s.index == 60);
      }
    }
  }
  CHECK_FALSE(order(ico, 59).completed());
}
