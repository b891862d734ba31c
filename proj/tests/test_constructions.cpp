#include "fpg/constructions.hpp"
#include "fpg/coset_enum.hpp"
#include "fpg/errors.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace fpg;

namespace {

Word W(const char* s) { return parse_word(s); }
Presentation P(const char* s) { return parse_presentation(s); }

using corpus::names;
using corpus::strings;


}  // namespace

TEST_CASE("witness over a free base") {
  auto p = P("< x | >");
  auto wp = witness(p, W("x"));
  CHECK(wp.generators().size() == 4);
  CHECK(wp.relators().size() == 4);
  CHECK(h1(wp).trivial());
  CHECK(verify_class_P(wp.trace()));
  CHECK(wp.generators()[1] == Generator("a"));
  CHECK(wp.generators()[3] == Generator("c"));
  // (1) a⁻¹ba = c⁻¹b⁻¹cbc, stored cyclically reduced
  CHECK(wp.relators()[0] == cyclic_reduce(W("a^-1 b a c^-1 b^-1 c^-1 b c")).core);

  CHECK_THROWS_AS(witness(p, Word{}), EmptyWitnessWord);
  CHECK_THROWS_AS(witness(p, W("y")), UndeclaredGenerator);
}

TEST_CASE("witness letters avoid the base names") {
  auto p = P("< a, b, c | a b c >");
  auto wp = witness(p, W("a b"));
  CHECK(wp.generators().size() == 6);
  CHECK(wp.generators()[3] == Generator("a#1"));
  CHECK(wp.relators().size() == 1 + 3 + 3);
  CHECK(h1(wp).trivial());
}

TEST_CASE("witness of a trivial word is trivial") {
  auto r = order(witness(P("< x | x >"), W("x")));
  REQUIRE(r.completed());
  CHECK(r.index == 1);
}

TEST_CASE("witness with torsion") {
  auto y = witness(P("< v | >"), W("v"), {BigInt(5)});
  CHECK(y.relators().size() == 5);
  CHECK(y.relators().back() == W("v^5"));
  CHECK(h1(y).trivial());
  CHECK(verify_class_P(y.trace()));
  CHECK_THROWS_AS(witness(P("< v | >"), W("v"), {BigInt(1)}), Unsupported);
}

TEST_CASE("witness groups are perfect") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> ngens(1, 4);
  std::uniform_int_distribution<std::size_t> nrels(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    auto gens = names(ngens(rng), "x");
    std::vector<Word> rels;
    for (std::size_t k = nrels(rng); rels.size() < k;) {
      Word r = oracle::random_word(rng, strings(gens), 6);
      if (!cyclic_reduce(r).core.empty()) rels.push_back(r);
    }
    Presentation p(gens, rels);
    Word w;
    while (w.empty()) w = oracle::random_word(rng, strings(gens), 5);
    auto wp = witness(p, w);
    CHECK(h1(wp).trivial());
    CHECK(wp.generators().size() == gens.size() + 3);
    CHECK(wp.relators().size() == rels.size() + 3 + gens.size());
  }
}

TEST_CASE("joins") {
  auto base = P("< a | a^5 >");
  auto y = witness(P("< v | >"), W("v"), {BigInt(5)});
  auto joined = amalgam_join(base, {{y, W("a"), Generator("v")}});
  CHECK(h1(joined).trivial());
  CHECK(joined.generators().size() == 5);
  CHECK(joined.relators().back() == W("a v^-1"));
  CHECK(verify_class_P(joined.trace()));
  CHECK(joined.trace()->subgroup == SubgroupKind::Cyclic);

  auto at_c = amalgam_join(base, {{y, W("a"), Generator("c")}});
  CHECK(h1(at_c).trivial());

  auto perfect = P("< a, b | a^2, b^3, (a*b)^5 >");
  CHECK(amalgam_join(perfect, {}) == perfect);

  auto z2 = P("< a, b | a^-1 b^-1 a b >");
  auto wx = witness(P("< x | >"), W("x"));
  auto two = amalgam_join(z2, {{wx, W("a"), Generator("c")},
                               {wx, W("b"), Generator("c")}});
  CHECK(h1(two).trivial());
  CHECK(two.generators().size() == 2 + 4 + 4);
  for (const auto& g : two.generators()) CHECK(two.alphabet().contains(g));

  CHECK_THROWS_AS(amalgam_join(base, {{y, W("z"), Generator("v")}}), AlphabetError);
  CHECK_THROWS_AS(amalgam_join(base, {{y, W("a"), Generator("z")}}), AlphabetError);
}

TEST_CASE("kill_h1 examples") {
  auto c5 = kill_h1(P("< a | a^5 >"));
  CHECK(c5.generators().size() == 1 + 4);
  CHECK(h1(c5).trivial());
  CHECK(verify_class_P(c5.trace()));

  auto perfect = P("< a, b | a^2, b^3, (a*b)^5 >");
  CHECK(kill_h1(perfect) == perfect);

  auto klein = P("< a, b | a^2, b^2, a^-1 b^-1 a b >");
  auto gens = h1_generators(klein);
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].second == 2);
  CHECK(gens[1].second == 2);
  auto k = kill_h1(klein);
  CHECK(k.generators().size() == 2 + 8);
  CHECK(h1(k).trivial());

  auto free = kill_h1(P("< x, y | >"));
  CHECK(h1(free).trivial());
  CHECK(free.generators().size() == 2 + 8);
}

TEST_CASE("kill_h1 on random finite abelianizations") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = corpus::random_finite_h1(rng);
    auto inv = h1(p);
    REQUIRE(inv.free_rank == 0);
    auto k = kill_h1(p);
    CHECK(h1(k).trivial());
    CHECK(verify_class_P(k.trace()));
    // one attachment per invariant factor
    CHECK(k.generators().size() == p.generators().size() + 4 * inv.torsion.size());
  }
}

TEST_CASE("lambda words") {
  auto p = P("< a, b | a b a^-1 b^-2, b a b^-1 a^-2 >");
  auto lambda = lambda_words(p);
  REQUIRE(lambda.size() == 2);
  CHECK(lambda[0] == invert(p.relators()[1]));
  CHECK(lambda[0] == W("a^2 b a^-1 b^-1"));
  CHECK(lambda[1] == invert(p.relators()[0]));
  CHECK(lambda[1] == W("b^2 a b^-1 a^-1"));
  for (std::size_t i = 0; i < 2; ++i) {
    const Word f = Word::letter(p.generators()[i]);
    CHECK(abelianize(f * invert(lambda[i]), p.generators()) ==
          std::vector<BigInt>{0, 0});
  }
  CHECK_THROWS_AS(lambda_words(P("< a | a^5 >")), NotPerfect);
  CHECK_THROWS_AS(lambda_words(P("< a | >")), NotPerfect);

  auto ico = P("< a, b | a^2, b^3, (a*b)^5 >");
  auto li = lambda_words(ico);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(abelianize(li[i], ico.generators()) ==
          abelianize(Word::letter(ico.generators()[i]), ico.generators()));
  }
}

TEST_CASE("universal central extensions") {
  auto p = P("< a, b | a b a^-1 b^-2, b a b^-1 a^-2 >");
  auto u = universal_central_extension(p);
  CHECK(u.relators().size() == 2 * 2 + 2);
  CHECK(h1(u).trivial());
  CHECK(u.trace()->kind == TraceKind::CentralExtension);
  CHECK(verify_class_P(u.trace()));
  CHECK_THROWS_AS(universal_central_extension(P("< a | a^5 >")), NotPerfect);

  // [a, a²] and [b, b³] are freely trivial and dropped.
  auto ico = P("< a, b | a^2, b^3, (a*b)^5 >");
  auto ui = universal_central_extension(ico);
  CHECK(ui.relators().size() == 2 * 3 + 2 - 2);
  auto r = order(ui);
  REQUIRE(r.completed());
  CHECK(r.index == 120);
  CHECK(check_permutation_rep(ui, {}, r.table));

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    auto k = kill_h1(corpus::random_finite_h1(rng));
    auto lambdas = lambda_words(k);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      for (const auto& g : k.generators()) {
        CHECK(lambdas[i].exponent_sum(g) == (g == k.generators()[i] ? 1 : 0));
      }
    }
    CHECK(h1(universal_central_extension(k)).trivial());
  }
}

TEST_CASE("uce morphisms") {
  auto p = P("< a, b | a b a^-1 b^-2, b a b^-1 a^-2 >");
  auto id = uce_morphism(p, p);
  CHECK(id == GeneratorMap::identity(p.generators()));

  auto big = P("< a, b, c, d | a b a^-1 b^-2, b a b^-1 a^-2,"
               " c d c^-1 d^-2, d c d^-1 c^-2 >");
  auto m = uce_morphism(p, big);
  CHECK(m.source().size() == 2);
  auto small_uce = universal_central_extension(p);
  auto big_uce = universal_central_extension(big);
  for (const auto& r : small_uce.relators()) {
    CHECK(std::find(big_uce.relators().begin(), big_uce.relators().end(),
                    substitute(r, m)) != big_uce.relators().end());
  }

  CHECK_THROWS_AS(uce_morphism(P("< a, e | a e a^-1 e^-2, e a e^-1 a^-2 >"), big),
                  NotSubpresentation);
  CHECK_THROWS_AS(uce_morphism(P("< a, b | a b a^-1 b^-2, b a b a^-2 >"), big),
                  NotSubpresentation);
}

TEST_CASE("collection examples") {
  auto one = push_marked_right(W("z a"), {Generator("z")});
  CHECK(one.residual == W("a"));
  REQUIRE(one.factors.size() == 1);
  CHECK(one.factors[0] == CollectedFactor{W("a^-1"), Generator("z"), 1});
  CHECK(one.reconstruct() == W("z a"));

  auto two = push_marked_right(W("a z b z^-1"), {Generator("z")});
  CHECK(two.residual == W("a b"));
  REQUIRE(two.factors.size() == 2);
  CHECK(two.factors[0] == CollectedFactor{W("b^-1"), Generator("z"), 1});
  CHECK(two.factors[1] == CollectedFactor{Word{}, Generator("z"), -1});
  CHECK(oracle::free_equal(two.reconstruct(), W("a z b z^-1")));

  auto none = push_marked_right(W("a b"), {Generator("z")});
  CHECK(none.factors.empty());
  CHECK(none.residual == W("a b"));
}

TEST_CASE("collection reconstructs random words") {
  std::mt19937_64 rng(21);
  const std::vector<std::string> gens{"a", "b", "z", "y"};
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    Word w = oracle::random_word(rng, gens, 14);
    std::set<Generator> marked;
    for (const auto& g : gens) {
      if (coin(rng)) marked.insert(Generator(g));
    }
    auto r = push_marked_right(w, marked);
    CHECK(oracle::free_equal(r.reconstruct(), w));
    // residual is the deletion of the marked letters
    std::vector<oracle::Letter> kept;
    for (const auto& l : oracle::expand(w)) {
      if (!marked.contains(Generator(l.first))) kept.push_back(l);
    }
    CHECK(oracle::free_equal(r.residual, oracle::from_letters(kept)));
    for (const auto& g : marked) {
      BigInt sum = 0;
      for (const auto& f : r.factors) {
        if (f.letter == g) sum += f.sign;
      }
      CHECK(sum == w.exponent_sum(g));
    }
  }
}

TEST_CASE("collection of substituted commutator identities") {
  const Generator x("x");
  GeneratorMap f;
  f.assign(x, W("x z"));

  auto trivial = step4_identity({x}, {{{{W("x"), W("x")}}, W("x")}}, f);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].residual.empty());
  CHECK(trivial[0].factors.empty());

  // [x, x²] and [xz, (xz)²] are both freely trivial.
  CommutatorFactorization powers{{{W("x"), W("x^2")}}, W("x")};
  auto p = step4_identity({x}, {powers}, f);
  CHECK(p[0].residual.empty());
  CHECK(p[0].factors.empty());
  CHECK(step4_element(powers, f).empty());

  const Generator y("y");
  GeneratorMap f2 = f;
  f2.assign(y, W("y u"));
  CommutatorFactorization data{{{W("x"), W("y")}}, W("y^-1 x^-1 y x x")};
  CommutatorFactorization ydata{{}, W("y")};
  auto r = step4_identity({x, y}, {data, ydata}, f2);
  CHECK(r[0].residual.empty());
  CHECK_FALSE(r[0].factors.empty());
  const Word e = step4_element(data, f2);
  CHECK(oracle::free_equal(r[0].reconstruct(), e));
  CHECK(e.exponent_sum(Generator("z")) == 0);
  CHECK(e.exponent_sum(Generator("u")) == 0);
  CHECK(r[1].factors.empty());

  CHECK_THROWS_AS(step4_identity({x}, {{{{W("x"), W("x")}}, W("x^2")}}, f),
                  InconsistentData);
  GeneratorMap bad;
  bad.assign(x, W("z x"));
  CHECK_THROWS_AS(step4_identity({x}, {data}, bad), InconsistentData);
}

TEST_CASE("collection of substituted commutators on random factorizations") {
  std::mt19937_64 rng(34);
  auto xs = names(3, "x");
  auto zs = names(3, "z");
  GeneratorMap f;
  for (std::size_t k = 0; k < 3; ++k) {
    f.assign(xs[k], Word::letter(xs[k]) * Word::letter(zs[k]));
  }
  std::uniform_int_distribution<int> count(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<CommutatorFactorization> data;
    for (std::size_t j = 0; j < 3; ++j) {
      CommutatorFactorization d;
      Word c;
      for (int l = count(rng); l > 0; --l) {
        Word g = oracle::random_word(rng, strings(xs), 4);
        Word h = oracle::random_word(rng, strings(xs), 4);
        d.commutators.emplace_back(g, h);
        c = c * commutator(g, h);
      }
      d.lambda = invert(c) * Word::letter(xs[j]);
      data.push_back(std::move(d));
    }
    auto results = step4_identity(xs, data, f);
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(results[j].residual.empty());
      const Word e = step4_element(data[j], f);
      CHECK(oracle::free_equal(results[j].reconstruct(), e));
      for (const auto& z : zs) CHECK(e.exponent_sum(z) == 0);
    }
  }
}

TEST_CASE("class P audit") {
  CHECK(verify_class_P(witness(P("< x | >"), W("x")).trace()));
  auto bad = TraceNode::hnn(SubgroupKind::Other, TraceNode::free_base());
  CHECK_FALSE(verify_class_P(bad));
  CHECK_FALSE(verify_class_P(TraceNode::quotient(TraceNode::input())));
  CHECK_FALSE(verify_class_P(nullptr));
  CHECK(verify_class_P(TraceNode::amalgam(SubgroupKind::Abelian,
                                          TraceNode::input(),
                                          TraceNode::hnn(SubgroupKind::Free,
                                                         TraceNode::free_base()))));
  CHECK(verify_class_P(kill_h1(P("< a | a^6 >")).trace()));
}
