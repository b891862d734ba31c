#include "fpg/constructions.hpp"

#include "derivation.hpp"
#include "fpg/errors.hpp"
#include "fpg/int_matrix.hpp"
#include "witness_relations.hpp"

#include <algorithm>

namespace fpg {

WitnessLetters witness_letters(const Presentation& p) {
  Alphabet used = p.alphabet();
  auto take = [&used](const char* name) {
    Generator g = used.fresh(name);
    used.add(g);
    return g;
  };
  Generator a = take("a");
  Generator b = take("b");
  Generator c = take("c");
  return {a, b, c};
}

Presentation witness(const Presentation& p, const Word& w,
                     const WitnessOptions& opts) {
  if (w.empty()) throw EmptyWitnessWord("witness word is empty");
  if (!p.alphabet().covers(w)) {
    throw UndeclaredGenerator("witness word " + to_string(w) +
                              " leaves the base alphabet");
  }
  if (opts.torsion_order && *opts.torsion_order < 2) {
    throw Unsupported("torsion order must be at least 2");
  }
  const auto [a, b, c] = witness_letters(p);
  auto sides = detail::witness_sides(p.generators(), w, a, b, b, c);
  auto gens = p.generators();
  gens.insert(gens.end(), {a, b, c});
  auto rels = p.relators();
  for (std::size_t i = 0; i < sides.left.size(); ++i) {
    rels.push_back(sides.left[i] * invert(sides.right[i]));
  }
  Trace base = p.effective_trace();
  if (opts.torsion_order) {
    rels.push_back(power(w, *opts.torsion_order));
    base = TraceNode::input();
  }
  Trace left = TraceNode::amalgam(SubgroupKind::Free, base,
                                  TraceNode::free_base());
  Trace trace = TraceNode::amalgam(SubgroupKind::Free, left,
                                   TraceNode::free_base());
  return Presentation(std::move(gens), std::move(rels), std::move(trace));
}

Presentation add_witness_consequences(const Presentation& witness_group,
                                      const Presentation& p, const Word& w,
                                      const Certificate& w_certificate) {
  using namespace detail;
  const std::size_t n = p.relators().size();
  const auto& gens = witness_group.generators();
  if (gens.size() != p.generators().size() + 3 ||
      witness_group.relators().size() < n + 3 + p.generators().size()) {
    throw InconsistentData("not a witness presentation over the given base");
  }
  const Word A = Word::letter(gens[gens.size() - 3]);
  const Word B = Word::letter(gens[gens.size() - 2]);
  const Word C = Word::letter(gens[gens.size() - 1]);

  Equality w_trivial{w, Word{}, w_certificate};
  if (!check(witness_group, w_trivial)) {
    throw InvalidCertificate("certificate does not evaluate to the witness word");
  }
  // [w,b] = b⁻¹b = 1, then a⁻³[w,b]a³ = c⁻³bc³ gives b = 1.
  Equality comm = product(product(product(invert(w_trivial), refl(invert(B))),
                                  w_trivial),
                          refl(B));
  Equality third = relation(witness_group, n + 2,
                            power(A, -3) * commutator(w, B) * power(A, 3),
                            power(C, -3) * B * power(C, 3));
  Equality b_conj = trans(sym(third), wrap(power(A, -3), comm, power(A, 3)));
  Equality b_trivial = wrap(power(C, 3), b_conj, power(C, -3));

  Presentation out = apply_tietze(witness_group,
                                  tietze::AddRelator{w, w_certificate});
  return apply_tietze(out, tietze::AddRelator{B, b_trivial.certificate});
}

Presentation amalgam_join(const Presentation& base,
                          const std::vector<Attachment>& attachments) {
  Presentation out = base;
  for (const auto& att : attachments) {
    if (!base.alphabet().covers(att.g)) {
      throw AlphabetError("attachment word " + to_string(att.g) +
                          " leaves the base");
    }
    if (!att.group.alphabet().contains(att.c)) {
      throw AlphabetError("'" + att.c.name() +
                          "' is not a generator of the attached group");
    }
    auto renaming = rename_apart(att.group, out.alphabet());
    Presentation copy = rename_generators(att.group, renaming);
    auto it = renaming.find(att.c);
    const Generator c = it == renaming.end() ? att.c : it->second;
    Trace trace = TraceNode::amalgam(SubgroupKind::Cyclic, out.effective_trace(),
                                     copy.effective_trace());
    Presentation joined = free_product(out, copy);
    out = quotient_add_relators(joined, {att.g * Word::letter(c, -1)},
                                std::move(trace));
  }
  return out;
}

std::vector<std::pair<Word, BigInt>> h1_generators(const Presentation& p) {
  const auto& gens = p.generators();
  if (gens.empty()) return {};
  auto snf = smith_normal_form(abelianization_matrix(p));
  std::vector<std::pair<Word, BigInt>> out;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    BigInt d = k < std::min(snf.D.rows(), snf.D.cols()) ? snf.D(k, k) : BigInt(0);
    if (d == 1) continue;
    std::vector<Syllable> raw;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      raw.push_back({gens[j], snf.V_inverse(k, j)});
    }
    out.emplace_back(Word::reduce(raw), d);
  }
  return out;
}

Presentation kill_h1(const Presentation& p) {
  std::vector<Attachment> attachments;
  const Generator v("v");
  for (const auto& [word, d] : h1_generators(p)) {
    WitnessOptions opts;
    if (d != 0) opts.torsion_order = d;
    Presentation y = witness(Presentation({v}, {}), Word::letter(v), opts);
    attachments.push_back({std::move(y), word, v});
  }
  if (attachments.empty()) return p;
  return amalgam_join(p, attachments);
}

std::vector<Word> lambda_words(const Presentation& p) {
  const auto& gens = p.generators();
  const auto& rels = p.relators();
  IntMatrix at = abelianization_matrix(p).transpose();
  if (rels.empty()) at = IntMatrix(gens.size(), 0);
  const auto kernel = rels.empty() ? std::vector<std::vector<BigInt>>{}
                                    : lll_reduce(integer_kernel(at));
  std::vector<Word> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<BigInt> unit(gens.size(), 0);
    unit[i] = 1;
    auto e = rels.empty() ? std::nullopt : solve_integer(at, unit);
    if (!e) {
      throw NotPerfect("generator '" + gens[i].name() +
                       "' is not a product of relators in the abelianization");
    }
    *e = reduce_modulo_lattice(std::move(*e), kernel);
    Word lambda;
    for (std::size_t j = 0; j < rels.size(); ++j) {
      lambda = lambda * power(rels[j], (*e)[j]);
    }
    out.push_back(std::move(lambda));
  }
  return out;
}

Presentation universal_central_extension(const Presentation& p) {
  if (!h1(p).trivial()) throw NotPerfect("presentation is not perfect");
  auto lambdas = lambda_words(p);
  std::vector<Word> rels;
  for (const auto& f : p.generators()) {
    for (const auto& r : p.relators()) {
      Word c = commutator(Word::letter(f), r);
      if (!c.empty()) rels.push_back(std::move(c));
    }
  }
  rels.insert(rels.end(), lambdas.begin(), lambdas.end());
  return Presentation(p.generators(), std::move(rels),
                      TraceNode::central_extension(p.effective_trace()));
}

GeneratorMap uce_morphism(const Presentation& sub, const Presentation& super) {
  for (const auto& g : sub.generators()) {
    if (!super.alphabet().contains(g)) {
      throw NotSubpresentation("generator '" + g.name() +
                               "' is missing from the larger presentation");
    }
  }
  const auto& big = super.relators();
  for (const auto& r : sub.relators()) {
    if (std::find(big.begin(), big.end(), r) == big.end()) {
      throw NotSubpresentation("relator " + to_string(r) +
                               " is missing from the larger presentation");
    }
  }
  Presentation small_uce = universal_central_extension(sub);
  Presentation big_uce = universal_central_extension(super);
  const auto& targets = big_uce.relators();
  for (const auto& r : small_uce.relators()) {
    if (std::find(targets.begin(), targets.end(), r) == targets.end()) {
      throw NotSubpresentation("relator " + to_string(r) +
                               " of the smaller extension is not a relator "
                               "of the larger one");
    }
  }
  return GeneratorMap::identity(sub.generators());
}

Word CollectionResult::reconstruct() const {
  Word out = residual;
  for (const auto& f : factors) {
    out = out * f.conjugator * Word::letter(f.letter, f.sign) *
          invert(f.conjugator);
  }
  return out;
}

CollectionResult push_marked_right(const Word& w,
                                   const std::set<Generator>& marked) {
  auto ls = letters(w);
  std::vector<CollectedFactor> reversed;
  Word suffix;  // unmarked letters to the right
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    const auto& [g, sign] = *it;
    if (marked.contains(g)) {
      reversed.push_back({invert(suffix), g, sign});
    } else {
      suffix = Word::letter(g, sign) * suffix;
    }
  }
  CollectionResult out{suffix, {}};
  for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) {
    if (!out.factors.empty()) {
      const auto& last = out.factors.back();
      if (last.letter == it->letter && last.sign == -it->sign &&
          last.conjugator == it->conjugator) {
        out.factors.pop_back();
        continue;
      }
    }
    out.factors.push_back(*it);
  }
  return out;
}

Word step4_element(const CommutatorFactorization& data, const GeneratorMap& f) {
  Word c;
  Word fc;
  for (const auto& [g, h] : data.commutators) {
    c = c * commutator(g, h);
    fc = fc * commutator(substitute(g, f), substitute(h, f));
  }
  return invert(c) * fc;
}

std::vector<CollectionResult> step4_identity(
    const std::vector<Generator>& base_gens,
    const std::vector<CommutatorFactorization>& data, const GeneratorMap& f) {
  if (data.size() != base_gens.size()) {
    throw InconsistentData("one factorization per generator is needed");
  }
  std::set<Generator> base(base_gens.begin(), base_gens.end());
  std::set<Generator> marked;
  for (const auto& x : base_gens) {
    for (const auto& g : f.at(x).support()) {
      if (!base.contains(g)) marked.insert(g);
    }
  }
  for (const auto& x : base_gens) {
    Word z = Word::letter(x, -1) * f.at(x);
    for (const auto& g : z.support()) {
      if (!marked.contains(g)) {
        throw InconsistentData("f(" + x.name() + ") is not " + x.name() +
                               " times a word in the new letters");
      }
    }
  }
  std::vector<CollectionResult> out;
  for (std::size_t j = 0; j < base_gens.size(); ++j) {
    Word c;
    for (const auto& [g, h] : data[j].commutators) c = c * commutator(g, h);
    if (c * data[j].lambda != Word::letter(base_gens[j])) {
      throw InconsistentData("factorization of " + base_gens[j].name() +
                             " fails in the free group");
    }
    auto result = push_marked_right(step4_element(data[j], f), marked);
    if (!result.residual.empty()) {
      throw InconsistentData("collection left a nontrivial residual");
    }
    out.push_back(std::move(result));
  }
  return out;
}

bool verify_class_P(const Trace& trace) {
  if (!trace) return false;
  switch (trace->kind) {
    case TraceKind::FreeBase:
    case TraceKind::DiscreteSubgroupInput:
      return true;
    case TraceKind::Amalgam:
    case TraceKind::HNN:
      if (trace->subgroup == SubgroupKind::Other) return false;
      break;
    case TraceKind::CentralExtension:
      break;
    case TraceKind::Quotient:
      return false;
  }
  return std::all_of(trace->children.begin(), trace->children.end(),
                     [](const Trace& t) { return verify_class_P(t); });
}

}  // namespace fpg
