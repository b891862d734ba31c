#include "fpg/amalgam.hpp"

#include "fpg/errors.hpp"
#include "witness_relations.hpp"

namespace fpg {

namespace {

void check_within(const Alphabet& alphabet, const std::vector<Word>& words) {
  for (const auto& w : words) {
    if (!alphabet.covers(w)) {
      throw AlphabetError("subgroup generator " + to_string(w) +
                          " leaves its factor");
    }
  }
}

Side other(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

}  // namespace

AmalgamSpec::AmalgamSpec(Alphabet left_alphabet, Alphabet right_alphabet,
                         std::vector<Word> left_generators,
                         std::vector<Word> right_generators)
    : left_alphabet_(std::move(left_alphabet)),
      right_alphabet_(std::move(right_alphabet)),
      left_generators_(std::move(left_generators)),
      right_generators_(std::move(right_generators)) {
  for (const auto& g : left_alphabet_.generators()) {
    if (right_alphabet_.contains(g)) {
      throw AlphabetError("generator '" + g.name() + "' is in both factors");
    }
  }
  check_within(left_alphabet_, left_generators_);
  check_within(right_alphabet_, right_generators_);
  if (left_generators_.size() != right_generators_.size()) {
    throw AlphabetError("identification pairs lists of different lengths");
  }
  left_subgroup_ = SubgroupGraph::fold(left_generators_);
  right_subgroup_ = SubgroupGraph::fold(right_generators_);
  if (left_subgroup_.rank() != left_generators_.size() ||
      right_subgroup_.rank() != right_generators_.size()) {
    throw Unsupported("amalgamated subgroup generators are not free bases");
  }
}

Side AmalgamSpec::side_of(const Generator& g) const {
  if (left_alphabet_.contains(g)) return Side::Left;
  if (right_alphabet_.contains(g)) return Side::Right;
  throw MixedLetterError("generator '" + g.name() + "' is in neither factor");
}

Word AmalgamSpec::transfer(const Word& h, Side from) const {
  auto expr = subgroup(from).express(h);
  if (!expr) {
    throw DomainError(to_string(h) + " is not in the amalgamated subgroup");
  }
  GeneratorMap m;
  const auto& target = subgroup_generators(other(from));
  for (std::size_t i = 0; i < target.size(); ++i) {
    m.assign(SubgroupGraph::input_symbol(i), target[i]);
  }
  return substitute(*expr, m);
}

std::vector<FactorWord> factor_pieces(const AmalgamSpec& a, const Word& w) {
  std::vector<FactorWord> out;
  for (const auto& s : w.syllables()) {
    Side side = a.side_of(s.gen);
    Word piece = Word::letter(s.gen, s.exponent);
    if (!out.empty() && out.back().side == side) {
      out.back().word = out.back().word * piece;
    } else {
      out.push_back({side, piece});
    }
  }
  return out;
}

NormalForm normal_form(const AmalgamSpec& a, const Word& w) {
  auto pieces = factor_pieces(a, w);
  // Right to left: the suffix processed so far is carry · reps, with carry
  // in the subgroup (left letters) and reps alternating.
  Word carry;
  std::vector<FactorWord> reversed_reps;  // back() is the leftmost rep
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    const Side side = it->side;
    Word carry_here = side == Side::Left ? carry : a.transfer(carry, Side::Left);
    Word x = it->word * carry_here;
    if (!reversed_reps.empty() && reversed_reps.back().side == side) {
      x = x * reversed_reps.back().word;
      reversed_reps.pop_back();
    }
    const auto& graph = a.subgroup(side);
    Word rep = graph.coset_representative(x);
    Word h = x * invert(rep);
    carry = side == Side::Left ? h : a.transfer(h, Side::Right);
    if (!rep.empty()) reversed_reps.push_back({side, rep});
  }
  return {carry, {reversed_reps.rbegin(), reversed_reps.rend()}};
}

bool is_trivial_word(const AmalgamSpec& a, const Word& w) {
  return normal_form(a, w).is_identity();
}

Word reconstruct(const NormalForm& nf) {
  Word out = nf.prefix;
  for (const auto& s : nf.syllables) out = out * s.word;
  return out;
}

WitnessAmalgam build_witness_amalgam(const Presentation& base, const Word& w) {
  if (!base.relators().empty()) {
    throw NotFreeBase("witness amalgam normal forms need a free base");
  }
  if (w.empty()) throw TrivialWitnessWord("witness word is empty");
  if (!base.alphabet().covers(w)) {
    throw AlphabetError("witness word leaves the base alphabet");
  }
  Alphabet used = base.alphabet();
  auto take = [&used](const std::string& name) {
    Generator g = used.fresh(name);
    used.add(g);
    return g;
  };
  Generator a = take("a");
  Generator b1 = take("b1");
  Generator b2 = take("b2");
  Generator c = take("c");

  auto sides = detail::witness_sides(base.generators(), w, a, b1, b2, c);
  std::vector<Word> left{Word::letter(b1)};
  std::vector<Word> right{Word::letter(b2)};
  left.insert(left.end(), sides.left.begin(), sides.left.end());
  right.insert(right.end(), sides.right.begin(), sides.right.end());

  Alphabet left_alphabet = base.alphabet();
  left_alphabet.add(a);
  left_alphabet.add(b1);
  Alphabet right_alphabet({b2, c});
  return {AmalgamSpec(std::move(left_alphabet), std::move(right_alphabet),
                      std::move(left), std::move(right)),
          a, b1, b2, c};
}

}  // namespace fpg
