#include "fpg/turing.hpp"

#include "derivation.hpp"
#include "fpg/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace fpg {

TuringMachine::TuringMachine(std::vector<std::string> states, std::string start,
                             std::string halt, std::vector<std::string> alphabet,
                             std::vector<Transition> transitions)
    : states_(std::move(states)),
      start_(std::move(start)),
      halt_(std::move(halt)),
      transitions_(std::move(transitions)) {
  if (std::find(states_.begin(), states_.end(), halt_) == states_.end()) {
    states_.push_back(halt_);
  }
  std::set<std::string> seen;
  for (const auto& s : states_) {
    if (!Generator::is_valid_name("q_" + s)) {
      throw ParseError("bad state name '" + s + "'", 1, 1);
    }
    if (!seen.insert(s).second) {
      throw ParseError("state '" + s + "' listed twice", 1, 1);
    }
  }
  if (!seen.contains(start_)) {
    throw ParseError("unknown start state '" + start_ + "'", 1, 1);
  }
  alphabet_.push_back(kBlank);
  for (auto& a : alphabet) {
    if (a == kBlank) continue;
    if (a.size() != 1 || a[0] == '#' ||
        std::isspace(static_cast<unsigned char>(a[0]))) {
      throw ParseError("tape symbols are single characters, got '" + a + "'",
                       2, 1);
    }
    if (std::find(alphabet_.begin(), alphabet_.end(), a) != alphabet_.end()) {
      throw ParseError("symbol '" + a + "' listed twice", 2, 1);
    }
    alphabet_.push_back(std::move(a));
  }
  auto known_symbol = [this](const std::string& a) {
    return std::find(alphabet_.begin(), alphabet_.end(), a) != alphabet_.end();
  };
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const auto& tr = transitions_[i];
    const std::size_t line = i + 3;
    if (!seen.contains(tr.state) || !seen.contains(tr.next_state)) {
      throw ParseError("unknown state in transition", line, 1);
    }
    if (!known_symbol(tr.symbol) || !known_symbol(tr.write)) {
      throw ParseError("unknown symbol in transition", line, 1);
    }
    if (tr.state == halt_) {
      throw ParseError("transition out of the halt state", line, 1);
    }
    if (!index_.emplace(std::pair{tr.state, tr.symbol}, i).second) {
      throw ParseError("second transition for (" + tr.state + ", " +
                           tr.symbol + ")",
                       line, 1);
    }
  }
}

const Transition* TuringMachine::find(const std::string& state,
                                      const std::string& symbol) const {
  auto it = index_.find({state, symbol});
  return it == index_.end() ? nullptr : &transitions_[it->second];
}

TuringMachine parse_turing_machine(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::size_t> numbers;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    lines.push_back(std::move(tokens));
    numbers.push_back(n);
  }
  if (lines.size() < 2 || lines[0][0] != "states:" ||
      lines[1][0] != "alphabet:") {
    throw ParseError("expected 'states:' and 'alphabet:' header lines", 1, 1);
  }

  std::vector<std::string> states;
  std::string halt;
  std::string start;
  const auto& head = lines[0];
  for (std::size_t i = 1; i < head.size(); ++i) {
    if (head[i] == "halt:" || head[i] == "start:") {
      if (i + 1 >= head.size()) {
        throw ParseError("missing state after " + head[i], numbers[0], 1);
      }
      (head[i] == "halt:" ? halt : start) = head[i + 1];
      ++i;
    } else {
      states.push_back(head[i]);
    }
  }
  if (halt.empty() || start.empty()) {
    throw ParseError("header needs 'halt:' and 'start:'", numbers[0], 1);
  }
  std::vector<std::string> alphabet(lines[1].begin() + 1, lines[1].end());

  std::vector<Transition> transitions;
  for (std::size_t l = 2; l < lines.size(); ++l) {
    const auto& tok = lines[l];
    if (tok.size() != 6 || tok[2] != "->" || (tok[5] != "L" && tok[5] != "R")) {
      throw ParseError("expected 'state symbol -> state symbol L|R'",
                       numbers[l], 1);
    }
    transitions.push_back({tok[0], tok[1], tok[3], tok[4],
                           tok[5] == "L" ? Move::Left : Move::Right});
  }
  return TuringMachine(std::move(states), std::move(start), std::move(halt),
                       std::move(alphabet), std::move(transitions));
}

std::vector<std::string> tape_input(const TuringMachine& t,
                                    std::string_view input) {
  std::vector<std::string> out;
  const auto& alphabet = t.alphabet();
  for (char ch : input) {
    std::string s(1, ch);
    if (s == TuringMachine::kBlank ||
        std::find(alphabet.begin(), alphabet.end(), s) == alphabet.end()) {
      throw UsageError("input symbol '" + s + "' is not a non-blank tape symbol");
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string binary_input(std::size_t i) {
  if (i == 0) return "0";
  std::string out;
  for (; i > 0; i /= 2) out.push_back(i % 2 ? '1' : '0');
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

// Tape around the head: `left` ends next to the head, `right` starts under it.
struct Configuration {
  std::string state;
  std::deque<std::string> left;
  std::deque<std::string> right;

  const std::string& scanned() const {
    static const std::string blank = TuringMachine::kBlank;
    return right.empty() ? blank : right.front();
  }

  // false when no transition applies
  bool step(const TuringMachine& t) {
    const Transition* tr = t.find(state, scanned());
    if (!tr) return false;
    if (!right.empty()) right.pop_front();
    if (tr->move == Move::Right) {
      left.push_back(tr->write);
    } else {
      right.push_front(tr->write);
      right.push_front(left.empty() ? TuringMachine::kBlank : left.back());
      if (!left.empty()) left.pop_back();
    }
    state = tr->next_state;
    return true;
  }

  // Blank-trimmed, so translation and blank padding do not matter.
  std::string key() const {
    std::vector<std::string> l(left.begin(), left.end());
    std::vector<std::string> r(right.begin(), right.end());
    while (!l.empty() && l.front() == TuringMachine::kBlank) l.erase(l.begin());
    while (!r.empty() && r.back() == TuringMachine::kBlank) r.pop_back();
    std::string out = state + "|";
    for (const auto& s : l) out += s;
    out += "|";
    for (const auto& s : r) out += s;
    return out;
  }
};

Configuration initial(const TuringMachine& t, std::string_view input) {
  auto symbols = tape_input(t, input);
  return {t.start(), {}, {symbols.begin(), symbols.end()}};
}

}  // namespace

std::variant<Halted, Running> simulate(const TuringMachine& t,
                                       std::string_view input,
                                       std::size_t max_steps) {
  Configuration c = initial(t, input);
  for (std::size_t steps = 0;; ++steps) {
    if (c.state == t.halt()) return Halted{steps};
    if (steps == max_steps || !c.step(t)) return Running{};
  }
}

bool detect_cycle(const TuringMachine& t, std::string_view input,
                  std::size_t max_steps) {
  Configuration c = initial(t, input);
  std::set<std::string> seen;
  for (std::size_t steps = 0; steps <= max_steps; ++steps) {
    if (c.state == t.halt()) return false;
    if (!seen.insert(c.key()).second) return true;
    if (!c.step(t)) return false;
  }
  return false;
}

namespace {

Word product_of(const std::vector<Generator>& gens, int sign) {
  std::vector<Syllable> raw;
  for (const auto& g : gens) raw.push_back({g, sign});
  return Word::reduce(raw);
}

// s⁻¹ U s for a word U over the rule letters and x.
Word twist(const Word& u, const Generator& x) {
  std::vector<Syllable> raw;
  for (const auto& s : u.syllables()) {
    if (s.gen == x) {
      raw.push_back({x, 2 * s.exponent});
    } else {
      const BigInt n = abs(s.exponent);
      const int sign = s.exponent > 0 ? 1 : -1;
      for (BigInt i = 0; i < n; ++i) {
        raw.push_back({x, sign});
        raw.push_back({s.gen, sign});
        raw.push_back({x, sign});
      }
    }
  }
  return Word::reduce(raw);
}

}  // namespace

MachineGroup::MachineGroup(const TuringMachine& t) : machine_(t) {
  for (std::size_t i = 0; i < t.alphabet().size(); ++i) {
    Generator g("s" + std::to_string(i));
    symbols_.emplace(t.alphabet()[i], g);
    tape_letters_.push_back(g);
  }
  tape_letters_.push_back(marker_);
  for (const auto& s : t.states()) states_.emplace(s, Generator("q_" + s));

  const Generator blank = symbols_.at(TuringMachine::kBlank);
  auto q = [this](const std::string& s) { return states_.at(s); };
  for (const auto& tr : t.transitions()) {
    const Generator a = symbols_.at(tr.symbol);
    const Generator b = symbols_.at(tr.write);
    if (tr.move == Move::Right) {
      rules_.push_back({{}, {a}, {b}, {}, q(tr.state), q(tr.next_state)});
    } else {
      for (const auto& c : t.alphabet()) {
        const Generator cg = symbols_.at(c);
        rules_.push_back({{cg}, {a}, {}, {cg, b}, q(tr.state), q(tr.next_state)});
      }
      rules_.push_back(
          {{marker_}, {a}, {marker_}, {blank, b}, q(tr.state), q(tr.next_state)});
    }
  }
  for (const auto& s : t.states()) {
    if (s == t.halt()) continue;
    rules_.push_back({{}, {marker_}, {}, {blank, marker_}, q(s), q(s)});
  }
  const Generator h = q(t.halt());
  for (const auto& c : t.alphabet()) {
    rules_.push_back({{}, {symbols_.at(c)}, {}, {}, h, h});
  }
  for (const auto& c : t.alphabet()) {
    rules_.push_back({{symbols_.at(c)}, {marker_}, {}, {marker_}, h, h});
  }
  rules_.push_back({{marker_}, {marker_}, {}, {}, h, final_});

  std::vector<Generator> gens = tape_letters_;
  gens.push_back(final_);
  for (const auto& s : t.states()) gens.push_back(q(s));
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    rule_letters_.push_back(Generator("r" + std::to_string(i + 1)));
  }
  gens.insert(gens.end(), rule_letters_.begin(), rule_letters_.end());
  gens.push_back(x_);
  gens.push_back(t_);
  gens.push_back(k_);

  const Word X = Word::letter(x_);
  const Word T = Word::letter(t_);
  const Word K = Word::letter(k_);
  std::vector<Word> rels;
  auto add = [&rels](const Word& w) {
    rels.push_back(w);
    return rels.size() - 1;
  };
  for (const auto& s : tape_letters_) {
    const Word S = Word::letter(s);
    doubling_.push_back(add(invert(S) * X * S * power(X, -2)));
  }
  for (const auto& s : tape_letters_) {
    const Word S = Word::letter(s);
    twisting_.emplace_back();
    for (const auto& r : rule_letters_) {
      const Word R = Word::letter(r);
      twisting_.back().push_back(add(invert(S) * R * S * invert(X * R * X)));
    }
  }
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& rule = rules_[i];
    const Word R = Word::letter(rule_letters_[i]);
    const Word lhs = invert(R) * product_of(rule.f, -1) *
                     Word::letter(rule.from) * product_of(rule.g, 1) * R;
    const Word rhs = product_of(rule.h, -1) * Word::letter(rule.to) *
                     product_of(rule.k, 1);
    rule_relators_.push_back(add(lhs * invert(rhs)));
  }
  for (const auto& r : rule_letters_) {
    t_commutes_.push_back(add(commutator(T, Word::letter(r))));
  }
  t_commutes_.push_back(add(commutator(T, X)));
  for (const auto& r : rule_letters_) {
    k_commutes_.push_back(add(commutator(K, Word::letter(r))));
  }
  k_commutes_.push_back(add(commutator(K, X)));
  const Word Q = Word::letter(final_);
  k_commutes_.push_back(add(commutator(K, invert(Q) * T * Q)));

  // x; tape letters over ⟨x, r⟩; rule letters over the q-letters; t; k.
  Trace trace = TraceNode::free_base();
  for (int step = 0; step < 4; ++step) {
    trace = TraceNode::hnn(SubgroupKind::Free, trace);
  }
  group_ = Presentation(std::move(gens), std::move(rels), trace);
}

Word MachineGroup::word(std::string_view input) const {
  std::vector<Generator> lambda;
  for (const auto& s : tape_input(machine_, input)) {
    lambda.push_back(symbols_.at(s));
  }
  lambda.push_back(marker_);
  const Word W = Word::letter(marker_, -1) *
                 Word::letter(states_.at(machine_.start())) *
                 product_of(lambda, 1);
  return commutator(invert(W) * Word::letter(t_) * W, Word::letter(k_));
}

std::optional<Certificate> MachineGroup::halting_certificate(
    std::string_view input, std::size_t max_steps) const {
  if (!std::holds_alternative<Halted>(simulate(machine_, input, max_steps))) {
    return std::nullopt;
  }
  using namespace detail;
  const Presentation& p = group_;
  const Generator& x = x_;

  auto tape_index = [this](const Generator& s) {
    return static_cast<std::size_t>(
        std::find(tape_letters_.begin(), tape_letters_.end(), s) -
        tape_letters_.begin());
  };
  auto rule_index = [this](const Generator& r) {
    return static_cast<std::size_t>(
        std::find(rule_letters_.begin(), rule_letters_.end(), r) -
        rule_letters_.begin());
  };
  // s⁻¹ U s = twist(U)
  auto twist_eq = [&](const Generator& s, const Word& u) {
    const Word S = Word::letter(s);
    const std::size_t si = tape_index(s);
    Equality e = refl(Word{});
    for (const auto& [g, sign] : letters(u)) {
      const Word G = Word::letter(g);
      Equality one =
          g == x ? relation(p, doubling_[si], invert(S) * G * S, power(G, 2))
                 : relation(p, twisting_[si][rule_index(g)], invert(S) * G * S,
                            twist(G, x));
      e = product(e, sign > 0 ? one : detail::invert(one));
    }
    return e;
  };
  // Y⁻¹ U Y = twistᵐ(U) for Y = s₁⋯sₘ
  auto through = [&](const std::vector<Generator>& y, const Word& u) {
    Equality e = refl(u);
    for (const auto& s : y) {
      const Word S = Word::letter(s);
      e = trans(wrap(invert(S), e, S), twist_eq(s, e.rhs));
    }
    return e;
  };

  // Rewrite m⁻¹ q_start ω m into R q L, recording W = R·(X# q Y)·L.
  std::vector<Generator> left{marker_};
  std::vector<Generator> right;
  for (const auto& s : tape_input(machine_, input)) right.push_back(symbols_.at(s));
  right.push_back(marker_);
  Generator state = states_.at(machine_.start());
  auto current = [&] {
    return product_of(left, -1) * Word::letter(state) * product_of(right, 1);
  };
  const Word W = current();
  Equality e = refl(W);
  Word R;
  Word L;

  // Each pass applies the unique rule matching around the state letter.
  const std::size_t bound = 4 * (max_steps + right.size() + 4) + 16;
  for (std::size_t pass = 0; state != final_; ++pass) {
    if (pass > bound) {
      throw std::logic_error("rewriting did not reach the final state");
    }
    std::size_t found = rules_.size();
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      const Rule& rule = rules_[i];
      if (rule.from != state || rule.f.size() > left.size() ||
          rule.g.size() > right.size()) {
        continue;
      }
      if (std::equal(rule.f.begin(), rule.f.end(),
                     left.end() - static_cast<std::ptrdiff_t>(rule.f.size())) &&
          std::equal(rule.g.begin(), rule.g.end(), right.begin())) {
        found = i;
        break;
      }
    }
    if (found == rules_.size()) {
      throw std::logic_error("no rule applies to a halting computation");
    }
    const Rule& rule = rules_[found];
    const Word r = Word::letter(rule_letters_[found]);
    std::vector<Generator> xs(left.begin(),
                              left.end() - static_cast<std::ptrdiff_t>(rule.f.size()));
    std::vector<Generator> ys(right.begin() + static_cast<std::ptrdiff_t>(rule.g.size()),
                              right.end());
    const Word Xs = product_of(xs, -1);
    const Word Y = product_of(ys, 1);
    const Word F = product_of(rule.f, -1) * Word::letter(rule.from) *
                   product_of(rule.g, 1);
    const Word H = product_of(rule.h, -1) * Word::letter(rule.to) *
                   product_of(rule.k, 1);

    // F = r H r⁻¹
    Equality e1 = wrap(r, relation(p, rule_relators_[found], invert(r) * F * r, H),
                       invert(r));
    Equality e2 = wrap(Xs, e1, Y);
    // X# r X#⁻¹ = twist^|X|(r): conjugate by the letters of X from the right.
    std::vector<Generator> xs_reversed(xs.rbegin(), xs.rend());
    Equality e3 = through(xs_reversed, r);
    Equality e4 = through(ys, invert(r));
    const Word middle = Xs * H * Y;
    Equality e5 = product(product(e3, refl(middle)), e4);
    Equality step = trans(e2, e5);
    e = trans(e, wrap(R, step, L));
    R = R * e3.rhs;
    L = e4.rhs * L;

    left = xs;
    left.insert(left.end(), rule.h.begin(), rule.h.end());
    right.assign(rule.k.begin(), rule.k.end());
    right.insert(right.end(), ys.begin(), ys.end());
    state = rule.to;
  }

  // W = R q L; t commutes with R and k with L and q⁻¹tq.
  const Word T = Word::letter(t_);
  const Word K = Word::letter(k_);
  const Word Q = Word::letter(final_);
  auto commuting = [&](const Word& z, std::size_t x_relator,
                       const std::vector<std::size_t>& rule_relators,
                       const Word& u) {
    // Eq(U⁻¹ z U, z)
    Equality out = refl(z);
    for (const auto& [g, sign] : letters(u)) {
      const Word G = Word::letter(g);
      const std::size_t rel = g == x ? x_relator : rule_relators[rule_index(g)];
      // G⁻¹ z G = z
      Equality one = wrap(invert(G), relation(p, rel, z * G, G * z), Word{});
      if (sign < 0) one = sym(wrap(G, one, invert(G)));
      const Word Gs = Word::letter(g, sign);
      out = trans(wrap(invert(Gs), out, Gs), one);
    }
    return out;
  };
  Equality z_eq = product(product(detail::invert(e), refl(T)), e);
  Equality t_r = commuting(T, t_commutes_.back(), t_commutes_, R);
  z_eq = trans(z_eq, wrap(invert(L) * invert(Q), t_r, Q * L));
  const Word Y = invert(Q) * T * Q;
  // w = Z⁻¹k⁻¹Zk with Z = L⁻¹YL
  Equality w_eq = product(product(product(detail::invert(z_eq), refl(invert(K))),
                                  z_eq),
                          refl(K));
  Equality k_l = commuting(K, k_commutes_[rule_letters_.size()], k_commutes_, L);
  Equality b = sym(wrap(L, k_l, invert(L)));  // L k L⁻¹ = k
  w_eq = trans(w_eq, wrap(invert(L) * invert(Y), detail::invert(b), Y * L * K));
  Equality k_y = wrap(invert(Y), relation(p, k_commutes_.back(), K * Y, Y * K),
                      Word{});
  w_eq = trans(w_eq, wrap(invert(L), detail::invert(k_y), L * K));
  w_eq = trans(w_eq, wrap(Word{}, detail::invert(k_l), K));
  if (!w_eq.rhs.empty() || w_eq.lhs != word(input) || !check(p, w_eq)) {
    throw std::logic_error("halting certificate failed to verify");
  }
  return w_eq.certificate;
}

}  // namespace fpg
