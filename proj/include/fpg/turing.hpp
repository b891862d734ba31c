#pragma once

// Turing machines and their encoding as a finitely presented group in which
// a word built from an input is trivial exactly when the machine halts.

#include "fpg/presentation.hpp"
#include "fpg/word.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace fpg {

enum class Move { Left, Right };

struct Transition {
  std::string state;
  std::string symbol;
  std::string next_state;
  std::string write;
  Move move;
};

/// Deterministic one-tape machine. The blank symbol is "_".
class TuringMachine {
 public:
  static constexpr const char* kBlank = "_";

  /// Throws ParseError on duplicate or unknown states and symbols, on a
  /// second transition for the same (state, symbol) and on a transition out
  /// of the halt state.
  TuringMachine(std::vector<std::string> states, std::string start,
                std::string halt, std::vector<std::string> alphabet,
                std::vector<Transition> transitions);

  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::string& start() const noexcept { return start_; }
  const std::string& halt() const noexcept { return halt_; }
  /// Tape symbols, blank first.
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::vector<Transition>& transitions() const noexcept {
    return transitions_;
  }
  const Transition* find(const std::string& state,
                         const std::string& symbol) const;

 private:
  std::vector<std::string> states_;
  std::string start_;
  std::string halt_;
  std::vector<std::string> alphabet_;
  std::vector<Transition> transitions_;
  std::map<std::pair<std::string, std::string>, std::size_t> index_;
};

/// Line format:
///   states: s0 s1 halt: h start: s0
///   alphabet: _ 0 1
///   s0 0 -> s1 1 R
/// `#` starts a comment line. The halt state may be listed among the states
/// or only after `halt:`.
TuringMachine parse_turing_machine(std::string_view text);

/// Symbols of the input, one character each.
std::vector<std::string> tape_input(const TuringMachine& t,
                                    std::string_view input);

/// The binary digits of i, most significant first ("0" for i = 0).
std::string binary_input(std::size_t i);

struct Halted {
  std::size_t steps;
};
struct Running {};

/// Runs from the start state with the head on the first input symbol.
/// Halted(0) when start and halt coincide. Throws UsageError on a symbol
/// outside the alphabet or a blank in the input.
std::variant<Halted, Running> simulate(const TuringMachine& t,
                                       std::string_view input,
                                       std::size_t max_steps);

/// Whether the configuration repeats within max_steps, which proves the
/// machine never halts on this input.
bool detect_cycle(const TuringMachine& t, std::string_view input,
                  std::size_t max_steps);

/// The group G(T) and the input words w(T, ω).
class MachineGroup {
 public:
  explicit MachineGroup(const TuringMachine& t);

  const TuringMachine& machine() const noexcept { return machine_; }
  const Presentation& presentation() const noexcept { return group_; }

  /// Word over G(T) trivial iff the machine halts on the input.
  Word word(std::string_view input) const;
  /// word(binary_input(i))
  Word word(std::size_t i) const { return word(binary_input(i)); }

  /// When the machine halts on the input within max_steps: relator
  /// conjugates whose product is word(input) in the free group.
  std::optional<Certificate> halting_certificate(std::string_view input,
                                                 std::size_t max_steps) const;

  /// Number of relations in the rewriting system the group is built from.
  std::size_t rule_count() const noexcept { return rules_.size(); }

 private:
  // F q_from G = H q_to K over the tape letters.
  struct Rule {
    std::vector<Generator> f, g, h, k;
    Generator from, to;
  };

  TuringMachine machine_;
  std::map<std::string, Generator> symbols_;
  std::map<std::string, Generator> states_;
  Generator marker_{"m"};
  Generator final_{"q"};
  Generator x_{"x"};
  Generator t_{"t"};
  Generator k_{"k"};
  std::vector<Generator> tape_letters_;  // symbols, then the end marker
  std::vector<Generator> rule_letters_;
  std::vector<Rule> rules_;
  // Relator indices.
  std::vector<std::size_t> doubling_;                // per tape letter
  std::vector<std::vector<std::size_t>> twisting_;   // [tape letter][rule]
  std::vector<std::size_t> rule_relators_;           // per rule
  std::vector<std::size_t> t_commutes_;              // per rule, then x
  std::vector<std::size_t> k_commutes_;              // per rule, then x, then q⁻¹tq
  Presentation group_;
};

/// tm_to_group: the group and its word builder.
inline MachineGroup tm_to_group(const TuringMachine& t) {
  return MachineGroup(t);
}

}  // namespace fpg
