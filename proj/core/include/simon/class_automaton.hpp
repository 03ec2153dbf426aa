#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "simon/alphabet.hpp"

namespace simon {

// DFA whose states are the ~_k classes of Sigma^*, built by breadth-first
// search from the empty word with letters explored in ascending order. Each
// state keeps the first word discovered for it (its representative); the
// target state is the class of the reference word.
class ClassAutomaton {
 public:
  struct State {
    Word representative;
    std::size_t depth = 0;  // |representative|, the shortest length in the class
  };

  static constexpr std::size_t kDefaultStateCap = 100000;
  static constexpr std::size_t kUnbounded = static_cast<std::size_t>(-1);

  // Builds the automaton for (sigma, k). With `max_depth` set, exploration
  // stops at that BFS depth; transitions leaving the explored region are then
  // std::nullopt. Throws CapExceeded when more than `state_cap` classes exist.
  static ClassAutomaton build(int sigma, std::size_t k,
                              std::size_t state_cap = kDefaultStateCap,
                              std::size_t max_depth = kUnbounded);

  int sigma() const noexcept { return sigma_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return states_.size(); }
  // True iff every ~_k class has a representative within max_depth.
  bool complete() const noexcept { return complete_; }
  const std::vector<State>& states() const noexcept { return states_; }
  std::size_t initial() const noexcept { return 0; }

  std::optional<std::size_t> transition(std::size_t state, Letter a) const;
  // State reached by reading `w` from the initial state.
  std::optional<std::size_t> run(const Word& w) const;

  // Target management: the automaton structure does not depend on the word.
  std::optional<std::size_t> target() const noexcept { return target_; }
  ClassAutomaton& set_target(const Word& w);

 private:
  int sigma_ = 1;
  std::size_t k_ = 0;
  bool complete_ = true;
  std::vector<State> states_;
  std::vector<std::optional<std::size_t>> delta_;  // state * sigma + (a - 1)
  std::optional<std::size_t> target_;
};

// class_automaton(w, k): the full automaton with [w] marked as target.
ClassAutomaton class_automaton(const Word& w, std::size_t k,
                               std::size_t state_cap = ClassAutomaton::kDefaultStateCap);

}  // namespace simon
