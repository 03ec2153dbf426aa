#include "simon/class_automaton.hpp"

#include <algorithm>
#include <map>

#include "simon/congruence.hpp"
#include "simon/errors.hpp"

namespace simon {

namespace {

// Cheap invariant of the ~_k class: min(|w|_a, k) per letter, which is fixed
// by membership of a^j in Subseq_k(w). Used only to bucket candidates.
std::vector<std::size_t> bucket_key(const Word& w, std::size_t k) {
  std::vector<std::size_t> key(static_cast<std::size_t>(w.sigma()), 0);
  for (Letter a : w.letters()) {
    auto& c = key[a - 1];
    if (c < k) ++c;
  }
  return key;
}

}  // namespace

ClassAutomaton ClassAutomaton::build(int sigma, std::size_t k, std::size_t state_cap,
                                     std::size_t max_depth) {
  ClassAutomaton a;
  a.sigma_ = sigma;
  a.k_ = k;
  const auto s = static_cast<std::size_t>(sigma);
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;

  auto add_state = [&](Word rep) {
    if (a.states_.size() >= state_cap) throw CapExceeded("class-states", state_cap, "--state-cap");
    const std::size_t id = a.states_.size();
    buckets[bucket_key(rep, k)].push_back(id);
    const std::size_t depth = rep.size();
    a.states_.push_back(State{std::move(rep), depth});
    a.delta_.resize(a.states_.size() * s);
    return id;
  };

  add_state(Word(sigma));
  for (std::size_t q = 0; q < a.states_.size(); ++q) {
    // At the depth cap, successors may only land in known classes; a new
    // class there means some class has no representative within the cap.
    const bool capped = a.states_[q].depth >= max_depth;
    for (Letter l = 1; l <= sigma; ++l) {
      Word next = a.states_[q].representative;
      next.push_back(l);
      std::optional<std::size_t> found;
      const auto it = buckets.find(bucket_key(next, k));
      if (it != buckets.end()) {
        for (std::size_t id : it->second) {
          if (simon_congruent(a.states_[id].representative, next, k)) {
            found = id;
            break;
          }
        }
      }
      if (!found) {
        if (capped) {
          a.complete_ = false;
          continue;
        }
        found = add_state(std::move(next));
      }
      a.delta_[q * s + (l - 1)] = found;
    }
  }
  return a;
}

std::optional<std::size_t> ClassAutomaton::transition(std::size_t state, Letter a) const {
  if (state >= states_.size() || a < 1 || a > sigma_) {
    throw DomainError("class automaton transition out of range");
  }
  return delta_[state * static_cast<std::size_t>(sigma_) + (a - 1)];
}

std::optional<std::size_t> ClassAutomaton::run(const Word& w) const {
  std::optional<std::size_t> q = initial();
  for (Letter a : w.letters()) {
    q = transition(*q, a);
    if (!q) return std::nullopt;
  }
  return q;
}

ClassAutomaton& ClassAutomaton::set_target(const Word& w) {
  if (w.sigma() != sigma_ && !w.empty()) throw DomainError("target word over a different alphabet");
  target_ = run(w);
  return *this;
}

ClassAutomaton class_automaton(const Word& w, std::size_t k, std::size_t state_cap) {
  ClassAutomaton a = ClassAutomaton::build(w.sigma(), k, state_cap);
  a.set_target(w);
  return a;
}

}  // namespace simon
