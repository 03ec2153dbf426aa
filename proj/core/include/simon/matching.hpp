#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "simon/class_automaton.hpp"
#include "simon/pattern.hpp"

namespace simon {

enum class Verdict { Yes, No, Unknown };
std::string_view to_string(Verdict v);

struct SolverAnswer {
  Verdict verdict = Verdict::Unknown;
  std::optional<Substitution> witness;
  // Set instead of witness when the images are too long to spell out.
  std::optional<std::vector<ImageSpec>> compact_witness;
  std::size_t bound_used = 0;               // image-length cap searched
  std::optional<Count> completeness_bound;  // image length known to suffice
  bool complete = false;  // every candidate class was examined
  std::string method;
  std::string note;

  bool yes() const { return verdict == Verdict::Yes; }
  bool no() const { return verdict == Verdict::No; }
  bool unknown() const { return verdict == Verdict::Unknown; }
};

// Shared tables for repeated congruence searches over one (sigma, k).
// Not thread-safe.
class SearchCache {
 public:
  struct Tables {
    ClassAutomaton automaton;
    std::vector<std::size_t> candidates;          // states with depth <= cap, shortlex
    std::vector<std::vector<std::uint32_t>> act;  // act[i][q]: q read through candidate i
    bool covers_all = false;                      // candidates cover every class
  };

  // Full automaton for (sigma, k) with actions of its representatives up to
  // length cap; nullptr if the class count exceeds state_cap.
  const Tables* tables(int sigma, std::size_t k, std::size_t cap, std::size_t state_cap);

  // Full automaton for (sigma, k); throws CapExceeded past state_cap.
  const ClassAutomaton& automaton(int sigma, std::size_t k, std::size_t state_cap);

  // Automaton explored to BFS depth max_depth only.
  const ClassAutomaton& bounded(int sigma, std::size_t k, std::size_t max_depth,
                                std::size_t state_cap);

 private:
  std::map<std::tuple<int, std::size_t, std::size_t>, std::unique_ptr<Tables>> tables_;
  std::map<std::pair<int, std::size_t>, std::size_t> refused_;  // (sigma, k) -> cap refused at
  std::map<std::pair<int, std::size_t>, std::unique_ptr<ClassAutomaton>> automata_;
  std::map<std::tuple<int, std::size_t, std::size_t>, std::unique_ptr<ClassAutomaton>> bounded_;
};

struct SearchOptions {
  std::optional<std::size_t> image_cap;    // per-variable image length
  std::size_t max_candidates = 5'000'000;  // substitution tuples examined
  std::size_t state_cap = ClassAutomaton::kDefaultStateCap;
  // Largest class automaton built to speed up congruence evaluation.
  std::size_t table_state_cap = 4096;
  SearchCache* cache = nullptr;
};

std::size_t default_univ_image_cap(int sigma);

// Least n with every ~_k class over sigma letters having a representative of
// length <= n, as used for completeness claims: binom(k + sigma, sigma).
Count congruence_image_bound(int sigma, std::size_t k);

SolverAnswer match_univ(const Pattern& alpha, std::size_t k, const SearchOptions& opts = {});
SolverAnswer match_simon(const Pattern& alpha, const Word& w, std::size_t k,
                         const SearchOptions& opts = {});
SolverAnswer match_strict_simon(const Pattern& alpha, const Word& w, std::size_t k,
                                const SearchOptions& opts = {});
SolverAnswer we_simon(const Pattern& alpha, const Pattern& beta, std::size_t k,
                      const SearchOptions& opts = {});
SolverAnswer we_strict_simon(const Pattern& alpha, const Pattern& beta, std::size_t k,
                             const SearchOptions& opts = {});

// Exact matching h(alpha) = w by backtracking.
std::optional<Substitution> match_exact(const Pattern& alpha, const Word& w);

}  // namespace simon
