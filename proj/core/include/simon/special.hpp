#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "simon/matching.hpp"
#include "simon/signature.hpp"

namespace simon {

// A signature with k' left symbolic.
struct SignatureShape {
  std::vector<Letter> gamma;
  std::size_t l = 0;
  std::vector<LetterSet> R;

  auto operator<=>(const SignatureShape&) const = default;
};

struct RealizedShape {
  SignatureShape shape;
  Count min_k_prime = 0;  // realizable k' are exactly min_k_prime + c, c >= 0 (c = 0 unless gamma is full)
  Word witness;           // a word with this shape and k' = min_k_prime
};

// Every shape realized by some word over sigma letters, with the least k'.
// Ordered by (min_k_prime, discovery). Requires sigma <= 4.
std::vector<RealizedShape> realized_shapes(int sigma);

SignatureShape shape_of(const UniversalitySignature& s);
UniversalitySignature with_k_prime(const SignatureShape& shape, int sigma, const Count& k_prime);

// sum coefficients[i] * solution[i] = target with non-negative solution.
struct ArchCountSystem {
  std::vector<VarId> vars;
  std::vector<Count> coefficients;
  Count target = 0;
  std::vector<Count> solution;
};

// Least solution in lexicographic order whose entries before the last are
// below the last coefficient; std::nullopt if none exists.
std::optional<std::vector<Count>> solve_arch_count_system(const std::vector<Count>& coefficients,
                                                          const Count& target);

// Witnesses longer than this many letters are reported only in compact form.
inline constexpr std::size_t kMaterializeLimit = 4096;

SolverAnswer match_univ_one_occurrence(const Pattern& alpha, VarId x, const Count& k);

struct ConstVarsOptions {
  std::size_t max_variables = 3;
  int max_sigma = 3;
  std::size_t max_assignments = 2'000'000;
};

SolverAnswer match_univ_const_vars(const Pattern& alpha, const Count& k,
                                   const ConstVarsOptions& opts = {},
                                   ArchCountSystem* solved = nullptr);

// Regular patterns only (each variable occurs once).
SolverAnswer match_simon_regular(const Pattern& alpha, const Word& w, std::size_t k, bool strict,
                                 const SearchOptions& opts = {});

// Short form of an image with iota 0: at most two copies of each letter.
Word iota_zero_shortform(const Word& v);

enum class Method { Auto, OneOccurrence, ConstVars, RegularAutomata, Brute };
Method parse_method(std::string_view name);
std::string_view to_string(Method m);

// Method dispatch for MatchUniv; Brute needs k to fit a machine word.
SolverAnswer solve_match_univ(const Pattern& alpha, const Count& k, Method method,
                              const SearchOptions& opts = {});
SolverAnswer solve_match_simon(const Pattern& alpha, const Word& w, std::size_t k, bool strict,
                               Method method, const SearchOptions& opts = {});

}  // namespace simon
