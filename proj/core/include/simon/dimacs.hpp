#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace simon {

struct Literal {
  std::size_t var = 1;  // 1-based
  bool positive = true;

  bool operator==(const Literal&) const = default;
};

using Clause = std::array<Literal, 3>;

struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;

  bool operator==(const CnfFormula&) const = default;
};

// Throws DomainError on a variable outside [1, n].
void validate(const CnfFormula& phi);

bool satisfies(const CnfFormula& phi, const std::vector<bool>& assignment);

// First satisfying assignment in binary counting order; n <= 20.
std::optional<std::vector<bool>> brute_force_sat(const CnfFormula& phi);

struct DimacsOptions {
  bool pad_duplicates = false;  // repeat the last literal of short clauses
};

CnfFormula parse_dimacs(std::string_view text, const DimacsOptions& opts = {});
std::string write_dimacs(const CnfFormula& phi);

}  // namespace simon
