#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simon/serialize.hpp"
#include "simon/special.hpp"

namespace simon {

enum class ProblemKind { MatchUniv, MatchSimon, MatchStrict, WeSimon, WeStrict };
std::string_view to_string(ProblemKind k);
ProblemKind parse_problem_kind(std::string_view name);

// A decision problem in its textual form, as read from or written to JSON.
struct Problem {
  ProblemKind kind = ProblemKind::MatchUniv;
  std::string alphabet = "ab";
  std::string pattern;
  std::optional<std::string> word;  // MatchSimon, MatchStrict
  std::optional<std::string> beta;  // WeSimon, WeStrict
  Count k = 0;
  std::optional<std::size_t> image_cap;
  Method method = Method::Auto;

  bool operator==(const Problem&) const = default;
};

Problem problem_from_json(const Json& j);
Json to_json(const Problem& p);

struct ParsedProblem {
  Alphabet alphabet{1};
  Pattern alpha;
  std::optional<Word> word;
  std::optional<Pattern> beta;

  // Variable names of alpha and beta together; ids index this table.
  const std::vector<std::string>& names() const {
    return beta ? beta->variable_names() : alpha.variable_names();
  }
};

ParsedProblem parse(const Problem& p);

SolverAnswer solve(const Problem& p, const SearchOptions& opts = {});

// {problem..., answer}
Json solve_to_json(const Problem& p, const SearchOptions& opts = {});

}  // namespace simon
