#include "simon/problem.hpp"

#include <limits>

#include "simon/congruence.hpp"
#include "simon/errors.hpp"

namespace simon {

std::string_view to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::MatchUniv:
      return "match-univ";
    case ProblemKind::MatchSimon:
      return "match-simon";
    case ProblemKind::MatchStrict:
      return "match-strict";
    case ProblemKind::WeSimon:
      return "we-simon";
    case ProblemKind::WeStrict:
      return "we-strict";
  }
  return "match-univ";
}

ProblemKind parse_problem_kind(std::string_view name) {
  for (ProblemKind k : {ProblemKind::MatchUniv, ProblemKind::MatchSimon, ProblemKind::MatchStrict,
                        ProblemKind::WeSimon, ProblemKind::WeStrict}) {
    if (to_string(k) == name) return k;
  }
  throw ParseError("unknown problem '" + std::string(name) + "'");
}

Problem problem_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("problem must be a JSON object");
  Problem p;
  try {
    p.kind = parse_problem_kind(j.at("problem").get<std::string>());
    if (j.contains("alphabet")) p.alphabet = j.at("alphabet").get<std::string>();
    p.pattern = j.at("pattern").get<std::string>();
    if (j.contains("word")) p.word = j.at("word").get<std::string>();
    if (j.contains("beta")) p.beta = j.at("beta").get<std::string>();
    p.k = count_from_json(j.at("k"));
    if (j.contains("image_cap") && !j.at("image_cap").is_null()) {
      p.image_cap = j.at("image_cap").get<std::size_t>();
    }
    if (j.contains("method")) p.method = parse_method(j.at("method").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad problem JSON: ") + e.what());
  }
  if (p.k < 0) throw ParseError("k must be non-negative");
  const bool needs_word = p.kind == ProblemKind::MatchSimon || p.kind == ProblemKind::MatchStrict;
  const bool needs_beta = p.kind == ProblemKind::WeSimon || p.kind == ProblemKind::WeStrict;
  if (needs_word && !p.word) throw ParseError("problem needs a word");
  if (needs_beta && !p.beta) throw ParseError("problem needs a second pattern");
  return p;
}

Json to_json(const Problem& p) {
  Json j;
  j["problem"] = std::string(to_string(p.kind));
  j["alphabet"] = p.alphabet;
  j["pattern"] = p.pattern;
  if (p.word) j["word"] = *p.word;
  if (p.beta) j["beta"] = *p.beta;
  j["k"] = count_to_json(p.k);
  if (p.image_cap) j["image_cap"] = *p.image_cap;
  j["method"] = std::string(to_string(p.method));
  return j;
}

ParsedProblem parse(const Problem& p) {
  ParsedProblem out;
  out.alphabet = Alphabet::from_glyphs(p.alphabet);
  out.alpha = Pattern::parse(p.pattern, out.alphabet);
  const bool needs_word = p.kind == ProblemKind::MatchSimon || p.kind == ProblemKind::MatchStrict;
  const bool needs_beta = p.kind == ProblemKind::WeSimon || p.kind == ProblemKind::WeStrict;
  if (needs_word) {
    if (!p.word) throw ParseError("problem needs a word");
    out.word = out.alphabet.parse(*p.word);
  }
  if (needs_beta) {
    if (!p.beta) throw ParseError("problem needs a second pattern");
    out.beta = Pattern::parse(*p.beta, out.alphabet, out.alpha.variable_names());
  }
  return out;
}

namespace {

std::size_t small_k(const Count& k) {
  if (k > Count(std::numeric_limits<std::uint32_t>::max())) {
    throw DomainError("k too large for this problem");
  }
  return static_cast<std::size_t>(k);
}

}  // namespace

SolverAnswer solve(const Problem& p, const SearchOptions& base) {
  const ParsedProblem pp = parse(p);
  SearchOptions opts = base;
  if (p.image_cap) opts.image_cap = p.image_cap;
  switch (p.kind) {
    case ProblemKind::MatchUniv:
      return solve_match_univ(pp.alpha, p.k, p.method, opts);
    case ProblemKind::MatchSimon:
      return solve_match_simon(pp.alpha, *pp.word, small_k(p.k), false, p.method, opts);
    case ProblemKind::MatchStrict:
      return solve_match_simon(pp.alpha, *pp.word, small_k(p.k), true, p.method, opts);
    case ProblemKind::WeSimon:
    case ProblemKind::WeStrict: {
      if (p.method != Method::Auto && p.method != Method::Brute) {
        throw DomainError("word equations support the auto and brute methods");
      }
      // Both sides must index one variable table.
      Pattern alpha = pp.alpha;
      for (std::size_t i = alpha.variable_count(); i < pp.beta->variable_count(); ++i) {
        alpha.variable(pp.beta->variable_name(i));
      }
      return p.kind == ProblemKind::WeSimon ? we_simon(alpha, *pp.beta, small_k(p.k), opts)
                                            : we_strict_simon(alpha, *pp.beta, small_k(p.k), opts);
    }
  }
  throw DomainError("unknown problem kind");
}

Json solve_to_json(const Problem& p, const SearchOptions& opts) {
  const ParsedProblem pp = parse(p);
  Json j = to_json(p);
  j["answer"] = to_json(solve(p, opts), pp.names(), pp.alphabet);
  return j;
}

}  // namespace simon
