#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "simon/class_automaton.hpp"
#include "simon/matching.hpp"
#include "simon/reductions.hpp"
#include "simon/signature.hpp"

namespace simon {

using Json = nlohmann::ordered_json;

// Machine-sized counts serialize as numbers, larger ones as decimal strings.
Json count_to_json(const Count& c);
Count count_from_json(const Json& j);

// {gamma, K (length sigma, "-inf" padding), K_compact {l, k_prime}, R}
Json to_json(const UniversalitySignature& s, const Alphabet& alphabet);
// Accepts K as an explicit array or as {l, k_prime}.
UniversalitySignature signature_from_json(const Json& j, const Alphabet& alphabet);

Json to_json(const ClassAutomaton& a, const Alphabet& alphabet);

// Images keyed by variable name.
Json to_json(const Substitution& h, const std::vector<std::string>& names,
             const Alphabet& alphabet);
Substitution substitution_from_json(const Json& j, const std::vector<std::string>& names,
                                    const Alphabet& alphabet);

Json to_json(const ImageSpec& s, const Alphabet& alphabet);

Json to_json(const SolverAnswer& a, const std::vector<std::string>& names,
             const Alphabet& alphabet);

Json to_json(const CnfFormula& phi);
CnfFormula formula_from_json(const Json& j);

// Instance metadata plus the problem fields needed to re-solve it.
Json to_json(const GadgetInstance& inst);
GadgetInstance instance_from_json(const Json& j);

}  // namespace simon
