#include "simon/serialize.hpp"

#include <limits>

#include "simon/errors.hpp"

namespace simon {

Json count_to_json(const Count& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

Count count_from_json(const Json& j) {
  if (j.is_number_integer()) return Count(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      return Count(s);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + s + "'");
    }
  }
  throw ParseError("expected an integer");
}

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

std::string require_string(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string()) throw ParseError(std::string("JSON field '") + key + "' must be a string");
  return v.get<std::string>();
}

LetterSet parse_set(const Json& j, const Alphabet& alphabet) {
  if (!j.is_string()) throw ParseError("letter sets are strings of letters");
  return alphabet.parse(j.get<std::string>()).alph();
}

}  // namespace

Json to_json(const UniversalitySignature& s, const Alphabet& alphabet) {
  Json j;
  j["gamma"] = alphabet.render(s.gamma);
  Json k = Json::array();
  Json r = Json::array();
  for (std::size_t i = 1; i <= static_cast<std::size_t>(s.sigma); ++i) {
    const auto ki = s.k_at(i);
    k.push_back(ki ? count_to_json(*ki) : Json("-inf"));
    r.push_back(alphabet.render(s.r_at(i)));
  }
  j["K"] = std::move(k);
  const CompactK c = compact_k(s);
  j["K_compact"] = {{"l", c.l}, {"k_prime", count_to_json(c.k_prime)}};
  j["R"] = std::move(r);
  return j;
}

UniversalitySignature signature_from_json(const Json& j, const Alphabet& alphabet) {
  UniversalitySignature s = UniversalitySignature::empty(alphabet.size());
  const Word g = alphabet.parse(require_string(j, "gamma"));
  LetterSet seen;
  for (Letter a : g.letters()) {
    if (seen.contains(a)) throw ParseError("gamma repeats a letter");
    seen.insert(a);
  }
  s.gamma = g.letters();
  const std::size_t n = s.gamma.size();
  const std::size_t sigma = static_cast<std::size_t>(s.sigma);

  const Json& k = require(j, "K");
  if (k.is_object()) {
    s.K = expand_k(CompactK{require(k, "l").get<std::size_t>(), count_from_json(require(k, "k_prime"))}, n);
  } else if (k.is_array()) {
    if (k.size() != n && k.size() != sigma) throw ParseError("K must have |gamma| or sigma entries");
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i < n) {
        s.K.push_back(count_from_json(k[i]));
      } else if (k[i] != "-inf") {
        throw ParseError("K entries past |gamma| must be \"-inf\"");
      }
    }
  } else {
    throw ParseError("K must be an array or {l, k_prime}");
  }

  const Json& r = require(j, "R");
  if (!r.is_array() || (r.size() != n && r.size() != sigma)) {
    throw ParseError("R must have |gamma| or sigma entries");
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    const LetterSet set = parse_set(r[i], alphabet);
    if (i < n) {
      s.R.push_back(set);
    } else if (set != LetterSet::full(s.sigma)) {
      throw ParseError("R entries past |gamma| must be the whole alphabet");
    }
  }
  return s;
}

Json to_json(const ClassAutomaton& a, const Alphabet& alphabet) {
  Json j;
  j["sigma"] = a.sigma();
  j["k"] = a.k();
  j["complete"] = a.complete();
  j["initial"] = a.initial();
  j["target"] = a.target() ? Json(*a.target()) : Json(nullptr);
  Json states = Json::array();
  Json delta = Json::array();
  for (std::size_t q = 0; q < a.size(); ++q) {
    const auto& s = a.states()[q];
    states.push_back({{"id", q},
                      {"representative", alphabet.render(s.representative)},
                      {"is_target", a.target() == q}});
    Json row = Json::array();
    for (Letter l = 1; l <= a.sigma(); ++l) {
      const auto t = a.transition(q, l);
      row.push_back(t ? Json(*t) : Json(nullptr));
    }
    delta.push_back(std::move(row));
  }
  j["states"] = std::move(states);
  j["transitions"] = std::move(delta);
  return j;
}

Json to_json(const Substitution& h, const std::vector<std::string>& names,
             const Alphabet& alphabet) {
  Json j = Json::object();
  for (VarId x = 0; x < names.size(); ++x) {
    if (h.defined(x)) j[names[x]] = alphabet.render(h.at(x));
  }
  return j;
}

Substitution substitution_from_json(const Json& j, const std::vector<std::string>& names,
                                    const Alphabet& alphabet) {
  if (!j.is_object()) throw ParseError("substitution must be a JSON object");
  Substitution h(names.size());
  for (const auto& [name, image] : j.items()) {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ParseError("substitution names unknown variable '" + name + "'");
    if (!image.is_string()) throw ParseError("images are strings");
    h.set(static_cast<VarId>(it - names.begin()), alphabet.parse(image.get<std::string>()));
  }
  return h;
}

Json to_json(const ImageSpec& s, const Alphabet& alphabet) {
  return Json{{"head", alphabet.render(s.head)},
              {"period", alphabet.render(s.period)},
              {"reps", count_to_json(s.reps)},
              {"tail", alphabet.render(s.tail)},
              {"length", count_to_json(s.length())}};
}

Json to_json(const SolverAnswer& a, const std::vector<std::string>& names,
             const Alphabet& alphabet) {
  Json j;
  j["verdict"] = std::string(to_string(a.verdict));
  if (a.witness) j["witness"] = to_json(*a.witness, names, alphabet);
  if (a.compact_witness && !a.witness) {
    Json c = Json::object();
    for (VarId x = 0; x < names.size() && x < a.compact_witness->size(); ++x) {
      c[names[x]] = to_json((*a.compact_witness)[x], alphabet);
    }
    j["compact_witness"] = std::move(c);
  }
  j["method"] = a.method;
  j["complete"] = a.complete;
  j["bound_used"] = a.bound_used;
  if (a.completeness_bound) j["completeness_bound"] = count_to_json(*a.completeness_bound);
  if (!a.note.empty()) j["note"] = a.note;
  return j;
}

Json to_json(const CnfFormula& phi) {
  Json clauses = Json::array();
  for (const Clause& c : phi.clauses) {
    Json lits = Json::array();
    for (const Literal& l : c) {
      const auto v = static_cast<std::int64_t>(l.var);
      lits.push_back(l.positive ? v : -v);
    }
    clauses.push_back(std::move(lits));
  }
  return Json{{"num_vars", phi.num_vars}, {"clauses", std::move(clauses)}};
}

CnfFormula formula_from_json(const Json& j) {
  CnfFormula phi;
  phi.num_vars = require(j, "num_vars").get<std::size_t>();
  for (const Json& c : require(j, "clauses")) {
    if (!c.is_array() || c.size() != 3) throw ParseError("clauses have exactly 3 literals");
    Clause clause;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto v = c[i].get<std::int64_t>();
      if (v == 0) throw ParseError("literal 0 in clause");
      clause[i] = Literal{static_cast<std::size_t>(v < 0 ? -v : v), v > 0};
    }
    phi.clauses.push_back(clause);
  }
  try {
    validate(phi);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return phi;
}

Json to_json(const GadgetInstance& inst) {
  const Alphabet sigma = gadget_alphabet();
  Json j;
  j["reduction"] = to_string(inst.kind);
  switch (inst.kind) {
    case Reduction::MatchUniv:
      j["problem"] = "match-univ";
      break;
    case Reduction::MatchStrict:
      j["problem"] = "match-strict";
      break;
    case Reduction::WeStrict:
      j["problem"] = "we-strict";
      break;
  }
  j["alphabet"] = sigma.glyphs();
  j["pattern"] = inst.alpha.render(sigma);
  if (inst.word) j["word"] = sigma.render(*inst.word);
  if (inst.beta) j["beta"] = inst.beta->render(sigma);
  j["k"] = inst.k;
  j["n"] = inst.n();
  j["m"] = inst.m();
  j["B"] = inst.blowup;
  j["blowup_is_n6"] = inst.blowup_is_n6;
  j["formula"] = to_json(inst.formula);
  Json gadgets = Json::array();
  for (const Gadget& g : inst.gadgets) {
    gadgets.push_back({{"name", g.name}, {"begin", g.begin}, {"end", g.end}});
  }
  j["gadgets"] = std::move(gadgets);
  return j;
}

GadgetInstance instance_from_json(const Json& j) {
  const std::string kind = require_string(j, "reduction");
  const CnfFormula phi = formula_from_json(require(j, "formula"));
  const auto blowup = require(j, "B").get<std::size_t>();
  GadgetInstance inst;
  if (kind == "sat2univ") {
    inst = build_match_univ_instance(phi, blowup);
  } else if (kind == "sat2strict") {
    inst = build_match_strict_instance(phi, blowup);
  } else if (kind == "sat2we") {
    inst = build_we_strict_instance(phi, blowup);
  } else {
    throw ParseError("unknown reduction '" + kind + "'");
  }
  if (j.contains("pattern") && j.at("pattern") != inst.alpha.render(gadget_alphabet())) {
    throw ParseError("instance pattern does not match its formula and blowup");
  }
  return inst;
}

}  // namespace simon
