#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "simon/arch.hpp"
#include "simon/class_automaton.hpp"
#include "simon/congruence.hpp"
#include "simon/dimacs.hpp"
#include "simon/errors.hpp"
#include "simon/problem.hpp"
#include "simon/reductions.hpp"
#include "simon/serialize.hpp"
#include "simon/signature.hpp"

using namespace simon;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;

struct Config {
  std::string alphabet = "ab";
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t k = 0;
  std::string big_k = "0";  // match-univ accepts arbitrary precision
  std::optional<std::size_t> image_cap;
  std::size_t state_cap = ClassAutomaton::kDefaultStateCap;
  std::size_t search_len = kDefaultValiditySearchLength;
  std::size_t max_candidates = SearchOptions{}.max_candidates;
  std::string method = "auto";
  std::string blowup = "auto";
  std::vector<std::string> args;
};

// "@path" reads a file (trailing whitespace dropped); anything else is inline.
std::string load(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw ParseError("cannot read '" + arg.substr(1) + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

Json load_json(const std::string& arg) {
  try {
    return Json::parse(load(arg));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
}

std::string eps(const std::string& s) { return s.empty() ? "ε" : s; }

std::string count_text(const Count& c) { return c.str(); }

void emit(const Config& cfg, const Json& j, const std::string& text) {
  if (cfg.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text << '\n';
  }
}

SearchOptions search_options(const Config& cfg) {
  SearchOptions o;
  o.image_cap = cfg.image_cap;
  o.state_cap = cfg.state_cap;
  o.max_candidates = cfg.max_candidates;
  return o;
}

Count parse_count(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("k must be a non-negative integer, got '" + s + "'");
  }
  return Count(s);
}

// --- word operations --------------------------------------------------------

void cmd_arch(const Config& cfg) {
  const Alphabet a = Alphabet::from_glyphs(cfg.alphabet);
  const Word w = a.parse(load(cfg.args.at(0)));
  const ArchFactorization f = arch_factorize(w);
  Json arches = Json::array();
  std::string text = "arches: ";
  for (std::size_t j = 1; j <= f.iota; ++j) {
    const std::string s = a.render(f.arch(w, j));
    arches.push_back(s);
    text += (j > 1 ? "|" : "") + s;
  }
  if (f.iota == 0) text += "ε";
  const std::string rest = a.render(f.rest(w));
  text += " rest: " + eps(rest) + " iota: " + std::to_string(f.iota);
  emit(cfg, Json{{"word", a.render(w)}, {"arches", arches}, {"rest", rest}, {"iota", f.iota}}, text);
}

void cmd_iota(const Config& cfg) {
  const Alphabet a = Alphabet::from_glyphs(cfg.alphabet);
  const std::size_t i = universality_index(a.parse(load(cfg.args.at(0))));
  emit(cfg, Json{{"iota", i}}, std::to_string(i));
}

void cmd_congruent(const Config& cfg) {
  const Alphabet a = Alphabet::from_glyphs(cfg.alphabet);
  const bool r = simon_congruent(a.parse(load(cfg.args.at(0))), a.parse(load(cfg.args.at(1))), cfg.k);
  emit(cfg, Json{{"k", cfg.k}, {"congruent", r}}, r ? "true" : "false");
}

void cmd_distinguish(const Config& cfg) {
  const Alphabet a = Alphabet::from_glyphs(cfg.alphabet);
  const std::size_t d = shortest_distinguisher(a.parse(load(cfg.args.at(0))), a.parse(load(cfg.args.at(1))));
  const Json j = d == kInfinity ? Json("inf") : Json(d);
  emit(cfg, Json{{"distinguisher_length", j}}, d == kInfinity ? "inf" : std::to_string(d));
}

std::string signature_text(const UniversalitySignature& s, const Alphabet& a) {
  std::string text = "gamma: " + eps(a.render(s.gamma)) + "\nK:";
  for (std::size_t i = 1; i <= static_cast<std::size_t>(s.sigma); ++i) {
    const auto k = s.k_at(i);
    text += " " + (k ? count_text(*k) : std::string("-inf"));
  }
  text += "\nR:";
  for (std::size_t i = 1; i <= static_cast<std::size_t>(s.sigma); ++i) {
    text += " " + eps(a.render(s.r_at(i)));
  }
  return text;
}

void cmd_signature(const Config& cfg) {
  const Alphabet a = Alphabet::from_glyphs(cfg.alphabet);
  const UniversalitySignature s = signature_of(a.parse(load(cfg.args.at(0))));
  emit(cfg, to_json(s, a), signature_text(s, a));
}

// Operands are words or signature JSON objects.
UniversalitySignature signature_operand(const std::string& arg, const Alphabet& a) {
  const std::string text = load(arg);
  if (!text.empty() && text.front() == '{') return signature_from_json(load_json(text), a);
  return signature_of(a.parse(text));
}

void cmd_sig_concat(const Config& cfg) {
  const Alphabet a = Alphabet::from_glyphs(cfg.alphabet);
  const UniversalitySignature s =
      concat_signatures(signature_operand(cfg.args.at(0), a), signature_operand(cfg.args.at(1), a));
  emit(cfg, to_json(s, a), signature_text(s, a));
}

void cmd_sig_valid(const Config& cfg) {
  const Alphabet a = Alphabet::from_glyphs(cfg.alphabet);
  const UniversalitySignature s = signature_from_json(load_json(cfg.args.at(0)), a);
  const ValidityVerdict v = validity_search(s, cfg.search_len);
  Json j{{"verdict", v.valid() ? "valid" : "not-found-within-bound"}, {"bound", v.bound}};
  std::string text = v.valid() ? "valid" : "not found within bound " + std::to_string(v.bound);
  if (v.valid()) {
    j["witness"] = a.render(v.witness);
    j["shift"] = count_to_json(v.shift);
    text += "\nwitness: " + eps(a.render(v.witness)) + "\nshift: " + count_text(v.shift);
  }
  emit(cfg, j, text);
}

void cmd_marginal(const Config& cfg) {
  const Alphabet a = Alphabet::from_glyphs(cfg.alphabet);
  const MarginalSequence m = marginal_sequence(a.parse(load(cfg.args.at(0))));
  Json terms = Json::array();
  std::string text = "gamma: " + a.render(m.gamma) + "\nterms:";
  for (Position p : m.terms) {
    terms.push_back(p);
    text += " " + std::to_string(p);
  }
  text += "\nlast: " + std::to_string(m.last);
  emit(cfg, Json{{"gamma", a.render(m.gamma)}, {"terms", terms}, {"last", m.last}}, text);
}

void cmd_class_automaton(const Config& cfg) {
  const Alphabet a = Alphabet::from_glyphs(cfg.alphabet);
  const ClassAutomaton ca = class_automaton(a.parse(load(cfg.args.at(0))), cfg.k, cfg.state_cap);
  std::string text = "states: " + std::to_string(ca.size()) + " target: " + std::to_string(*ca.target());
  for (std::size_t q = 0; q < ca.size(); ++q) {
    text += "\n" + std::to_string(q) + " " + eps(a.render(ca.states()[q].representative)) + " ->";
    for (Letter l = 1; l <= ca.sigma(); ++l) text += " " + std::to_string(*ca.transition(q, l));
  }
  emit(cfg, to_json(ca, a), text);
}

// --- oracles ----------------------------------------------------------------

void cmd_oracle_subseq(const Config& cfg) {
  const Alphabet a = Alphabet::from_glyphs(cfg.alphabet);
  const SubseqSet s = subseq_set(a.parse(load(cfg.args.at(0))), cfg.k);
  Json members = Json::array();
  std::string text;
  for (const Word& u : s.members) {
    members.push_back(a.render(u));
    text += (text.empty() ? "" : " ") + eps(a.render(u));
  }
  emit(cfg, Json{{"k", cfg.k}, {"size", s.members.size()}, {"members", members}}, text);
}

// Random cross-check of the congruence test against Subseq_k comparison.
void cmd_oracle_congruence(const Config& cfg, std::size_t trials, std::size_t max_len) {
  const Alphabet a = Alphabet::from_glyphs(cfg.alphabet);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(1, a.size());
  auto random_word = [&] {
    Word w(a.size());
    for (std::size_t n = len(rng); n > 0; --n) w.push_back(static_cast<Letter>(letter(rng)));
    return w;
  };
  std::size_t mismatches = 0;
  std::size_t congruent = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const Word u = random_word();
    const Word v = random_word();
    const bool fast = simon_congruent(u, v, cfg.k);
    congruent += fast;
    if (fast != (subseq_set(u, cfg.k) == subseq_set(v, cfg.k))) ++mismatches;
  }
  emit(cfg,
       Json{{"trials", trials}, {"seed", cfg.seed}, {"congruent_pairs", congruent},
            {"mismatches", mismatches}},
       "trials: " + std::to_string(trials) + " congruent: " + std::to_string(congruent) +
           " mismatches: " + std::to_string(mismatches));
}

// --- solvers ----------------------------------------------------------------

std::string answer_text(const Json& answer) {
  std::string text = "verdict: " + answer["verdict"].get<std::string>();
  if (answer.contains("witness")) {
    text += "\nwitness:";
    for (const auto& [name, image] : answer["witness"].items()) {
      text += " " + name + "=" + eps(image.get<std::string>());
    }
  }
  if (answer.contains("compact_witness")) {
    text += "\nwitness:";
    for (const auto& [name, s] : answer["compact_witness"].items()) {
      text += " " + name + "=" + s["head"].get<std::string>() + "(" + s["period"].get<std::string>() +
              ")^" + s["reps"].dump() + s["tail"].get<std::string>();
    }
  }
  text += "\nmethod: " + answer["method"].get<std::string>() +
          " complete: " + (answer["complete"].get<bool>() ? "true" : "false") +
          " bound: " + answer["bound_used"].dump();
  if (answer.contains("completeness_bound")) text += "/" + answer["completeness_bound"].dump();
  if (answer.contains("note")) text += "\nnote: " + answer["note"].get<std::string>();
  return text;
}

void run_problem(const Config& cfg, const Problem& p) {
  const Json j = solve_to_json(p, search_options(cfg));
  emit(cfg, j, answer_text(j["answer"]));
}

void cmd_solver(const Config& cfg, ProblemKind kind) {
  Problem p;
  p.kind = kind;
  p.alphabet = cfg.alphabet;
  p.pattern = load(cfg.args.at(0));
  if (kind == ProblemKind::MatchSimon || kind == ProblemKind::MatchStrict) p.word = load(cfg.args.at(1));
  if (kind == ProblemKind::WeSimon || kind == ProblemKind::WeStrict) p.beta = load(cfg.args.at(1));
  p.k = parse_count(cfg.big_k);
  p.image_cap = cfg.image_cap;
  p.method = parse_method(cfg.method);
  run_problem(cfg, p);
}

void cmd_solve(const Config& cfg) {
  Problem p = problem_from_json(load_json(cfg.args.at(0)));
  if (cfg.image_cap) p.image_cap = cfg.image_cap;
  run_problem(cfg, p);
}

// --- reductions -------------------------------------------------------------

void cmd_reduce(const Config& cfg, const std::string& kind, const std::string& dimacs, bool pad) {
  const CnfFormula phi = parse_dimacs(load("@" + dimacs), {.pad_duplicates = pad});
  std::size_t blowup = 0;
  if (cfg.blowup == "auto") {
    blowup = default_blowup(phi);
  } else {
    blowup = static_cast<std::size_t>(parse_count(cfg.blowup));
  }
  GadgetInstance inst;
  if (kind == "sat2univ") {
    inst = build_match_univ_instance(phi, blowup);
  } else if (kind == "sat2strict") {
    inst = build_match_strict_instance(phi, blowup);
  } else {
    inst = build_we_strict_instance(phi, blowup);
  }
  const Json j = to_json(inst);
  std::string text = "pattern: " + j["pattern"].get<std::string>();
  if (j.contains("word")) text += "\nword: " + j["word"].get<std::string>();
  if (j.contains("beta")) text += "\nbeta: " + j["beta"].get<std::string>();
  text += "\nk: " + std::to_string(inst.k) + " B: " + std::to_string(inst.blowup) +
          " n: " + std::to_string(inst.n()) + " m: " + std::to_string(inst.m());
  emit(cfg, j, text);
}

void cmd_decode(const Config& cfg, const std::string& instance, const std::string& witness,
                const std::string& assignment) {
  const GadgetInstance inst = instance_from_json(load_json(instance));
  const Alphabet g = gadget_alphabet();
  Substitution h;
  if (!assignment.empty()) {
    if (assignment.size() != inst.n() || assignment.find_first_not_of("01") != std::string::npos) {
      throw ParseError("--assignment needs one 0/1 digit per formula variable");
    }
    std::vector<bool> bits;
    for (char c : assignment) bits.push_back(c == '1');
    h = canonical_substitution(inst, bits);
  } else {
    Json w = load_json(witness);
    // Accept a solver document as well as a bare substitution.
    if (w.contains("answer")) w = w["answer"];
    if (w.contains("witness")) w = w["witness"];
    std::vector<std::string> names = inst.alpha.variable_names();
    if (inst.beta) names = inst.beta->variable_names();
    h = substitution_from_json(w, names, g);
  }
  const DecodeResult d = decode_assignment(inst, h);
  Json j{{"decoded", d.assignment.has_value()}};
  std::string text;
  if (d.assignment) {
    std::string bits;
    for (bool b : *d.assignment) bits += b ? '1' : '0';
    j["assignment"] = bits;
    j["satisfies"] = satisfies(inst.formula, *d.assignment);
    text = "assignment: " + bits + (satisfies(inst.formula, *d.assignment) ? " (satisfying)" : "");
  } else {
    j["gadget"] = d.gadget;
    j["diagnostic"] = d.diagnostic;
    text = "rejected" + (d.gadget.empty() ? std::string() : " at " + d.gadget) + ": " + d.diagnostic;
  }
  Json budget = Json::array();
  for (const auto& [name, arches] : gadget_arch_budget(inst, h)) {
    budget.push_back({{"gadget", name}, {"arches", arches}});
  }
  j["arch_budget"] = std::move(budget);
  emit(cfg, j, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern matching with variables under Simon's congruence"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--alphabet", cfg.alphabet, "Letter glyphs in order")->capture_default_str();
  app.add_flag("--json", cfg.json, "Structured JSON output");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();

  auto words = [&](CLI::App* sub, std::size_t n, const char* what) {
    sub->add_option("args", cfg.args, what)->required()->expected(static_cast<int>(n));
  };
  auto with_k = [&](CLI::App* sub) { sub->add_option("-k", cfg.k, "Congruence level")->required(); };
  auto solver_flags = [&](CLI::App* sub) {
    sub->add_option("-k", cfg.big_k, "Target level")->required();
    sub->add_option("--image-cap", cfg.image_cap, "Longest image tried per variable");
    sub->add_option("--state-cap", cfg.state_cap, "Most congruence classes built");
    sub->add_option("--max-candidates", cfg.max_candidates, "Most substitutions examined");
    sub->add_option("--method", cfg.method,
                    "auto, one_occurrence, const_vars, regular_automata or brute");
  };

  std::vector<std::pair<CLI::App*, std::function<void()>>> commands;
  auto add = [&](const char* name, const char* help, std::function<void()> run) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(run));
    return sub;
  };

  words(add("arch", "Arch factorization", [&] { cmd_arch(cfg); }), 1, "word");
  words(add("iota", "Universality index", [&] { cmd_iota(cfg); }), 1, "word");
  {
    auto* s = add("congruent", "Simon congruence test", [&] { cmd_congruent(cfg); });
    words(s, 2, "two words");
    with_k(s);
  }
  words(add("distinguish", "Shortest distinguishing length", [&] { cmd_distinguish(cfg); }), 2,
        "two words");
  words(add("signature", "Universality signature", [&] { cmd_signature(cfg); }), 1, "word");
  words(add("sig-concat", "Signature of a concatenation", [&] { cmd_sig_concat(cfg); }), 2,
        "words or signature JSON");
  {
    auto* s = add("sig-valid", "Bounded validity search for a signature", [&] { cmd_sig_valid(cfg); });
    words(s, 1, "signature JSON");
    s->add_option("--search-len", cfg.search_len, "Longest witness tried")->capture_default_str();
  }
  words(add("marginal", "Marginal sequence", [&] { cmd_marginal(cfg); }), 1, "word");
  {
    auto* s = add("class-automaton", "Automaton of ~_k classes", [&] { cmd_class_automaton(cfg); });
    words(s, 1, "word");
    with_k(s);
    s->add_option("--state-cap", cfg.state_cap, "Most classes built")->capture_default_str();
  }

  const std::pair<const char*, ProblemKind> solvers[] = {
      {"match-univ", ProblemKind::MatchUniv},   {"match-simon", ProblemKind::MatchSimon},
      {"match-strict", ProblemKind::MatchStrict}, {"we-simon", ProblemKind::WeSimon},
      {"we-strict", ProblemKind::WeStrict}};
  for (const auto& [name, kind] : solvers) {
    const ProblemKind pk = kind;
    auto* s = add(name, "Decide a matching problem", [&cfg, pk] { cmd_solver(cfg, pk); });
    words(s, pk == ProblemKind::MatchUniv ? 1 : 2, "pattern and word or second pattern");
    solver_flags(s);
  }
  {
    auto* s = add("solve", "Solve a problem or instance JSON document", [&] { cmd_solve(cfg); });
    words(s, 1, "problem JSON or @file");
    s->add_option("--image-cap", cfg.image_cap, "Longest image tried per variable");
    s->add_option("--state-cap", cfg.state_cap, "Most congruence classes built");
    s->add_option("--max-candidates", cfg.max_candidates, "Most substitutions examined");
  }

  std::string reduction;
  std::string dimacs;
  bool pad = false;
  {
    auto* s = add("reduce", "Compile a 3CNF formula into a gadget instance",
                  [&] { cmd_reduce(cfg, reduction, dimacs, pad); });
    s->add_option("reduction", reduction, "sat2univ, sat2strict or sat2we")
        ->required()
        ->check(CLI::IsMember({"sat2univ", "sat2strict", "sat2we"}));
    s->add_option("--dimacs", dimacs, "DIMACS CNF file")->required();
    s->add_option("--blowup", cfg.blowup, "Gadget repetition count, or auto")->capture_default_str();
    s->add_flag("--pad", pad, "Repeat the last literal of short clauses");
  }

  std::string instance;
  std::string witness;
  std::string assignment;
  {
    auto* s = add("decode", "Read an assignment back from a substitution",
                  [&] { cmd_decode(cfg, instance, witness, assignment); });
    s->add_option("--instance", instance, "Instance JSON or @file")->required();
    auto* w = s->add_option("--witness", witness, "Substitution JSON, solver output, or @file");
    auto* a = s->add_option("--assignment", assignment, "Canonical substitution of a 0/1 assignment");
    w->excludes(a);
    a->excludes(w);
  }

  std::size_t trials = 1000;
  std::size_t max_len = 8;
  std::string oracle;
  {
    auto* s = add("oracle", "Exhaustive reference computations", [&] {
      if (oracle == "subseq-set") {
        if (cfg.args.size() != 1) throw ParseError("subseq-set takes one word");
        cmd_oracle_subseq(cfg);
      } else {
        cmd_oracle_congruence(cfg, trials, max_len);
      }
    });
    s->add_option("which", oracle, "subseq-set or congruence")
        ->required()
        ->check(CLI::IsMember({"subseq-set", "congruence"}));
    s->add_option("args", cfg.args, "word");
    with_k(s);
    s->add_option("--trials", trials, "Random pairs (congruence)")->capture_default_str();
    s->add_option("--max-len", max_len, "Longest random word (congruence)")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    for (auto& [sub, run] : commands) {
      if (sub->parsed()) run();
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << '\n';
    return kExitParse;
  }
  return 0;
}
