#include "simon/reductions.hpp"

#include <algorithm>

#include "simon/arch.hpp"
#include "simon/errors.hpp"

namespace simon {

namespace {

constexpr Letter kZero = 1;
constexpr Letter kOne = 2;
constexpr Letter kHash = 3;
constexpr Letter kDollar = 4;

Word block_word(std::initializer_list<Letter> letters) { return Word(4, letters); }

Word target_word(std::size_t k) {
  return block_word({kOne, kZero, kDollar, kHash}).repeat(k + 1);
}

std::size_t pattern_length(std::size_t n, std::size_t m, std::size_t b) {
  return 2 * ((2 * n + 3) * b + 1) + 2 * n * (3 * b + 6) + 4 * n + 6 * m;
}

}  // namespace

Alphabet gadget_alphabet() { return Alphabet::from_glyphs("01#$"); }

std::string to_string(Reduction r) {
  switch (r) {
    case Reduction::MatchUniv:
      return "sat2univ";
    case Reduction::MatchStrict:
      return "sat2strict";
    case Reduction::WeStrict:
      return "sat2we";
  }
  return "sat2univ";
}

std::size_t default_blowup(const CnfFormula& phi, std::size_t max_symbols) {
  const std::size_t n = phi.num_vars;
  const std::size_t m = phi.clauses.size();
  const std::size_t k = 5 * n + m + 2;
  const std::size_t big_n = n + m;
  if (big_n <= 30) {
    std::size_t p = 1;
    for (int i = 0; i < 6; ++i) p *= big_n;
    if (p > k && p <= max_symbols && pattern_length(n, m, p) <= max_symbols) return p;
  }
  return k + 1;
}

GadgetInstance build_match_univ_instance(const CnfFormula& phi, std::size_t blowup) {
  validate(phi);
  GadgetInstance inst;
  inst.formula = phi;
  const std::size_t n = phi.num_vars;
  const std::size_t m = phi.clauses.size();
  inst.k = 5 * n + m + 2;
  if (blowup <= inst.k) {
    throw DomainError("blowup " + std::to_string(blowup) + " must exceed k = " +
                      std::to_string(inst.k));
  }
  inst.blowup = blowup;
  {
    const std::size_t big_n = n + m;
    std::size_t p = 1;
    bool overflow = big_n > 1000;
    for (int i = 0; i < 6 && !overflow; ++i) p *= big_n;
    inst.blowup_is_n6 = !overflow && p == blowup;
  }

  Pattern& a = inst.alpha;
  for (std::size_t i = 1; i <= n; ++i) a.variable("z" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) a.variable("u" + std::to_string(i));

  auto gadget = [&](std::string name, auto&& body) {
    const std::size_t begin = a.size();
    body();
    inst.gadgets.push_back(Gadget{std::move(name), begin, a.size()});
  };
  auto binarisation = [&](Letter inner, Letter closer) {
    for (std::size_t r = 0; r < blowup; ++r) {
      for (std::size_t i = 1; i <= n; ++i) a.push_variable(inst.z(i));
      for (std::size_t i = 1; i <= n; ++i) a.push_variable(inst.u(i));
      a.append(block_word({kZero, kOne, inner}));
    }
    a.push_terminal(closer);
  };
  gadget("pi_#", [&] { binarisation(kDollar, kHash); });
  gadget("pi_$", [&] { binarisation(kHash, kDollar); });
  for (std::size_t i = 1; i <= n; ++i) {
    for (const auto& [suffix, var] : {std::pair{"z", inst.z(i)}, std::pair{"u", inst.u(i)}}) {
      gadget("pi_" + std::to_string(i) + "^" + suffix, [&, var = var] {
        for (std::size_t r = 0; r < blowup; ++r) {
          a.push_variable(var);
          a.append(block_word({kDollar, kHash}));
        }
        a.append(block_word({kOne, kZero, kZero, kOne, kDollar, kHash}));
      });
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    gadget("xi_" + std::to_string(i), [&] {
      a.push_terminal(kDollar);
      a.push_variable(inst.z(i));
      a.push_variable(inst.u(i));
      a.push_terminal(kHash);
    });
  }
  for (std::size_t j = 1; j <= m; ++j) {
    gadget("delta_" + std::to_string(j), [&] {
      a.append(block_word({kDollar, kZero}));
      for (const Literal& l : phi.clauses[j - 1]) {
        a.push_variable(l.positive ? inst.z(l.var) : inst.u(l.var));
      }
      a.push_terminal(kHash);
    });
  }
  return inst;
}

GadgetInstance build_match_strict_instance(const CnfFormula& phi, std::size_t blowup) {
  GadgetInstance inst = build_match_univ_instance(phi, blowup);
  inst.kind = Reduction::MatchStrict;
  inst.word = target_word(inst.k);
  return inst;
}

GadgetInstance build_we_strict_instance(const CnfFormula& phi, std::size_t blowup) {
  GadgetInstance inst = build_match_univ_instance(phi, blowup);
  inst.kind = Reduction::WeStrict;
  Pattern beta(4);
  for (const std::string& name : inst.alpha.variable_names()) beta.variable(name);
  beta.append(target_word(inst.k));
  beta.push_variable(beta.variable("x"));
  inst.beta = std::move(beta);
  return inst;
}

Substitution canonical_substitution(const GadgetInstance& inst, const std::vector<bool>& assignment) {
  if (assignment.size() != inst.n()) throw DomainError("assignment size differs from n");
  Substitution h(inst.beta ? inst.beta->variable_count() : inst.alpha.variable_count());
  const Word one = block_word({kOne});
  const Word zero = block_word({kZero});
  for (std::size_t i = 1; i <= inst.n(); ++i) {
    h.set(inst.z(i), assignment[i - 1] ? one : zero);
    h.set(inst.u(i), assignment[i - 1] ? zero : one);
  }
  if (inst.beta) h.set(inst.fresh(), Word(4));
  return h;
}

namespace {

bool only(const Word& w, Letter a) {
  return !w.empty() && std::all_of(w.letters().begin(), w.letters().end(),
                                   [a](Letter b) { return b == a; });
}

// First violated gadget condition, as (gadget, message).
std::optional<std::pair<std::string, std::string>> gadget_violation(const GadgetInstance& inst,
                                                                    const Substitution& h) {
  const std::size_t n = inst.n();
  for (std::size_t i = 1; i <= n; ++i) {
    for (const auto& [name, var] : {std::pair{"z", inst.z(i)}, std::pair{"u", inst.u(i)}}) {
      const Word& img = h.at(var);
      const std::string who = std::string(name) + std::to_string(i);
      if (img.count(kHash) > 0) return std::pair{"pi_#", "image of " + who + " contains #"};
      if (img.count(kDollar) > 0) return std::pair{"pi_$", "image of " + who + " contains $"};
      if (img.count(kZero) > 0 && img.count(kOne) > 0) {
        return std::pair{"pi_" + std::to_string(i) + "^" + name, "image of " + who + " mixes 0 and 1"};
      }
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const Word& z = h.at(inst.z(i));
    const Word& u = h.at(inst.u(i));
    const std::string gadget = "xi_" + std::to_string(i);
    if (z.empty() || u.empty()) {
      return std::pair{gadget, "z" + std::to_string(i) + " or u" + std::to_string(i) +
                                   " maps to the empty word"};
    }
    if (z[0] == u[0]) {
      return std::pair{gadget, "z" + std::to_string(i) + " and u" + std::to_string(i) +
                                   " map to the same letter"};
    }
  }
  for (std::size_t j = 1; j <= inst.m(); ++j) {
    bool closed = false;
    for (const Literal& l : inst.formula.clauses[j - 1]) {
      closed = closed || only(h.at(l.positive ? inst.z(l.var) : inst.u(l.var)), kOne);
    }
    if (!closed) {
      return std::pair{"delta_" + std::to_string(j), "no literal of clause " + std::to_string(j) +
                                                         " maps into 1^+"};
    }
  }
  return std::nullopt;
}

}  // namespace

DecodeResult decode_assignment(const GadgetInstance& inst, const Substitution& h) {
  DecodeResult r;
  const std::size_t iota = universality_index(apply(h, inst.alpha));
  const auto violation = gadget_violation(inst, h);
  if (iota != inst.k) {
    r.diagnostic = "iota(h(alpha)) = " + std::to_string(iota) + " differs from k = " +
                   std::to_string(inst.k);
    if (violation) {
      r.gadget = violation->first;
      r.diagnostic += "; " + violation->second;
    }
    return r;
  }
  if (violation) {
    r.gadget = violation->first;
    r.diagnostic = violation->second;
    return r;
  }
  std::vector<bool> x(inst.n());
  for (std::size_t i = 1; i <= inst.n(); ++i) x[i - 1] = only(h.at(inst.z(i)), kOne);
  if (!satisfies(inst.formula, x)) {
    r.diagnostic = "decoded assignment does not satisfy the formula";
    return r;
  }
  r.assignment = std::move(x);
  return r;
}

std::vector<std::pair<std::string, std::size_t>> gadget_arch_budget(const GadgetInstance& inst,
                                                                    const Substitution& h) {
  Word image(4);
  std::vector<std::size_t> ends;  // image length after each gadget
  const auto& sym = inst.alpha.symbols();
  for (const Gadget& g : inst.gadgets) {
    for (std::size_t i = g.begin; i < g.end; ++i) {
      if (sym[i].is_variable()) {
        image += h.at(sym[i].var);
      } else {
        image.push_back(sym[i].letter);
      }
    }
    ends.push_back(image.size());
  }
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const Gadget& g : inst.gadgets) out.emplace_back(g.name, 0);
  for (Position e : arch_factorize(image).arch_ends) {
    const auto it = std::lower_bound(ends.begin(), ends.end(), e);
    ++out[static_cast<std::size_t>(it - ends.begin())].second;
  }
  return out;
}

}  // namespace simon
