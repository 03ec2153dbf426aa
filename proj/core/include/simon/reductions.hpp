#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "simon/dimacs.hpp"
#include "simon/pattern.hpp"

namespace simon {

// Reduction alphabet: 0, 1, #, $ as letters 1..4.
Alphabet gadget_alphabet();

enum class Reduction { MatchUniv, MatchStrict, WeStrict };
std::string to_string(Reduction r);

// A labelled span of the assembled pattern: pi_#, pi_$, pi_i^z, pi_i^u, xi_i
// or delta_j.
struct Gadget {
  std::string name;
  std::size_t begin = 0;  // symbol index into alpha
  std::size_t end = 0;    // one past the last symbol
};

struct GadgetInstance {
  Reduction kind = Reduction::MatchUniv;
  CnfFormula formula;
  Pattern alpha{4};
  std::vector<Gadget> gadgets;
  std::size_t k = 0;     // 5n + m + 2
  std::size_t blowup = 0;
  bool blowup_is_n6 = false;  // blowup equals N^6 with N = n + m
  std::optional<Word> word;     // MatchStrict: (10$#)^(k+1)
  std::optional<Pattern> beta;  // WeStrict: (10$#)^(k+1) x

  std::size_t n() const { return formula.num_vars; }
  std::size_t m() const { return formula.clauses.size(); }
  VarId z(std::size_t i) const { return i - 1; }       // 1-based i
  VarId u(std::size_t i) const { return n() + i - 1; }
  VarId fresh() const { return 2 * n(); }  // WeStrict only
};

// N^6 if the resulting pattern stays within max_symbols, else k + 1.
std::size_t default_blowup(const CnfFormula& phi, std::size_t max_symbols = 1'000'000);

// Requires blowup > 5n + m + 2.
GadgetInstance build_match_univ_instance(const CnfFormula& phi, std::size_t blowup);
GadgetInstance build_match_strict_instance(const CnfFormula& phi, std::size_t blowup);
GadgetInstance build_we_strict_instance(const CnfFormula& phi, std::size_t blowup);

// z_i -> 1, u_i -> 0 for true x_i, swapped for false; fresh x -> empty.
Substitution canonical_substitution(const GadgetInstance& inst, const std::vector<bool>& assignment);

struct DecodeResult {
  std::optional<std::vector<bool>> assignment;
  std::string gadget;      // violated gadget, empty on success
  std::string diagnostic;  // empty on success
};

// x_i := h(z_i) in 1^+, accepted only when iota(h(alpha)) = k and every
// gadget condition holds.
DecodeResult decode_assignment(const GadgetInstance& inst, const Substitution& h);

// Arches of the arch factorization of h(alpha) per gadget, attributing each
// arch to the gadget containing its last letter.
std::vector<std::pair<std::string, std::size_t>> gadget_arch_budget(const GadgetInstance& inst,
                                                                    const Substitution& h);

}  // namespace simon
