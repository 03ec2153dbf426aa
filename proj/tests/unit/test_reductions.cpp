#include <doctest.h>

#include "oracles.hpp"
#include "simon/arch.hpp"
#include "simon/errors.hpp"
#include "simon/reductions.hpp"

using namespace simon;

namespace {
CnfFormula single() { return CnfFormula{1, {Clause{Literal{1, true}, Literal{1, true}, Literal{1, true}}}}; }

CnfFormula random_formula(std::size_t n, std::size_t m, unsigned seed) {
  CnfFormula phi{n, {}};
  unsigned s = seed;
  auto next = [&] {
    s = s * 1103515245u + 12345u;
    return (s >> 16) & 0x7fff;
  };
  for (std::size_t j = 0; j < m; ++j) {
    Clause c;
    for (Literal& l : c) l = Literal{1 + next() % n, next() % 2 == 0};
    phi.clauses.push_back(c);
  }
  return phi;
}

Substitution with_z(const GadgetInstance& inst, const char* z, const char* u) {
  const Alphabet g = gadget_alphabet();
  Substitution h = canonical_substitution(inst, {true});
  h.set(inst.z(1), g.parse(z));
  h.set(inst.u(1), g.parse(u));
  return h;
}
}  // namespace

TEST_SUITE("reductions") {
  TEST_CASE("single clause instance") {
    const GadgetInstance inst = build_match_univ_instance(single(), 9);
    CHECK(inst.k == 8);
    CHECK(inst.blowup == 9);
    CHECK_FALSE(inst.blowup_is_n6);
    CHECK(universality_index(apply(canonical_substitution(inst, {true}), inst.alpha)) == 8);
    CHECK(universality_index(apply(canonical_substitution(inst, {false}), inst.alpha)) < 8);

    const auto budget = gadget_arch_budget(inst, canonical_substitution(inst, {true}));
    std::vector<std::size_t> counts;
    for (const auto& [name, arches] : budget) counts.push_back(arches);
    CHECK(counts == std::vector<std::size_t>{1, 1, 2, 2, 1, 1});
    CHECK(budget.front().first == "pi_#");
    CHECK(budget.back().first == "delta_1");
    CHECK_THROWS_AS(build_match_univ_instance(single(), 8), DomainError);
  }

  TEST_CASE("gadget spans tile the pattern") {
    const GadgetInstance inst = build_match_univ_instance(random_formula(3, 4, 7), 30);
    std::size_t at = 0;
    for (const Gadget& g : inst.gadgets) {
      REQUIRE(g.begin == at);
      REQUIRE(g.end > g.begin);
      at = g.end;
    }
    CHECK(at == inst.alpha.size());
    CHECK(inst.gadgets.size() == 2 + 3 * inst.n() + inst.m());
  }

  TEST_CASE("strict instance word and fresh variable") {
    const GadgetInstance s = build_match_strict_instance(single(), 9);
    REQUIRE(s.word);
    CHECK(gadget_alphabet().render(*s.word) == [] {
      std::string w;
      for (int i = 0; i < 9; ++i) w += "10$#";
      return w;
    }());
    CHECK(universality_index(*s.word) == 9);

    const GadgetInstance we = build_we_strict_instance(single(), 9);
    REQUIRE(we.beta);
    CHECK(we.beta->occurrences(we.fresh()) == 1);
    CHECK(we.alpha.occurrences(we.fresh()) == 0);
  }

  TEST_CASE("decode") {
    const GadgetInstance inst = build_match_univ_instance(single(), 9);
    const DecodeResult ok = decode_assignment(inst, with_z(inst, "11", "0"));
    REQUIRE(ok.assignment);
    CHECK((*ok.assignment)[0]);
    CHECK(ok.gadget.empty());

    const DecodeResult bad = decode_assignment(inst, with_z(inst, "01", "0"));
    CHECK_FALSE(bad.assignment);
    CHECK(bad.gadget == "pi_1^z");
    CHECK_FALSE(bad.diagnostic.empty());
  }

  TEST_CASE("canonical substitutions round trip on random formulas") {
    for (unsigned seed = 1; seed <= 12; ++seed) {
      const std::size_t n = 1 + seed % 4;
      const CnfFormula phi = random_formula(n, 1 + seed % 5, seed);
      const GadgetInstance inst = build_match_univ_instance(phi, 5 * n + phi.clauses.size() + 3);
      for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
        std::vector<bool> a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = (bits >> i) & 1;
        const Substitution h = canonical_substitution(inst, a);
        const bool hit = universality_index(apply(h, inst.alpha)) == inst.k;
        REQUIRE(hit == satisfies(phi, a));
        const DecodeResult d = decode_assignment(inst, h);
        REQUIRE(d.assignment.has_value() == hit);
        if (d.assignment) REQUIRE(*d.assignment == a);
      }
    }
  }

  TEST_CASE("dimacs") {
    const char* text = "c sample\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n";
    const CnfFormula phi = parse_dimacs(text);
    CHECK(phi.num_vars == 3);
    REQUIRE(phi.clauses.size() == 2);
    CHECK(phi.clauses[0][1] == Literal{2, false});
    CHECK(parse_dimacs(write_dimacs(phi)) == phi);

    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 0\n"), ParseError);
    const CnfFormula padded = parse_dimacs("p cnf 2 1\n1 -2 0\n", {.pad_duplicates = true});
    CHECK(padded.clauses[0][2] == Literal{2, false});
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n1 2 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("1 2 3 0\n"), ParseError);
  }

  TEST_CASE("brute force sat") {
    CHECK(brute_force_sat(single()));
    const CnfFormula contra{1, {Clause{Literal{1, true}, Literal{1, true}, Literal{1, true}},
                                Clause{Literal{1, false}, Literal{1, false}, Literal{1, false}}}};
    CHECK_FALSE(brute_force_sat(contra));
  }
}
