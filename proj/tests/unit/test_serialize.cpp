#include <doctest.h>

#include "simon/errors.hpp"
#include "simon/problem.hpp"
#include "simon/serialize.hpp"

using namespace simon;

TEST_SUITE("serialize") {
  TEST_CASE("counts") {
    CHECK(count_to_json(Count(42)) == Json(42));
    const Count big("98765432109876543210987654321");
    CHECK(count_to_json(big).is_string());
    CHECK(count_from_json(count_to_json(big)) == big);
    CHECK_THROWS_AS(count_from_json(Json("12x")), ParseError);
  }

  TEST_CASE("signature round trip") {
    const Alphabet abc(3);
    for (const Word& w : all_words(3, 6)) {
      const UniversalitySignature s = signature_of(w);
      const Json j = to_json(s, abc);
      REQUIRE(signature_from_json(j, abc) == s);
      Json compact = j;
      compact["K"] = j["K_compact"];
      REQUIRE(signature_from_json(compact, abc) == s);
    }
  }

  TEST_CASE("substitution round trip") {
    const Alphabet ab(2);
    Substitution h(2);
    h.set(0, ab.parse("abba"));
    h.set(1, Word(2));
    const std::vector<std::string> names{"X", "Y"};
    const Json j = to_json(h, names, ab);
    CHECK(j["X"] == "abba");
    CHECK(substitution_from_json(j, names, ab) == h);
  }

  TEST_CASE("formula and instance round trip") {
    const CnfFormula phi{2, {Clause{Literal{1, true}, Literal{2, false}, Literal{2, true}}}};
    CHECK(formula_from_json(to_json(phi)) == phi);
    for (const GadgetInstance& inst : {build_match_univ_instance(phi, 20),
                                       build_match_strict_instance(phi, 20),
                                       build_we_strict_instance(phi, 20)}) {
      const GadgetInstance back = instance_from_json(to_json(inst));
      CHECK(back.kind == inst.kind);
      CHECK(back.formula == inst.formula);
      CHECK(back.alpha == inst.alpha);
      CHECK(back.k == inst.k);
      CHECK(back.blowup == inst.blowup);
      CHECK(back.word == inst.word);
      CHECK(back.beta == inst.beta);
      REQUIRE(back.gadgets.size() == inst.gadgets.size());
    }
  }

  TEST_CASE("problem round trip and re-solve") {
    Problem p;
    p.kind = ProblemKind::MatchSimon;
    p.pattern = "XaY";
    p.word = "ab";
    p.k = 1;
    const Json j = to_json(p);
    CHECK(problem_from_json(j) == p);
    const Json solved = solve_to_json(p);
    CHECK(solved["answer"]["verdict"] == "yes");
    // A solved document is itself a valid problem.
    CHECK(problem_from_json(solved) == p);
    CHECK(solve_to_json(problem_from_json(solved)).dump() == solved.dump());
  }

  TEST_CASE("instances re-solve as problems") {
    const CnfFormula phi{1, {Clause{Literal{1, true}, Literal{1, true}, Literal{1, true}}}};
    const Json j = to_json(build_match_strict_instance(phi, 9));
    const Problem p = problem_from_json(j);
    CHECK(p.kind == ProblemKind::MatchStrict);
    CHECK(p.k == 8);
    CHECK(p.alphabet == "01#$");
  }

  TEST_CASE("malformed problems") {
    CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"problem":"match-univ"})")), ParseError);
    CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"problem":"nope","pattern":"X","k":1})")),
                    ParseError);
    CHECK_THROWS_AS(
        problem_from_json(Json::parse(R"({"problem":"match-simon","pattern":"X","k":1})")),
        ParseError);
  }
}
