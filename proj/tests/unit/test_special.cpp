#include <doctest.h>

#include "oracles.hpp"
#include "simon/arch.hpp"
#include "simon/congruence.hpp"
#include "simon/errors.hpp"
#include "simon/special.hpp"

using namespace simon;

namespace {
const Alphabet ab(2);
Word W(const char* s) { return ab.parse(s); }
Pattern P(const char* s) { return Pattern::parse(s, ab); }

Count image_iota(const Pattern& p, const SolverAnswer& a) {
  if (a.witness) return universality_index(apply(*a.witness, p));
  return iota_from_signature(signature_of_image(p, *a.compact_witness));
}
}  // namespace

TEST_SUITE("special") {
  TEST_CASE("one occurrence examples") {
    const Pattern p = P("aXb");
    CHECK(match_univ_one_occurrence(p, 0, 0).no());
    const SolverAnswer one = match_univ_one_occurrence(p, 0, 1);
    REQUIRE(one.yes());
    CHECK(one.witness->at(0).empty());
    const SolverAnswer seven = match_univ_one_occurrence(p, 0, 7);
    REQUIRE(seven.yes());
    CHECK(universality_index(apply(*seven.witness, p)) == 7);
    CHECK_THROWS_AS(match_univ_one_occurrence(P("XaX"), 0, 2), DomainError);
  }

  TEST_CASE("one occurrence witnesses hit k exactly") {
    for (const char* text : {"X", "aXb", "abXba", "XaYbY", "bbXaa", "YXaYb"}) {
      const Pattern p = P(text);
      VarId x = 0;
      for (VarId v : p.variables()) {
        if (p.occurrences(v) == 1) x = v;
      }
      const Count base = universality_index(p.terminal_word());
      for (std::size_t k = 0; k <= 50; ++k) {
        const SolverAnswer a = match_univ_one_occurrence(p, x, k);
        REQUIRE(a.yes() == (k >= base));
        if (a.yes()) REQUIRE(image_iota(p, a) == k);
      }
    }
  }

  TEST_CASE("one occurrence with huge k stays compact") {
    const Pattern p = P("aXb");
    const Count k("123456789012345678901234567890");
    const SolverAnswer a = match_univ_one_occurrence(p, 0, k);
    REQUIRE(a.yes());
    CHECK_FALSE(a.witness.has_value());
    REQUIRE(a.compact_witness);
    CHECK(image_iota(p, a) == k);
  }

  TEST_CASE("shape closure agrees with bounded validity search") {
    const auto shapes = realized_shapes(2);
    CHECK(shapes.front().shape.gamma.empty());
    for (const RealizedShape& r : shapes) {
      REQUIRE(shape_of(signature_of(r.witness)) == r.shape);
      REQUIRE(compact_k(signature_of(r.witness)).k_prime == r.min_k_prime);
      const auto sig = with_k_prime(r.shape, 2, r.min_k_prime);
      const auto v = validity_search(sig, 10);
      REQUIRE(v.valid());
      REQUIRE(v.shift == 0);
    }
    // Every word's shape is in the closure, with k' no smaller than the least.
    for (const Word& w : all_words(2, 10)) {
      const auto s = signature_of(w);
      const auto it = std::find_if(shapes.begin(), shapes.end(),
                                   [&](const RealizedShape& r) { return r.shape == shape_of(s); });
      REQUIRE(it != shapes.end());
      REQUIRE(compact_k(s).k_prime >= it->min_k_prime);
    }
  }

  TEST_CASE("arch count systems") {
    const auto a = solve_arch_count_system({2, 3}, 7);
    REQUIRE(a);
    CHECK(2 * (*a)[0] + 3 * (*a)[1] == 7);
    CHECK_FALSE(solve_arch_count_system({2, 4}, 7));
    CHECK(solve_arch_count_system({}, 0));
    CHECK_FALSE(solve_arch_count_system({}, 1));
    const auto b = solve_arch_count_system({3}, Count("3000000000000000000000"));
    REQUIRE(b);
    CHECK((*b)[0] == Count("1000000000000000000000"));
    for (int c1 = 1; c1 <= 4; ++c1) {
      for (int c2 = 1; c2 <= 4; ++c2) {
        for (int c3 = 1; c3 <= 3; ++c3) {
          for (int d = 0; d <= 30; ++d) {
            bool exists = false;
            for (int x = 0; x * c1 <= d && !exists; ++x) {
              for (int y = 0; x * c1 + y * c2 <= d && !exists; ++y) {
                exists = (d - x * c1 - y * c2) % c3 == 0;
              }
            }
            const auto s = solve_arch_count_system({c1, c2, c3}, d);
            REQUIRE(s.has_value() == exists);
            if (s) REQUIRE(c1 * (*s)[0] + c2 * (*s)[1] + c3 * (*s)[2] == d);
          }
        }
      }
    }
  }

  TEST_CASE("const vars examples") {
    const Pattern p = P("XaX");
    ArchCountSystem sys;
    const SolverAnswer a = match_univ_const_vars(p, 2, {}, &sys);
    REQUIRE(a.yes());
    CHECK(universality_index(apply(*a.witness, p)) == 2);

    const Pattern x = P("X");
    const SolverAnswer m = match_univ_const_vars(x, 1000000, {}, &sys);
    REQUIRE(m.yes());
    CHECK(image_iota(x, m) == 1000000);
    Count sum = 0;
    for (std::size_t i = 0; i < sys.coefficients.size(); ++i) sum += sys.coefficients[i] * sys.solution[i];
    CHECK(sum == sys.target);

    CHECK(match_univ_const_vars(P("ab"), 1).yes());
    CHECK(match_univ_const_vars(P("ab"), 2).no());
    CHECK_THROWS_AS(match_univ_const_vars(P("XYZX${w}"), 1), CapExceeded);
  }

  TEST_CASE("const vars decides unreachable counts") {
    // Bounded search never contradicts the shape closure.
    for (const char* text : {"XX", "XaX", "aXXb", "XYXY", "XbXaY"}) {
      const Pattern p = P(text);
      for (std::size_t k = 0; k <= 4; ++k) {
        const SolverAnswer a = match_univ_const_vars(p, k);
        REQUIRE(a.complete);
        if (a.yes()) REQUIRE(image_iota(p, a) == k);
        const SolverAnswer b = match_univ(p, k, SearchOptions{.image_cap = 8});
        if (b.yes()) REQUIRE(a.yes());
        if (b.no()) REQUIRE(a.no());
      }
    }
  }

  TEST_CASE("regular automaton examples") {
    const Pattern p = P("XaY");
    const SolverAnswer a = match_simon_regular(p, W("ab"), 1, false);
    REQUIRE(a.yes());
    CHECK(a.witness->at(0).empty());
    CHECK(ab.render(a.witness->at(1)) == "b");
    CHECK(match_simon_regular(p, W("bb"), 1, false).no());

    const Pattern x = P("X");
    const SolverAnswer s = match_simon_regular(x, W("ab"), 1, true);
    REQUIRE(s.yes());
    const Word img = apply(*s.witness, x);
    CHECK(simon_congruent(img, W("ab"), 1));
    CHECK_FALSE(simon_congruent(img, W("ab"), 2));
    CHECK_THROWS_AS(match_simon_regular(P("XaX"), W("ab"), 1, false), DomainError);
  }

  TEST_CASE("regular automaton agrees with bounded search") {
    SearchCache cache;
    for (const char* text : {"X", "XaY", "aXb", "XbYaZ", "abX"}) {
      const Pattern p = P(text);
      for (const Word& w : all_words(2, 4)) {
        for (std::size_t k = 0; k <= 3; ++k) {
          for (bool strict : {false, true}) {
            const SearchOptions opts{.cache = &cache};
            const SolverAnswer r = match_simon_regular(p, w, k, strict, opts);
            const SolverAnswer b = strict ? match_strict_simon(p, w, k, opts) : match_simon(p, w, k, opts);
            if (r.yes()) {
              const Word img = apply(*r.witness, p);
              REQUIRE(simon_congruent(img, w, k));
              if (strict) REQUIRE_FALSE(simon_congruent(img, w, k + 1));
            }
            if (!b.unknown()) REQUIRE(r.verdict == b.verdict);
          }
        }
      }
    }
  }

  TEST_CASE("iota zero short form examples") {
    const Alphabet abc(3);
    CHECK(abc.render(iota_zero_shortform(abc.parse("aab"))) == "ab");
    CHECK(abc.render(iota_zero_shortform(abc.parse("ab"))) == "ab");
    CHECK(ab.render(iota_zero_shortform(W("aaa"))) == "aa");
    CHECK_THROWS_AS(iota_zero_shortform(W("ab")), DomainError);
    CHECK(iota_zero_shortform(Word(2)).empty());
  }

  TEST_CASE("iota zero short form preserves iota in one-variable patterns") {
    const auto contexts = all_words(2, 3);
    for (const Word& v : all_words(2, 6)) {
      if (universality_index(v) != 0) continue;
      const Word s = iota_zero_shortform(v);
      for (Letter a = 1; a <= 2; ++a) REQUIRE(s.count(a) <= 2);
      REQUIRE(universality_index(s) == 0);
      for (const Word& u1 : contexts) {
        for (const Word& u2 : contexts) {
          for (const Word& u3 : contexts) {
            REQUIRE(universality_index(u1 + v + u2 + v + u3) == universality_index(u1 + s + u2 + s + u3));
          }
        }
      }
    }
  }

  TEST_CASE("method dispatch") {
    CHECK(solve_match_univ(P("aXb"), 3, Method::Auto).method == "one_occurrence");
    CHECK(solve_match_univ(P("XaX"), 2, Method::Auto).method == "const_vars");
    CHECK(solve_match_univ(P("XaX"), 2, Method::Brute).method == "brute");
    CHECK(solve_match_simon(P("XaY"), W("ab"), 1, false, Method::Auto).method == "regular_automata");
    CHECK(solve_match_simon(P("XaX"), W("ab"), 1, false, Method::Auto).method == "brute");
    CHECK_THROWS_AS(parse_method("fast"), ParseError);
    CHECK(parse_method("const_vars") == Method::ConstVars);
  }
}
