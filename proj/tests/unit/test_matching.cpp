#include <doctest.h>

#include "oracles.hpp"
#include "simon/arch.hpp"
#include "simon/congruence.hpp"
#include "simon/errors.hpp"
#include "simon/matching.hpp"
#include "simon/special.hpp"

using namespace simon;

namespace {
const Alphabet ab(2);
Word W(const char* s) { return ab.parse(s); }
Pattern P(const char* s) { return Pattern::parse(s, ab); }

std::string image(const SolverAnswer& a, const Pattern& p, const char* var) {
  return ab.render(a.witness->at(*p.find_variable(var)));
}

// All substitutions with images up to max_len; visit returns true to stop.
bool any_substitution(const Pattern& p, std::size_t max_len,
                      const std::function<bool(const Substitution&)>& visit) {
  const auto words = all_words(p.sigma(), max_len);
  const auto vars = p.variables();
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    Substitution h(p.variable_count());
    for (std::size_t i = 0; i < vars.size(); ++i) h.set(vars[i], words[idx[i]]);
    if (visit(h)) return true;
    std::size_t i = vars.size();
    while (i > 0 && ++idx[i - 1] == words.size()) idx[--i] = 0;
    if (i == 0) return false;
  }
}
}  // namespace

TEST_SUITE("matching") {
  TEST_CASE("pattern parsing") {
    const Pattern p = P("XaYbX");
    CHECK(p.size() == 5);
    CHECK(p.variables().size() == 2);
    CHECK(p.occurrences(*p.find_variable("X")) == 2);
    CHECK_FALSE(p.is_regular());
    CHECK(P("XaY").is_regular());
    CHECK(p.render(ab) == "XaYbX");
    const Pattern q = P("${long}a${x1}");
    CHECK(q.variable_name(0) == "long");
    CHECK(q.render(ab) == "${long}a${x1}");
    CHECK_THROWS_AS(P("a?"), ParseError);
    CHECK_THROWS_AS(P("${x"), ParseError);

    const Alphabet g = Alphabet::from_glyphs("01#$");
    const Pattern r = Pattern::parse("$0${z1}#", g);
    CHECK(r.size() == 4);
    CHECK(r.variables().size() == 1);
    CHECK(r.render(g) == "$0${z1}#");
  }

  TEST_CASE("apply examples") {
    const Pattern p = P("XXababYY");
    Substitution h(p.variable_count());
    h.set(*p.find_variable("X"), W("aa"));
    h.set(*p.find_variable("Y"), W("b"));
    CHECK(ab.render(apply(h, p)) == "aaaaababbb");

    Substitution e(p.variable_count());
    e.set(0, Word(2));
    e.set(1, Word(2));
    CHECK(apply(e, p) == p.terminal_word());

    const Pattern q = P("aXb");
    Substitution g(1);
    g.set(0, W("ba"));
    CHECK(ab.render(apply(g, q)) == "abab");
    CHECK_THROWS_AS(apply(Substitution(1), q), DomainError);
  }

  TEST_CASE("certificate verification examples") {
    SignatureCertificate c;
    c.images = {signature_of(canonical_universal(2, 3))};
    CHECK(verify_certificate(P("X"), c) == 3);
    c.images = {signature_of(W("ba"))};
    CHECK(verify_certificate(P("aXb"), c) == 2);
    CHECK(verify_certificate(P("abab"), SignatureCertificate{}) == 2);
  }

  TEST_CASE("certificate verification matches direct evaluation") {
    for (const char* text : {"XaX", "XYX", "aXbY", "XXYab"}) {
      const Pattern p = P(text);
      any_substitution(p, 3, [&](const Substitution& h) {
        SignatureCertificate c;
        for (VarId x = 0; x < p.variable_count(); ++x) c.images.push_back(signature_of(h.at(x)));
        REQUIRE(verify_certificate(p, c) == universality_index(apply(h, p)));
        return false;
      });
    }
  }

  TEST_CASE("match_univ examples") {
    const Pattern x = P("X");
    const SolverAnswer a = match_univ(x, 5, SearchOptions{.image_cap = 10});
    REQUIRE(a.yes());
    CHECK(image(a, x, "X") == "ababababab");

    const Pattern p = P("XaX");
    const SolverAnswer b = match_univ(p, 2);
    REQUIRE(b.yes());
    CHECK(universality_index(apply(*b.witness, p)) == 2);
    CHECK(image(b, p, "X") == "ab");

    const SolverAnswer c = match_univ(P("ab"), 2);
    CHECK(c.no());
    CHECK(c.complete);
  }

  TEST_CASE("match_univ pruning and completeness") {
    CHECK(match_univ(P("abXab"), 1).no());
    // (ab)^5 has 10 letters, beyond the default cap of 6.
    const SolverAnswer u = match_univ(P("X"), 5);
    CHECK(u.unknown());
    CHECK(u.bound_used == 6);
  }

  TEST_CASE("match_univ agrees with exhaustive images") {
    for (const char* text : {"XaX", "XbYa", "aXXb", "XYXY", "bXa"}) {
      const Pattern p = P(text);
      std::set<std::size_t> reachable;
      any_substitution(p, 4, [&](const Substitution& h) {
        reachable.insert(universality_index(apply(h, p)));
        return false;
      });
      for (std::size_t k = 0; k <= 4; ++k) {
        const SolverAnswer a = match_univ(p, k, SearchOptions{.image_cap = 4});
        if (a.yes()) REQUIRE(universality_index(apply(*a.witness, p)) == k);
        if (reachable.count(k)) REQUIRE(a.yes());
        if (a.no()) REQUIRE_FALSE(reachable.count(k));
      }
    }
  }

  TEST_CASE("exact matcher") {
    const Pattern p = P("XaY");
    const auto h = match_exact(p, W("bab"));
    REQUIRE(h);
    CHECK(apply(*h, p) == W("bab"));
    CHECK_FALSE(match_exact(P("XX"), W("aba")));
    CHECK(match_exact(P("XX"), W("abab")));
    CHECK(match_exact(P("X"), Word(2)));
  }

  TEST_CASE("match_simon examples") {
    const Pattern p = P("XaY");
    const SolverAnswer a = match_simon(p, W("bab"), 4);
    REQUIRE(a.yes());
    CHECK(image(a, p, "X") == "b");
    CHECK(image(a, p, "Y") == "b");

    const SolverAnswer b = match_simon(p, W("bb"), 1);
    CHECK(b.no());

    const Pattern x = P("X");
    const SolverAnswer c = match_simon(x, W("abab"), 2);
    REQUIRE(c.yes());
    CHECK(simon_congruent(apply(*c.witness, x), W("abab"), 2));
  }

  TEST_CASE("k equal to |w| is not exact matching") {
    const SolverAnswer a = match_simon(P("XX"), W("a"), 1);
    REQUIRE(a.yes());
    CHECK(ab.render(apply(*a.witness, P("XX"))) == "aa");
    const SolverAnswer s = match_strict_simon(P("X"), W("a"), 1);
    REQUIRE(s.yes());
    CHECK(image(s, P("X"), "X") == "aa");
  }

  TEST_CASE("match_strict_simon examples") {
    CHECK(match_strict_simon(P("X"), W("ab"), 3).no());
    // The only word ~_2 "ab" is "ab" itself, but classes of ~_3 outgrow the
    // default cap, so the bounded search stays inconclusive.
    const SolverAnswer two = match_strict_simon(P("X"), W("ab"), 2);
    CHECK(two.unknown());
    CHECK(match_simon_regular(P("X"), W("ab"), 2, true).no());
    const SolverAnswer a = match_strict_simon(P("X"), W("abab"), 1);
    REQUIRE(a.yes());
    const Word img = apply(*a.witness, P("X"));
    CHECK(simon_congruent(img, W("abab"), 1));
    CHECK_FALSE(simon_congruent(img, W("abab"), 2));
    CHECK(match_strict_simon(P("ab"), W("ab"), 1).no());
  }

  TEST_CASE("we_simon examples") {
    const Pattern a = P("Xa");
    const Pattern b = Pattern::parse("bY", ab, a.variable_names());
    const SolverAnswer r = we_simon(a, b, 3);
    REQUIRE(r.yes());
    CHECK(ab.render(r.witness->at(0)) == "ababab");
    CHECK(simon_congruent(apply(*r.witness, a), apply(*r.witness, b), 3));
    CHECK(we_simon(P("ab"), P("ba"), 1).yes());
    CHECK(we_simon(P("ab"), P("ba"), 2).no());
  }

  TEST_CASE("we_strict_simon examples") {
    const SolverAnswer r = we_strict_simon(P("X"), P("a"), 1);
    REQUIRE(r.yes());
    CHECK(image(r, P("X"), "X") == "aa");
    CHECK(we_strict_simon(P("a"), P("a"), 2).no());
    const Pattern x = P("X");
    const SolverAnswer s = we_strict_simon(x, x, 1);
    CHECK(s.no());
    const SolverAnswer big = we_strict_simon(x, x, 5);
    CHECK(big.unknown());
  }

  TEST_CASE("congruence search soundness") {
    SearchCache cache;
    for (const char* text : {"XaX", "XY", "aXbX"}) {
      const Pattern p = P(text);
      for (const Word& w : all_words(2, 4)) {
        for (std::size_t k = 1; k <= 2; ++k) {
          bool reachable = false;
          bool strict_reachable = false;
          any_substitution(p, 3, [&](const Substitution& h) {
            const Word img = apply(h, p);
            if (oracle::congruent(img, w, k)) {
              reachable = true;
              if (!oracle::congruent(img, w, k + 1)) strict_reachable = true;
            }
            return reachable && strict_reachable;
          });
          const SearchOptions opts{.image_cap = 3, .cache = &cache};
          const SolverAnswer a = match_simon(p, w, k, opts);
          if (a.yes()) REQUIRE(simon_congruent(apply(*a.witness, p), w, k));
          if (reachable) REQUIRE(a.yes());
          const SolverAnswer s = match_strict_simon(p, w, k, opts);
          if (s.yes()) {
            REQUIRE(simon_congruent(apply(*s.witness, p), w, k));
            REQUIRE_FALSE(simon_congruent(apply(*s.witness, p), w, k + 1));
          }
          if (strict_reachable) REQUIRE(s.yes());
        }
      }
    }
  }

  TEST_CASE("table and materialized searches agree") {
    for (const char* text : {"XaX", "XbY"}) {
      const Pattern p = P(text);
      for (const Word& w : all_words(2, 4)) {
        for (std::size_t k = 1; k <= 2; ++k) {
          const SolverAnswer a = match_simon(p, w, k, SearchOptions{.image_cap = 3});
          const SolverAnswer b = match_simon(p, w, k, SearchOptions{.image_cap = 3, .table_state_cap = 1});
          REQUIRE(a.verdict == b.verdict);
          if (a.yes()) REQUIRE(*a.witness == *b.witness);
        }
      }
    }
  }

  TEST_CASE("completeness bound") {
    CHECK(congruence_image_bound(2, 1) == 3);
    CHECK(congruence_image_bound(2, 3) == 10);
    for (std::size_t k = 1; k <= 4; ++k) {
      const ClassAutomaton a = ClassAutomaton::build(2, k);
      for (const auto& s : a.states()) REQUIRE(Count(s.depth) <= congruence_image_bound(2, k));
    }
  }

  TEST_CASE("candidate budget yields unknown") {
    const SolverAnswer a = match_univ(P("XYXY"), 9, SearchOptions{.image_cap = 6, .max_candidates = 10});
    CHECK(a.unknown());
    CHECK(a.note.find("budget") != std::string::npos);
  }
}
