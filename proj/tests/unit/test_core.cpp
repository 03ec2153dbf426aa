#include <doctest.h>

#include "oracles.hpp"
#include "simon/arch.hpp"
#include "simon/errors.hpp"
#include "simon/xranker.hpp"

using namespace simon;

namespace {
const Alphabet ab(2);
const Alphabet abc(3);
Word W(const char* s) { return ab.parse(s); }
}  // namespace

TEST_SUITE("core") {
  TEST_CASE("alphabet parsing and rendering") {
    CHECK(ab.render(W("abba")) == "abba");
    CHECK(W("").empty());
    CHECK_THROWS_AS(ab.parse("abc"), ParseError);
    CHECK_THROWS_AS(Alphabet::from_glyphs("aa"), ParseError);
    const Alphabet g = Alphabet::from_glyphs("01#$");
    CHECK(g.size() == 4);
    CHECK(g.letter_of('#') == 3);
    CHECK(g.render(g.parse("10$#")) == "10$#");
    CHECK_THROWS_AS(Word(2, {3}), DomainError);
  }

  TEST_CASE("word slicing is 1-based and inclusive") {
    const Word w = W("abba");
    CHECK(ab.render(w.slice(2, 3)) == "bb");
    CHECK(w.slice(3, 2).empty());
    CHECK(w.at(1) == 1);
    CHECK(w.count(2) == 2);
  }

  TEST_CASE("shortlex enumeration") {
    const auto words = all_words(2, 3);
    CHECK(words.size() == 15);
    for (std::size_t i = 1; i < words.size(); ++i) CHECK(shortlex_less(words[i - 1], words[i]));
    CHECK(ab.render(words[3]) == "aa");
  }

  TEST_CASE("x-ranker examples") {
    const XRanker x(W("abba"));
    CHECK(x.next(0, 2) == 2);
    CHECK(x.next(2, 1) == 4);
    CHECK(x.next(4, 1) == kInfinity);
    CHECK(x.next(0, 1) == 1);
  }

  TEST_CASE("x-ranker invariants against a scan") {
    for (const Word& w : all_words(3, 6)) {
      const XRanker x(w);
      for (Position i = 0; i <= w.size(); ++i) {
        for (Letter a = 1; a <= 3; ++a) {
          Position expect = kInfinity;
          for (Position j = i + 1; j <= w.size(); ++j) {
            if (w.at(j) == a) {
              expect = j;
              break;
            }
          }
          CHECK(x.next(i, a) == expect);
        }
      }
    }
  }

  TEST_CASE("arch factorization examples") {
    const Word w = W("baaba");
    const ArchFactorization f = arch_factorize(w);
    REQUIRE(f.iota == 2);
    CHECK(ab.render(f.arch(w, 1)) == "ba");
    CHECK(ab.render(f.arch(w, 2)) == "ab");
    CHECK(ab.render(f.rest(w)) == "a");

    const Word u = canonical_universal(2, 3);
    CHECK(ab.render(u) == "ababab");
    CHECK(arch_factorize(u).iota == 3);
    CHECK(arch_factorize(u).rest(u).empty());

    const ArchFactorization z = arch_factorize(W("aaa"));
    CHECK(z.iota == 0);
    CHECK(ab.render(z.rest(W("aaa"))) == "aaa");
  }

  TEST_CASE("universality index examples") {
    CHECK(universality_index(Word(2)) == 0);
    CHECK(universality_index(W("abab")) == 2);
    for (std::size_t k = 0; k <= 20; ++k) CHECK(universality_index(canonical_universal(2, k)) == k);
  }

  TEST_CASE("arches concatenate back to the word, with proper rest") {
    for (int sigma : {2, 3}) {
      for (const Word& w : all_words(sigma, sigma == 2 ? 14 : 9)) {
        const ArchFactorization f = arch_factorize(w);
        Word joined(sigma);
        for (std::size_t j = 1; j <= f.iota; ++j) {
          const Word a = f.arch(w, j);
          REQUIRE(a.alph() == LetterSet::full(sigma));
          // The closing letter of an arch occurs once in it.
          REQUIRE(a.count(a.at(a.size())) == 1);
          joined += a;
        }
        joined += f.rest(w);
        REQUIRE(joined == w);
        REQUIRE(f.rest(w).alph() != LetterSet::full(sigma));
      }
    }
  }

  TEST_CASE("universality index agrees with the definition") {
    for (const Word& w : all_words(2, 12)) REQUIRE(universality_index(w) == oracle::iota_by_definition(w));
    for (const Word& w : all_words(3, 8)) REQUIRE(universality_index(w) == oracle::iota_by_definition(w));
  }

  TEST_CASE("minimal universal length") {
    for (int sigma : {2, 3}) {
      for (std::size_t k = 1; k <= 3; ++k) {
        const std::size_t len = k * static_cast<std::size_t>(sigma) - 1;
        if (sigma == 3 && k == 3) continue;  // 3^8 words, covered by acceptance at sigma 2
        bool any = false;
        for_each_word(sigma, len, [&](const Word& w) {
          if (w.size() == len && universality_index(w) >= k) any = true;
          return !any;
        });
        CHECK_FALSE(any);
        CHECK(universality_index(canonical_universal(sigma, k)) == k);
      }
    }
  }

  TEST_CASE("superadditivity of arch counts") {
    const auto words = all_words(2, 6);
    for (const Word& u : words) {
      for (const Word& v : words) {
        REQUIRE(universality_index(u + v) >= universality_index(u) + universality_index(v));
      }
    }
  }

  TEST_CASE("closing the rest adds exactly one arch") {
    for (const Word& w : all_words(3, 7)) {
      const ArchFactorization f = arch_factorize(w);
      Word x = w;
      for (Letter a : (LetterSet::full(3) - f.rest(w).alph()).letters()) x.push_back(a);
      REQUIRE(universality_index(x) == f.iota + 1);
    }
  }

  TEST_CASE("signature letter arches") {
    const auto a = signature_letter_arches(W("abab"), 1);
    CHECK(a.iota == 1);
    CHECK(a.rest_alph == LetterSet::of(2));
    const auto b = signature_letter_arches(W("abab"), 2);
    CHECK(b.iota == 1);
    CHECK(b.rest_alph.empty());
    const auto c = signature_letter_arches(W("ab"), 2);
    CHECK(c.iota == 0);
    CHECK(c.rest_alph.empty());
    CHECK_THROWS_AS(signature_letter_arches(W("aaa"), 2), DomainError);
  }

  TEST_CASE("marginal sequence examples") {
    const MarginalSequence m = marginal_sequence(W("abab"));
    CHECK(m.terms == std::vector<Position>{0, 1, 2, 3, 4});
    CHECK(m.last == 4);
    CHECK(marginal_sequence(W("ab")).terms == std::vector<Position>{0, 1, 2});
    const MarginalSequence r = marginal_sequence(W("ba"));
    CHECK(r.gamma == std::vector<Letter>{2, 1});
    CHECK(r.terms == std::vector<Position>{0, 1, 2});
    CHECK_THROWS_AS(marginal_sequence(W("aaa")), DomainError);
  }

  TEST_CASE("marginal sequence is non-decreasing") {
    for (const Word& w : all_words(2, 12)) {
      if (w.alph() != LetterSet::full(2)) continue;
      const MarginalSequence m = marginal_sequence(w);
      for (std::size_t i = 1; i < m.terms.size(); ++i) REQUIRE(m.terms[i - 1] <= m.terms[i]);
      REQUIRE(m.terms.back() <= m.last);
    }
  }

  TEST_CASE("arch transducer composes like concatenation") {
    const auto words = all_words(2, 5);
    for (const Word& u : words) {
      for (const Word& v : words) {
        const ArchTransducer t = ArchTransducer(u).then(ArchTransducer(v));
        REQUIRE(t == ArchTransducer(u + v));
        REQUIRE(t.run(0).arches == universality_index(u + v));
      }
    }
  }
}
