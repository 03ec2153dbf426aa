#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "simon/alphabet.hpp"

namespace simon {

// Arbitrary-precision counts; arch counts may exceed machine words.
using Count = boost::multiprecision::cpp_int;

// Subsequence universality signature (gamma, K, R) of a word.
//
// gamma lists alph(w) in order of first occurrence. K and R are indexed by
// gamma position: K[i] is the universality index of the suffix after the
// signature letter gamma[i], and R[i] the alphabet of that suffix's rest.
// Positions past |gamma| are implicit padding (K = -inf, R = Sigma); only the
// defined prefix is stored.
struct UniversalitySignature {
  int sigma = 1;
  std::vector<Letter> gamma;
  std::vector<Count> K;
  std::vector<LetterSet> R;

  static UniversalitySignature empty(int sigma);

  // 1-based accessors over the full length-sigma arrays; std::nullopt is -inf.
  std::optional<Count> k_at(std::size_t i) const;
  LetterSet r_at(std::size_t i) const;

  bool full_gamma() const { return gamma.size() == static_cast<std::size_t>(sigma); }

  bool operator==(const UniversalitySignature&) const = default;
};

// K encoded as (l, k'): K[i] = k' for i <= l and k' - 1 for l < i <= |gamma|.
// For an empty gamma the encoding is (0, 0).
struct CompactK {
  std::size_t l = 0;
  Count k_prime = 0;

  bool operator==(const CompactK&) const = default;
};

CompactK compact_k(const UniversalitySignature& s);
std::vector<Count> expand_k(const CompactK& c, std::size_t gamma_length);

// K non-increasing over gamma positions with K[1] - K[|gamma|] <= 1, and every
// R entry a proper subset of Sigma. Holds for every signature of a real word.
bool has_signature_shape(const UniversalitySignature& s);

UniversalitySignature signature_of(const Word& w);

// iota of any word with signature s: 0 when |gamma| < sigma, else K[sigma] + 1.
Count iota_from_signature(const UniversalitySignature& s);

// s(uv) from s(u) and s(v).
UniversalitySignature concat_signatures(const UniversalitySignature& su,
                                        const UniversalitySignature& sv);

// s(w^n) from s(w), by repeated squaring.
UniversalitySignature signature_power(const UniversalitySignature& s, const Count& n);

// s(gamma^c w) from s(w): every K entry shifted by c. Requires a full gamma.
UniversalitySignature pump_signature(const UniversalitySignature& s, const Count& c);

// Replaces the marginal segment w[m_t + 1 : m_{t+1}] (t >= 1, non-empty) by
// the permutation of its letters that keeps its last letter last and orders
// the others ascending. The signature is unchanged.
Word normalize_block(const Word& w, std::size_t t);

struct ValidityVerdict {
  enum class Kind { Valid, NotFoundWithinBound };
  Kind kind = Kind::NotFoundWithinBound;
  Word witness;        // Valid only
  Count shift = 0;     // Valid only: s(witness) = (gamma, K - shift, R)
  std::size_t bound = 0;

  bool valid() const { return kind == Kind::Valid; }
};

inline constexpr std::size_t kDefaultValiditySearchLength = 12;

// Searches all words of length <= max_len in shortlex order for a witness w
// with s(w) = (gamma, K - c, R), c >= 0 (c = 0 when |gamma| < sigma, since
// only full signatures can be pumped). Returns the shortlex-least witness.
// Sound but incomplete: NotFoundWithinBound is not a proof of invalidity.
ValidityVerdict validity_search(const UniversalitySignature& tuple,
                                std::size_t max_len = kDefaultValiditySearchLength);

}  // namespace simon
