#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "simon/alphabet.hpp"

namespace simon {

// Greedy arch factorization w = ar_1 ... ar_iota r(w).
struct ArchFactorization {
  // End positions i_1 < ... < i_iota (1-based, inclusive).
  std::vector<Position> arch_ends;
  // First position of the rest; |w| + 1 when the rest is empty.
  Position rest_start = 1;
  std::size_t iota = 0;

  Word arch(const Word& w, std::size_t j) const;  // 1-based j
  Word rest(const Word& w) const;
};

ArchFactorization arch_factorize(const Word& w);
std::size_t universality_index(const Word& w);

// Arch factorization of the suffix after the signature letter `a` (the
// first occurrence of a). Throws DomainError when a is not in alph(w).
struct LetterArches {
  std::size_t iota = 0;
  LetterSet rest_alph;
};
LetterArches signature_letter_arches(const Word& w, Letter a);

// Merged per-signature-letter arch ends, flattened to the defined terms in
// index order: terms[0] = 0, terms[i] = X(w,0,gamma[i]) for i in [sigma],
// terms[i*sigma + j] = end_{gamma[j]}(i, w).
struct MarginalSequence {
  std::vector<Letter> gamma;
  std::vector<Position> terms;
  Position last = 0;  // m_inf = |w|
};

// Requires alph(w) = Sigma.
MarginalSequence marginal_sequence(const Word& w);

// The greedy arch scan as a transducer over "letters collected so far in the
// open arch". For every start state S (a proper subset of Sigma, as a
// bitmask), records how many arches the word closes and the state it ends in.
// Composing transducers along a concatenation reproduces the arch count of
// the concatenated word without materializing it.
class ArchTransducer {
 public:
  static constexpr int kMaxSigma = 12;

  ArchTransducer() = default;
  explicit ArchTransducer(const Word& w);
  static ArchTransducer identity(int sigma);

  struct Step {
    std::uint64_t arches = 0;
    std::uint32_t state = 0;
  };
  Step run(std::uint32_t state) const { return table_[state]; }
  int sigma() const noexcept { return sigma_; }

  // this followed by `next`.
  ArchTransducer then(const ArchTransducer& next) const;

  bool operator==(const ArchTransducer& o) const;

 private:
  int sigma_ = 0;
  std::vector<Step> table_;
};

}  // namespace simon
