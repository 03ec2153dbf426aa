#pragma once

#include <vector>

#include "simon/alphabet.hpp"

namespace simon {

// Lookup table for X(w, i, a): the first position j > i with w[j] = a, or
// kInfinity when no such position exists. Positions are 1-based; i ranges
// over [0, |w|] and i = kInfinity is accepted (always yields kInfinity).
class XRanker {
 public:
  explicit XRanker(const Word& w);

  Position next(Position i, Letter a) const;
  std::size_t length() const noexcept { return length_; }
  int sigma() const noexcept { return sigma_; }

 private:
  int sigma_;
  std::size_t length_;
  // next_[i * sigma + (a - 1)], i in [0, |w|]
  std::vector<Position> next_;
};

inline XRanker build_xranker(const Word& w) { return XRanker(w); }

}  // namespace simon
