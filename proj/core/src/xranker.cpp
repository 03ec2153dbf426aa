#include "simon/xranker.hpp"

#include "simon/errors.hpp"

namespace simon {

XRanker::XRanker(const Word& w)
    : sigma_(w.sigma()),
      length_(w.size()),
      next_((w.size() + 1) * static_cast<std::size_t>(w.sigma()), kInfinity) {
  const auto s = static_cast<std::size_t>(sigma_);
  // Row i is row i+1 with w[i+1] updated; fill right to left.
  for (std::size_t i = length_; i-- > 0;) {
    for (std::size_t a = 0; a < s; ++a) next_[i * s + a] = next_[(i + 1) * s + a];
    next_[i * s + (w[i] - 1)] = i + 1;
  }
}

Position XRanker::next(Position i, Letter a) const {
  if (a < 1 || a > sigma_) throw DomainError("X-ranker query with letter outside alphabet");
  if (i >= length_) return kInfinity;
  return next_[i * static_cast<std::size_t>(sigma_) + (a - 1)];
}

}  // namespace simon
