#include "simon/congruence.hpp"

#include <algorithm>
#include <vector>

#include "simon/arch.hpp"
#include "simon/errors.hpp"
#include "simon/xranker.hpp"

namespace simon {

SubseqSet subseq_set(const Word& w, std::size_t k, const SubseqCaps& caps) {
  if (w.size() > caps.max_word_length) {
    throw CapExceeded("subseq-word-length", caps.max_word_length, "--search-len");
  }
  if (k > caps.max_k) throw CapExceeded("subseq-k", caps.max_k, "-k");
  SubseqSet out;
  out.k = k;
  out.members.insert(Word(w.sigma()));
  for (Letter a : w.letters()) {
    std::vector<Word> grown;
    for (const Word& s : out.members) {
      if (s.size() < k) {
        Word t = s;
        t.push_back(a);
        grown.push_back(std::move(t));
      }
    }
    out.members.insert(grown.begin(), grown.end());
  }
  return out;
}

std::size_t shortest_distinguisher(const Word& u, const Word& v) {
  if (u.sigma() != v.sigma() && !u.empty() && !v.empty()) {
    throw DomainError("words over different alphabets");
  }
  const int sigma = std::max(u.sigma(), v.sigma());
  const XRanker xu(u);
  const XRanker xv(v);
  const std::size_t nu = u.size();
  const std::size_t nv = v.size();
  const std::size_t stride = nv + 1;
  // dist[i][j]: shortest word embedding in exactly one of u[i+1..], v[j+1..].
  std::vector<std::size_t> dist((nu + 1) * stride, kInfinity);
  for (std::size_t i = nu + 1; i-- > 0;) {
    for (std::size_t j = nv + 1; j-- > 0;) {
      std::size_t best = kInfinity;
      for (Letter a = 1; a <= sigma && best > 1; ++a) {
        const Position pu = a <= u.sigma() ? xu.next(i, a) : kInfinity;
        const Position pv = a <= v.sigma() ? xv.next(j, a) : kInfinity;
        if ((pu == kInfinity) != (pv == kInfinity)) {
          best = 1;
        } else if (pu != kInfinity) {
          const std::size_t rest = dist[pu * stride + pv];
          if (rest != kInfinity) best = std::min(best, rest + 1);
        }
      }
      dist[i * stride + j] = best;
    }
  }
  return dist[0];
}

bool simon_congruent(const Word& u, const Word& v, std::size_t k) {
  if (k == 0) return true;
  // A k-universal word is congruent exactly to the other k-universal words.
  const std::size_t iu = universality_index(u);
  const std::size_t iv = universality_index(v);
  if (iu >= k || iv >= k) return iu >= k && iv >= k;
  const std::size_t d = shortest_distinguisher(u, v);
  return d == kInfinity || d > k;
}

}  // namespace simon
