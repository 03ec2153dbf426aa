#pragma once

#include <cstddef>
#include <set>

#include "simon/alphabet.hpp"

namespace simon {

// Subseq_k(w): all subsequences of w of length at most k. Exhaustive, so only
// meant as a desk-scale oracle.
struct SubseqSet {
  std::size_t k = 0;
  std::set<Word> members;

  bool contains(const Word& u) const { return members.count(u) != 0; }
  bool operator==(const SubseqSet& o) const { return k == o.k && members == o.members; }
};

struct SubseqCaps {
  std::size_t max_word_length = 16;
  std::size_t max_k = 6;
};

// Throws CapExceeded when |w| or k exceeds `caps`.
SubseqSet subseq_set(const Word& w, std::size_t k, const SubseqCaps& caps = {});

// Length of a shortest word that is a subsequence of exactly one of u, v;
// kInfinity when u = v. Hence u ~_k v iff shortest_distinguisher(u, v) > k.
// O(|u| |v| sigma) time.
std::size_t shortest_distinguisher(const Word& u, const Word& v);

bool simon_congruent(const Word& u, const Word& v, std::size_t k);

}  // namespace simon
