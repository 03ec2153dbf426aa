#include "simon/signature.hpp"

#include <algorithm>

#include "simon/arch.hpp"
#include "simon/errors.hpp"
#include "simon/xranker.hpp"

namespace simon {

UniversalitySignature UniversalitySignature::empty(int sigma) {
  UniversalitySignature s;
  s.sigma = sigma;
  return s;
}

std::optional<Count> UniversalitySignature::k_at(std::size_t i) const {
  if (i < 1 || i > static_cast<std::size_t>(sigma)) throw DomainError("K index out of range");
  if (i > gamma.size()) return std::nullopt;
  return K[i - 1];
}

LetterSet UniversalitySignature::r_at(std::size_t i) const {
  if (i < 1 || i > static_cast<std::size_t>(sigma)) throw DomainError("R index out of range");
  if (i > gamma.size()) return LetterSet::full(sigma);
  return R[i - 1];
}

CompactK compact_k(const UniversalitySignature& s) {
  CompactK c;
  if (s.K.empty()) return c;
  c.k_prime = *std::max_element(s.K.begin(), s.K.end());
  c.l = static_cast<std::size_t>(std::count(s.K.begin(), s.K.end(), c.k_prime));
  return c;
}

std::vector<Count> expand_k(const CompactK& c, std::size_t gamma_length) {
  if (gamma_length == 0) {
    if (c.l != 0) throw DomainError("compact K with l > 0 for an empty gamma");
    return {};
  }
  if (c.l < 1 || c.l > gamma_length) throw DomainError("compact K: l must lie in [1, |gamma|]");
  if (c.l < gamma_length && c.k_prime < 1) {
    throw DomainError("compact K: k' - 1 would be negative");
  }
  std::vector<Count> k(gamma_length, c.k_prime);
  for (std::size_t i = c.l; i < gamma_length; ++i) k[i] = c.k_prime - 1;
  return k;
}

bool has_signature_shape(const UniversalitySignature& s) {
  if (s.K.size() != s.gamma.size() || s.R.size() != s.gamma.size()) return false;
  const LetterSet full = LetterSet::full(s.sigma);
  for (std::size_t i = 0; i < s.gamma.size(); ++i) {
    if (s.R[i] == full || s.K[i] < 0) return false;
    if (i > 0 && s.K[i] > s.K[i - 1]) return false;
  }
  if (!s.K.empty() && s.K.front() - s.K.back() > 1) return false;
  return true;
}

UniversalitySignature signature_of(const Word& w) {
  UniversalitySignature s = UniversalitySignature::empty(w.sigma());
  LetterSet seen;
  for (Letter a : w.letters()) {
    if (!seen.contains(a)) {
      seen.insert(a);
      s.gamma.push_back(a);
    }
  }
  for (Letter a : s.gamma) {
    const LetterArches la = signature_letter_arches(w, a);
    s.K.emplace_back(la.iota);
    s.R.push_back(la.rest_alph);
  }
  return s;
}

Count iota_from_signature(const UniversalitySignature& s) {
  if (!s.full_gamma()) return 0;
  return s.K.back() + 1;
}

UniversalitySignature concat_signatures(const UniversalitySignature& su,
                                        const UniversalitySignature& sv) {
  if (su.sigma != sv.sigma) throw DomainError("signatures over different alphabets");
  const LetterSet full = LetterSet::full(su.sigma);

  // prefix[j] = alph(gamma_v[1..j+1])
  std::vector<LetterSet> prefix;
  LetterSet acc;
  for (Letter a : sv.gamma) {
    acc.insert(a);
    prefix.push_back(acc);
  }
  const LetterSet alph_v = acc;

  UniversalitySignature out = UniversalitySignature::empty(su.sigma);
  out.gamma = su.gamma;
  LetterSet alph_u;
  for (std::size_t i = 0; i < su.gamma.size(); ++i) {
    alph_u.insert(su.gamma[i]);
    const LetterSet open = su.R[i];
    std::size_t j = 0;
    while (j < prefix.size() && (open | prefix[j]) != full) ++j;
    if (j < prefix.size()) {
      // The open arch closes at v's signature letter gamma_v[j+1]; from there
      // on, v's own arches after that letter take over.
      out.K.push_back(su.K[i] + 1 + sv.K[j]);
      out.R.push_back(sv.R[j]);
    } else {
      out.K.push_back(su.K[i]);
      out.R.push_back(open | alph_v);
    }
  }
  for (std::size_t j = 0; j < sv.gamma.size(); ++j) {
    if (alph_u.contains(sv.gamma[j])) continue;
    out.gamma.push_back(sv.gamma[j]);
    out.K.push_back(sv.K[j]);
    out.R.push_back(sv.R[j]);
  }
  return out;
}

UniversalitySignature signature_power(const UniversalitySignature& s, const Count& n) {
  if (n < 0) throw DomainError("negative signature power");
  UniversalitySignature result = UniversalitySignature::empty(s.sigma);
  UniversalitySignature base = s;
  Count e = n;
  while (e > 0) {
    if ((e & 1) != 0) result = concat_signatures(result, base);
    e >>= 1;
    if (e > 0) base = concat_signatures(base, base);
  }
  return result;
}

UniversalitySignature pump_signature(const UniversalitySignature& s, const Count& c) {
  if (c < 0) throw DomainError("pump count must be non-negative");
  if (!s.full_gamma()) {
    throw DomainError("pumping requires gamma to be a permutation of the whole alphabet");
  }
  UniversalitySignature out = s;
  for (auto& k : out.K) k += c;
  return out;
}

Word normalize_block(const Word& w, std::size_t t) {
  const MarginalSequence m = marginal_sequence(w);
  if (t < 1 || t + 1 >= m.terms.size()) {
    throw DomainError("marginal segment index out of range");
  }
  const Position from = m.terms[t];
  const Position to = m.terms[t + 1];
  if (from >= to) throw DomainError("marginal segment is empty");

  const Word v = w.slice(from + 1, to);
  const Letter last = v.at(v.size());
  LetterSet others = v.alph();
  others.erase(last);
  Word out = w.slice(1, from);
  for (Letter a : others.letters()) out.push_back(a);
  out.push_back(last);
  out += w.slice(to + 1, w.size());
  return out;
}

namespace {

// Shift c with s(w) = (gamma, K - c, R), if any.
std::optional<Count> matching_shift(const UniversalitySignature& target,
                                    const UniversalitySignature& found) {
  if (found.gamma != target.gamma || found.R != target.R) return std::nullopt;
  if (target.K.size() != found.K.size()) return std::nullopt;
  if (target.K.empty()) return Count(0);
  const Count c = target.K.front() - found.K.front();
  if (c < 0) return std::nullopt;
  if (c > 0 && !target.full_gamma()) return std::nullopt;
  for (std::size_t i = 0; i < target.K.size(); ++i) {
    if (target.K[i] - found.K[i] != c) return std::nullopt;
  }
  return c;
}

}  // namespace

ValidityVerdict validity_search(const UniversalitySignature& tuple, std::size_t max_len) {
  if (max_len < 1) throw DomainError("validity search length must be at least 1");
  if (tuple.K.size() != tuple.gamma.size() || tuple.R.size() != tuple.gamma.size()) {
    throw DomainError("signature tuple arrays must match |gamma|");
  }
  ValidityVerdict verdict;
  verdict.bound = max_len;
  const LetterSet gamma_set = [&] {
    LetterSet g;
    for (Letter a : tuple.gamma) g.insert(a);
    return g;
  }();
  for_each_word(tuple.sigma, max_len, [&](const Word& w) {
    if (w.alph() != gamma_set) return true;
    if (const auto c = matching_shift(tuple, signature_of(w))) {
      verdict.kind = ValidityVerdict::Kind::Valid;
      verdict.witness = w;
      verdict.shift = *c;
      return false;
    }
    return true;
  });
  return verdict;
}

}  // namespace simon
