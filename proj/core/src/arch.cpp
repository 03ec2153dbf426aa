#include "simon/arch.hpp"

#include <algorithm>

#include "simon/errors.hpp"
#include "simon/xranker.hpp"

namespace simon {

namespace {

// Greedy scan of w[from..|w|] (1-based from); appends absolute arch ends.
ArchFactorization scan_arches(const Word& w, Position from) {
  ArchFactorization f;
  const LetterSet full = LetterSet::full(w.sigma());
  LetterSet open;
  Position start = from;
  for (Position p = from; p <= w.size(); ++p) {
    open.insert(w.at(p));
    if (open == full) {
      f.arch_ends.push_back(p);
      open = LetterSet();
      start = p + 1;
    }
  }
  f.rest_start = start;
  f.iota = f.arch_ends.size();
  return f;
}

}  // namespace

Word ArchFactorization::arch(const Word& w, std::size_t j) const {
  if (j < 1 || j > arch_ends.size()) throw DomainError("arch index out of range");
  const Position begin = j == 1 ? 1 : arch_ends[j - 2] + 1;
  return w.slice(begin, arch_ends[j - 1]);
}

Word ArchFactorization::rest(const Word& w) const { return w.slice(rest_start, w.size()); }

ArchFactorization arch_factorize(const Word& w) { return scan_arches(w, 1); }

std::size_t universality_index(const Word& w) { return arch_factorize(w).iota; }

LetterArches signature_letter_arches(const Word& w, Letter a) {
  const XRanker x(w);
  const Position first = a >= 1 && a <= w.sigma() ? x.next(0, a) : kInfinity;
  if (first == kInfinity) {
    throw DomainError("signature letter must occur in the word");
  }
  const ArchFactorization f = scan_arches(w, first + 1);
  LetterArches out;
  out.iota = f.iota;
  for (Position p = f.rest_start; p <= w.size(); ++p) out.rest_alph.insert(w.at(p));
  return out;
}

MarginalSequence marginal_sequence(const Word& w) {
  const int sigma = w.sigma();
  if (w.alph() != LetterSet::full(sigma)) {
    throw DomainError("marginal sequence requires every alphabet letter to occur");
  }
  const XRanker x(w);
  MarginalSequence m;
  std::vector<Position> firsts;
  for (Letter a = 1; a <= sigma; ++a) firsts.push_back(x.next(0, a));
  std::vector<Letter> order(static_cast<std::size_t>(sigma));
  for (int i = 0; i < sigma; ++i) order[static_cast<std::size_t>(i)] = static_cast<Letter>(i + 1);
  std::sort(order.begin(), order.end(),
            [&](Letter a, Letter b) { return firsts[a - 1] < firsts[b - 1]; });
  m.gamma = order;

  m.terms.push_back(0);
  std::vector<std::vector<Position>> ends;
  std::size_t rounds = 0;
  for (Letter a : m.gamma) {
    m.terms.push_back(firsts[a - 1]);
    ends.push_back(scan_arches(w, firsts[a - 1] + 1).arch_ends);
    rounds = std::max(rounds, ends.back().size());
  }
  for (std::size_t i = 0; i < rounds; ++i) {
    for (const auto& e : ends) {
      if (i < e.size()) m.terms.push_back(e[i]);
    }
  }
  m.last = w.size();
  return m;
}

ArchTransducer::ArchTransducer(const Word& w) : sigma_(w.sigma()) {
  if (sigma_ > kMaxSigma) throw DomainError("arch transducer supports at most 12 letters");
  const std::uint32_t full = LetterSet::full(sigma_).bits();
  table_.resize(std::size_t{1} << sigma_);
  for (std::uint32_t s = 0; s < table_.size(); ++s) {
    Step step{0, s};
    for (Letter a : w.letters()) {
      step.state |= std::uint32_t{1} << (a - 1);
      if (step.state == full) {
        ++step.arches;
        step.state = 0;
      }
    }
    table_[s] = step;
  }
}

ArchTransducer ArchTransducer::identity(int sigma) { return ArchTransducer(Word(sigma)); }

ArchTransducer ArchTransducer::then(const ArchTransducer& next) const {
  ArchTransducer out;
  out.sigma_ = sigma_;
  out.table_.resize(table_.size());
  for (std::size_t s = 0; s < table_.size(); ++s) {
    const Step a = table_[s];
    const Step b = next.table_[a.state];
    out.table_[s] = Step{a.arches + b.arches, b.state};
  }
  return out;
}

bool ArchTransducer::operator==(const ArchTransducer& o) const {
  if (sigma_ != o.sigma_ || table_.size() != o.table_.size()) return false;
  for (std::size_t s = 0; s < table_.size(); ++s) {
    if (table_[s].arches != o.table_[s].arches || table_[s].state != o.table_[s].state) {
      return false;
    }
  }
  return true;
}

}  // namespace simon
