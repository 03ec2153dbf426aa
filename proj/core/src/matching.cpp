#include "simon/matching.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "simon/arch.hpp"
#include "simon/congruence.hpp"
#include "simon/errors.hpp"

namespace simon {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::size_t default_univ_image_cap(int sigma) { return 2 * static_cast<std::size_t>(sigma) + 2; }

Count congruence_image_bound(int sigma, std::size_t k) {
  // binom(k + sigma, sigma)
  Count r = 1;
  for (int i = 1; i <= sigma; ++i) {
    r *= Count(k) + i;
    r /= i;
  }
  return r;
}

const SearchCache::Tables* SearchCache::tables(int sigma, std::size_t k, std::size_t cap,
                                               std::size_t state_cap) {
  const auto key = std::make_tuple(sigma, k, cap);
  if (const auto it = tables_.find(key); it != tables_.end()) return it->second.get();
  if (const auto r = refused_.find({sigma, k}); r != refused_.end() && r->second >= state_cap) {
    return nullptr;
  }
  auto t = std::make_unique<Tables>();
  try {
    t->automaton = ClassAutomaton::build(sigma, k, state_cap);
  } catch (const CapExceeded&) {
    auto& refused = refused_[{sigma, k}];
    refused = std::max(refused, state_cap);
    return nullptr;
  }
  const ClassAutomaton& a = t->automaton;
  t->covers_all = true;
  for (std::size_t q = 0; q < a.size(); ++q) {
    if (a.states()[q].depth <= cap) {
      t->candidates.push_back(q);
    } else {
      t->covers_all = false;
    }
  }
  for (std::size_t c : t->candidates) {
    std::vector<std::uint32_t> row(a.size());
    for (std::size_t q = 0; q < a.size(); ++q) {
      std::size_t r = q;
      for (Letter l : a.states()[c].representative.letters()) r = *a.transition(r, l);
      row[q] = static_cast<std::uint32_t>(r);
    }
    t->act.push_back(std::move(row));
  }
  return tables_.emplace(key, std::move(t)).first->second.get();
}

const ClassAutomaton& SearchCache::automaton(int sigma, std::size_t k, std::size_t state_cap) {
  const auto key = std::make_pair(sigma, k);
  if (const auto it = automata_.find(key); it != automata_.end()) return *it->second;
  if (const auto r = refused_.find(key); r != refused_.end() && r->second >= state_cap) {
    throw CapExceeded("class-states", state_cap, "--state-cap");
  }
  try {
    auto a = std::make_unique<ClassAutomaton>(ClassAutomaton::build(sigma, k, state_cap));
    return *automata_.emplace(key, std::move(a)).first->second;
  } catch (const CapExceeded&) {
    auto& refused = refused_[key];
    refused = std::max(refused, state_cap);
    throw;
  }
}

const ClassAutomaton& SearchCache::bounded(int sigma, std::size_t k, std::size_t max_depth,
                                           std::size_t state_cap) {
  const auto key = std::make_tuple(sigma, k, max_depth);
  if (const auto it = bounded_.find(key); it != bounded_.end()) {
    if (it->second->size() <= state_cap) return *it->second;
    throw CapExceeded("class-states", state_cap, "--state-cap");
  }
  auto a = std::make_unique<ClassAutomaton>(ClassAutomaton::build(sigma, k, state_cap, max_depth));
  return *bounded_.emplace(key, std::move(a)).first->second;
}

namespace {

struct Segment {
  bool is_var = false;
  VarId var = 0;
  Word block;
};

std::vector<Segment> segments_of(const Pattern& p) {
  std::vector<Segment> out;
  for (const Symbol& s : p.symbols()) {
    if (s.is_variable()) {
      out.push_back(Segment{true, s.var, Word(p.sigma())});
    } else {
      if (out.empty() || out.back().is_var) out.push_back(Segment{false, 0, Word(p.sigma())});
      out.back().block.push_back(s.letter);
    }
  }
  return out;
}

enum class Walk { Stopped, Exhausted, OverBudget };

// Visits tuples of candidate indices (candidates sorted by length) ordered by
// total length, then lexicographically. Stops when visit returns true.
Walk graded_tuples(const std::vector<std::size_t>& lengths, std::size_t arity,
                   std::size_t budget, std::size_t& visited,
                   const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (arity == 0) {
    ++visited;
    return visit({}) ? Walk::Stopped : Walk::Exhausted;
  }
  if (lengths.empty()) return Walk::Exhausted;
  const std::size_t max_len = lengths.back();
  std::vector<std::size_t> tuple(arity, 0);
  bool stop = false;
  bool over = false;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t remaining) {
    const std::size_t slack = (arity - i - 1) * max_len;
    for (std::size_t c = 0; c < lengths.size() && !stop && !over; ++c) {
      const std::size_t len = lengths[c];
      if (len > remaining) break;
      if (remaining - len > slack) continue;
      tuple[i] = c;
      if (i + 1 == arity) {
        if (visited >= budget) {
          over = true;
          return;
        }
        ++visited;
        if (visit(tuple)) stop = true;
      } else {
        rec(i + 1, remaining - len);
      }
    }
  };
  for (std::size_t total = 0; total <= arity * max_len && !stop && !over; ++total) rec(0, total);
  if (stop) return Walk::Stopped;
  return over ? Walk::OverBudget : Walk::Exhausted;
}

Substitution substitution_from(const std::vector<VarId>& vars, const std::vector<Word>& images,
                               std::size_t variable_count) {
  Substitution h(variable_count);
  for (std::size_t i = 0; i < vars.size(); ++i) h.set(vars[i], images[i]);
  return h;
}

std::string budget_note(std::size_t budget) {
  return "candidate budget of " + std::to_string(budget) + " substitutions exhausted";
}

// --- MatchUniv ------------------------------------------------------------

// Transducer class of a word with arch counts saturated at cap; a congruence
// for "iota(h(alpha)) = k" once cap = k + 1.
std::vector<std::uint64_t> capped_key(const ArchTransducer& t, std::uint64_t cap) {
  const std::size_t states = std::size_t{1} << t.sigma();
  std::vector<std::uint64_t> key(states);
  for (std::uint32_t s = 0; s < states; ++s) {
    const auto step = t.run(s);
    key[s] = (std::min(step.arches, cap) << 32) | step.state;
  }
  return key;
}

struct UnivCandidates {
  std::vector<Word> words;  // shortlex
  std::vector<ArchTransducer> transducers;
  bool closed = true;  // every capped class has a representative here
};

UnivCandidates univ_candidates(int sigma, std::size_t k, std::size_t cap) {
  UnivCandidates c;
  std::set<std::vector<std::uint64_t>> seen;
  const std::uint64_t sat = static_cast<std::uint64_t>(k) + 1;
  std::vector<ArchTransducer> letters;
  for (Letter a = 1; a <= sigma; ++a) letters.emplace_back(Word(sigma, {a}));

  c.words.emplace_back(sigma);
  c.transducers.push_back(ArchTransducer::identity(sigma));
  seen.insert(capped_key(c.transducers.back(), sat));
  for (std::size_t i = 0; i < c.words.size(); ++i) {
    const bool at_cap = c.words[i].size() >= cap;
    for (Letter a = 1; a <= sigma; ++a) {
      ArchTransducer t = c.transducers[i].then(letters[a - 1]);
      auto key = capped_key(t, sat);
      if (seen.count(key)) continue;
      if (at_cap) {
        c.closed = false;
        continue;
      }
      seen.insert(std::move(key));
      Word w = c.words[i];
      w.push_back(a);
      c.words.push_back(std::move(w));
      c.transducers.push_back(std::move(t));
    }
  }
  return c;
}

}  // namespace

SolverAnswer match_univ(const Pattern& alpha, std::size_t k, const SearchOptions& opts) {
  SolverAnswer ans;
  ans.method = "brute";
  const int sigma = alpha.sigma();
  const std::size_t base = universality_index(alpha.terminal_word());
  if (!alpha.has_variables()) {
    ans.complete = true;
    ans.verdict = base == k ? Verdict::Yes : Verdict::No;
    if (ans.yes()) ans.witness = Substitution(alpha.variable_count());
    ans.note = "pattern has no variables";
    return ans;
  }
  if (base > k) {
    ans.complete = true;
    ans.verdict = Verdict::No;
    ans.note = "erasing every variable already gives more than k arches";
    return ans;
  }
  if (sigma > ArchTransducer::kMaxSigma) {
    throw DomainError("brute-force universality search supports at most 12 letters");
  }
  const std::size_t cap = opts.image_cap.value_or(default_univ_image_cap(sigma));
  ans.bound_used = cap;

  const UnivCandidates cands = univ_candidates(sigma, k, cap);
  std::vector<std::size_t> lengths;
  for (const Word& w : cands.words) lengths.push_back(w.size());

  const std::vector<VarId> vars = alpha.variables();
  std::vector<std::size_t> slot(alpha.variable_count(), 0);
  for (std::size_t i = 0; i < vars.size(); ++i) slot[vars[i]] = i;

  struct Piece {
    bool is_var;
    std::size_t slot;
    ArchTransducer t;
  };
  std::vector<Piece> pieces;
  for (const Segment& s : segments_of(alpha)) {
    if (s.is_var) {
      pieces.push_back(Piece{true, slot[s.var], {}});
    } else {
      pieces.push_back(Piece{false, 0, ArchTransducer(s.block)});
    }
  }

  std::optional<std::vector<std::size_t>> found;
  std::size_t visited = 0;
  const Walk walk = graded_tuples(
      lengths, vars.size(), opts.max_candidates, visited, [&](const std::vector<std::size_t>& t) {
        std::uint64_t arches = 0;
        std::uint32_t state = 0;
        for (const Piece& p : pieces) {
          const auto step = p.is_var ? cands.transducers[t[p.slot]].run(state) : p.t.run(state);
          arches += step.arches;
          if (arches > k) return false;
          state = step.state;
        }
        if (arches != k) return false;
        found = t;
        return true;
      });

  if (found) {
    std::vector<Word> images;
    for (std::size_t c : *found) images.push_back(cands.words[c]);
    ans.verdict = Verdict::Yes;
    ans.witness = substitution_from(vars, images, alpha.variable_count());
  } else if (walk == Walk::OverBudget) {
    ans.note = budget_note(opts.max_candidates);
  } else if (cands.closed) {
    ans.verdict = Verdict::No;
    ans.complete = true;
    ans.note = "every image class has a representative within the cap";
  } else {
    ans.note = "no witness with images up to length " + std::to_string(cap);
  }
  return ans;
}

// --- Congruence problems ---------------------------------------------------

namespace {

// h(alpha) ~_k rhs (and, when strict, not ~_{k+1}) where rhs is either a
// fixed word or h(beta).
struct CongruenceQuery {
  const Pattern* alpha = nullptr;
  const Pattern* beta = nullptr;  // null: compare against word
  const Word* word = nullptr;
  std::size_t k = 0;
  bool strict = false;
};

std::optional<bool> congruent_by_iota(std::uint64_t iu, std::uint64_t iv, std::size_t k) {
  if (iu >= k || iv >= k) return iu >= k && iv >= k;
  return std::nullopt;
}

bool accepts_words(const Word& x, const Word& y, std::size_t k, bool strict) {
  if (!simon_congruent(x, y, k)) return false;
  return !strict || !simon_congruent(x, y, k + 1);
}

struct SearchResult {
  std::optional<std::vector<Word>> images;
  Walk walk = Walk::Exhausted;
  bool covers_all = false;
};

std::vector<VarId> joint_variables(const CongruenceQuery& q) {
  std::vector<VarId> vars = q.alpha->variables();
  if (q.beta) {
    for (VarId x : q.beta->variables()) vars.push_back(x);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  }
  return vars;
}

std::size_t joint_variable_count(const CongruenceQuery& q) {
  return std::max(q.alpha->variable_count(), q.beta ? q.beta->variable_count() : 0);
}

SearchResult search_with_tables(const CongruenceQuery& q, const SearchCache::Tables& t,
                                std::size_t budget) {
  const ClassAutomaton& a = t.automaton;
  const std::vector<VarId> vars = joint_variables(q);
  std::vector<std::size_t> slot(joint_variable_count(q), 0);
  for (std::size_t i = 0; i < vars.size(); ++i) slot[vars[i]] = i;

  struct Piece {
    bool is_var;
    std::size_t slot;
    std::vector<std::uint32_t> act;
  };
  auto compile = [&](const Pattern& p) {
    std::vector<Piece> pieces;
    for (const Segment& s : segments_of(p)) {
      if (s.is_var) {
        pieces.push_back(Piece{true, slot[s.var], {}});
        continue;
      }
      std::vector<std::uint32_t> act(a.size());
      for (std::size_t st = 0; st < a.size(); ++st) {
        std::size_t r = st;
        for (Letter l : s.block.letters()) r = *a.transition(r, l);
        act[st] = static_cast<std::uint32_t>(r);
      }
      pieces.push_back(Piece{false, 0, std::move(act)});
    }
    return pieces;
  };
  const auto left = compile(*q.alpha);
  const auto right = q.beta ? compile(*q.beta) : std::vector<Piece>{};
  auto run = [&](const std::vector<Piece>& pieces, const std::vector<std::size_t>& tuple) {
    std::uint32_t st = 0;
    for (const Piece& p : pieces) st = p.is_var ? t.act[tuple[p.slot]][st] : p.act[st];
    return st;
  };

  // States are classes of the dedup congruence; for strict queries that is
  // ~_{k+1}, and ~_k between representatives is memoized.
  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> weak;
  auto weakly_congruent = [&](std::uint32_t x, std::uint32_t y) {
    if (x > y) std::swap(x, y);
    const auto it = weak.find({x, y});
    if (it != weak.end()) return it->second;
    const bool r = simon_congruent(a.states()[x].representative, a.states()[y].representative, q.k);
    weak.emplace(std::make_pair(x, y), r);
    return r;
  };
  const std::uint32_t target = q.word ? static_cast<std::uint32_t>(*a.run(*q.word)) : 0;
  auto accept = [&](std::uint32_t x, std::uint32_t y) {
    if (!q.strict) return x == y;
    return x != y && weakly_congruent(x, y);
  };

  std::vector<std::size_t> lengths;
  for (std::size_t c : t.candidates) lengths.push_back(a.states()[c].depth);

  SearchResult res;
  res.covers_all = t.covers_all;
  std::optional<std::vector<std::size_t>> found;
  std::size_t visited = 0;
  res.walk = graded_tuples(lengths, vars.size(), budget, visited,
                           [&](const std::vector<std::size_t>& tuple) {
                             const std::uint32_t x = run(left, tuple);
                             const std::uint32_t y = q.beta ? run(right, tuple) : target;
                             if (!accept(x, y)) return false;
                             found = tuple;
                             return true;
                           });
  if (found) {
    std::vector<Word> images;
    for (std::size_t c : *found) images.push_back(a.states()[t.candidates[c]].representative);
    res.images = std::move(images);
  }
  return res;
}

SearchResult search_materialized(const CongruenceQuery& q, std::size_t cap,
                                 const SearchOptions& opts, SearchCache& cache) {
  const int sigma = q.alpha->sigma();
  const std::size_t dedup_k = q.strict ? q.k + 1 : q.k;
  const ClassAutomaton& classes = cache.bounded(sigma, dedup_k, cap, opts.state_cap);
  std::vector<Word> cands;
  std::vector<std::size_t> lengths;
  for (const auto& s : classes.states()) {
    cands.push_back(s.representative);
    lengths.push_back(s.depth);
  }
  const std::vector<VarId> vars = joint_variables(q);
  std::vector<std::size_t> slot(joint_variable_count(q), 0);
  for (std::size_t i = 0; i < vars.size(); ++i) slot[vars[i]] = i;

  // Universality indices through arch transducers decide most comparisons
  // without building the images.
  const bool use_iota = sigma <= ArchTransducer::kMaxSigma;
  struct Piece {
    bool is_var;
    std::size_t slot;
    ArchTransducer t;
  };
  std::vector<ArchTransducer> cand_t;
  auto compile = [&](const Pattern& p) {
    std::vector<Piece> pieces;
    for (const Segment& s : segments_of(p)) {
      if (s.is_var) {
        pieces.push_back(Piece{true, slot[s.var], {}});
      } else {
        pieces.push_back(Piece{false, 0, use_iota ? ArchTransducer(s.block) : ArchTransducer{}});
      }
    }
    return pieces;
  };
  std::vector<Piece> left;
  std::vector<Piece> right;
  if (use_iota) {
    for (const Word& c : cands) cand_t.emplace_back(c);
    left = compile(*q.alpha);
    if (q.beta) right = compile(*q.beta);
  }
  // Saturated at k + 1: both congruence decisions only compare against k and
  // k + 1.
  const std::uint64_t saturate = static_cast<std::uint64_t>(q.k) + 1;
  auto iota_of = [&](const std::vector<Piece>& pieces, const std::vector<std::size_t>& tuple) {
    std::uint64_t arches = 0;
    std::uint32_t state = 0;
    for (const Piece& p : pieces) {
      const auto step = p.is_var ? cand_t[tuple[p.slot]].run(state) : p.t.run(state);
      arches += step.arches;
      if (arches >= saturate) return saturate;
      state = step.state;
    }
    return arches;
  };
  // A side's value depends only on the slots it mentions; memoize it by
  // their projection when that table is small.
  struct SideMemo {
    std::vector<std::size_t> slots;
    std::vector<std::uint64_t> value;  // kUnset until computed
  };
  constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  constexpr std::size_t kMemoLimit = std::size_t{1} << 22;
  auto make_memo = [&](const std::vector<Piece>& pieces) {
    SideMemo m;
    for (const Piece& p : pieces) {
      if (p.is_var) m.slots.push_back(p.slot);
    }
    std::sort(m.slots.begin(), m.slots.end());
    m.slots.erase(std::unique(m.slots.begin(), m.slots.end()), m.slots.end());
    std::size_t size = 1;
    for (std::size_t i = 0; i < m.slots.size() && size <= kMemoLimit; ++i) size *= cands.size();
    if (size <= kMemoLimit && m.slots.size() < vars.size()) m.value.assign(size, kUnset);
    return m;
  };
  SideMemo left_memo;
  SideMemo right_memo;
  auto side_iota = [&](const std::vector<Piece>& pieces, SideMemo& m,
                       const std::vector<std::size_t>& tuple) {
    if (m.value.empty()) return iota_of(pieces, tuple);
    std::size_t index = 0;
    for (std::size_t s : m.slots) index = index * cands.size() + tuple[s];
    if (m.value[index] == kUnset) m.value[index] = iota_of(pieces, tuple);
    return m.value[index];
  };
  if (use_iota) {
    left_memo = make_memo(left);
    right_memo = make_memo(right);
  }
  const std::uint64_t word_iota = q.word ? universality_index(*q.word) : 0;

  auto substitution = [&](const std::vector<std::size_t>& tuple) {
    Substitution h(joint_variable_count(q));
    for (std::size_t i = 0; i < vars.size(); ++i) h.set(vars[i], cands[tuple[i]]);
    return h;
  };

  SearchResult res;
  res.covers_all = classes.complete();
  std::optional<std::vector<std::size_t>> found;
  std::size_t visited = 0;
  res.walk = graded_tuples(
      lengths, vars.size(), opts.max_candidates, visited, [&](const std::vector<std::size_t>& tuple) {
        if (use_iota) {
          const std::uint64_t ix = side_iota(left, left_memo, tuple);
          const std::uint64_t iy = q.beta ? side_iota(right, right_memo, tuple)
                                          : std::min(word_iota, saturate);
          const auto weak = congruent_by_iota(ix, iy, q.k);
          if (weak && !*weak) return false;
          if (weak && q.strict) {
            const auto strong = congruent_by_iota(ix, iy, q.k + 1);
            if (strong) {
              if (*strong) return false;
              found = tuple;
              return true;
            }
          } else if (weak) {
            found = tuple;
            return true;
          }
        }
        const Substitution h = substitution(tuple);
        const Word x = apply(h, *q.alpha);
        const Word y = q.beta ? apply(h, *q.beta) : *q.word;
        if (!accepts_words(x, y, q.k, q.strict)) return false;
        found = tuple;
        return true;
      });
  if (found) {
    std::vector<Word> images;
    for (std::size_t c : *found) images.push_back(cands[c]);
    res.images = std::move(images);
  }
  return res;
}

SolverAnswer congruence_search(const CongruenceQuery& q, std::size_t default_cap,
                               const Count& bound, const SearchOptions& opts) {
  SolverAnswer ans;
  ans.method = "brute";
  const std::size_t cap = opts.image_cap.value_or(default_cap);
  ans.bound_used = cap;
  ans.completeness_bound = bound;

  SearchCache local;
  SearchCache& cache = opts.cache ? *opts.cache : local;
  const std::size_t dedup_k = q.strict ? q.k + 1 : q.k;
  const SearchCache::Tables* tables = cache.tables(
      q.alpha->sigma(), dedup_k, cap, std::min(opts.table_state_cap, opts.state_cap));
  const SearchResult res = tables ? search_with_tables(q, *tables, opts.max_candidates)
                                  : search_materialized(q, cap, opts, cache);

  if (res.images) {
    ans.verdict = Verdict::Yes;
    ans.witness = substitution_from(joint_variables(q), *res.images, joint_variable_count(q));
  } else if (res.walk == Walk::OverBudget) {
    ans.note = budget_note(opts.max_candidates);
  } else if (res.covers_all) {
    ans.verdict = Verdict::No;
    ans.complete = true;
    ans.note = "every congruence class has a representative within the cap";
  } else {
    ans.note = "no witness with images up to length " + std::to_string(cap);
  }
  return ans;
}

std::size_t capped_default(const Count& bound) {
  return bound < 6 ? static_cast<std::size_t>(bound) : std::size_t{6};
}

void check_same_alphabet(const Pattern& alpha, int sigma) {
  if (alpha.sigma() != sigma) throw DomainError("pattern and word over different alphabets");
}

}  // namespace

std::optional<Substitution> match_exact(const Pattern& alpha, const Word& w) {
  const auto& sym = alpha.symbols();
  const std::vector<Letter>& text = w.letters();
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> bind(alpha.variable_count());
  // Letters still needed by the remaining terminals: a cheap length bound.
  std::vector<std::size_t> min_rest(sym.size() + 1, 0);
  for (std::size_t i = sym.size(); i-- > 0;) {
    min_rest[i] = min_rest[i + 1] + (sym[i].is_variable() ? 0 : 1);
  }
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t pos) {
    if (i == sym.size()) return pos == text.size();
    if (text.size() - pos < min_rest[i]) return false;
    const Symbol& s = sym[i];
    if (!s.is_variable()) return text[pos] == s.letter && rec(i + 1, pos + 1);
    auto& b = bind[s.var];
    if (b) {
      const auto [from, len] = *b;
      if (pos + len > text.size()) return false;
      if (!std::equal(text.begin() + static_cast<std::ptrdiff_t>(from),
                      text.begin() + static_cast<std::ptrdiff_t>(from + len),
                      text.begin() + static_cast<std::ptrdiff_t>(pos))) {
        return false;
      }
      return rec(i + 1, pos + len);
    }
    for (std::size_t len = 0; pos + len + min_rest[i + 1] <= text.size(); ++len) {
      b = std::make_pair(pos, len);
      if (rec(i + 1, pos + len)) return true;
    }
    b.reset();
    return false;
  };
  if (!rec(0, 0)) return std::nullopt;
  Substitution h(alpha.variable_count());
  for (VarId x : alpha.variables()) {
    const auto [from, len] = *bind[x];
    h.set(x, w.empty() ? Word(alpha.sigma()) : w.slice(from + 1, from + len));
  }
  return h;
}

SolverAnswer match_simon(const Pattern& alpha, const Word& w, std::size_t k,
                         const SearchOptions& opts) {
  check_same_alphabet(alpha, w.sigma());
  if (k > w.size()) {
    // ~_k with k > |w| forces equality: w embeds, and any extra letter would
    // give a subsequence of length |w| + 1 <= k missing from w.
    SolverAnswer ans;
    ans.method = "exact";
    ans.complete = true;
    ans.bound_used = w.size();
    ans.witness = match_exact(alpha, w);
    ans.verdict = ans.witness ? Verdict::Yes : Verdict::No;
    ans.note = "k exceeds |w|, so only h(alpha) = w qualifies";
    return ans;
  }
  if (!alpha.has_variables()) {
    SolverAnswer ans;
    ans.method = "direct";
    ans.complete = true;
    ans.verdict = simon_congruent(alpha.terminal_word(), w, k) ? Verdict::Yes : Verdict::No;
    if (ans.yes()) ans.witness = Substitution(alpha.variable_count());
    return ans;
  }
  const Count bound = congruence_image_bound(alpha.sigma(), k);
  return congruence_search(CongruenceQuery{&alpha, nullptr, &w, k, false}, capped_default(bound),
                           bound, opts);
}

SolverAnswer match_strict_simon(const Pattern& alpha, const Word& w, std::size_t k,
                                const SearchOptions& opts) {
  check_same_alphabet(alpha, w.sigma());
  if (k > w.size()) {
    SolverAnswer ans;
    ans.method = "exact";
    ans.complete = true;
    ans.verdict = Verdict::No;
    ans.note = "k exceeds |w|: ~_k forces h(alpha) = w, which is also ~_{k+1}";
    return ans;
  }
  if (!alpha.has_variables()) {
    SolverAnswer ans;
    ans.method = "direct";
    ans.complete = true;
    ans.verdict = accepts_words(alpha.terminal_word(), w, k, true) ? Verdict::Yes : Verdict::No;
    if (ans.yes()) ans.witness = Substitution(alpha.variable_count());
    return ans;
  }
  const Count bound = congruence_image_bound(alpha.sigma(), k + 1);
  return congruence_search(CongruenceQuery{&alpha, nullptr, &w, k, true}, capped_default(bound),
                           bound, opts);
}

SolverAnswer we_simon(const Pattern& alpha, const Pattern& beta, std::size_t k,
                      const SearchOptions& opts) {
  if (alpha.sigma() != beta.sigma()) throw DomainError("patterns over different alphabets");
  const bool va = alpha.has_variables();
  const bool vb = beta.has_variables();
  if (va && vb) {
    // Both images become k-universal, and k-universal words are ~_k.
    SolverAnswer ans;
    ans.method = "universal";
    ans.complete = true;
    ans.verdict = Verdict::Yes;
    const Word u = canonical_universal(alpha.sigma(), k);
    Substitution h(std::max(alpha.variable_count(), beta.variable_count()));
    for (VarId x : alpha.variables()) h.set(x, u);
    for (VarId x : beta.variables()) h.set(x, u);
    ans.witness = std::move(h);
    ans.note = "both sides contain variables";
    return ans;
  }
  if (va) return match_simon(alpha, beta.terminal_word(), k, opts);
  if (vb) return match_simon(beta, alpha.terminal_word(), k, opts);
  SolverAnswer ans;
  ans.method = "direct";
  ans.complete = true;
  ans.verdict =
      simon_congruent(alpha.terminal_word(), beta.terminal_word(), k) ? Verdict::Yes : Verdict::No;
  if (ans.yes()) ans.witness = Substitution(alpha.variable_count());
  return ans;
}

SolverAnswer we_strict_simon(const Pattern& alpha, const Pattern& beta, std::size_t k,
                             const SearchOptions& opts) {
  if (alpha.sigma() != beta.sigma()) throw DomainError("patterns over different alphabets");
  const bool va = alpha.has_variables();
  const bool vb = beta.has_variables();
  if (!va && !vb) {
    SolverAnswer ans;
    ans.method = "direct";
    ans.complete = true;
    ans.verdict = accepts_words(alpha.terminal_word(), beta.terminal_word(), k, true)
                      ? Verdict::Yes
                      : Verdict::No;
    if (ans.yes()) ans.witness = Substitution(alpha.variable_count());
    return ans;
  }
  if (!vb) return match_strict_simon(alpha, beta.terminal_word(), k, opts);
  if (!va) return match_strict_simon(beta, alpha.terminal_word(), k, opts);

  const Count bound = congruence_image_bound(alpha.sigma(), k + 1);
  SolverAnswer ans = congruence_search(CongruenceQuery{&alpha, &beta, nullptr, k, true},
                                       capped_default(bound), bound, opts);
  if (ans.no() && k > alpha.size() + beta.size()) {
    ans.verdict = Verdict::Unknown;
    ans.complete = false;
    ans.note = "k exceeds |alpha| + |beta|; negative answers are not claimed there";
  }
  return ans;
}

}  // namespace simon
