#include "simon/special.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <mutex>

#include "simon/arch.hpp"
#include "simon/congruence.hpp"
#include "simon/errors.hpp"

namespace simon {

SignatureShape shape_of(const UniversalitySignature& s) {
  SignatureShape shape;
  shape.gamma = s.gamma;
  shape.R = s.R;
  shape.l = compact_k(s).l;
  return shape;
}

UniversalitySignature with_k_prime(const SignatureShape& shape, int sigma, const Count& k_prime) {
  UniversalitySignature s = UniversalitySignature::empty(sigma);
  s.gamma = shape.gamma;
  s.R = shape.R;
  s.K = expand_k(CompactK{shape.l, k_prime}, shape.gamma.size());
  return s;
}

namespace {

// Shape with K stored relative to k': 0 for the first l entries, -1 after.
struct RelShape {
  std::vector<Letter> gamma;
  std::vector<int> rel;
  std::vector<LetterSet> R;

  auto operator<=>(const RelShape&) const = default;
};

// Shape after appending a, and the increase of k' (0 or 1). Appending a new
// letter only happens while gamma is partial, where every K entry is 0.
std::pair<RelShape, int> step(const RelShape& s, Letter a, int sigma) {
  const LetterSet full = LetterSet::full(sigma);
  RelShape out = s;
  bool fresh = true;
  for (std::size_t i = 0; i < s.gamma.size(); ++i) {
    if (s.gamma[i] == a) fresh = false;
    const LetterSet grown = s.R[i] | LetterSet::of(a);
    if (grown == full) {
      out.rel[i] = s.rel[i] + 1;
      out.R[i] = LetterSet();
    } else {
      out.R[i] = grown;
    }
  }
  if (fresh) {
    out.gamma.push_back(a);
    out.rel.push_back(0);
    out.R.push_back(LetterSet());
  }
  const int top = out.rel.empty() ? 0 : *std::max_element(out.rel.begin(), out.rel.end());
  for (int& r : out.rel) r -= top;
  return {std::move(out), top};
}

std::vector<RealizedShape> compute_shapes(int sigma) {
  struct Node {
    int dist;
    Word witness;
    bool done = false;
  };
  std::map<RelShape, Node> nodes;
  std::deque<RelShape> queue;
  std::vector<RealizedShape> out;

  const RelShape start{};
  nodes.emplace(start, Node{0, Word(sigma)});
  queue.push_back(start);
  while (!queue.empty()) {
    const RelShape cur = queue.front();
    queue.pop_front();
    Node& node = nodes.at(cur);
    if (node.done) continue;
    node.done = true;
    const int dist = node.dist;
    const Word witness = node.witness;

    RealizedShape r;
    r.shape.gamma = cur.gamma;
    r.shape.R = cur.R;
    r.shape.l = static_cast<std::size_t>(std::count(cur.rel.begin(), cur.rel.end(), 0));
    r.min_k_prime = dist;
    r.witness = witness;
    out.push_back(std::move(r));

    for (Letter a = 1; a <= sigma; ++a) {
      auto [next, w] = step(cur, a, sigma);
      const int nd = dist + w;
      auto it = nodes.find(next);
      if (it != nodes.end() && (it->second.done || it->second.dist <= nd)) continue;
      Word nw = witness;
      nw.push_back(a);
      if (it == nodes.end()) {
        nodes.emplace(next, Node{nd, std::move(nw)});
      } else {
        it->second.dist = nd;
        it->second.witness = std::move(nw);
      }
      if (w == 0) {
        queue.push_front(std::move(next));
      } else {
        queue.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::optional<VarId> once_occurring(const Pattern& alpha) {
  for (VarId x : alpha.variables()) {
    if (alpha.occurrences(x) == 1) return x;
  }
  return std::nullopt;
}

// Sets the materialized witness when every image is short enough.
void attach_witness(SolverAnswer& ans, const Pattern& alpha, std::vector<ImageSpec> images) {
  bool small = true;
  for (const ImageSpec& s : images) small = small && s.length() <= kMaterializeLimit;
  if (small) {
    Substitution h(alpha.variable_count());
    for (VarId x : alpha.variables()) h.set(x, images[x].materialize(kMaterializeLimit));
    ans.witness = std::move(h);
  }
  ans.compact_witness = std::move(images);
}

}  // namespace

std::vector<RealizedShape> realized_shapes(int sigma) {
  if (sigma < 1 || sigma > 4) throw DomainError("shape closure supports 1 to 4 letters");
  static std::mutex mu;
  static std::map<int, std::vector<RealizedShape>> cache;
  const std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(sigma);
  if (it == cache.end()) it = cache.emplace(sigma, compute_shapes(sigma)).first;
  return it->second;
}

std::optional<std::vector<Count>> solve_arch_count_system(const std::vector<Count>& coefficients,
                                                          const Count& target) {
  if (target < 0) return std::nullopt;
  if (coefficients.empty()) {
    if (target == 0) return std::vector<Count>{};
    return std::nullopt;
  }
  for (const Count& c : coefficients) {
    if (c < 1) throw DomainError("arch count coefficients must be positive");
  }
  // Any solution can trade last-coefficient multiples out of the earlier
  // entries, so entries before the last may be taken below that coefficient.
  const std::size_t p = coefficients.size();
  const Count& last = coefficients.back();
  std::vector<Count> d(p, 0);
  while (true) {
    Count used = 0;
    for (std::size_t i = 0; i + 1 < p; ++i) used += coefficients[i] * d[i];
    const Count rest = target - used;
    if (rest >= 0 && rest % last == 0) {
      d[p - 1] = rest / last;
      return d;
    }
    std::size_t i = p - 1;
    while (i > 0) {
      --i;
      if (++d[i] < last) break;
      d[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if (p == 1) return std::nullopt;
  }
}

SolverAnswer match_univ_one_occurrence(const Pattern& alpha, VarId x, const Count& k) {
  if (x >= alpha.variable_count() || alpha.occurrences(x) != 1) {
    throw DomainError("one-occurrence method needs a variable occurring exactly once");
  }
  const int sigma = alpha.sigma();
  SolverAnswer ans;
  ans.method = "one_occurrence";
  ans.complete = true;

  Word before(sigma);
  Word after(sigma);
  bool seen = false;
  for (const Symbol& s : alpha.symbols()) {
    if (s.is_variable()) {
      if (s.var == x) seen = true;
      continue;
    }
    (seen ? after : before).push_back(s.letter);
  }
  const Count base = universality_index(before + after);
  if (k < base) {
    ans.verdict = Verdict::No;
    ans.note = "erasing every variable already gives more than k arches";
    return ans;
  }
  ans.verdict = Verdict::Yes;
  std::vector<ImageSpec> images(alpha.variable_count(), ImageSpec::plain(Word(sigma)));
  if (k > base) {
    // x first closes the rest of the prefix into an arch, then adds whole
    // arches; the suffix keeps its own arches after a clean boundary.
    const ArchFactorization f = arch_factorize(before);
    const LetterSet open = f.rest(before).alph();
    ImageSpec& img = images[x];
    for (Letter a : (LetterSet::full(sigma) - open).letters()) img.head.push_back(a);
    img.period = canonical_universal(sigma, 1);
    img.reps = k - (Count(f.iota) + 1 + universality_index(after));
  }
  attach_witness(ans, alpha, std::move(images));
  return ans;
}

SolverAnswer match_univ_const_vars(const Pattern& alpha, const Count& k,
                                   const ConstVarsOptions& opts, ArchCountSystem* solved) {
  const int sigma = alpha.sigma();
  const std::vector<VarId> vars = alpha.variables();
  if (vars.size() > opts.max_variables) {
    throw CapExceeded("const-vars-variables", opts.max_variables, "--method");
  }
  if (sigma > opts.max_sigma) {
    throw CapExceeded("const-vars-alphabet", static_cast<std::size_t>(opts.max_sigma), "--method");
  }
  SolverAnswer ans;
  ans.method = "const_vars";
  ans.complete = true;

  const std::vector<RealizedShape> shapes = realized_shapes(sigma);
  std::vector<UniversalitySignature> sigs;
  for (const auto& s : shapes) sigs.push_back(with_k_prime(s.shape, sigma, s.min_k_prime));

  // Pattern as terminal-block signatures and variable slots.
  struct Piece {
    bool is_var;
    std::size_t slot;
    UniversalitySignature sig;
  };
  std::vector<std::size_t> slot(alpha.variable_count(), 0);
  for (std::size_t i = 0; i < vars.size(); ++i) slot[vars[i]] = i;
  std::vector<Piece> pieces;
  Word block(sigma);
  auto flush = [&] {
    if (!block.empty()) pieces.push_back(Piece{false, 0, signature_of(block)});
    block = Word(sigma);
  };
  for (const Symbol& s : alpha.symbols()) {
    if (s.is_variable()) {
      flush();
      pieces.push_back(Piece{true, slot[s.var], {}});
    } else {
      block.push_back(s.letter);
    }
  }
  flush();

  std::vector<std::size_t> assign(vars.size(), 0);
  auto advance = [&] {
    for (std::size_t i = assign.size(); i-- > 0;) {
      if (++assign[i] < shapes.size()) return true;
      assign[i] = 0;
    }
    return false;
  };
  std::size_t examined = 0;
  do {
    if (++examined > opts.max_assignments) {
      ans.verdict = Verdict::Unknown;
      ans.complete = false;
      ans.note = "shape assignment budget exhausted";
      return ans;
    }
    UniversalitySignature acc = UniversalitySignature::empty(sigma);
    for (const Piece& p : pieces) acc = concat_signatures(acc, p.is_var ? sigs[assign[p.slot]] : p.sig);
    const Count base = iota_from_signature(acc);
    if (base <= k) {
      ArchCountSystem sys;
      sys.target = k - base;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (shapes[assign[i]].shape.gamma.size() == static_cast<std::size_t>(sigma)) {
          sys.vars.push_back(vars[i]);
          sys.coefficients.emplace_back(alpha.occurrences(vars[i]));
        }
      }
      if (auto sol = solve_arch_count_system(sys.coefficients, sys.target)) {
        sys.solution = *sol;
        std::vector<ImageSpec> images(alpha.variable_count(), ImageSpec::plain(Word(sigma)));
        for (std::size_t i = 0; i < vars.size(); ++i) {
          const RealizedShape& rs = shapes[assign[i]];
          ImageSpec& img = images[vars[i]];
          img.tail = rs.witness;
          const auto pos = std::find(sys.vars.begin(), sys.vars.end(), vars[i]);
          if (pos != sys.vars.end()) {
            img.period = Word(sigma, rs.shape.gamma);
            img.reps = sys.solution[static_cast<std::size_t>(pos - sys.vars.begin())];
          }
        }
        ans.verdict = Verdict::Yes;
        attach_witness(ans, alpha, std::move(images));
        if (solved) *solved = std::move(sys);
        return ans;
      }
    }
  } while (advance());
  ans.verdict = Verdict::No;
  ans.note = "no shape assignment reaches k";
  return ans;
}

SolverAnswer match_simon_regular(const Pattern& alpha, const Word& w, std::size_t k, bool strict,
                                 const SearchOptions& opts) {
  if (!alpha.is_regular()) throw DomainError("automaton method needs every variable to occur once");
  if (alpha.sigma() != w.sigma()) throw DomainError("pattern and word over different alphabets");
  const int sigma = alpha.sigma();
  SearchCache local;
  SearchCache& cache = opts.cache ? *opts.cache : local;
  // For strict queries the ~_{k+1} automaton also resolves ~_k via its
  // representatives, since ~_{k+1} refines ~_k.
  const ClassAutomaton& a = cache.automaton(sigma, strict ? k + 1 : k, opts.state_cap);
  const std::size_t target = *a.run(w);
  std::vector<char> accepting(a.size(), 0);
  for (std::size_t q = 0; q < a.size(); ++q) {
    if (!strict) {
      accepting[q] = q == target;
    } else {
      accepting[q] = q != target && simon_congruent(a.states()[q].representative, w, k);
    }
  }

  // Product of pattern positions (before symbol i) with automaton states.
  const auto& sym = alpha.symbols();
  const std::size_t n = sym.size();
  const std::size_t states = a.size();
  struct Back {
    std::size_t from = kInfinity;
    Letter letter = 0;  // 0: epsilon move out of a variable
  };
  std::vector<int> dist((n + 1) * states, -1);
  std::vector<Back> back((n + 1) * states);
  std::vector<char> done((n + 1) * states, 0);
  std::deque<std::size_t> queue;
  auto id = [&](std::size_t i, std::size_t q) { return i * states + q; };
  dist[id(0, 0)] = 0;
  queue.push_back(id(0, 0));
  std::optional<std::size_t> goal;
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    if (done[cur]) continue;
    done[cur] = 1;
    const std::size_t i = cur / states;
    const std::size_t q = cur % states;
    if (i == n && accepting[q]) {
      goal = cur;
      break;
    }
    if (i == n) continue;
    auto relax = [&](std::size_t next, int d, Letter l, bool front) {
      if (done[next] || (dist[next] != -1 && dist[next] <= d)) return;
      dist[next] = d;
      back[next] = Back{cur, l};
      if (front) {
        queue.push_front(next);
      } else {
        queue.push_back(next);
      }
    };
    if (sym[i].is_variable()) {
      relax(id(i + 1, q), dist[cur], 0, true);
      for (Letter l = 1; l <= sigma; ++l) relax(id(i, *a.transition(q, l)), dist[cur] + 1, l, false);
    } else {
      // Terminals are forced; distance counts image letters only.
      relax(id(i + 1, *a.transition(q, sym[i].letter)), dist[cur], sym[i].letter, true);
    }
  }

  SolverAnswer ans;
  ans.method = "regular_automata";
  ans.complete = true;
  if (!goal) {
    ans.verdict = Verdict::No;
    ans.note = "product automaton accepts nothing";
    return ans;
  }
  std::vector<Word> images(alpha.variable_count(), Word(sigma));
  for (std::size_t cur = *goal; cur != id(0, 0);) {
    const Back b = back[cur];
    const std::size_t i = cur / states;
    // Letters read without leaving position i were read by its variable.
    if (b.letter != 0 && b.from / states == i) images[sym[i].var].push_back(b.letter);
    cur = b.from;
  }
  Substitution h(alpha.variable_count());
  for (VarId x : alpha.variables()) {
    std::vector<Letter> l = images[x].letters();
    std::reverse(l.begin(), l.end());
    h.set(x, Word(sigma, std::move(l)));
  }
  ans.verdict = Verdict::Yes;
  ans.witness = std::move(h);
  return ans;
}

Word iota_zero_shortform(const Word& v) {
  if (universality_index(v) != 0) throw DomainError("short form needs an image with iota 0");
  if (v.empty()) return v;
  // The letter whose first occurrence comes last splits v; each side keeps
  // one copy of each of its letters, in order of first occurrence.
  Position split = 1;
  LetterSet seen;
  for (Position i = 1; i <= v.size(); ++i) {
    if (!seen.contains(v.at(i))) {
      seen.insert(v.at(i));
      split = i;
    }
  }
  auto dedup = [&](const Word& part) {
    Word out(v.sigma());
    LetterSet s;
    for (Letter a : part.letters()) {
      if (!s.contains(a)) {
        s.insert(a);
        out.push_back(a);
      }
    }
    return out;
  };
  Word out = dedup(v.slice(1, split - 1));
  out.push_back(v.at(split));
  out += dedup(v.slice(split + 1, v.size()));
  return out;
}

Method parse_method(std::string_view name) {
  if (name == "auto") return Method::Auto;
  if (name == "one_occurrence") return Method::OneOccurrence;
  if (name == "const_vars") return Method::ConstVars;
  if (name == "regular_automata") return Method::RegularAutomata;
  if (name == "brute") return Method::Brute;
  throw ParseError("unknown method '" + std::string(name) + "'");
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Auto:
      return "auto";
    case Method::OneOccurrence:
      return "one_occurrence";
    case Method::ConstVars:
      return "const_vars";
    case Method::RegularAutomata:
      return "regular_automata";
    case Method::Brute:
      return "brute";
  }
  return "auto";
}

namespace {

std::size_t machine_k(const Count& k) {
  if (k < 0) throw DomainError("k must be non-negative");
  if (k > Count(std::numeric_limits<std::uint32_t>::max())) {
    throw DomainError("k too large for brute-force search");
  }
  return static_cast<std::size_t>(k);
}

}  // namespace

SolverAnswer solve_match_univ(const Pattern& alpha, const Count& k, Method method,
                              const SearchOptions& opts) {
  if (k < 0) throw DomainError("k must be non-negative");
  switch (method) {
    case Method::OneOccurrence: {
      const auto x = once_occurring(alpha);
      if (!x) throw DomainError("no variable occurs exactly once");
      return match_univ_one_occurrence(alpha, *x, k);
    }
    case Method::ConstVars:
      return match_univ_const_vars(alpha, k);
    case Method::Brute:
      return match_univ(alpha, machine_k(k), opts);
    case Method::RegularAutomata:
      throw DomainError("the automaton method applies to the Simon matching problems");
    case Method::Auto:
      break;
  }
  if (const auto x = once_occurring(alpha)) return match_univ_one_occurrence(alpha, *x, k);
  const ConstVarsOptions cv;
  if (alpha.variables().size() <= cv.max_variables && alpha.sigma() <= cv.max_sigma) {
    return match_univ_const_vars(alpha, k, cv);
  }
  return match_univ(alpha, machine_k(k), opts);
}

SolverAnswer solve_match_simon(const Pattern& alpha, const Word& w, std::size_t k, bool strict,
                               Method method, const SearchOptions& opts) {
  switch (method) {
    case Method::RegularAutomata:
      return match_simon_regular(alpha, w, k, strict, opts);
    case Method::Brute:
      return strict ? match_strict_simon(alpha, w, k, opts) : match_simon(alpha, w, k, opts);
    case Method::OneOccurrence:
    case Method::ConstVars:
      throw DomainError("this method applies to MatchUniv only");
    case Method::Auto:
      break;
  }
  if (alpha.is_regular()) {
    try {
      return match_simon_regular(alpha, w, k, strict, opts);
    } catch (const CapExceeded&) {
      // Too many classes for the automaton; fall back to bounded search.
    }
  }
  return strict ? match_strict_simon(alpha, w, k, opts) : match_simon(alpha, w, k, opts);
}

}  // namespace simon
