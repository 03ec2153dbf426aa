#include "simon/dimacs.hpp"

#include <cstdint>
#include <sstream>

#include "simon/errors.hpp"

namespace simon {

void validate(const CnfFormula& phi) {
  for (const Clause& c : phi.clauses) {
    for (const Literal& l : c) {
      if (l.var < 1 || l.var > phi.num_vars) throw DomainError("literal variable outside [1, n]");
    }
  }
}

bool satisfies(const CnfFormula& phi, const std::vector<bool>& assignment) {
  if (assignment.size() != phi.num_vars) throw DomainError("assignment size differs from n");
  for (const Clause& c : phi.clauses) {
    bool sat = false;
    for (const Literal& l : c) sat = sat || assignment[l.var - 1] == l.positive;
    if (!sat) return false;
  }
  return true;
}

std::optional<std::vector<bool>> brute_force_sat(const CnfFormula& phi) {
  if (phi.num_vars > 20) throw CapExceeded("sat-variables", 20, "--dimacs");
  std::vector<bool> a(phi.num_vars, false);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << phi.num_vars); ++bits) {
    for (std::size_t i = 0; i < phi.num_vars; ++i) a[i] = ((bits >> i) & 1) != 0;
    if (satisfies(phi, a)) return a;
  }
  return std::nullopt;
}

CnfFormula parse_dimacs(std::string_view text, const DimacsOptions& opts) {
  std::istringstream in{std::string(text)};
  std::string line;
  CnfFormula phi;
  bool header = false;
  std::size_t declared_clauses = 0;
  std::vector<Literal> pending;
  auto finish = [&] {
    if (pending.empty()) throw ParseError("empty clause in DIMACS input");
    if (pending.size() > 3) throw ParseError("clause with more than 3 literals");
    if (pending.size() < 3) {
      if (!opts.pad_duplicates) {
        throw ParseError("clause with fewer than 3 literals (use --pad-duplicates)");
      }
      while (pending.size() < 3) pending.push_back(pending.back());
    }
    phi.clauses.push_back(Clause{pending[0], pending[1], pending[2]});
    pending.clear();
  };
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c" || tok[0] == 'c' || tok == "%") continue;
    if (tok == "p") {
      std::string fmt;
      if (header || !(ls >> fmt >> phi.num_vars >> declared_clauses) || fmt != "cnf") {
        throw ParseError("malformed DIMACS header");
      }
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before the DIMACS header");
    do {
      long long v = 0;
      try {
        std::size_t used = 0;
        v = std::stoll(tok, &used);
        if (used != tok.size()) throw ParseError("bad literal '" + tok + "'");
      } catch (const std::logic_error&) {
        throw ParseError("bad literal '" + tok + "'");
      }
      if (v == 0) {
        finish();
        continue;
      }
      const auto var = static_cast<std::size_t>(v < 0 ? -v : v);
      if (var > phi.num_vars) throw ParseError("literal exceeds declared variable count");
      pending.push_back(Literal{var, v > 0});
    } while (ls >> tok);
  }
  if (!header) throw ParseError("missing DIMACS header");
  if (!pending.empty()) finish();
  if (phi.clauses.size() != declared_clauses) {
    throw ParseError("clause count differs from the DIMACS header");
  }
  return phi;
}

std::string write_dimacs(const CnfFormula& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
  for (const Clause& c : phi.clauses) {
    for (const Literal& l : c) out << (l.positive ? "" : "-") << l.var << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace simon
