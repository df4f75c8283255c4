#include "dsg/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <random>
#include <sstream>

namespace dsg {

int CnfFormula::num_literals() const {
  int t = 0;
  for (const auto& c : clauses) t += static_cast<int>(c.size());
  return t;
}

namespace {

void check_clause_invariants(const std::vector<int>& clause, int num_vars,
                             int line) {
  std::vector<int> seen;
  for (int lit : clause) {
    int v = std::abs(lit);
    if (v < 1 || v > num_vars)
      throw DimacsError("literal " + std::to_string(lit) + " out of range",
                        line);
    if (std::find(seen.begin(), seen.end(), v) != seen.end())
      throw DimacsError("variable " + std::to_string(v) +
                            " repeated within a clause",
                        line);
    seen.push_back(v);
  }
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  bool have_header = false;
  int declared_clauses = 0;
  std::vector<int> current;
  int line_no = 0;
  int clause_start_line = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      if (have_header) throw DimacsError("duplicate header", line_no);
      std::istringstream hs(line);
      std::string p, fmt;
      hs >> p >> fmt >> f.num_vars >> declared_clauses;
      if (hs.fail() || fmt != "cnf" || f.num_vars < 0 || declared_clauses < 0)
        throw DimacsError("malformed header", line_no);
      have_header = true;
      continue;
    }
    if (!have_header) throw DimacsError("clause before header", line_no);
    std::istringstream ls(line);
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (current.empty())
          throw DimacsError("empty clause in input", line_no);
        check_clause_invariants(current, f.num_vars,
                                clause_start_line ? clause_start_line
                                                  : line_no);
        f.clauses.push_back(current);
        current.clear();
        clause_start_line = 0;
      } else {
        if (current.empty()) clause_start_line = line_no;
        current.push_back(lit);
      }
    }
    if (!ls.eof())
      throw DimacsError("unexpected token in clause", line_no);
  }
  if (!have_header) throw DimacsError("missing header", line_no);
  if (!current.empty())
    throw DimacsError("unterminated clause at end of input", line_no);
  if (f.num_clauses() != declared_clauses)
    throw DimacsError("header declares " + std::to_string(declared_clauses) +
                          " clauses, found " + std::to_string(f.num_clauses()),
                      line_no);
  return f;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::string write_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << " " << f.num_clauses() << "\n";
  for (const auto& c : f.clauses) {
    for (int lit : c) out << lit << " ";
    out << "0\n";
  }
  return out.str();
}

std::string ValidationIssue::describe() const {
  if (kind == ClauseTooLarge)
    return "clause " + std::to_string(index + 1) + " has " +
           std::to_string(count) + " literals (limit 3)";
  return "variable x" + std::to_string(index) + " occurs " +
         std::to_string(count) + " times (limit 3)";
}

ValidationReport validate_33(const CnfFormula& f) {
  ValidationReport rep;
  rep.occurrence_counts.assign(f.num_vars + 1, 0);
  for (int i = 0; i < f.num_clauses(); ++i) {
    const auto& c = f.clauses[i];
    if (c.size() > 3)
      rep.issues.push_back(
          {ValidationIssue::ClauseTooLarge, i, static_cast<int>(c.size())});
    for (int lit : c) rep.occurrence_counts[std::abs(lit)]++;
  }
  for (int v = 1; v <= f.num_vars; ++v)
    if (rep.occurrence_counts[v] > 3)
      rep.issues.push_back(
          {ValidationIssue::VariableTooFrequent, v, rep.occurrence_counts[v]});
  return rep;
}

bool eval_formula(const CnfFormula& f, const Assignment& a) {
  for (const auto& c : f.clauses) {
    bool sat = false;
    for (int lit : c) {
      int v = std::abs(lit);
      bool val = v < static_cast<int>(a.size()) ? a[v] : false;
      if ((lit > 0) == val) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

PreprocessOutcome preprocess_units(const CnfFormula& f) {
  PreprocessOutcome out;
  std::vector<std::vector<int>> clauses = f.clauses;
  bool changed = true;
  while (changed) {
    changed = false;
    int unit = 0;
    for (const auto& c : clauses)
      if (c.size() == 1) {
        unit = c[0];
        break;
      }
    if (unit == 0) break;
    int v = std::abs(unit);
    bool val = unit > 0;
    out.forced[v] = val;  // v is fully eliminated below, so never re-forced
    std::vector<std::vector<int>> next;
    for (const auto& c : clauses) {
      bool satisfied = false;
      std::vector<int> rest;
      for (int lit : c) {
        if (std::abs(lit) == v) {
          if ((lit > 0) == val) {
            satisfied = true;
            break;
          }
          continue;  // falsified literal dropped
        }
        rest.push_back(lit);
      }
      if (satisfied) continue;
      if (rest.empty()) {
        out.kind = PreprocessKind::TrivialNo;
        return out;
      }
      next.push_back(std::move(rest));
    }
    clauses = std::move(next);
    changed = true;
  }
  if (clauses.empty()) {
    out.kind = PreprocessKind::TrivialYes;
    out.witness.assign(f.num_vars + 1, false);
    for (const auto& [v, val] : out.forced) out.witness[v] = val;
    if (!eval_formula(f, out.witness))
      throw std::logic_error("unit propagation produced a bad witness");
    return out;
  }
  out.kind = PreprocessKind::Reduced;
  out.reduced.num_vars = f.num_vars;
  out.reduced.clauses = std::move(clauses);
  out.reduced.preprocessed = true;
  return out;
}

namespace {

bool dpll(std::vector<std::vector<int>> clauses, std::vector<int>& values) {
  // values: 0 unassigned, +1 true, -1 false
  for (;;) {
    int unit = 0;
    for (const auto& c : clauses) {
      if (c.empty()) return false;
      if (c.size() == 1) {
        unit = c[0];
        break;
      }
    }
    if (unit == 0) break;
    int v = std::abs(unit);
    values[v] = unit > 0 ? +1 : -1;
    std::vector<std::vector<int>> next;
    for (const auto& c : clauses) {
      bool satisfied = false;
      std::vector<int> rest;
      for (int lit : c) {
        if (std::abs(lit) == v) {
          if ((lit > 0) == (unit > 0)) {
            satisfied = true;
            break;
          }
          continue;
        }
        rest.push_back(lit);
      }
      if (satisfied) continue;
      if (rest.empty()) return false;
      next.push_back(std::move(rest));
    }
    clauses = std::move(next);
  }
  if (clauses.empty()) return true;
  // Branch on the first variable of a shortest clause.
  std::size_t best = 0;
  for (std::size_t i = 1; i < clauses.size(); ++i)
    if (clauses[i].size() < clauses[best].size()) best = i;
  int lit = clauses[best][0];
  for (int phase : {lit, -lit}) {
    auto branched = clauses;
    branched.push_back({phase});
    std::vector<int> saved = values;
    if (dpll(std::move(branched), values)) return true;
    values = saved;
  }
  return false;
}

}  // namespace

SatResult solve_dpll(const CnfFormula& f) {
  SatResult res;
  std::vector<int> values(f.num_vars + 1, 0);
  res.sat = dpll(f.clauses, values);
  if (res.sat) {
    res.assignment.assign(f.num_vars + 1, false);
    for (int v = 1; v <= f.num_vars; ++v) res.assignment[v] = values[v] > 0;
    if (!eval_formula(f, res.assignment))
      throw std::logic_error("DPLL returned a non-satisfying witness");
  }
  return res;
}

CnfFormula gen_random_33(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_random_33 requires n >= 2");
  std::mt19937_64 rng(seed);
  auto rnd = [&](int m) { return static_cast<int>(rng() % m); };

  CnfFormula f;
  f.num_vars = n;
  std::vector<int> occ(n + 1, 0);

  // Coverage pass: partition the variables into clauses of size 3 (with a
  // tail of 2s) so that every variable occurs.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rnd(i + 1)]);
  std::size_t pos = 0;
  while (pos < order.size()) {
    std::size_t left = order.size() - pos;
    std::size_t take = left >= 3 ? 3 : left;
    if (left == 4) take = 2;  // avoid a trailing singleton
    if (take == 1) break;     // n >= 2 makes this unreachable
    std::vector<int> clause;
    for (std::size_t i = 0; i < take; ++i) {
      int v = order[pos + i];
      clause.push_back(rnd(2) ? v : -v);
      occ[v]++;
    }
    f.clauses.push_back(std::move(clause));
    pos += take;
  }

  // Spice pass: extra clauses while occurrence budgets allow, giving a spread
  // of literal densities up to the (3,3) cap.
  int extra = rnd(n + 3);
  for (int e = 0; e < extra; ++e) {
    std::vector<int> avail;
    for (int v = 1; v <= n; ++v)
      if (occ[v] < 3) avail.push_back(v);
    std::size_t want = (rnd(100) < 70) ? 3 : 2;
    if (avail.size() < 2) break;
    if (avail.size() < want) want = avail.size();
    std::vector<int> clause;
    for (std::size_t i = 0; i < want; ++i) {
      int idx = rnd(static_cast<int>(avail.size()));
      int v = avail[idx];
      avail.erase(avail.begin() + idx);
      clause.push_back(rnd(2) ? v : -v);
      occ[v]++;
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

}  // namespace dsg
