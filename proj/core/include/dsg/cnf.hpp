// (3,3)-SAT data model: DIMACS subset parsing/writing, unit-clause
// preprocessing, a complete DPLL oracle and a seeded instance generator.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsg {

// Clause order and literal order are preserved everywhere: the gadget
// builders index literal occurrences left to right in input order.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;  // signed 1-based variable indices
  bool preprocessed = false;

  int num_clauses() const { return static_cast<int>(clauses.size()); }
  // Total number of literal occurrences (multiset size).
  int num_literals() const;
  bool operator==(const CnfFormula& o) const {
    return num_vars == o.num_vars && clauses == o.clauses;
  }
};

struct DimacsError : std::runtime_error {
  int line;
  DimacsError(const std::string& msg, int line_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);
std::string write_dimacs(const CnfFormula& f);

struct ValidationIssue {
  enum Kind { ClauseTooLarge, VariableTooFrequent } kind;
  int index;  // clause index (0-based) or variable
  int count;  // clause size or occurrence count
  std::string describe() const;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  std::vector<int> occurrence_counts;  // indexed by variable, [1..n]
  bool ok() const { return issues.empty(); }
};

// Checks the (3,3) conditions: every clause has at most three literals and
// every variable occurs at most three times. Report-only; callers decide
// whether violations are fatal (the reductions stay correct for any <=3-CNF).
ValidationReport validate_33(const CnfFormula& f);

// index 0 unused; values for vars [1..num_vars]
using Assignment = std::vector<bool>;

bool eval_formula(const CnfFormula& f, const Assignment& a);

enum class PreprocessKind { Reduced, TrivialYes, TrivialNo };

struct PreprocessOutcome {
  PreprocessKind kind = PreprocessKind::Reduced;
  CnfFormula reduced;            // Reduced only; no unit clauses remain
  std::map<int, bool> forced;    // assignments forced by unit propagation
  Assignment witness;            // TrivialYes only; satisfies the original
};

// Exhaustive unit propagation. Satisfied clauses are deleted and falsified
// literals removed; an emptied clause yields TrivialNo, an emptied clause
// list yields TrivialYes (free variables set to false). Satisfiability is
// preserved.
PreprocessOutcome preprocess_units(const CnfFormula& f);

struct SatResult {
  bool sat = false;
  Assignment assignment;  // total assignment when sat
};

// Complete DPLL decision. A returned witness is re-checked against the input
// clause set before it leaves this function.
SatResult solve_dpll(const CnfFormula& f);

// Deterministic under (n, seed); output is strictly (3,3)-valid, every
// variable occurs at least once, and all clauses have two or three literals.
// Requires n >= 2.
CnfFormula gen_random_33(int n, std::uint64_t seed);

}  // namespace dsg
