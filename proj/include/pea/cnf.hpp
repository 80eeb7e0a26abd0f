#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pea::cnf {

/// One literal of a CNF clause; variables are 1-based as in DIMACS.
struct Literal {
  int variable = 0;
  bool negated = false;
  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
};

/// Truth assignment; index i holds the value of variable i+1.
using Assignment = std::vector<bool>;

struct SatVerdict {
  bool satisfiable = false;
  Assignment witness; // set iff satisfiable
};

struct TautologyVerdict {
  bool valid = false;
  Assignment counterexample; // set iff !valid
};

/// DIMACS parse failure; carries the 1-based input line.
class DimacsError : public std::runtime_error {
public:
  DimacsError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Parse DIMACS CNF: optional leading `c` comments, one `p cnf <vars>
/// <clauses>` header, zero-terminated clauses. A line starting with `%`
/// ends the input (SATLIB convention). Throws DimacsError on malformed
/// header, out-of-range literal, empty clause, or clause-count mismatch.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);

/// Conjunction over clauses of disjunction over literals. Throws
/// std::invalid_argument if the assignment length does not match num_vars.
bool eval_formula(const CnfFormula& formula, const Assignment& assignment);

/// Streams the 2^n assignments of n variables in binary counting order:
/// false < true, variable 1 most significant. n <= 63.
class AssignmentStream {
public:
  explicit AssignmentStream(int num_vars);
  std::optional<Assignment> next();
  std::uint64_t total() const { return total_; }

private:
  int num_vars_;
  std::uint64_t total_;
  std::uint64_t index_ = 0;
};

/// Brute-force SAT: first satisfying assignment in enumeration order, or
/// UNSAT after all 2^n candidates.
SatVerdict solve_sat(const CnfFormula& formula);

/// Brute-force tautology check: VALID iff every assignment satisfies the
/// formula; otherwise the first falsifying assignment in enumeration order.
TautologyVerdict check_tautology(const CnfFormula& formula);

/// Independent oracle: DPLL with unit propagation and branching. Verdict
/// agrees with solve_sat; the witness may differ but satisfies the formula.
SatVerdict dpll_oracle(const CnfFormula& formula);

/// "[True, False, ...]" for SAT, "UNSAT" otherwise (the harness answer line).
std::string render_witness(const SatVerdict& verdict);

/// Inverse of render_witness; nullopt when the line is neither a UNSAT
/// token nor a bracketed list of num_vars booleans.
std::optional<SatVerdict> parse_witness_line(const std::string& line, int num_vars);

} // namespace pea::cnf
