#include "pea/cnf.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace pea::cnf {
namespace {

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

} // namespace

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula formula;
  bool header_seen = false;
  int declared_clauses = 0;
  Clause current;
  bool clause_open = false;
  int line_no = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || is_blank(line)) continue;
    if (line[0] == 'c') continue;
    if (line[0] == '%') break; // SATLIB end-of-file marker

    std::istringstream tokens(line);
    if (line[0] == 'p') {
      if (header_seen) throw DimacsError(line_no, "duplicate header");
      std::string p, fmt;
      tokens >> p >> fmt >> formula.num_vars >> declared_clauses;
      if (tokens.fail() || fmt != "cnf" || formula.num_vars < 0 ||
          declared_clauses < 0)
        throw DimacsError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      header_seen = true;
      continue;
    }
    if (!header_seen)
      throw DimacsError(line_no, "clause before 'p cnf' header");

    int lit = 0;
    while (tokens >> lit) {
      if (lit == 0) {
        if (current.empty())
          throw DimacsError(line_no, "empty clause");
        formula.clauses.push_back(current);
        current.clear();
        clause_open = false;
        continue;
      }
      const int var = std::abs(lit);
      if (var > formula.num_vars)
        throw DimacsError(line_no, "literal " + std::to_string(lit) +
                                       " out of range, num_vars=" +
                                       std::to_string(formula.num_vars));
      current.push_back({var, lit < 0});
      clause_open = true;
    }
    if (!tokens.eof())
      throw DimacsError(line_no, "non-integer token in clause");
  }

  if (!header_seen) throw DimacsError(line_no, "missing 'p cnf' header");
  if (clause_open)
    throw DimacsError(line_no, "unterminated clause (missing 0)");
  if (static_cast<int>(formula.clauses.size()) != declared_clauses)
    throw DimacsError(line_no, "clause count mismatch: header declares " +
                                   std::to_string(declared_clauses) + ", found " +
                                   std::to_string(formula.clauses.size()));
  return formula;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

bool eval_formula(const CnfFormula& formula, const Assignment& assignment) {
  if (static_cast<int>(assignment.size()) != formula.num_vars)
    throw std::invalid_argument(
        "assignment length " + std::to_string(assignment.size()) +
        " does not match num_vars " + std::to_string(formula.num_vars));
  for (const Clause& clause : formula.clauses) {
    bool satisfied = false;
    for (const Literal& lit : clause) {
      if (assignment[lit.variable - 1] != lit.negated) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

AssignmentStream::AssignmentStream(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0 || num_vars > 63)
    throw std::invalid_argument("num_vars must be in [0, 63]");
  total_ = std::uint64_t{1} << num_vars;
}

std::optional<Assignment> AssignmentStream::next() {
  if (index_ == total_) return std::nullopt;
  Assignment assignment(num_vars_);
  // Variable 1 is the most significant counter bit.
  for (int i = 0; i < num_vars_; ++i)
    assignment[i] = (index_ >> (num_vars_ - 1 - i)) & 1;
  ++index_;
  return assignment;
}

SatVerdict solve_sat(const CnfFormula& formula) {
  AssignmentStream stream(formula.num_vars);
  while (auto assignment = stream.next()) {
    if (eval_formula(formula, *assignment))
      return {true, std::move(*assignment)};
  }
  return {false, {}};
}

TautologyVerdict check_tautology(const CnfFormula& formula) {
  AssignmentStream stream(formula.num_vars);
  while (auto assignment = stream.next()) {
    if (!eval_formula(formula, *assignment))
      return {false, std::move(*assignment)};
  }
  return {true, {}};
}

namespace {

// Recursive DPLL over a partial assignment: 0 unset, 1 true, -1 false.
class Dpll {
public:
  explicit Dpll(const CnfFormula& formula)
      : formula_(formula), values_(static_cast<std::size_t>(formula.num_vars) + 1, 0) {}

  bool solve() { return search(); }

  Assignment model() const {
    Assignment assignment(formula_.num_vars);
    for (int v = 1; v <= formula_.num_vars; ++v)
      assignment[v - 1] = values_[v] > 0; // unset vars default to false
    return assignment;
  }

private:
  int lit_value(const Literal& lit) const {
    const int v = values_[lit.variable];
    return lit.negated ? -v : v;
  }

  // Returns false on conflict; appends propagated variables to trail.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Clause& clause : formula_.clauses) {
        int unassigned = 0;
        const Literal* free_lit = nullptr;
        bool satisfied = false;
        for (const Literal& lit : clause) {
          const int v = lit_value(lit);
          if (v > 0) {
            satisfied = true;
            break;
          }
          if (v == 0) {
            ++unassigned;
            free_lit = &lit;
          }
        }
        if (satisfied) continue;
        if (unassigned == 0) return false; // falsified clause
        if (unassigned == 1) {
          values_[free_lit->variable] = free_lit->negated ? -1 : 1;
          trail.push_back(free_lit->variable);
          changed = true;
        }
      }
    }
    return true;
  }

  int pick_branch_variable() const {
    for (int v = 1; v <= formula_.num_vars; ++v)
      if (values_[v] == 0) return v;
    return 0;
  }

  bool search() {
    std::vector<int> trail;
    if (!propagate(trail)) {
      for (int v : trail) values_[v] = 0;
      return false;
    }
    const int branch = pick_branch_variable();
    if (branch == 0) return true; // everything assigned, no conflict
    for (int phase : {1, -1}) {
      values_[branch] = phase;
      if (search()) return true;
      values_[branch] = 0;
    }
    for (int v : trail) values_[v] = 0;
    return false;
  }

  const CnfFormula& formula_;
  std::vector<int> values_;
};

} // namespace

SatVerdict dpll_oracle(const CnfFormula& formula) {
  Dpll dpll(formula);
  if (!dpll.solve()) return {false, {}};
  return {true, dpll.model()};
}

std::string render_witness(const SatVerdict& verdict) {
  if (!verdict.satisfiable) return "UNSAT";
  std::string out = "[";
  for (std::size_t i = 0; i < verdict.witness.size(); ++i) {
    if (i > 0) out += ", ";
    out += verdict.witness[i] ? "True" : "False";
  }
  out += "]";
  return out;
}

std::optional<SatVerdict> parse_witness_line(const std::string& line, int num_vars) {
  std::string trimmed = line;
  const auto begin = trimmed.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return std::nullopt;
  const auto end = trimmed.find_last_not_of(" \t\r\n");
  trimmed = trimmed.substr(begin, end - begin + 1);

  std::string upper = trimmed;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (upper == "UNSAT") return SatVerdict{false, {}};

  if (trimmed.size() < 2 || trimmed.front() != '[' || trimmed.back() != ']')
    return std::nullopt;
  Assignment values;
  std::string token;
  std::istringstream inner(trimmed.substr(1, trimmed.size() - 2));
  while (std::getline(inner, token, ',')) {
    std::string word;
    std::istringstream(token) >> word;
    std::transform(word.begin(), word.end(), word.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (word == "true")
      values.push_back(true);
    else if (word == "false")
      values.push_back(false);
    else
      return std::nullopt;
  }
  if (static_cast<int>(values.size()) != num_vars) return std::nullopt;
  return SatVerdict{true, std::move(values)};
}

} // namespace pea::cnf
