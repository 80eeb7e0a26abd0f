#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pea::qp {

/// Opaque domain atom. Carries equality and a total order; what an atom
/// *means* is up to the predicate that consumes it.
class Value {
public:
  constexpr Value() = default;
  constexpr explicit Value(std::int64_t atom) : atom_(atom) {}
  constexpr std::int64_t atom() const { return atom_; }
  friend constexpr bool operator==(Value a, Value b) { return a.atom_ == b.atom_; }
  friend constexpr bool operator<(Value a, Value b) { return a.atom_ < b.atom_; }

private:
  std::int64_t atom_ = 0;
};

/// Finite, non-empty, duplicate-free value set. Iteration order is the
/// stored order and fixes every tie-break downstream.
struct Domain {
  std::string name;
  std::vector<Value> values;
};

Domain make_domain(std::string name, std::initializer_list<std::int64_t> atoms);

enum class Quantifier { exists, forall };

/// One prefix entry: a quantifier binding a named variable over a domain.
struct BoundVariable {
  Quantifier quantifier = Quantifier::exists;
  std::string variable;
  Domain domain;
};

/// Fully bounded quantified predicate: a quantifier prefix plus a total,
/// deterministic predicate over one value per prefix variable.
struct QuantifiedFormula {
  std::vector<BoundVariable> prefix;
  std::function<bool(std::span<const Value>)> predicate;
};

/// variable -> value entry of a reported witness/counterexample tuple.
struct Binding {
  std::string variable;
  Value value;
};

/// Truth verdict. A witness is reported iff the leading quantifier is
/// existential and the formula is valid; a counterexample iff it is
/// universal and the formula is invalid. Inner variables are completed to a
/// full tuple, so either report re-evaluates under the predicate.
struct Verdict {
  bool valid = false;
  std::vector<Binding> witness;
  std::vector<Binding> counterexample;
};

struct ExhaustiveResult {
  Verdict verdict;
  std::uint64_t tuples_evaluated = 0;
};

/// Raised when the predicate itself fails (throws) on some tuple; the
/// message names the offending tuple. Signals an ill-formed predicate, not
/// an invalid formula.
class PredicateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument unless all formula invariants hold
/// (distinct variable names, non-empty duplicate-free domains, predicate set).
void validate(const QuantifiedFormula& formula);

/// Decide the formula by recursive unraveling of the prefix: OR over the
/// domain for an existential, AND for a universal, short-circuiting on the
/// first deciding value. Deterministic given domain order.
Verdict evaluate(const QuantifiedFormula& formula);

/// Non-short-circuit twin of evaluate(): visits the full Cartesian product
/// and reports the concrete-evaluation count (the product of domain sizes).
ExhaustiveResult evaluate_exhaustive(const QuantifiedFormula& formula);

/// evaluate() with a cap on concrete predicate evaluations. Returns the
/// verdict if decided within max_tuples evaluations, nullopt (EXHAUSTED)
/// otherwise. max_tuples must be >= 1.
std::optional<Verdict> evaluate_with_budget(const QuantifiedFormula& formula,
                                            std::uint64_t max_tuples);

} // namespace pea::qp
