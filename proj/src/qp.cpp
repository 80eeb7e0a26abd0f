#include "pea/qp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pea::qp {
namespace {

std::string describe_tuple(const QuantifiedFormula& formula,
                           std::span<const Value> tuple) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out << ", ";
    out << formula.prefix[i].variable << "=" << tuple[i].atom();
  }
  out << ")";
  return out.str();
}

std::vector<Binding> to_bindings(const QuantifiedFormula& formula,
                                 const std::vector<Value>& tuple) {
  std::vector<Binding> bindings;
  bindings.reserve(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i)
    bindings.push_back({formula.prefix[i].variable, tuple[i]});
  return bindings;
}

class BudgetExhausted {};

// Shared recursive core. budget == nullptr means unlimited; counting is per
// concrete predicate evaluation. With short_circuit off every tuple of the
// full product is visited.
class Evaluator {
public:
  Evaluator(const QuantifiedFormula& formula, bool short_circuit,
            const std::uint64_t* budget)
      : formula_(formula), short_circuit_(short_circuit), budget_(budget) {
    tuple_.resize(formula.prefix.size());
  }

  bool run() { return decide(0); }

  std::uint64_t evaluations() const { return evaluations_; }
  const std::vector<Value>& last_tuple() const { return tuple_; }
  const std::optional<std::vector<Value>>& first_true() const { return first_true_; }
  const std::optional<std::vector<Value>>& first_false() const { return first_false_; }

private:
  bool decide(std::size_t depth) {
    if (depth == formula_.prefix.size()) return evaluate_concrete();
    const BoundVariable& bound = formula_.prefix[depth];
    const bool is_exists = bound.quantifier == Quantifier::exists;
    // OR-fold for exists, AND-fold for forall; the deciding child is the
    // first true (resp. false) one in domain order.
    bool result = !is_exists;
    for (const Value& v : bound.domain.values) {
      tuple_[depth] = v;
      const bool sub = decide(depth + 1);
      if (is_exists) {
        if (sub) {
          result = true;
          if (short_circuit_) return true;
        }
      } else {
        if (!sub) {
          result = false;
          if (short_circuit_) return false;
        }
      }
    }
    return result;
  }

  bool evaluate_concrete() {
    if (budget_ && evaluations_ == *budget_) throw BudgetExhausted{};
    ++evaluations_;
    bool result = false;
    try {
      result = formula_.predicate(std::span<const Value>(tuple_));
    } catch (const std::exception& e) {
      throw PredicateError("predicate failed on tuple " +
                           describe_tuple(formula_, tuple_) + ": " + e.what());
    } catch (...) {
      throw PredicateError("predicate failed on tuple " +
                           describe_tuple(formula_, tuple_));
    }
    if (result && !first_true_) first_true_ = tuple_;
    if (!result && !first_false_) first_false_ = tuple_;
    return result;
  }

  const QuantifiedFormula& formula_;
  bool short_circuit_;
  const std::uint64_t* budget_;
  std::vector<Value> tuple_;
  std::uint64_t evaluations_ = 0;
  std::optional<std::vector<Value>> first_true_;
  std::optional<std::vector<Value>> first_false_;
};

Verdict make_verdict(const QuantifiedFormula& formula, bool valid,
                     const std::vector<Value>& deciding_tuple) {
  Verdict verdict;
  verdict.valid = valid;
  if (formula.prefix.empty()) return verdict;
  const Quantifier leading = formula.prefix.front().quantifier;
  // The last concrete evaluation agrees with the overall verdict (an OR node
  // decides true on a true child, an AND node false on a false child, and a
  // non-deciding fold ends on an agreeing child), so the final tuple is a
  // re-evaluable witness/counterexample.
  if (valid && leading == Quantifier::exists)
    verdict.witness = to_bindings(formula, deciding_tuple);
  else if (!valid && leading == Quantifier::forall)
    verdict.counterexample = to_bindings(formula, deciding_tuple);
  return verdict;
}

} // namespace

Domain make_domain(std::string name, std::initializer_list<std::int64_t> atoms) {
  Domain domain;
  domain.name = std::move(name);
  domain.values.reserve(atoms.size());
  for (std::int64_t a : atoms) domain.values.push_back(Value(a));
  return domain;
}

void validate(const QuantifiedFormula& formula) {
  if (!formula.predicate)
    throw std::invalid_argument("quantified formula has no predicate");
  std::set<std::string> names;
  for (const BoundVariable& bound : formula.prefix) {
    if (bound.variable.empty())
      throw std::invalid_argument("prefix variable name is empty");
    if (!names.insert(bound.variable).second)
      throw std::invalid_argument("duplicate prefix variable: " + bound.variable);
    if (bound.domain.values.empty())
      throw std::invalid_argument("domain '" + bound.domain.name + "' is empty");
    std::set<Value> uniq(bound.domain.values.begin(), bound.domain.values.end());
    if (uniq.size() != bound.domain.values.size())
      throw std::invalid_argument("domain '" + bound.domain.name +
                                  "' has duplicate values");
  }
}

Verdict evaluate(const QuantifiedFormula& formula) {
  validate(formula);
  Evaluator evaluator(formula, /*short_circuit=*/true, nullptr);
  const bool valid = evaluator.run();
  return make_verdict(formula, valid, evaluator.last_tuple());
}

ExhaustiveResult evaluate_exhaustive(const QuantifiedFormula& formula) {
  validate(formula);
  Evaluator evaluator(formula, /*short_circuit=*/false, nullptr);
  const bool valid = evaluator.run();
  // The exhaustive fold ends on the last tuple of the product, which need
  // not agree with the verdict; report the first agreeing concrete tuple
  // instead (one exists whenever a witness/counterexample is due).
  const auto& agreeing = valid ? evaluator.first_true() : evaluator.first_false();
  ExhaustiveResult result;
  result.verdict =
      make_verdict(formula, valid, agreeing ? *agreeing : evaluator.last_tuple());
  result.tuples_evaluated = evaluator.evaluations();
  return result;
}

std::optional<Verdict> evaluate_with_budget(const QuantifiedFormula& formula,
                                            std::uint64_t max_tuples) {
  if (max_tuples < 1) throw std::invalid_argument("max_tuples must be >= 1");
  validate(formula);
  Evaluator evaluator(formula, /*short_circuit=*/true, &max_tuples);
  try {
    const bool valid = evaluator.run();
    return make_verdict(formula, valid, evaluator.last_tuple());
  } catch (const BudgetExhausted&) {
    return std::nullopt;
  }
}

} // namespace pea::qp
