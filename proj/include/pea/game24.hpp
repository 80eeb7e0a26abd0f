#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pea::g24 {

/// Exact rational in canonical form: gcd(|num|, den) == 1, den >= 1.
/// Arithmetic is overflow-checked; exceeding 64-bit range throws
/// RationalOverflow (a fault, unlike division by zero which is a value-level
/// outcome handled at the evaluation site).
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {} // NOLINT: implicit by design
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator+(const Rational& other) const;
  Rational operator-(const Rational& other) const;
  Rational operator*(const Rational& other) const;
  /// Exact division; other must be non-zero (checked by callers).
  Rational operator/(const Rational& other) const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b);

  std::string str() const;

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

class RationalOverflow : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class BinOp { add, sub, mul, div };

char op_symbol(BinOp op);

/// Immutable expression tree; a node without children is a leaf holding a
/// Rational. Shared subtrees are fine, nothing mutates after construction.
struct ExprTree;
using ExprPtr = std::shared_ptr<const ExprTree>;

struct ExprTree {
  Rational value; // leaf only
  BinOp op = BinOp::add;
  ExprPtr left;
  ExprPtr right;
  bool is_leaf() const { return left == nullptr; }
};

ExprPtr leaf(Rational value);
ExprPtr node(BinOp op, ExprPtr left, ExprPtr right);

/// Exact value of the tree; nullopt when any division's right operand
/// evaluates to zero.
std::optional<Rational> eval_expr(const ExprTree& tree);

/// Leaf values in left-to-right order (the candidate's number multiset).
std::vector<Rational> leaves(const ExprTree& tree);

/// Streams every expression over four numbers: 24 leaf orderings x 5 tree
/// shapes x 4^3 operator choices = 7680 candidates, in that odometer order.
/// Duplicate input numbers yield duplicate expressions by design.
class ExpressionStream {
public:
  explicit ExpressionStream(const std::array<Rational, 4>& numbers);
  std::optional<ExprPtr> next();

private:
  std::array<Rational, 4> numbers_;
  std::array<int, 4> perm_{0, 1, 2, 3};
  bool perms_done_ = false;
  int shape_ = 0;
  int ops_ = 0; // base-4 odometer over the three operator slots
};

struct G24Verdict {
  bool found = false;
  ExprPtr expression;  // set iff found
  std::string rendered; // render(expression)
};

/// First expression in enumeration order evaluating exactly to target
/// (default 24); IMPOSSIBLE after exhausting all 7680 candidates.
/// Division-by-zero candidates are skipped.
G24Verdict solve24(const std::array<Rational, 4>& numbers,
                   const Rational& target = Rational(24));

/// Infix with minimal parentheses: a subexpression is parenthesized only
/// when precedence demands it or when it sits right of '-' or '/' at equal
/// precedence. Reparsing yields an equal-valued tree.
std::string render(const ExprTree& tree);

class ExprParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parse an infix expression over non-negative integers with + - * / and
/// parentheses (standard precedence, left associative).
ExprPtr parse_expr(const std::string& text);

/// Independent reachability oracle: repeatedly combine any two numbers with
/// any operator and recurse on the shrunken multiset. Shares no code with
/// the tree enumeration above.
bool reachable_by_pairing(std::vector<Rational> numbers, const Rational& target);

} // namespace pea::g24
