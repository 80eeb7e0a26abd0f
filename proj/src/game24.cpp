#include "pea/game24.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

namespace pea::g24 {
namespace {

using Wide = __int128;

std::int64_t narrow(Wide value, const char* what) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min())
    throw RationalOverflow(std::string("rational overflow in ") + what);
  return static_cast<std::int64_t>(value);
}

Rational make_canonical(Wide num, Wide den, const char* what) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num, what), narrow(den, what));
}

} // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  Rational r = make_canonical(numerator, denominator, "construction");
  num_ = r.num();
  den_ = r.den();
}

Rational Rational::operator+(const Rational& other) const {
  return make_canonical(Wide(num_) * other.den_ + Wide(other.num_) * den_,
                        Wide(den_) * other.den_, "+");
}

Rational Rational::operator-(const Rational& other) const {
  return make_canonical(Wide(num_) * other.den_ - Wide(other.num_) * den_,
                        Wide(den_) * other.den_, "-");
}

Rational Rational::operator*(const Rational& other) const {
  return make_canonical(Wide(num_) * other.num_, Wide(den_) * other.den_, "*");
}

Rational Rational::operator/(const Rational& other) const {
  if (other.num_ == 0) throw std::invalid_argument("rational division by zero");
  return make_canonical(Wide(num_) * other.den_, Wide(den_) * other.num_, "/");
}

bool operator<(const Rational& a, const Rational& b) {
  return Wide(a.num_) * b.den_ < Wide(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

char op_symbol(BinOp op) {
  switch (op) {
    case BinOp::add: return '+';
    case BinOp::sub: return '-';
    case BinOp::mul: return '*';
    case BinOp::div: return '/';
  }
  return '?';
}

ExprPtr leaf(Rational value) {
  auto tree = std::make_shared<ExprTree>();
  tree->value = value;
  return tree;
}

ExprPtr node(BinOp op, ExprPtr left, ExprPtr right) {
  auto tree = std::make_shared<ExprTree>();
  tree->op = op;
  tree->left = std::move(left);
  tree->right = std::move(right);
  return tree;
}

std::optional<Rational> eval_expr(const ExprTree& tree) {
  if (tree.is_leaf()) return tree.value;
  auto lhs = eval_expr(*tree.left);
  if (!lhs) return std::nullopt;
  auto rhs = eval_expr(*tree.right);
  if (!rhs) return std::nullopt;
  switch (tree.op) {
    case BinOp::add: return *lhs + *rhs;
    case BinOp::sub: return *lhs - *rhs;
    case BinOp::mul: return *lhs * *rhs;
    case BinOp::div:
      if (rhs->is_zero()) return std::nullopt;
      return *lhs / *rhs;
  }
  return std::nullopt;
}

std::vector<Rational> leaves(const ExprTree& tree) {
  std::vector<Rational> out;
  const auto visit = [&out](const ExprTree& t, const auto& self) -> void {
    if (t.is_leaf()) {
      out.push_back(t.value);
      return;
    }
    self(*t.left, self);
    self(*t.right, self);
  };
  visit(tree, visit);
  return out;
}

namespace {

// The five binary tree shapes over leaves a,b,c,d with operator slots
// o0,o1,o2 assigned root-first, left subtree before right.
ExprPtr build_shape(int shape, const std::array<ExprPtr, 4>& l,
                    const std::array<BinOp, 3>& o) {
  switch (shape) {
    case 0: // ((a.b).c).d
      return node(o[0], node(o[1], node(o[2], l[0], l[1]), l[2]), l[3]);
    case 1: // (a.(b.c)).d
      return node(o[0], node(o[1], l[0], node(o[2], l[1], l[2])), l[3]);
    case 2: // (a.b).(c.d)
      return node(o[0], node(o[1], l[0], l[1]), node(o[2], l[2], l[3]));
    case 3: // a.((b.c).d)
      return node(o[0], l[0], node(o[1], node(o[2], l[1], l[2]), l[3]));
    case 4: // a.(b.(c.d))
      return node(o[0], l[0], node(o[1], l[1], node(o[2], l[2], l[3])));
  }
  throw std::logic_error("shape index out of range");
}

constexpr std::array<BinOp, 4> kOps = {BinOp::add, BinOp::sub, BinOp::mul,
                                       BinOp::div};

} // namespace

ExpressionStream::ExpressionStream(const std::array<Rational, 4>& numbers)
    : numbers_(numbers) {}

std::optional<ExprPtr> ExpressionStream::next() {
  if (perms_done_) return std::nullopt;

  std::array<ExprPtr, 4> ls;
  for (int i = 0; i < 4; ++i) ls[i] = leaf(numbers_[perm_[i]]);
  std::array<BinOp, 3> os;
  int code = ops_;
  for (int i = 0; i < 3; ++i) {
    os[i] = kOps[code & 3];
    code >>= 2;
  }
  ExprPtr tree = build_shape(shape_, ls, os);

  // Odometer: operators fastest, then shape, then leaf permutation.
  // Permuting positions (not values) keeps the count at 7680 even with
  // repeated input numbers.
  if (++ops_ == 64) {
    ops_ = 0;
    if (++shape_ == 5) {
      shape_ = 0;
      perms_done_ = !std::next_permutation(perm_.begin(), perm_.end());
    }
  }
  return tree;
}

G24Verdict solve24(const std::array<Rational, 4>& numbers, const Rational& target) {
  ExpressionStream stream(numbers);
  while (auto tree = stream.next()) {
    auto value = eval_expr(**tree);
    if (value && *value == target)
      return {true, *tree, render(**tree)};
  }
  return {false, nullptr, ""};
}

namespace {

int precedence(BinOp op) {
  return (op == BinOp::add || op == BinOp::sub) ? 1 : 2;
}

void render_into(const ExprTree& tree, std::string& out) {
  if (tree.is_leaf()) {
    out += tree.value.str();
    return;
  }
  const int prec = precedence(tree.op);

  const ExprTree& lhs = *tree.left;
  const bool paren_left = !lhs.is_leaf() && precedence(lhs.op) < prec;
  if (paren_left) out += '(';
  render_into(lhs, out);
  if (paren_left) out += ')';

  out += op_symbol(tree.op);

  // Right side also needs parentheses at equal precedence under the
  // non-associative operators, e.g. a-(b+c) and a/(b*c).
  const ExprTree& rhs = *tree.right;
  const bool paren_right =
      !rhs.is_leaf() &&
      (precedence(rhs.op) < prec ||
       (precedence(rhs.op) == prec && (tree.op == BinOp::sub || tree.op == BinOp::div)));
  if (paren_right) out += '(';
  render_into(rhs, out);
  if (paren_right) out += ')';
}

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr tree = expression();
    skip_space();
    if (pos_ != text_.size())
      throw ExprParseError("trailing input at offset " + std::to_string(pos_));
    return tree;
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expression() {
    ExprPtr tree = term();
    for (;;) {
      if (eat('+'))
        tree = node(BinOp::add, tree, term());
      else if (eat('-'))
        tree = node(BinOp::sub, tree, term());
      else
        return tree;
    }
  }

  ExprPtr term() {
    ExprPtr tree = factor();
    for (;;) {
      if (eat('*'))
        tree = node(BinOp::mul, tree, factor());
      else if (eat('/'))
        tree = node(BinOp::div, tree, factor());
      else
        return tree;
    }
  }

  ExprPtr factor() {
    skip_space();
    if (eat('(')) {
      ExprPtr tree = expression();
      if (!eat(')')) throw ExprParseError("expected ')'");
      return tree;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ExprParseError("expected number or '(' at offset " + std::to_string(pos_));
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<std::int32_t>::max())
        throw ExprParseError("number literal too large");
      ++pos_;
    }
    return leaf(Rational(value));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

} // namespace

std::string render(const ExprTree& tree) {
  std::string out;
  render_into(tree, out);
  return out;
}

ExprPtr parse_expr(const std::string& text) {
  return Parser(text).parse();
}

bool reachable_by_pairing(std::vector<Rational> numbers, const Rational& target) {
  if (numbers.empty()) return false;
  if (numbers.size() == 1) return numbers[0] == target;
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    for (std::size_t j = 0; j < numbers.size(); ++j) {
      if (i == j) continue;
      std::vector<Rational> rest;
      for (std::size_t k = 0; k < numbers.size(); ++k)
        if (k != i && k != j) rest.push_back(numbers[k]);
      const Rational& a = numbers[i];
      const Rational& b = numbers[j];
      std::vector<Rational> combos = {a + b, a - b, a * b};
      if (!b.is_zero()) combos.push_back(a / b);
      for (const Rational& c : combos) {
        rest.push_back(c);
        if (reachable_by_pairing(rest, target)) return true;
        rest.pop_back();
      }
    }
  }
  return false;
}

} // namespace pea::g24
