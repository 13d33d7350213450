#include "lapcoef/expr.hpp"

#include <cctype>

#include "lapcoef/errors.hpp"
#include "lapcoef/matchings.hpp"

namespace lapcoef {

struct Expr::Node {
  Kind kind;
  Rational constant;
  InvariantId invariant;
  std::vector<Expr> children;
  unsigned exponent = 0;
  std::size_t line_order = 0;
  PatternId pattern = PatternId::kP2;
};

Expr::Expr(const Rational& c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kConst;
  n->constant = c;
  n->constant.canonicalize();
  node_ = std::move(n);
}

Expr Expr::leaf(const InvariantId& id) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kLeaf;
  n->invariant = id;
  return Expr(std::move(n));
}

Expr Expr::of_subdivision(const Expr& e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kOfSubdivision;
  n->children = {e};
  return Expr(std::move(n));
}

Expr Expr::of_line(std::size_t k, const Expr& e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kOfLine;
  n->line_order = k;
  n->children = {e};
  return Expr(std::move(n));
}

Expr Expr::h_op(PatternId p, const Expr& e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kHOp;
  n->pattern = p;
  n->children = {e};
  return Expr(std::move(n));
}

namespace {

bool is_const(const Expr& e, const Rational& v) { return e.kind() == Expr::Kind::kConst && e.constant() == v; }

}  // namespace

Expr operator+(const Expr& a, const Expr& b) {
  if (a.kind() == Expr::Kind::kConst && b.kind() == Expr::Kind::kConst) return Expr(Rational(a.constant() + b.constant()));
  if (is_const(a, 0)) return b;
  if (is_const(b, 0)) return a;
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::kSum;
  n->children = {a, b};
  return Expr(std::move(n));
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.kind() == Expr::Kind::kConst && b.kind() == Expr::Kind::kConst) return Expr(Rational(a.constant() * b.constant()));
  if (is_const(a, 1)) return b;
  if (is_const(b, 1)) return a;
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::kProduct;
  n->children = {a, b};
  return Expr(std::move(n));
}

Expr operator-(const Expr& a) { return Expr(-1) * a; }

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr pow(const Expr& base, unsigned exponent) {
  if (exponent == 0) return Expr(1);
  if (exponent == 1) return base;
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::kPow;
  n->exponent = exponent;
  n->children = {base};
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const Rational& Expr::constant() const { return node_->constant; }
const InvariantId& Expr::invariant() const { return node_->invariant; }
const std::vector<Expr>& Expr::children() const { return node_->children; }
unsigned Expr::exponent() const { return node_->exponent; }
std::size_t Expr::line_order() const { return node_->line_order; }
PatternId Expr::pattern() const { return node_->pattern; }

std::string Expr::to_string() const {
  const auto& c = node_->children;
  switch (node_->kind) {
    case Kind::kConst: {
      auto s = lapcoef::to_string(node_->constant);
      return node_->constant < 0 || !is_integer(node_->constant) ? "(" + s + ")" : s;
    }
    case Kind::kLeaf: return node_->invariant.name();
    case Kind::kSum: return "(" + c[0].to_string() + " + " + c[1].to_string() + ")";
    case Kind::kProduct: return c[0].to_string() + "*" + c[1].to_string();
    case Kind::kPow: {
      auto inner = c[0].to_string();
      if (c[0].kind() == Kind::kProduct) inner = "(" + inner + ")";
      return inner + "^" + std::to_string(node_->exponent);
    }
    case Kind::kOfSubdivision: return "S(" + c[0].to_string() + ")";
    case Kind::kOfLine: return "L(" + std::to_string(node_->line_order) + ", " + c[0].to_string() + ")";
    case Kind::kHOp:
      if (node_->pattern == PatternId::kP2) return "P2(" + c[0].to_string() + ")";
      return "H(" + std::string(pattern_name(node_->pattern)) + ", " + c[0].to_string() + ")";
  }
  return "?";
}

// ---- parser ----------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression: " + msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  Expr sum() {
    Expr e = term();
    while (true) {
      if (eat("+")) {
        e = e + term();
      } else if (eat("-")) {
        e = e - term();
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = unary();
    while (true) {
      skip();
      if (s_.substr(pos_, 2) == "**") return e;
      if (eat("*")) {
        e = e * unary();
      } else if (eat("/")) {
        Expr d = unary();
        if (d.kind() != Expr::Kind::kConst || d.constant() == 0) fail("division only by non-zero constants");
        e = e * Expr(Rational(1 / d.constant()));
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (eat("-")) return -unary();
    if (eat("+")) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (eat("^") || eat("**")) return pow(base, static_cast<unsigned>(integer()));
    return base;
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected identifier");
    return std::string(s_.substr(start, pos_ - start));
  }

  Expr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (eat("(")) {
      Expr e = sum();
      expect(")");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Expr(Rational(Int(std::string(s_.substr(start, pos_ - start)))));
    }
    std::string id = identifier();
    if (!eat("(")) {
      try {
        return Expr::leaf(parse_invariant(id));
      } catch (const Error&) {
        fail("unknown identifier '" + id + "'");
      }
    }
    if (id == "S") {
      Expr e = sum();
      expect(")");
      return Expr::of_subdivision(e);
    }
    if (id == "L") {
      skip();
      std::size_t save = pos_;
      std::size_t k = 1;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        long v = integer();
        if (eat(",")) {
          k = static_cast<std::size_t>(v);
        } else {
          pos_ = save;
        }
      }
      Expr e = sum();
      expect(")");
      return Expr::of_line(k, e);
    }
    if (id == "P2") {
      Expr e = sum();
      expect(")");
      return Expr::h_op(PatternId::kP2, e);
    }
    if (id == "H") {
      auto name = identifier();
      auto p = parse_pattern(name);
      if (!p) fail("unknown pattern '" + name + "'");
      expect(",");
      Expr e = sum();
      expect(")");
      return Expr::h_op(*p, e);
    }
    // Leaf with arguments, e.g. count(C4), mij(1,3).
    std::size_t start = pos_;
    int depth = 1;
    while (pos_ < s_.size() && depth > 0) {
      if (s_[pos_] == '(') ++depth;
      if (s_[pos_] == ')') --depth;
      ++pos_;
    }
    if (depth != 0) fail("unbalanced parentheses");
    std::string args;
    for (char ch : s_.substr(start, pos_ - start - 1)) {
      if (!std::isspace(static_cast<unsigned char>(ch))) args.push_back(ch);
    }
    try {
      return Expr::leaf(parse_invariant(id + "(" + args + ")"));
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

// ---- evaluation --------------------------------------------------------------

Evaluator::Evaluator(Graph g) : g_(std::move(g)) {}

Evaluator& Evaluator::subdivision() {
  if (!subdivision_) subdivision_ = std::make_unique<Evaluator>(lapcoef::subdivision(g_));
  return *subdivision_;
}

Evaluator& Evaluator::line(std::size_t k) {
  if (k == 0) return *this;
  if (!line_) line_ = std::make_unique<Evaluator>(line_graph(g_));
  return line_->line(k - 1);
}

const CoefficientVector& Evaluator::charpoly() {
  if (!charpoly_) charpoly_ = laplacian_charpoly(g_);
  return *charpoly_;
}

const Int& Evaluator::trace(std::size_t k) {
  if (k == 0) throw PreconditionError("trace needs k >= 1");
  if (traces_.size() < k) traces_ = adjacency_traces(g_, std::max<std::size_t>(k, 6));
  return traces_[k - 1];
}

Int Evaluator::invariant(const InvariantId& id) {
  switch (id.kind) {
    case InvariantKind::kCoefficient:
    case InvariantKind::kCoefficientTop: {
      const long n = static_cast<long>(g_.order());
      const long k = id.kind == InvariantKind::kCoefficient ? id.a : n - id.a;
      if (k < 0 || k > n) throw PreconditionError("coefficient index out of range");
      return charpoly()[static_cast<std::size_t>(k)];
    }
    case InvariantKind::kWalks:
      if (id.a == 0) return Int(static_cast<unsigned long>(g_.order()));
      if (id.a < 0) throw PreconditionError("walk length must be >= 0");
      return trace(static_cast<std::size_t>(id.a));
    default:
      break;
  }
  auto it = cache_.find(id);
  if (it != cache_.end()) return it->second;
  Int v = eval_invariant(id, g_);
  cache_.emplace(id, v);
  return v;
}

Rational Evaluator::eval(const Expr& e) {
  const auto& c = e.children();
  switch (e.kind()) {
    case Expr::Kind::kConst: return e.constant();
    case Expr::Kind::kLeaf: return Rational(invariant(e.invariant()));
    case Expr::Kind::kSum: return eval(c[0]) + eval(c[1]);
    case Expr::Kind::kProduct: return eval(c[0]) * eval(c[1]);
    case Expr::Kind::kPow: {
      Rational b = eval(c[0]);
      Rational r;
      mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), e.exponent());
      mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), e.exponent());
      r.canonicalize();
      return r;
    }
    case Expr::Kind::kOfSubdivision: return subdivision().eval(c[0]);
    case Expr::Kind::kOfLine: return line(e.line_order()).eval(c[0]);
    case Expr::Kind::kHOp: return h_operator(e.pattern(), c[0], g_);
  }
  throw Error("unhandled expression node");
}

Rational eval_expr(const Expr& e, const Graph& g) { return Evaluator(g).eval(e); }

}  // namespace lapcoef
