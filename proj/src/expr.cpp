#include "freefrac/expr.hpp"

#include <cctype>
#include <limits>

namespace freefrac {

namespace {

Expr node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

Expr unary(ExprNode::Kind k, Expr x, std::size_t at) {
  ExprNode n;
  n.kind = k;
  n.lhs = std::move(x);
  n.offset = at;
  return node(std::move(n));
}

Expr binary(ExprNode::Kind k, Expr l, Expr r, std::size_t at) {
  ExprNode n;
  n.kind = k;
  n.lhs = std::move(l);
  n.rhs = std::move(r);
  n.offset = at;
  return node(std::move(n));
}

class Parser {
 public:
  Parser(const std::string& text, const Alphabet& alphabet,
         const std::function<bool(const std::string&)>& is_name)
      : s_(text), alphabet_(alphabet), is_name_(is_name) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) {
      if (s_[pos_] == ')') throw ParseError(pos_, "unbalanced ')'");
      throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    }
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool digit_at(std::size_t i) const {
    return i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i]));
  }

  Expr expr() {
    Expr e = term();
    while (peek('+') || peek('-')) {
      const std::size_t at = pos_;
      const bool minus = s_[pos_++] == '-';
      Expr r = term();
      if (minus) r = unary(ExprNode::Kind::neg, std::move(r), at);
      e = binary(ExprNode::Kind::add, std::move(e), std::move(r), at);
    }
    return e;
  }

  Expr term() {
    Expr e = factor();
    while (peek('*')) {
      const std::size_t at = pos_++;
      e = binary(ExprNode::Kind::mul, std::move(e), factor(), at);
    }
    return e;
  }

  Expr factor() {
    Expr b = base();
    if (!peek('^')) return b;
    const std::size_t at = pos_++;
    skip();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (!digit_at(pos_)) throw ParseError(pos_, "expected integer exponent");
    long value = 0;
    while (digit_at(pos_)) {
      if (value > std::numeric_limits<long>::max() / 10 - 10)
        throw ParseError(start, "exponent out of range");
      value = value * 10 + (s_[pos_++] - '0');
    }
    ExprNode n;
    n.kind = ExprNode::Kind::pow;
    n.lhs = std::move(b);
    n.exponent = negative ? -value : value;
    n.offset = at;
    return node(std::move(n));
  }

  Expr base() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    const std::size_t at = pos_;
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (!peek(')')) throw ParseError(pos_, "expected ')'");
      ++pos_;
      return e;
    }
    if (c == '-') {
      ++pos_;
      Expr b = base();
      if (b->kind == ExprNode::Kind::scalar && b->offset == at + 1 && b->value > 0) {
        // Signed literal.
        ExprNode n = *b;
        n.value = -n.value;
        n.offset = at;
        return node(std::move(n));
      }
      return unary(ExprNode::Kind::neg, std::move(b), at);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (c == ')') throw ParseError(pos_, "unbalanced ')'");
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  Expr rational() {
    const std::size_t at = pos_;
    while (digit_at(pos_)) ++pos_;
    std::string text = s_.substr(at, pos_ - at);
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      if (!digit_at(pos_)) throw ParseError(pos_, "malformed rational: expected denominator");
      const std::size_t d = pos_;
      while (digit_at(pos_)) ++pos_;
      const std::string den = s_.substr(d, pos_ - d);
      if (den.find_first_not_of('0') == std::string::npos)
        throw ParseError(d, "malformed rational: zero denominator");
      text += "/" + den;
    }
    if (pos_ < s_.size() && (s_[pos_] == '.' || std::isalpha(static_cast<unsigned char>(s_[pos_]))))
      throw ParseError(pos_, "malformed rational");
    ExprNode n;
    n.kind = ExprNode::Kind::scalar;
    n.value = Rational(text, 10);
    n.value.canonicalize();
    n.offset = at;
    return node(std::move(n));
  }

  Expr identifier() {
    const std::size_t at = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    const std::string id = s_.substr(at, pos_ - at);
    ExprNode n;
    n.offset = at;
    if (auto l = alphabet_.index_of(id)) {
      n.kind = ExprNode::Kind::letter;
      n.letter = *l;
    } else if (is_name_ && is_name_(id)) {
      n.kind = ExprNode::Kind::name;
      n.name = id;
    } else {
      throw ParseError(at, "unknown symbol '" + id + "'");
    }
    return node(std::move(n));
  }

  const std::string& s_;
  const Alphabet& alphabet_;
  const std::function<bool(const std::string&)>& is_name_;
  std::size_t pos_ = 0;
};

enum Level { kSum = 0, kProduct = 1, kBase = 2 };

std::string print_at(const Expr& e, const Alphabet& a, Level ctx);

std::string wrap(const std::string& s, bool paren) { return paren ? "(" + s + ")" : s; }

std::string print_at(const Expr& e, const Alphabet& a, Level ctx) {
  using K = ExprNode::Kind;
  switch (e->kind) {
    case K::scalar:
      return to_string(e->value);
    case K::letter:
      return a.name(e->letter);
    case K::name:
      return e->name;
    case K::add: {
      std::string s = print_at(e->lhs, a, kSum);
      if (e->rhs->kind == K::neg)
        s += " - " + print_at(e->rhs->lhs, a, kProduct);
      else
        s += " + " + print_at(e->rhs, a, kProduct);
      return wrap(s, ctx > kSum);
    }
    case K::mul:
      return wrap(print_at(e->lhs, a, kProduct) + "*" + print_at(e->rhs, a, kBase), ctx > kProduct);
    case K::neg: {
      // '-' takes a base, so a power under it needs parentheses.
      const bool power = e->lhs->kind == K::pow || e->lhs->kind == K::inv;
      return "-" + wrap(print_at(e->lhs, a, kBase), power);
    }
    case K::inv:
    case K::pow: {
      const Expr& b = e->lhs;
      const bool atomic = b->kind == K::letter || b->kind == K::name ||
                          (b->kind == K::scalar && b->value >= 0);
      const long k = e->kind == K::inv ? -1 : e->exponent;
      return wrap(print_at(b, a, kSum), !atomic) + "^" + std::to_string(k);
    }
  }
  return "?";
}

}  // namespace

Expr parse_expr(const std::string& text, const Alphabet& alphabet,
                const std::function<bool(const std::string&)>& is_name) {
  return Parser(text, alphabet, is_name).parse();
}

std::string print_expr(const Expr& e, const Alphabet& alphabet) {
  return print_at(e, alphabet, kSum);
}

bool same_expr(const Expr& a, const Expr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind) return false;
  using K = ExprNode::Kind;
  switch (a->kind) {
    case K::scalar: return a->value == b->value;
    case K::letter: return a->letter == b->letter;
    case K::name: return a->name == b->name;
    case K::pow:
      if (a->exponent != b->exponent) return false;
      break;
    default:
      break;
  }
  return same_expr(a->lhs, b->lhs) && same_expr(a->rhs, b->rhs);
}

}  // namespace freefrac
