#pragma once

#include <functional>
#include <memory>
#include <string>

#include "freefrac/ncpoly.hpp"

namespace freefrac {

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { scalar, letter, name, add, mul, neg, inv, pow };
  Kind kind = Kind::scalar;
  Rational value;        // scalar
  std::size_t letter = 0;
  std::string name;      // session binding
  long exponent = 0;     // pow
  Expr lhs, rhs;         // operands; unary nodes use lhs
  std::size_t offset = 0;  // source position
};

class ParseError : public UserError {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : UserError("parse error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := base ('^' int)?; base := rational | letter | name | '(' expr ')' | '-' base.
// Identifiers that are not letters are accepted when `is_name` says so.
Expr parse_expr(const std::string& text, const Alphabet& alphabet,
                const std::function<bool(const std::string&)>& is_name = {});

std::string print_expr(const Expr& e, const Alphabet& alphabet);

bool same_expr(const Expr& a, const Expr& b);

}  // namespace freefrac
