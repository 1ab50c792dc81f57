#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace freefrac {

// Exact element of the ground field. GMP keeps mpq values canonical
// (reduced, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

// Broken precondition of a library call (dimension mismatch, wrong shape).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal consistency check failed; indicates a bug, not bad input.
class InvariantFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed user input (expressions, rationals, JSON documents).
class UserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

// Accepts "p", "-p", "p/q"; throws UserError otherwise.
Rational parse_rational(std::string_view text);

inline bool is_canonical(const Rational& q) {
  if (sgn(q.get_den()) <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1 || (q == 0 && q.get_den() == 1);
}

}  // namespace freefrac
