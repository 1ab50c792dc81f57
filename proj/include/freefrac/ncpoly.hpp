#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "freefrac/linalg.hpp"

namespace freefrac {

// Ordered, duplicate-free letter names; letter i is addressed by index i.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> letters);
  // Comma separated list, e.g. "x,y,z".
  static Alphabet parse(const std::string& csv);

  std::size_t size() const { return letters_.size(); }
  const std::string& name(std::size_t i) const { return letters_.at(i); }
  const std::vector<std::string>& letters() const { return letters_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> letters_;
};

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

// Length first, then lexicographic in the session letter order.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

std::string word_str(const Word& w, const Alphabet& a);

class NcPoly {
 public:
  using Terms = std::map<Word, Rational, ShortLex>;

  NcPoly() = default;
  static NcPoly constant(const Rational& c);
  static NcPoly monomial(const Word& w, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  Rational coeff(const Word& w) const;
  void add_term(const Word& w, const Rational& c);
  // Drops all terms of length > n.
  NcPoly truncated(std::size_t n) const;

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Rational& s);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator-(NcPoly a) { return a *= Rational(-1); }
  friend NcPoly operator*(NcPoly a, const Rational& s) { return a *= s; }
  friend NcPoly operator*(const Rational& s, NcPoly a) { return a *= s; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend bool operator==(const NcPoly&, const NcPoly&) = default;

  // "2*x*y*x + 6*x*z", "1/3*x - y", "0".
  std::string str(const Alphabet& a) const;

 private:
  Terms terms_;
};

NcPoly poly_add(const NcPoly& p, const NcPoly& q);
NcPoly poly_mul(const NcPoly& p, const NcPoly& q);

// Rank of the prefix/suffix coefficient matrix H[a][b] = coeff of a*b in p.
// For a polynomial this equals the dimension of a minimal linear system.
std::size_t hankel_rank(const NcPoly& p);

// One m x m matrix per letter.
struct MatrixPoint {
  std::size_t m = 0;
  std::vector<RatMatrix> values;
};

using Rng = std::mt19937_64;
Rng make_rng(std::uint64_t seed, std::uint64_t stream);

// Integer entries uniform in [-5, 5].
MatrixPoint random_point(std::size_t letters, std::size_t m, Rng& rng);

RatMatrix poly_eval(const NcPoly& p, const MatrixPoint& pt);

}  // namespace freefrac
