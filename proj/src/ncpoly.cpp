#include "freefrac/ncpoly.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace freefrac {

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw UserError("alphabet must not be empty");
  std::set<std::string> seen;
  for (const auto& l : letters_) {
    if (l.empty()) throw UserError("empty letter name");
    for (char c : l)
      if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
        throw UserError("letter names must be alphabetic: '" + l + "'");
    if (!seen.insert(l).second) throw UserError("duplicate letter '" + l + "'");
  }
}

Alphabet Alphabet::parse(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return Alphabet(std::move(out));
}

std::optional<std::size_t> Alphabet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == name) return i;
  return std::nullopt;
}

std::string word_str(const Word& w, const Alphabet& a) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += a.name(w[i]);
  }
  return s;
}

NcPoly NcPoly::constant(const Rational& c) { return monomial({}, c); }

NcPoly NcPoly::monomial(const Word& w, const Rational& c) {
  NcPoly p;
  p.add_term(w, c);
  return p;
}

int NcPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.size());
}

Rational NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

NcPoly NcPoly::truncated(std::size_t n) const {
  NcPoly out;
  for (const auto& [w, c] : terms_)
    if (w.size() <= n) out.terms_.emplace(w, c);
  return out;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  return out;
}

std::string NcPoly::str(const Alphabet& a) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational mag = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    if (w.empty()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += word_str(w, a);
    }
  }
  return s;
}

NcPoly poly_add(const NcPoly& p, const NcPoly& q) { return p + q; }
NcPoly poly_mul(const NcPoly& p, const NcPoly& q) { return p * q; }

std::size_t hankel_rank(const NcPoly& p) {
  if (p.is_zero()) return 0;
  // Rows and columns outside the prefixes/suffixes of the support are zero,
  // so restricting to them leaves the rank unchanged.
  std::set<Word, ShortLex> prefixes, suffixes;
  for (const auto& [w, c] : p.terms())
    for (std::size_t k = 0; k <= w.size(); ++k) {
      prefixes.emplace(w.begin(), w.begin() + k);
      suffixes.emplace(w.begin() + k, w.end());
    }
  std::vector<Word> rows(prefixes.begin(), prefixes.end());
  std::vector<Word> cols(suffixes.begin(), suffixes.end());
  RatMatrix h(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      Word w = rows[i];
      w.insert(w.end(), cols[j].begin(), cols[j].end());
      h(i, j) = p.coeff(w);
    }
  return rank(h);
}

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

MatrixPoint random_point(std::size_t letters, std::size_t m, Rng& rng) {
  std::uniform_int_distribution<int> dist(-5, 5);
  MatrixPoint pt{m, {}};
  for (std::size_t l = 0; l < letters; ++l) {
    RatMatrix x(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) x(i, j) = dist(rng);
    pt.values.push_back(std::move(x));
  }
  return pt;
}

RatMatrix poly_eval(const NcPoly& p, const MatrixPoint& pt) {
  RatMatrix out(pt.m, pt.m);
  for (const auto& [w, c] : p.terms()) {
    RatMatrix term = RatMatrix::identity(pt.m);
    for (Letter l : w) {
      if (l >= pt.values.size())
        throw ContractViolation("poly_eval: point does not cover the alphabet");
      term = term * pt.values[l];
    }
    out += term * c;
  }
  return out;
}

}  // namespace freefrac
