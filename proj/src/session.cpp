#include "freefrac/session.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include "freefrac/json_io.hpp"

namespace freefrac {

Session::Session(Alphabet alphabet, Settings settings)
    : alphabet_(std::move(alphabet)), settings_(settings) {}

Expr Session::parse(const std::string& text) const {
  return parse_expr(text, alphabet_, [this](const std::string& n) { return has_binding(n); });
}

void Session::bind(const std::string& name, Als value) {
  if (alphabet_.index_of(name)) throw UserError("'" + name + "' is a letter");
  if (value.letters() != alphabet_.size()) throw UserError("alphabet mismatch");
  bindings_.insert_or_assign(name, std::move(value));
}

void Session::clear_log() {
  steps_.clear();
  trace_.lines.clear();
}

Als Session::build(const Expr& e) { return node(e); }

Als Session::finish(const Expr& e, const Als& raw) {
  Minimized m = minimize(raw, settings_.trace ? &trace_ : nullptr);
  steps_.push_back({print_expr(e, alphabet_), m.als.dim()});
  return m.als;
}

namespace {

std::optional<Rational> scalar_value(const Als& f) {
  if (f.dim() != 1 || !f.matrix().entry_constant(0, 0)) return std::nullopt;
  return f.rhs()[0] / f.matrix().constant()(0, 0);
}

}  // namespace

Als Session::multiply(const Als& f, const Als& g) {
  const std::size_t d = alphabet_.size();
  if (f.is_zero_system() || g.is_zero_system()) return Als::zero(d);
  if (auto c = scalar_value(f)) return als_scale(g, *c);
  if (auto c = scalar_value(g)) return als_scale(f, *c);
  if (is_polynomial_shape(f) && is_polynomial_shape(g)) return poly_mul_minimal(f, g);
  if (g.dim() >= 2 && detect_type(g).right)
    return als_mul_type1(standardize(f), canonicalize_for_inverse(g, {true, false}));
  return als_mul(f, g);
}

Als Session::invert_element(const Expr& e, const Als& f) {
  const std::size_t d = alphabet_.size();
  if (f.is_zero_system())
    throw UserError("division by zero: '" + print_expr(e, alphabet_) + "' is zero");
  if (auto c = scalar_value(f)) return Als::scalar(1 / *c, d);
  const Minimized m = minimize(f);
  if (m.certified && m.als.dim() >= 2) {
    const ElementType t = detect_type(m.als);
    if (auto c = try_canonicalize_for_inverse(m.als, t)) return minimal_inverse(*c, t);
  }
  return als_inv(m.als);
}

Als Session::node(const Expr& e) {
  using K = ExprNode::Kind;
  const std::size_t d = alphabet_.size();
  switch (e->kind) {
    case K::scalar:
      return Als::scalar(e->value, d);
    case K::letter:
      return als_monomial({static_cast<Letter>(e->letter)}, d);
    case K::name: {
      auto it = bindings_.find(e->name);
      if (it == bindings_.end()) throw UserError("unknown name '" + e->name + "'");
      return it->second;
    }
    case K::neg:
      return finish(e, als_scale(node(e->lhs), -1));
    case K::add: {
      Als l = node(e->lhs);
      Als r = node(e->rhs);
      return finish(e, als_add(l, r));
    }
    case K::mul: {
      Als l = node(e->lhs);
      Als r = node(e->rhs);
      return finish(e, multiply(l, r));
    }
    case K::inv:
      return finish(e, invert_element(e->lhs, node(e->lhs)));
    case K::pow: {
      if (e->exponent == 0) return Als::scalar(1, d);
      Als base = node(e->lhs);
      if (e->exponent < 0) base = minimize(invert_element(e->lhs, base)).als;
      const long k = e->exponent < 0 ? -e->exponent : e->exponent;
      Als acc = base;
      for (long i = 1; i < k; ++i) acc = minimize(multiply(acc, base)).als;
      return finish(e, acc);
    }
  }
  throw InvariantFailure("unhandled expression node");
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Removes "<flag> <value>" from `rest` and returns the value.
std::optional<std::string> take_option(std::string& rest, const std::string& flag) {
  std::size_t at = 0;
  while ((at = rest.find(flag, at)) != std::string::npos) {
    const bool starts = at == 0 || std::isspace(static_cast<unsigned char>(rest[at - 1]));
    const std::size_t after = at + flag.size();
    if (starts && (after == rest.size() || std::isspace(static_cast<unsigned char>(rest[after]))))
      break;
    at = after;
  }
  if (at == std::string::npos) return std::nullopt;
  std::size_t b = rest.find_first_not_of(" \t", at + flag.size());
  if (b == std::string::npos) throw UserError(flag + " needs a value");
  std::size_t e = rest.find_first_of(" \t", b);
  if (e == std::string::npos) e = rest.size();
  std::string value = rest.substr(b, e - b);
  rest = trim(rest.substr(0, at) + " " + rest.substr(e));
  return value;
}

bool take_flag(std::string& rest, const std::string& flag) {
  std::istringstream in(rest);
  std::string word, kept;
  bool found = false;
  while (in >> word) {
    if (word == flag) {
      found = true;
      continue;
    }
    kept += (kept.empty() ? "" : " ") + word;
  }
  if (found) rest = kept;
  return found;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UserError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Als require_expr(Session& s, const std::string& text, const std::string& cmd) {
  if (text.empty()) throw UserError(cmd + ": missing expression");
  return s.build(text);
}

const char* kHelp =
    "commands:\n"
    "  rank <expr>\n"
    "  equal <expr> ; <expr> [--json]\n"
    "  factor <expr>\n"
    "  expand <expr> --deg N\n"
    "  eval <expr> --at <point.json>\n"
    "  show <expr>\n"
    "  export <expr> [--out <file>]\n"
    "  import <file> [as <name>]\n"
    "  let <name> = <expr>\n";

void dispatch(Session& s, const std::string& cmd, std::string rest, std::ostream& out) {
  const Alphabet& a = s.alphabet();
  if (cmd == "help") {
    out << kHelp;
  } else if (cmd == "rank") {
    out << require_expr(s, rest, cmd).dim() << '\n';
  } else if (cmd == "equal") {
    const bool as_json = take_flag(rest, "--json");
    const auto semi = rest.find(';');
    if (semi == std::string::npos) throw UserError("equal: expected '<expr> ; <expr>'");
    const Als f = require_expr(s, trim(rest.substr(0, semi)), cmd);
    const Als g = require_expr(s, trim(rest.substr(semi + 1)), cmd);
    const EqualityVerdict v = equal(f, g, {s.settings().trials, 0, s.settings().seed});
    if (as_json)
      out << verdict_to_json(v, a).dump(2) << '\n';
    else
      out << verdict_str(v.result) << '\n';
  } else if (cmd == "factor") {
    const Als p = require_expr(s, rest, cmd);
    if (!p.is_zero_system() && !is_polynomial_shape(p))
      throw UserError("factor: '" + rest + "' is not a polynomial");
    if (p.dim() <= 1) {
      out << poly_of(p).str(a) << "\natoms: 0 (certified)\n";
      return;
    }
    const Factorization f = factorize_atoms(p);
    for (const Als& q : f.factors) out << poly_of(q).str(a) << '\n';
    out << "atoms: " << f.factors.size() << (f.certified ? " (certified)" : " (heuristic)")
        << '\n';
  } else if (cmd == "expand") {
    const auto deg = take_option(rest, "--deg");
    if (!deg) throw UserError("expand: missing --deg N");
    std::size_t bound = 0;
    try {
      bound = std::stoul(*deg);
    } catch (const std::exception&) {
      throw UserError("expand: --deg expects a non-negative integer");
    }
    const Als f = require_expr(s, rest, cmd);
    if (!f.is_zero_system() && !invert(f.matrix().constant()))
      throw UserError("expand: element is not regular (no power series at 0)");
    out << als_expand(f, bound).terms.str(a) << '\n';
  } else if (cmd == "eval") {
    const auto path = take_option(rest, "--at");
    if (!path) throw UserError("eval: missing --at <point.json>");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(read_file(*path));
    } catch (const nlohmann::json::parse_error& e) {
      throw UserError(std::string("invalid JSON: ") + e.what());
    }
    const MatrixPoint pt = point_from_json(doc, a);
    const auto value = als_eval(require_expr(s, rest, cmd), pt);
    if (!value) throw UserError("eval: system matrix is singular at this point");
    out << value->str() << '\n';
  } else if (cmd == "show") {
    out << require_expr(s, rest, cmd).str(a);
  } else if (cmd == "export") {
    const auto path = take_option(rest, "--out");
    const std::string text = export_als(require_expr(s, rest, cmd), a);
    if (path) {
      std::ofstream file(*path);
      if (!(file << text)) throw UserError("cannot write '" + *path + "'");
    } else {
      out << text;
    }
  } else if (cmd == "import") {
    std::istringstream words(rest);
    std::string path, as, name;
    words >> path >> as >> name;
    if (path.empty()) throw UserError("import: missing file");
    if (!as.empty() && (as != "as" || !is_identifier(name)))
      throw UserError("import: expected 'import <file> [as <name>]'");
    AlsDocument doc = import_als(read_file(path));
    if (!(doc.alphabet == a)) throw UserError("import: alphabet mismatch");
    out << doc.als.str(a);
    if (!name.empty()) s.bind(name, doc.als);
  } else if (cmd == "let") {
    const auto eq = rest.find('=');
    if (eq == std::string::npos) throw UserError("let: expected 'let <name> = <expr>'");
    const std::string name = trim(rest.substr(0, eq));
    if (!is_identifier(name)) throw UserError("let: invalid name '" + name + "'");
    Als value = require_expr(s, trim(rest.substr(eq + 1)), cmd);
    const std::size_t n = value.dim();
    s.bind(name, std::move(value));
    out << name << ": rank " << n << '\n';
  } else {
    throw UserError("unknown command '" + cmd + "' (try 'help')");
  }
}

}  // namespace

CommandResult run_command(Session& s, const std::string& line, std::ostream& out,
                          std::ostream& err) {
  const std::string text = trim(line);
  if (text.empty() || text[0] == '#') return {};
  const auto space = text.find_first_of(" \t");
  const std::string cmd = text.substr(0, space);
  const std::string rest = space == std::string::npos ? "" : trim(text.substr(space));
  s.clear_log();
  std::ostringstream result;
  CommandResult status;
  try {
    dispatch(s, cmd, rest, result);
  } catch (const UserError& e) {
    err << "error: " << e.what() << '\n';
    status.exit_code = 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    status.exit_code = 2;
  }
  if (s.settings().trace)
    for (const auto& l : s.trace().lines) out << l << '\n';
  out << result.str();
  return status;
}

}  // namespace freefrac
