#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "freefrac/expr.hpp"
#include "freefrac/factor.hpp"

namespace freefrac {

struct Settings {
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  bool trace = false;
};

// Dimension of every compound subexpression in build order.
struct BuildStep {
  std::string expr;
  std::size_t dim = 0;
};

class Session {
 public:
  explicit Session(Alphabet alphabet, Settings settings = {});

  const Alphabet& alphabet() const { return alphabet_; }
  const Settings& settings() const { return settings_; }
  Settings& settings() { return settings_; }

  Expr parse(const std::string& text) const;
  // Bottom-up construction, minimizing after every node. Throws UserError
  // naming the subexpression when an inverse of zero is requested.
  Als build(const Expr& e);
  Als build(const std::string& text) { return build(parse(text)); }

  // Rebinding a name creates a new entry; earlier results are unaffected.
  void bind(const std::string& name, Als value);
  bool has_binding(const std::string& name) const { return bindings_.count(name) > 0; }

  const std::vector<BuildStep>& steps() const { return steps_; }
  const Trace& trace() const { return trace_; }
  void clear_log();

 private:
  Als node(const Expr& e);
  Als finish(const Expr& e, const Als& raw);
  Als multiply(const Als& f, const Als& g);
  Als invert_element(const Expr& e, const Als& f);

  Alphabet alphabet_;
  Settings settings_;
  std::map<std::string, Als> bindings_;
  std::vector<BuildStep> steps_;
  Trace trace_;
};

struct CommandResult {
  int exit_code = 0;  // 0 success, 1 user error, 2 internal invariant failure
};

// One command line: rank, equal, factor, expand, eval, show, export, import,
// let, help. Output goes to `out`, diagnostics to `err`.
CommandResult run_command(Session& s, const std::string& line, std::ostream& out,
                          std::ostream& err);

}  // namespace freefrac
