#pragma once

// Expression parsing, job specifications and report rendering for the
// wittmod command-line tool.

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "wittmod/glmod.hpp"
#include "wittmod/weylmod.hpp"

namespace wittmod {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_spec for --help; what() is the help text.
struct HelpRequested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rational expressions in integers and named parameters: + - * / ^ ( ).
Scalar parse_scalar(const std::string& text);

/// Apoly | Alaurent | Quot | TL(s,..) | Whittaker(s,..) | Tensor(f1,..,fn).
WeylModule parse_P(const std::string& text, int n);
/// Nat | Ext(k) | Sym(k) | Triv(b), joined by '*' for tensor products.
GlModule parse_M(const std::string& text, int n);

/// Names of the parameters mentioned in an expression, in order of appearance.
std::vector<std::string> expression_parameters(const std::string& text);

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"verify-shen", "verify-axioms", "complex", "irreducible",
                                              "support", "fingerprint", "torsion"};
  return names;
}

struct JobSpec {
  std::string command;
  int n = 2;
  Mode mode = Mode::plus;
  std::string P = "Apoly";
  std::string M = "Triv(0)";
  int window = 4;
  int gen_bound = 5;
  bool json = false;
  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

/// Arguments without the program name. Throws UsageError. The default window
/// comes from WITTMOD_WINDOW when set; the default generator bound is
/// window + 1.
JobSpec parse_spec(const std::vector<std::string>& args);
std::vector<std::string> render_spec(const JobSpec& spec);

struct Report {
  JobSpec spec;
  std::string verdict;
  bool certified = false;
  nlohmann::ordered_json details = nlohmann::ordered_json::array();
  double elapsed_ms = 0;
};

/// Throws UsageError when the expressions do not fit the command.
Report run(const JobSpec& spec);

nlohmann::ordered_json to_json(const Report& r);
std::string to_text(const Report& r);
/// 0 certified, 1 verification failed.
inline int exit_code(const Report& r) { return r.certified ? 0 : 1; }

/// Full command-line entry point; usage errors exit with status 2.
int cli_main(int argc, char** argv);

}  // namespace wittmod
