#include <CLI11.hpp>

#include <cstdlib>

#include "wittmod/cli.hpp"

namespace wittmod {

namespace {

int default_window() {
  const char* env = std::getenv("WITTMOD_WINDOW");
  if (env == nullptr || *env == '\0') return 4;
  try {
    std::size_t used = 0;
    const int d = std::stoi(env, &used);
    if (used == std::string(env).size()) return d;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("WITTMOD_WINDOW='") + env + "' is not an integer");
}

}  // namespace

JobSpec parse_spec(const std::vector<std::string>& args) {
  JobSpec spec;
  std::string mode = "plus";
  std::optional<int> window;
  std::optional<int> gen_bound;

  CLI::App app{"wittmod: exact windowed checks for Witt-algebra modules F(P, M)", "wittmod"};
  app.footer(
      "P: Apoly | Alaurent | Quot | TL(s,..) | Whittaker(s,..) | Tensor(f1,..,fn)\n"
      "M: Nat | Ext(k) | Sym(k) | Triv(b), joined by '*'\n"
      "Scalars are rational expressions in integers and named parameters.\n"
      "WITTMOD_WINDOW sets the default window. Exit status: 0 certified, 1 not certified, 2 usage error.");
  app.add_option("command", spec.command, "verification suite")->required()->check(CLI::IsMember(command_names()));
  app.add_option("--n", spec.n, "rank");
  app.add_option("--mode", mode, "plus or laurent")->check(CLI::IsMember({"plus", "laurent"}));
  app.add_option("--P", spec.P, "Weyl-algebra module expression");
  app.add_option("--M", spec.M, "gl_n-module expression");
  app.add_option("--window", window, "window level D");
  app.add_option("--gen-bound", gen_bound, "operator degree bound A");
  app.add_flag("--json", spec.json, "JSON report");

  // CLI11 wants argv order reversed when given a vector.
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  spec.mode = mode_from_string(mode);
  spec.window = window ? *window : default_window();
  spec.gen_bound = gen_bound ? *gen_bound : spec.window + 1;

  if (spec.n < 2) throw UsageError("--n " + std::to_string(spec.n) + " invalid: rank must be at least 2");
  if (spec.window < 1) throw UsageError("--window " + std::to_string(spec.window) + " invalid: must be at least 1");
  if (spec.gen_bound < 0) throw UsageError("--gen-bound " + std::to_string(spec.gen_bound) + " invalid");
  // Validate both expressions against n and the mode.
  const WeylModule p = parse_P(spec.P, spec.n);
  parse_M(spec.M, spec.n);
  if (!p.supports(spec.mode)) throw UsageError(spec.P + " is not a module over the Laurent Weyl algebra");
  return spec;
}

std::vector<std::string> render_spec(const JobSpec& spec) {
  std::vector<std::string> out{spec.command,
                               "--n",
                               std::to_string(spec.n),
                               "--mode",
                               to_string(spec.mode),
                               "--P",
                               spec.P,
                               "--M",
                               spec.M,
                               "--window",
                               std::to_string(spec.window),
                               "--gen-bound",
                               std::to_string(spec.gen_bound)};
  if (spec.json) out.push_back("--json");
  return out;
}

}  // namespace wittmod
