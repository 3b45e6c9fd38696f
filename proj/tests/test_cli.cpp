#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>

#include "wittmod/cli.hpp"

using namespace wittmod;
using json = nlohmann::ordered_json;

namespace {

struct ProcessResult {
  int status = -1;
  std::string out;
};

ProcessResult run_binary(const std::string& args) {
  const char* bin = std::getenv("WITTMOD_CLI");
  REQUIRE(bin != nullptr);
  ProcessResult r;
  FILE* p = popen((std::string(bin) + " " + args + " 2>&1").c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

JobSpec parse(std::vector<std::string> args) { return parse_spec(args); }

std::string usage_message(std::vector<std::string> args) {
  try {
    parse_spec(args);
  } catch (const UsageError& e) {
    return e.what();
  }
  return "";
}

json stable(json j) {
  j.erase("elapsedMs");
  return j;
}

}  // namespace

TEST_CASE("parse_spec examples") {
  unsetenv("WITTMOD_WINDOW");
  const JobSpec a = parse({"irreducible", "--n", "2", "--P", "Apoly", "--M", "Sym(2)", "--window", "4"});
  CHECK(a.command == "irreducible");
  CHECK(a.n == 2);
  CHECK(a.P == "Apoly");
  CHECK(a.M == "Sym(2)");
  CHECK(a.window == 4);
  CHECK(a.gen_bound == 5);
  CHECK(a.mode == Mode::plus);
  CHECK(!a.json);

  const JobSpec b = parse({"complex", "--n", "2", "--P", "Whittaker(l1,l2)", "--window", "5", "--json"});
  CHECK(b.mode == Mode::plus);
  CHECK(b.json);
  CHECK(b.gen_bound == 6);
  CHECK(expression_parameters(b.P) == std::vector<std::string>{"l1", "l2"});

  CHECK(usage_message({"irreducible", "--n", "2", "--P", "Apoly", "--M", "Ext(5)"}) == "Ext(5) invalid for n=2");
}

TEST_CASE("defaults") {
  unsetenv("WITTMOD_WINDOW");
  const JobSpec d = parse({"verify-shen"});
  CHECK(d.window == 4);
  CHECK(d.gen_bound == 5);
  CHECK(d.n == 2);
  setenv("WITTMOD_WINDOW", "3", 1);
  CHECK(parse({"verify-shen"}).window == 3);
  CHECK(parse({"verify-shen"}).gen_bound == 4);
  CHECK(parse({"verify-shen", "--window", "6"}).window == 6);
  setenv("WITTMOD_WINDOW", "three", 1);
  CHECK_THROWS_AS(parse({"verify-shen"}), UsageError);
  unsetenv("WITTMOD_WINDOW");
}

TEST_CASE("usage errors name the offending token") {
  CHECK(usage_message({"irreducible", "--P", "Bogus"}) == "unknown module kind 'Bogus'");
  CHECK(usage_message({"irreducible", "--M", "Nat*Foo(2)"}) == "unknown module kind 'Foo(2)'");
  CHECK(usage_message({"irreducible", "--n", "3", "--P", "TL(l1,l2)"}) == "TL(l1,l2) has 2 parameters, expected 3");
  CHECK(usage_message({"irreducible", "--P", "Tensor(Apoly)"}) == "Tensor(Apoly) has 1 factors, expected 2");
  CHECK(usage_message({"irreducible", "--P", "Tensor(Apoly,Blah)"}) == "unknown module kind 'Blah'");
  CHECK(usage_message({"irreducible", "--M", "Ext(-1)"}) == "Ext(-1) invalid for n=2");
  CHECK(usage_message({"irreducible", "--mode", "laurent", "--P", "Apoly"}).find("Apoly") != std::string::npos);
  CHECK(usage_message({"irreducible", "--P", "TL(2)"}) != "");
  CHECK(usage_message({"irreducible", "--n", "1"}).find("--n 1") != std::string::npos);
  CHECK(usage_message({"irreducible", "--window", "0"}).find("--window 0") != std::string::npos);
  CHECK(usage_message({"frobnicate"}) != "");
  CHECK_THROWS_AS(parse({"--help"}), HelpRequested);
  CHECK(usage_message({"irreducible", "--mode", "sideways"}) != "");
  CHECK(usage_message({"irreducible", "--M", "Triv(1/0)"}).find("division by zero") != std::string::npos);
  CHECK(usage_message({"irreducible", "--M", "Triv(l"}).find("unbalanced") != std::string::npos);
}

TEST_CASE("scalar expressions") {
  const Scalar l = Scalar::parameter("l");
  CHECK(parse_scalar("1/2 + 1/3") == Scalar(5, 6));
  CHECK(parse_scalar("-(l+1)^2") == -((l + Scalar(1)) * (l + Scalar(1))));
  CHECK(parse_scalar("2*l/3 - 1") == Scalar(2) * l / Scalar(3) - Scalar(1));
  CHECK(parse_scalar("l^-1") == Scalar(1) / l);
  CHECK(parse_scalar(" 7 ") == Scalar(7));
  CHECK_THROWS_AS(parse_scalar("l +"), UsageError);
  CHECK_THROWS_AS(parse_scalar("2 3"), UsageError);
}

TEST_CASE("module expressions") {
  CHECK(parse_P("Apoly", 3).rank() == 3);
  CHECK(parse_P("Tensor(TL(l1),Quot)", 2).name() == "Tensor(TL(l1),Quot)");
  CHECK(parse_P("TL(1/2, l)", 2).factor(0).lambda == Scalar(1, 2));
  CHECK(parse_M("Nat*Nat", 2).dim() == 4);
  CHECK(parse_M("Sym(2) * Triv(1)", 2).dim() == 3);
  CHECK(parse_M("Ext(0)", 3).dim() == 1);
  CHECK(expression_parameters("Tensor(TL(a+b),Whittaker(c))") == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("render and re-parse round trip") {
  const std::vector<std::vector<std::string>> cases{
      {"irreducible", "--P", "Tensor(TL(l1),Quot)", "--M", "Sym(2)*Triv(b)", "--window", "3"},
      {"complex", "--n", "3", "--mode", "laurent", "--P", "Alaurent", "--json"},
      {"torsion", "--gen-bound", "2", "--M", "Nat"},
      {"verify-shen"}};
  for (const auto& c : cases) {
    const JobSpec s = parse(c);
    CHECK(parse_spec(render_spec(s)) == s);
  }
}

TEST_CASE("run examples") {
  JobSpec s = parse({"verify-shen", "--gen-bound", "3"});
  Report r = run(s);
  CHECK(r.certified);
  CHECK(exit_code(r) == 0);
  CHECK(r.details[0]["cases"] == 400);

  s = parse({"irreducible", "--P", "Apoly", "--M", "Ext(1)", "--window", "3"});
  r = run(s);
  CHECK(r.verdict == "reducible");
  CHECK(r.details[0]["witnessFiltration"].size() == 4);

  s = parse({"complex", "--P", "Apoly", "--window", "4"});
  r = run(s);
  CHECK(r.certified);
  for (const auto& row : r.details.back()["homology"]) {
    if (!row["interior"].get<bool>()) continue;
    const bool origin = row["r"] == 0 && row["level"] == 0;
    CHECK(row["dim"] == (origin ? 1 : 0));
  }
}

TEST_CASE("commands that need weight modules") {
  CHECK_THROWS_AS(run(parse({"support", "--P", "Whittaker(1,2)", "--M", "Nat"})), UsageError);
  CHECK(run(parse({"fingerprint", "--P", "Whittaker(1,2)", "--M", "Nat", "--window", "2"})).certified);
}

TEST_CASE("JSON schema and determinism") {
  const JobSpec s = parse({"support", "--P", "TL(l1,l2)", "--M", "Nat", "--window", "2", "--json"});
  const json a = to_json(run(s));
  const std::vector<std::string> keys{"command", "n", "mode", "P", "M", "window", "genBound", "verdict", "certified", "details", "elapsedMs"};
  std::vector<std::string> got;
  for (const auto& [k, v] : a.items()) got.push_back(k);
  CHECK(got == keys);
  CHECK(a["details"].is_array());
  CHECK(a["elapsedMs"].is_number());
  const json b = to_json(run(s));
  CHECK(stable(a).dump() == stable(b).dump());
}

TEST_CASE("binary exit codes") {
  ProcessResult r = run_binary("verify-shen --gen-bound 2 --json");
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["certified"] == true);
  CHECK(j["command"] == "verify-shen");

  r = run_binary("--help");
  CHECK(r.status == 0);
  CHECK(r.out.find("--gen-bound") != std::string::npos);

  r = run_binary("irreducible --n 2 --P Apoly --M 'Ext(5)'");
  CHECK(r.status == 2);
  CHECK(r.out.find("Ext(5) invalid for n=2") != std::string::npos);

  r = run_binary("irreducible --P Apoly --M 'Sym(2)' --window 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("consistent with irreducible") != std::string::npos);

  // an unsaturated window is reported as not certified
  r = run_binary("irreducible --P Apoly --M 'Sym(2)' --window 3 --gen-bound 0");
  CHECK(r.status == 1);
  CHECK(r.out.find("not certified") != std::string::npos);

  r = run_binary("complex --P 'Whittaker(l1,l2)' --window 3 --json");
  CHECK(r.status == 0);
  CHECK(json::parse(r.out)["details"].back()["filtered"] == true);
}

TEST_CASE("binary JSON is byte identical apart from timing") {
  const std::string args = "fingerprint --P 'TL(l1,l2)' --M 'Sym(2)' --window 3 --json";
  const ProcessResult a = run_binary(args);
  const ProcessResult b = run_binary(args);
  REQUIRE(a.status == 0);
  CHECK(stable(json::parse(a.out)).dump() == stable(json::parse(b.out)).dump());
}
