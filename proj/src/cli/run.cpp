#include <chrono>
#include <iostream>
#include <sstream>

#include "wittmod/cli.hpp"
#include "wittmod/sweeps.hpp"
#include "wittmod/wittrep.hpp"

namespace wittmod {

namespace {

using json = nlohmann::ordered_json;

json sweep_json(const std::string& check, const SweepResult& r) {
  json j;
  j["check"] = check;
  j["cases"] = r.checked;
  j["failures"] = r.failures;
  if (r.first_failure) j["firstFailure"] = *r.first_failure;
  return j;
}

json weight_json(const Weight& w) {
  json a = json::array();
  for (const auto& s : w) a.push_back(s.to_string());
  return a;
}

// [d_i, t_j] = delta_ij, [t_i, t_j] = [d_i, d_j] = 0 on every window vector.
SweepResult weyl_relation_sweep(const WeylModule& p, Mode mode, int D) {
  const auto basis = p.window_basis(D);
  const int n = p.rank();
  const std::size_t per = static_cast<std::size_t>(n * n);
  return run_cases(Exec::parallel, basis.size() * per, [&](std::size_t idx) {
    const PVector v = PVector::unit(basis[idx / per]);
    const int i = static_cast<int>(idx % per) / n;
    const int j = static_cast<int>(idx % per) % n;
    const auto t = [&](int a, const PVector& x) { return p.act_generator(Gen::t, a, x); };
    const auto d = [&](int a, const PVector& x) { return p.act_generator(Gen::d, a, x); };
    PVector expect = i == j ? v : PVector();
    bool ok = d(i, t(j, v)) - t(j, d(i, v)) == expect;
    ok = ok && (t(i, t(j, v)) - t(j, t(i, v))).is_zero();
    ok = ok && (d(i, d(j, v)) - d(j, d(i, v))).is_zero();
    if (mode == Mode::laurent) ok = ok && p.act_t_power(i, -1, t(i, v)) == v;
    return ok;
  });
}

std::optional<int> literal_exterior(const GlModule& m) {
  for (int k = 0; k <= m.rank(); ++k) {
    if (m.name() == "Ext(" + std::to_string(k) + ")") return k;
  }
  return std::nullopt;
}

void cmd_verify_shen(const JobSpec& s, Report& r) {
  const auto pairs = all_pairs(s.n, s.mode, s.gen_bound);
  const SweepResult res = shen_sweep(s.mode, pairs, Exec::parallel);
  r.details.push_back(sweep_json("tau[x,y] = [tau x, tau y]", res));
  r.certified = res.ok();
  r.verdict = r.certified ? "verified" : "failed";
}

void cmd_verify_axioms(const JobSpec& s, Report& r) {
  const WeylModule p = parse_P(s.P, s.n);
  const GlModule m = parse_M(s.M, s.n);
  const FPModule f(p, m, s.mode);
  const int D = s.window;
  bool ok = true;
  const auto add = [&](const std::string& name, const SweepResult& res) {
    r.details.push_back(sweep_json(name, res));
    ok = ok && res.ok();
  };
  add("Weyl relations on P", weyl_relation_sweep(p, s.mode, D));
  const int n = s.n;
  const std::size_t quads = static_cast<std::size_t>(n * n * n * n);
  add("gl_n relations on M", run_cases(Exec::serial, quads, [&](std::size_t idx) {
        const int i = static_cast<int>(idx) / (n * n * n);
        const int j = static_cast<int>(idx) / (n * n) % n;
        const int k = static_cast<int>(idx) / n % n;
        const int l = static_cast<int>(idx) % n;
        ExactMatrix expect(m.dim(), m.dim());
        if (j == k) expect = expect + m.E(i, l);
        if (l == i) expect = expect - m.E(k, j);
        return m.E(i, j) * m.E(k, l) - m.E(k, l) * m.E(i, j) == expect;
      }));
  const auto ops = closure_operators(f, s.gen_bound);
  add("[x,y] v = x(y v) - y(x v)", lie_action_sweep(f, ops, D, Exec::parallel));
  if (const auto k = literal_exterior(m)) {
    const DeRham dr(p);
    if (*k < s.n) add("pi_" + std::to_string(*k) + " commutes with the action", chain_map_sweep(dr, s.mode, *k, ops, D, Exec::parallel));
    if (*k + 1 < s.n) add("pi_" + std::to_string(*k + 1) + " pi_" + std::to_string(*k) + " = 0", square_zero_sweep(dr, s.mode, *k, D, Exec::parallel));
  }
  r.certified = ok;
  r.verdict = ok ? "verified" : "failed";
}

void cmd_complex(const JobSpec& s, Report& r) {
  const WeylModule p = parse_P(s.P, s.n);
  HomologyTable t;
  try {
    t = complex_homology(p, s.window);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const DeRham dr(p);
  bool ok = true;
  for (int k = 0; k + 1 < s.n; ++k) {
    const SweepResult res = square_zero_sweep(dr, s.mode, k, s.window, Exec::parallel);
    r.details.push_back(sweep_json("pi_" + std::to_string(k + 1) + " pi_" + std::to_string(k) + " = 0", res));
    ok = ok && res.ok();
  }
  json table = json::array();
  for (const auto& e : t.entries) {
    json row;
    row["r"] = e.r;
    row["level"] = e.level;
    row["dim"] = e.dim;
    row["interior"] = e.interior;
    table.push_back(row);
  }
  json h;
  h["homology"] = table;
  h["filtered"] = t.filtered;
  r.details.push_back(h);
  r.certified = ok;
  r.verdict = ok ? "computed" : "failed";
}

void cmd_irreducible(const JobSpec& s, Report& r) {
  const WeylModule p = parse_P(s.P, s.n);
  const GlModule m = parse_M(s.M, s.n);
  const IrreducibilityReport rep = irreducibility_report(p, m, s.mode, s.window, s.gen_bound);
  json j;
  j["branch"] = rep.branch;
  j["summary"] = rep.verdict;
  j["windowDim"] = rep.window_dim;
  if (rep.exterior_k) j["exteriorK"] = *rep.exterior_k;
  if (rep.codim) j["sumPartialImageCodim"] = *rep.codim;
  if (rep.witness_dim) j["witnessDim"] = *rep.witness_dim;
  if (!rep.witness_filtration.empty()) j["witnessFiltration"] = rep.witness_filtration;
  if (!rep.seeds.empty()) {
    json seeds = json::array();
    for (const auto& sr : rep.seeds) seeds.push_back({{"seed", sr.seed}, {"dim", sr.dim}});
    j["seeds"] = seeds;
  }
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  r.details.push_back(j);
  r.certified = rep.certified;
  if (!rep.certified) {
    r.verdict = "not certified";
  } else if (rep.branch == "skipped") {
    r.verdict = "skipped";
  } else if (rep.verdict.rfind("reducible", 0) == 0) {
    r.verdict = "reducible";
  } else {
    r.verdict = "consistent with irreducible";
  }
}

FPModule weight_module_or_throw(const JobSpec& s) {
  FPModule f(parse_P(s.P, s.n), parse_M(s.M, s.n), s.mode);
  return f;
}

void cmd_support(const JobSpec& s, Report& r) {
  const FPModule f = weight_module_or_throw(s);
  std::vector<Weight> support;
  try {
    support = weight_support(f, s.window);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json ws = json::array();
  for (const auto& w : support) ws.push_back(weight_json(w));
  json j;
  j["size"] = support.size();
  j["weights"] = ws;
  r.details.push_back(j);
  r.certified = true;
  r.verdict = "weight module";
}

void cmd_fingerprint(const JobSpec& s, Report& r) {
  const FPModule f = weight_module_or_throw(s);
  const Fingerprint fp = fingerprint(f, s.window);
  json j;
  j["weight"] = fp.weight;
  if (fp.weight) {
    json classes = json::array();
    for (const auto& [w, count] : fp.classes) classes.push_back({{"class", weight_json(w)}, {"count", count}});
    j["classes"] = classes;
  } else {
    j["gradedDims"] = fp.graded_dims;
  }
  r.details.push_back(j);
  r.certified = true;
  r.verdict = "computed";
}

void cmd_torsion(const JobSpec& s, Report& r) {
  const FPModule f(parse_P(s.P, s.n), parse_M(s.M, s.n), s.mode);
  const int n = s.n;
  const auto basis = f.window_basis(s.window);
  const auto alphas = multi_indices_up_to(n, 2, Mode::plus);
  const std::size_t per = static_cast<std::size_t>(n * n * n) * alphas.size();
  const auto decode = [&](std::size_t idx, int& l, int& i, int& j, std::size_t& a) {
    std::size_t q = idx % per;
    a = q % alphas.size();
    q /= alphas.size();
    j = static_cast<int>(q % static_cast<std::size_t>(n));
    q /= static_cast<std::size_t>(n);
    i = static_cast<int>(q % static_cast<std::size_t>(n));
    l = static_cast<int>(q / static_cast<std::size_t>(n));
  };
  const SweepResult interp = run_cases(Exec::parallel, basis.size() * per, [&](std::size_t idx) {
    int l = 0, i = 0, j = 0;
    std::size_t a = 0;
    decode(idx, l, i, j, a);
    const FPMVector v = FPMVector::unit(basis[idx / per]);
    return torsion_operator(f, l, i, j, alphas[a], v) == torsion_closed_form(f, l, i, j, alphas[a], v);
  });
  const SweepResult displayed = run_cases(Exec::parallel, basis.size() * per, [&](std::size_t idx) {
    int l = 0, i = 0, j = 0;
    std::size_t a = 0;
    decode(idx, l, i, j, a);
    const FPMVector v = FPMVector::unit(basis[idx / per]);
    return torsion_combination(f, l, i, j, alphas[a], v, {Scalar(1), Scalar(-2), Scalar(1, 2)}) ==
           torsion_closed_form(f, l, i, j, alphas[a], v);
  });
  std::size_t nonzero = 0;
  for (int l = 0; l < n; ++l) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) nonzero += claim3_operator(f.M(), l, i, j).is_zero() ? 0 : 1;
    }
  }
  r.details.push_back(sweep_json("second difference (1/2, -1, 1/2) matches closed form", interp));
  r.details.push_back(sweep_json("displayed coefficients (1, -2, 1/2) match closed form", displayed));
  json c3;
  c3["check"] = "nonzero operators delta_li E_lj - E_li E_lj on M";
  c3["count"] = nonzero;
  r.details.push_back(c3);
  r.certified = interp.ok();
  r.verdict = r.certified ? "verified" : "failed";
}

}  // namespace

Report run(const JobSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.spec = spec;
  try {
    if (spec.command == "verify-shen") {
      cmd_verify_shen(spec, r);
    } else if (spec.command == "verify-axioms") {
      cmd_verify_axioms(spec, r);
    } else if (spec.command == "complex") {
      cmd_complex(spec, r);
    } else if (spec.command == "irreducible") {
      cmd_irreducible(spec, r);
    } else if (spec.command == "support") {
      cmd_support(spec, r);
    } else if (spec.command == "fingerprint") {
      cmd_fingerprint(spec, r);
    } else if (spec.command == "torsion") {
      cmd_torsion(spec, r);
    } else {
      throw UsageError("unknown command '" + spec.command + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

json to_json(const Report& r) {
  json j;
  j["command"] = r.spec.command;
  j["n"] = r.spec.n;
  j["mode"] = to_string(r.spec.mode);
  j["P"] = r.spec.P;
  j["M"] = r.spec.M;
  j["window"] = r.spec.window;
  j["genBound"] = r.spec.gen_bound;
  j["verdict"] = r.verdict;
  j["certified"] = r.certified;
  j["details"] = r.details;
  j["elapsedMs"] = r.elapsed_ms;
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.spec.command << "  n=" << r.spec.n << "  mode=" << to_string(r.spec.mode) << "  P=" << r.spec.P
     << "  M=" << r.spec.M << "  D=" << r.spec.window << "  A=" << r.spec.gen_bound << '\n';
  for (const auto& d : r.details) {
    if (d.contains("homology")) {
      os << "  r  level  dim  interior\n";
      for (const auto& row : d["homology"]) {
        os << "  " << row["r"].get<int>() << "  " << row["level"].get<int>() << "  " << row["dim"].get<std::size_t>()
           << "  " << (row["interior"].get<bool>() ? "yes" : "partial") << '\n';
      }
      continue;
    }
    os << "  " << d.dump() << '\n';
  }
  os << "verdict: " << r.verdict << (r.certified ? " (certified)" : " (NOT certified)") << '\n';
  return os.str();
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const JobSpec spec = parse_spec(args);
    const Report r = run(spec);
    if (spec.json) {
      std::cout << to_json(r).dump(2) << '\n';
    } else {
      std::cout << to_text(r);
    }
    return exit_code(r);
  } catch (const HelpRequested& h) {
    std::cout << h.what();
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace wittmod
