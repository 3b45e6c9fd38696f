#include <algorithm>
#include <set>

#include "wittmod/wittrep.hpp"

namespace wittmod {

std::vector<FPMVector> low_level_seeds(const FPModule& f, int D) {
  const auto basis = f.P().window_basis(D);
  std::vector<FPMVector> seeds;
  if (basis.empty()) return seeds;
  const int lowest = f.P().level(basis.front());
  for (const auto& k : basis) {
    if (f.P().level(k) > lowest + 1) break;
    for (std::size_t m = 0; m < f.M().dim(); ++m) seeds.push_back(FPMVector::unit({k, m}));
  }
  return seeds;
}

namespace {

std::string window_tag(int D, int A) { return "(D=" + std::to_string(D) + ", A=" + std::to_string(A) + ")"; }

void saturate(IrreducibilityReport& rep, const FPModule& f, int D, int A) {
  bool all = true;
  for (const auto& seed : low_level_seeds(f, D)) {
    const std::size_t d = submodule_closure(f, {seed}, D, A).dim();
    rep.seeds.push_back({f.vector_string(seed), d});
    all = all && d == rep.window_dim;
  }
  rep.certified = all;
  rep.verdict = all ? "consistent with irreducible: certified saturation at " + window_tag(D, A)
                    : "not saturated at " + window_tag(D, A);
}

// Every x v with v in `vs` lies in L, tested in a window that holds all images.
bool maps_into_L(const DeRham& dr, const FPModule& f, Mode mode, int r, int D, int A, const std::vector<FPMVector>& vs) {
  const int wide = D + level_shift_bound(dr.P(), mode, A);
  const WindowedSubspace big = L_window(dr, mode, r, wide);
  for (const auto& op : closure_operators(f, A)) {
    for (const auto& v : vs) {
      if (!big.contains(f, fpm_act(f, op, v))) return false;
    }
  }
  return true;
}

}  // namespace

IrreducibilityReport irreducibility_report(const WeylModule& p, const GlModule& m, Mode mode, int D, int A) {
  const FPModule f(p, m, mode);
  const int n = p.rank();
  IrreducibilityReport rep;
  rep.window_dim = f.window_basis(D).size();
  if (!is_irreducible(m)) {
    rep.branch = "skipped";
    rep.verdict = "skipped: M is not irreducible";
    rep.certified = true;
    rep.notes.push_back(std::to_string(singular_vectors(m).size()) + " singular lines in M");
    return rep;
  }
  if (!heuristic_simple(p, mode, std::min(D, 3))) {
    rep.branch = "skipped";
    rep.verdict = std::string("skipped: P not irreducible over ") + (mode == Mode::plus ? "K_n^+" : "K_n");
    rep.certified = true;
    rep.notes.push_back("heuristic window closure of P found a proper invariant subspace");
    return rep;
  }
  rep.exterior_k = is_fundamental_exterior(m);
  if (!rep.exterior_k) {
    rep.branch = "generic";
    saturate(rep, f, D, A);
    return rep;
  }
  const int k = *rep.exterior_k;
  const DeRham dr(p);
  const FPModule ext = dr.module(k, mode);
  if (!(m.labels() == ext.M().labels() && m.name() == ext.M().name())) {
    rep.notes.push_back("M is isomorphic to Ext(" + std::to_string(k) + "); computed on the exterior-power model");
  }
  if (k >= 1 && k <= n - 1) {
    rep.branch = "exterior";
    const WindowedSubspace L = L_window(dr, mode, k, D);
    rep.witness_dim = L.dim();
    rep.witness_filtration = L.filtration_dims(ext);
    const bool proper = L.dim() > 0 && L.dim() < rep.window_dim;
    const bool invariant = maps_into_L(dr, ext, mode, k, D, A, L.basis());
    rep.certified = proper && invariant;
    rep.verdict = rep.certified ? "reducible: L is a proper nonzero invariant subspace at " + window_tag(D, A)
                                : "witness check failed at " + window_tag(D, A);
    return rep;
  }
  if (k == 0) {
    rep.branch = "trivial";
    if (!p.is_natural()) {
      saturate(rep, ext, D, A);
      return rep;
    }
    const FPMVector one = FPMVector::unit({MultiIndex::zero(n), 0});
    const WindowedSubspace constants = submodule_closure(ext, {one}, D, A);
    rep.witness_dim = constants.dim();
    bool quotient_ok = true;
    for (const auto& seed : low_level_seeds(ext, D)) {
      if (ext.level(seed.begin()->first) == 0) continue;
      const std::size_t d = submodule_closure(ext, {seed, one}, D, A).dim();
      rep.seeds.push_back({ext.vector_string(seed), d});
      quotient_ok = quotient_ok && d == rep.window_dim;
    }
    rep.certified = constants.dim() == 1 && quotient_ok;
    rep.verdict = rep.certified ? "reducible: constants span a trivial submodule; quotient consistent with irreducible at " +
                                      window_tag(D, A)
                                : "witness check failed at " + window_tag(D, A);
    return rep;
  }
  rep.branch = "top";
  rep.codim = sum_partial_image_codim(p, D);
  if (*rep.codim == 0) {
    saturate(rep, ext, D, A);
    return rep;
  }
  const WindowedSubspace L = L_window(dr, mode, n, D);
  rep.witness_dim = L.dim();
  rep.witness_filtration = L.filtration_dims(ext);
  std::vector<FPMVector> all;
  for (const auto& c : ext.window_basis(D)) all.push_back(FPMVector::unit(c));
  const bool trivial_quotient = maps_into_L(dr, ext, mode, n, D, A, all);
  rep.certified = L.dim() < rep.window_dim && trivial_quotient;
  rep.verdict = rep.certified ? "reducible: quotient by L is trivial at " + window_tag(D, A)
                              : "witness check failed at " + window_tag(D, A);
  return rep;
}

}  // namespace wittmod
