#include "wittmod/sweeps.hpp"

namespace wittmod {

SweepResult run_serial(std::size_t count, const CaseCheck& check) {
  SweepResult r;
  r.checked = count;
  for (std::size_t i = 0; i < count; ++i) {
    bool ok = false;
    try {
      ok = check(i);
    } catch (...) {
    }
    if (ok) continue;
    ++r.failures;
    if (!r.first_failure) r.first_failure = i;
  }
  return r;
}

SweepResult run_cases(Exec exec, std::size_t count, const CaseCheck& check) {
  return exec == Exec::serial ? run_serial(count, check) : run_parallel(count, check);
}

std::vector<std::pair<WittMonomial, WittMonomial>> all_pairs(int n, Mode mode, int bound) {
  const auto ops = monomial_operators(n, mode, bound);
  std::vector<std::pair<WittMonomial, WittMonomial>> out;
  out.reserve(ops.size() * ops.size());
  for (const auto& x : ops) {
    for (const auto& y : ops) out.emplace_back(x, y);
  }
  return out;
}

SweepResult shen_sweep(Mode mode, const std::vector<std::pair<WittMonomial, WittMonomial>>& pairs, Exec exec) {
  return run_cases(exec, pairs.size(), [&](std::size_t i) {
    const WittElement x = WittElement::from(mode, pairs[i].first);
    const WittElement y = WittElement::from(mode, pairs[i].second);
    return toroidal_bracket(shen_tau(x), shen_tau(y)) == shen_tau(witt_bracket(x, y));
  });
}

SweepResult lie_action_sweep(const FPModule& f, const std::vector<WittMonomial>& ops, int D, Exec exec) {
  const auto basis = f.window_basis(D);
  const std::size_t no = ops.size();
  // Cases are (x, y, v) with x < y; the identity is antisymmetric in x, y.
  std::vector<std::pair<std::size_t, std::size_t>> xy;
  for (std::size_t a = 0; a < no; ++a) {
    for (std::size_t b = a + 1; b < no; ++b) xy.emplace_back(a, b);
  }
  return run_cases(exec, xy.size() * basis.size(), [&](std::size_t idx) {
    const auto [a, b] = xy[idx / basis.size()];
    const FPMVector v = FPMVector::unit(basis[idx % basis.size()]);
    const WittElement x = WittElement::from(f.mode(), ops[a]);
    const WittElement y = WittElement::from(f.mode(), ops[b]);
    const FPMVector lhs = fpm_act(f, witt_bracket(x, y), v);
    const FPMVector rhs = fpm_act(f, ops[a], fpm_act(f, ops[b], v)) - fpm_act(f, ops[b], fpm_act(f, ops[a], v));
    return lhs == rhs;
  });
}

SweepResult chain_map_sweep(const DeRham& dr, Mode mode, int k, const std::vector<WittMonomial>& ops, int D, Exec exec) {
  const FPModule src = dr.module(k, mode);
  const FPModule tgt = dr.module(k + 1, mode);
  const auto basis = src.window_basis(D);
  return run_cases(exec, ops.size() * basis.size(), [&](std::size_t idx) {
    const WittMonomial& x = ops[idx / basis.size()];
    const FPMVector v = FPMVector::unit(basis[idx % basis.size()]);
    return dr.pi(k, fpm_act(src, x, v)) == fpm_act(tgt, x, dr.pi(k, v));
  });
}

SweepResult square_zero_sweep(const DeRham& dr, Mode mode, int k, int D, Exec exec) {
  const auto basis = dr.module(k, mode).window_basis(D);
  return run_cases(exec, basis.size(), [&](std::size_t idx) {
    return dr.pi(k + 1, dr.pi(k, FPMVector::unit(basis[idx]))).is_zero();
  });
}

}  // namespace wittmod
