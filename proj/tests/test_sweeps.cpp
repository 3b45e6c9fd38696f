#include <doctest.h>

#include <stdexcept>

#include "wittmod/sweeps.hpp"

using namespace wittmod;

namespace {

Scalar par(const char* name) { return Scalar::parameter(name); }

}  // namespace

TEST_CASE("runners agree on a synthetic check") {
  const auto check = [](std::size_t i) { return i % 7 != 3 && i != 40; };
  const SweepResult s = run_serial(100, check);
  CHECK(s.checked == 100);
  CHECK(s.failures == 15);
  CHECK(s.first_failure == 3);
  CHECK(run_parallel(100, check) == s);
  CHECK(run_cases(Exec::parallel, 100, check) == s);
  CHECK(run_serial(0, check).ok());
}

TEST_CASE("exceptions count as failures") {
  const auto check = [](std::size_t i) -> bool {
    if (i == 5) throw std::runtime_error("boom");
    return true;
  };
  const SweepResult s = run_serial(10, check);
  CHECK(s.failures == 1);
  CHECK(s.first_failure == 5);
  CHECK(run_parallel(10, check) == s);
}

TEST_CASE("Shen sweep, serial and parallel") {
  const auto pairs = all_pairs(2, Mode::plus, 2);
  CHECK(pairs.size() == 144);
  const SweepResult s = shen_sweep(Mode::plus, pairs, Exec::serial);
  CHECK(s.ok());
  CHECK(s.checked == pairs.size());
  CHECK(shen_sweep(Mode::plus, pairs, Exec::parallel) == s);
  const auto lp = all_pairs(2, Mode::laurent, 1);
  CHECK(shen_sweep(Mode::laurent, lp, Exec::parallel) == shen_sweep(Mode::laurent, lp, Exec::serial));
}

TEST_CASE("Lie action sweep, serial and parallel") {
  const FPModule f(WeylModule::whittaker({par("l1"), par("l2")}), sym_power(2, 2), Mode::plus);
  const auto ops = monomial_operators(2, Mode::plus, 2);
  const SweepResult s = lie_action_sweep(f, ops, 2, Exec::serial);
  CHECK(s.ok());
  CHECK(s.checked > 0);
  CHECK(lie_action_sweep(f, ops, 2, Exec::parallel) == s);
}

TEST_CASE("chain map and square-zero sweeps") {
  const DeRham dr(WeylModule::apoly(3));
  const auto ops = monomial_operators(3, Mode::plus, 2);
  for (int k = 0; k < 3; ++k) {
    const SweepResult s = chain_map_sweep(dr, Mode::plus, k, ops, 2, Exec::serial);
    CHECK(s.ok());
    CHECK(chain_map_sweep(dr, Mode::plus, k, ops, 2, Exec::parallel) == s);
  }
  for (int k = 0; k + 1 < 3; ++k) {
    const SweepResult s = square_zero_sweep(dr, Mode::plus, k, 3, Exec::serial);
    CHECK(s.ok());
    CHECK(square_zero_sweep(dr, Mode::plus, k, 3, Exec::parallel) == s);
  }
}

TEST_CASE("a broken identity is caught the same way by both runners") {
  // x(y v) - y(x v) == 2 [x,y] v fails wherever [x,y] v != 0
  const FPModule f(WeylModule::apoly(2), natural_module(2), Mode::plus);
  const auto ops = monomial_operators(2, Mode::plus, 2);
  const auto basis = f.window_basis(2);
  const std::size_t per = ops.size() * ops.size();
  const auto check = [&](std::size_t idx) {
    const auto& x = ops[(idx % per) / ops.size()];
    const auto& y = ops[idx % ops.size()];
    const FPMVector v = FPMVector::unit(basis[idx / per]);
    const WittElement xy = witt_bracket(WittElement::from(Mode::plus, x), WittElement::from(Mode::plus, y));
    return fpm_act(f, x, fpm_act(f, y, v)) - fpm_act(f, y, fpm_act(f, x, v)) == fpm_act(f, xy, v).scaled(Scalar(2));
  };
  const SweepResult s = run_serial(basis.size() * per, check);
  CHECK(!s.ok());
  CHECK(run_parallel(basis.size() * per, check) == s);
}
