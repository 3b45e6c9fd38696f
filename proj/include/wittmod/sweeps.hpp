#pragma once

// Exhaustive identity sweeps. Each sweep is a list of independent cases; the
// serial runner is the reference and the OpenMP runner must agree with it.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "wittmod/wittrep.hpp"

namespace wittmod {

enum class Exec { serial, parallel };

struct SweepResult {
  std::size_t checked = 0;
  std::size_t failures = 0;
  /// Smallest failing case index.
  std::optional<std::size_t> first_failure;
  bool ok() const { return failures == 0; }
  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

using CaseCheck = std::function<bool(std::size_t)>;

SweepResult run_serial(std::size_t count, const CaseCheck& check);
SweepResult run_parallel(std::size_t count, const CaseCheck& check);
SweepResult run_cases(Exec exec, std::size_t count, const CaseCheck& check);

/// Pairs (x, y) of the given monomials; tau[x,y] == [tau x, tau y].
SweepResult shen_sweep(Mode mode, const std::vector<std::pair<WittMonomial, WittMonomial>>& pairs, Exec exec);
/// All ordered pairs from monomial_operators(n, mode, bound).
std::vector<std::pair<WittMonomial, WittMonomial>> all_pairs(int n, Mode mode, int bound);

/// [x,y] v == x(y v) - y(x v) for all ops x, y and window basis vectors v.
SweepResult lie_action_sweep(const FPModule& f, const std::vector<WittMonomial>& ops, int D, Exec exec);

/// pi_k(x v) == x pi_k(v) for all ops x and window basis vectors v of F(P, Ext(k)).
SweepResult chain_map_sweep(const DeRham& dr, Mode mode, int k, const std::vector<WittMonomial>& ops, int D, Exec exec);

/// pi_{k+1} pi_k v == 0 on the window basis.
SweepResult square_zero_sweep(const DeRham& dr, Mode mode, int k, int D, Exec exec);

}  // namespace wittmod
