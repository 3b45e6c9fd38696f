#pragma once

// Modules over the Weyl algebras K_n^+ / K_n. Every instance is a tensor
// product of rank-1 factors, so a basis index is one integer per axis.

#include <optional>
#include <string>
#include <vector>

#include "wittmod/glmod.hpp"
#include "wittmod/liealg.hpp"

namespace wittmod {

/// Rank-1 factor kinds and their basis index k:
///   poly       t^k, k >= 0
///   laurent    t^k, k in Z
///   twisted    t^(lambda+k), k in Z
///   quot       t^k mod C[t], k <= -1
///   whittaker  x^k, k >= 0, with t f(x) = lambda f(x-1), d f(x) = (x+1) f(x+1) / lambda
enum class FactorKind { poly, laurent, twisted, quot, whittaker };

struct Factor {
  FactorKind kind = FactorKind::poly;
  Scalar lambda;  // twisted and whittaker only

  bool has_invertible_t() const { return kind == FactorKind::laurent || kind == FactorKind::twisted || kind == FactorKind::whittaker; }
  bool is_weight() const { return kind != FactorKind::whittaker; }
  bool valid(int k) const;
  /// Nonnegative level of a basis index; windows bound the sum over axes.
  int level(int k) const;
  std::string name() const;
  friend bool operator==(const Factor&, const Factor&) = default;
};

using PVector = SparseVector<MultiIndex>;

enum class Gen { t, d };

class WeylModule {
 public:
  explicit WeylModule(std::vector<Factor> factors);

  static WeylModule apoly(int n);
  static WeylModule alaurent(int n);
  static WeylModule twisted(const std::vector<Scalar>& lambdas);
  static WeylModule quot(int n);
  static WeylModule whittaker(const std::vector<Scalar>& lambdas);

  int rank() const { return static_cast<int>(factors_.size()); }
  const std::vector<Factor>& factors() const { return factors_; }
  const Factor& factor(int i) const { return factors_[static_cast<std::size_t>(i)]; }
  /// "Apoly", "TL(l1,l2)", "Tensor(TL(l1),Quot)".
  std::string name() const;

  bool valid_index(const MultiIndex& k) const;
  int level(const MultiIndex& k) const;
  /// Every factor has diagonal t_i d_i.
  bool is_weight() const;
  /// t_i^{-1} exists, so the module is a K_n-module.
  bool supports(Mode mode) const;
  /// Literally A_n^+ or A_n (all factors poly, or all laurent).
  bool is_natural() const;
  bool all_factors(FactorKind kind) const;

  /// Eigenvalues of t_i d_i on a basis vector; requires is_weight().
  Weight weight(const MultiIndex& k) const;

  PVector act_generator(Gen g, int i, const PVector& v) const;
  /// t_i^e; negative e needs an invertible t_i.
  PVector act_t_power(int i, int e, const PVector& v) const;
  PVector act_t_power(const MultiIndex& alpha, const PVector& v) const;
  PVector act_weyl(const WeylElement& w, const PVector& v) const;

  /// Basis indices of level <= D, ordered by level then index.
  std::vector<MultiIndex> window_basis(int D) const;

  std::string basis_label(const MultiIndex& k) const;
  std::string vector_string(const PVector& v) const;

  friend bool operator==(const WeylModule&, const WeylModule&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Codimension in W_{D-1} of span{d_k v : v in W_D} intersected with W_{D-1}.
std::size_t sum_partial_image_codim(const WeylModule& p, int D);

/// Heuristic simplicity check: each window basis vector generates the whole
/// window under t_i, d_i (and t_i^{-1} in laurent mode), with components
/// that leave the window dropped. Not a proof.
bool heuristic_simple(const WeylModule& p, Mode mode, int D);

}  // namespace wittmod
