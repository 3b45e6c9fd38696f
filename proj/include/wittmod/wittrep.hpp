#pragma once

// The Witt-algebra module F(P, M) = P (x) M, the de Rham maps pi_k between
// the F(P, Ext(k)), windowed submodule computations and reports.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wittmod/glmod.hpp"
#include "wittmod/liealg.hpp"
#include "wittmod/weylmod.hpp"

namespace wittmod {

/// Basis tensor: P-basis index (x) M-basis index.
struct Coord {
  MultiIndex p;
  std::size_t m = 0;
  friend auto operator<=>(const Coord&, const Coord&) = default;
  friend bool operator==(const Coord&, const Coord&) = default;
};

using FPMVector = SparseVector<Coord>;

class FPModule {
 public:
  /// Throws std::invalid_argument on rank mismatch or when P is not a
  /// K_n-module in laurent mode.
  FPModule(WeylModule p, GlModule m, Mode mode);

  const WeylModule& P() const { return p_; }
  const GlModule& M() const { return m_; }
  Mode mode() const { return mode_; }
  int rank() const { return p_.rank(); }

  int level(const Coord& c) const { return p_.level(c.p); }
  /// P window basis times the M basis.
  std::vector<Coord> window_basis(int D) const;

  /// Eigenvalues of t_i d_i for the weight axes of P; the closure and
  /// subspace code works blockwise on this key. Empty for Whittaker P.
  Weight block_key(const Coord& c) const;
  std::map<Weight, FPMVector> split_blocks(const FPMVector& v) const;

  FPMVector tensor(const PVector& p, std::size_t m, const Scalar& c = Scalar(1)) const;
  std::string vector_string(const FPMVector& v) const;

 private:
  WeylModule p_;
  GlModule m_;
  Mode mode_;
  std::vector<Weight> m_weights_;
  bool m_diagonal_;
};

/// (t^a d_j)(g (x) v) = (t^a d_j g) (x) v + sum_i a_i (t^{a-e_i} g) (x) E_ij v.
FPMVector fpm_act(const FPModule& f, const WittMonomial& x, const FPMVector& v);
FPMVector fpm_act(const FPModule& f, const WittElement& x, const FPMVector& v);

/// Eigenvalues of all t_j d_j on a basis tensor. Throws
/// std::invalid_argument("not a weight module") unless P and M are weight.
Weight weight_of(const FPModule& f, const Coord& c);

/// The exterior powers of the natural module and the maps
/// pi_k : F(P, Ext(k)) -> F(P, Ext(k+1)), p (x) w -> sum_l (d_l p) (x) (e_l ^ w).
class DeRham {
 public:
  explicit DeRham(WeylModule p);

  int rank() const { return p_.rank(); }
  const WeylModule& P() const { return p_; }
  const GlModule& ext(int k) const { return ext_.at(static_cast<std::size_t>(k)); }
  const std::vector<int>& subset(int k, std::size_t idx) const { return subsets_.at(static_cast<std::size_t>(k))[idx]; }
  std::size_t subset_index(const std::vector<int>& s) const { return index_.at(s); }
  FPModule module(int k, Mode mode) const { return FPModule(p_, ext(k), mode); }

  /// Throws std::invalid_argument("top degree") for k = n.
  FPMVector pi(int k, const FPMVector& v) const;

 private:
  WeylModule p_;
  std::vector<GlModule> ext_;
  std::vector<std::vector<std::vector<int>>> subsets_;
  std::map<std::vector<int>, std::size_t> index_;
};

FPMVector pi_map(const WeylModule& p, int k, const FPMVector& v);

/// Second difference (f(2) - 2 f(1) + f(0)) / 2 of
/// f(m) = (t^{m e_l} d_i)(t^{a + 2 e_l - m e_l} d_j) v.
FPMVector torsion_operator(const FPModule& f, int l, int i, int j, const MultiIndex& alpha, const FPMVector& v);
/// c0 f(0) + c1 f(1) + c2 f(2) for an arbitrary weight vector c.
FPMVector torsion_combination(const FPModule& f, int l, int i, int j, const MultiIndex& alpha, const FPMVector& v,
                              const std::array<Scalar, 3>& c);
/// sum t^a p (x) (delta_li E_lj - E_li E_lj) w.
FPMVector torsion_closed_form(const FPModule& f, int l, int i, int j, const MultiIndex& alpha, const FPMVector& v);

/// Finite-dimensional subspace of a window, stored blockwise by block_key.
class WindowedSubspace {
 public:
  WindowedSubspace() = default;
  explicit WindowedSubspace(int window) : window_(window) {}

  int window() const { return window_; }
  std::size_t dim() const;
  const std::map<Weight, EchelonBasis<Coord>>& blocks() const { return blocks_; }
  std::vector<FPMVector> basis() const;

  /// Inserts each block component of v; returns the number of new rows.
  std::size_t insert(const FPModule& f, const FPMVector& v);
  /// Like insert, but returns the new echelon rows.
  std::vector<FPMVector> absorb(const FPModule& f, const FPMVector& v);
  bool contains(const FPModule& f, const FPMVector& v) const;
  FPMVector reduce(const FPModule& f, const FPMVector& v) const;
  /// dim of the intersection with W_d for d = 0..window.
  std::vector<std::size_t> filtration_dims(const FPModule& f) const;

 private:
  int window_ = 0;
  std::map<Weight, EchelonBasis<Coord>> blocks_;
};

bool same_subspace(const FPModule& f, const WindowedSubspace& a, const WindowedSubspace& b);

/// Operators t^a d_j with |a| <= A for the module's mode.
std::vector<WittMonomial> closure_operators(const FPModule& f, int A);

/// Largest level increase of x v over all operators with |a| <= A.
int level_shift_bound(const WeylModule& p, Mode mode, int A);

/// Smallest subspace of W_D containing the seeds and every vector of W_D that
/// is a combination of images x v (|a| <= A) of vectors already found.
/// Throws std::invalid_argument if a seed leaves the window.
WindowedSubspace submodule_closure(const FPModule& f, const std::vector<FPMVector>& seeds, int D, int A);

/// span pi_{r-1}(W_{D+1}) intersected with W_D, inside F(P, Ext(r)).
WindowedSubspace L_window(const DeRham& dr, Mode mode, int r, int D);

struct LtildeResult {
  WindowedSubspace ltilde;
  std::optional<WindowedSubspace> kernel;  // ker pi_r within W_D, r < n
  bool matches_kernel = false;
};

/// {v in W_D : x v in L(P, r) for all |a| <= A}, membership tested in a
/// window wide enough to hold every image.
LtildeResult ltilde_window(const DeRham& dr, Mode mode, int r, int D, int A);

/// ker pi_r intersected with W_D.
WindowedSubspace kernel_window(const DeRham& dr, Mode mode, int r, int D);

struct HomologyEntry {
  int r = 0;
  int level = 0;
  std::size_t dim = 0;
  /// Every weight space at this level lies inside the window.
  bool interior = true;
};

struct HomologyTable {
  /// Whittaker P: filtered complex deg <= D + r, one entry per r.
  bool filtered = false;
  std::vector<HomologyEntry> entries;
};

/// dim ker pi_r / im pi_{r-1}. Weight P is split into the Z^n-graded pieces
/// mu = k + e_I; only pieces fully inside W_D are counted.
HomologyTable complex_homology(const WeylModule& p, int D);

struct SeedResult {
  std::string seed;
  std::size_t dim = 0;
};

struct IrreducibilityReport {
  std::string branch;
  std::string verdict;
  bool certified = false;
  std::optional<int> exterior_k;
  std::size_t window_dim = 0;
  std::vector<SeedResult> seeds;
  std::optional<std::size_t> witness_dim;
  std::vector<std::size_t> witness_filtration;
  std::optional<std::size_t> codim;
  std::vector<std::string> notes;
};

IrreducibilityReport irreducibility_report(const WeylModule& p, const GlModule& m, Mode mode, int D, int A);

/// Basis tensors p (x) w with p of the lowest two levels present in the window.
std::vector<FPMVector> low_level_seeds(const FPModule& f, int D);

std::vector<Weight> weight_support(const FPModule& f, int D);

/// Weight modulo Z per coordinate: rationals reduce into [0, 1), and a
/// function with constant denominator drops the integer part of its constant
/// term.
Weight weight_class(const Weight& w);

struct Fingerprint {
  bool weight = false;
  std::map<Weight, std::size_t> classes;
  std::vector<std::size_t> graded_dims;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FPModule& f, int D);

}  // namespace wittmod
