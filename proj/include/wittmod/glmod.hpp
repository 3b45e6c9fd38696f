#pragma once

// Finite-dimensional gl_n-modules given by explicit matrices for the E_ij.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wittmod/exactnum.hpp"

namespace wittmod {

using MVector = SparseVector<std::size_t>;
using Weight = std::vector<Scalar>;

std::string weight_string(const Weight& w);

class GlModule {
 public:
  /// `action[i*n + j]` is the matrix of E_ij (0-based). Throws
  /// std::invalid_argument if the gl_n commutation relations fail.
  GlModule(int n, std::vector<std::string> labels, std::vector<ExactMatrix> action, std::string name = "");

  int rank() const { return n_; }
  std::size_t dim() const { return labels_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const ExactMatrix& E(int i, int j) const { return action_[static_cast<std::size_t>(i * n_ + j)]; }

  MVector act(int i, int j, const MVector& v) const { return E(i, j).apply(v); }

  /// True when every E_ii is diagonal in the module basis.
  bool has_diagonal_weights() const;
  /// Diagonal of E_11..E_nn at one basis vector; requires has_diagonal_weights().
  Weight basis_weight(std::size_t idx) const;

  std::string vector_string(const MVector& v) const;

 private:
  int n_;
  std::vector<std::string> labels_;
  std::vector<ExactMatrix> action_;
  std::string name_;
};

GlModule natural_module(int n);
/// k-th exterior power, basis e_S for sorted S; k = 0 gives the trivial line.
GlModule exterior_power(int k, int n);
/// One-dimensional module with E_ij acting as delta_ij * b / n.
GlModule scalar_module(const Scalar& b, int n);
GlModule sym_power(int k, int n);
GlModule tensor_module(const GlModule& a, const GlModule& b);

/// Subsets of size k of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> sorted_subsets(int n, int k);

/// e_i ^ e_S for sorted S: the sorted result and its sign, or nullopt if i in S.
std::optional<std::pair<int, std::vector<int>>> wedge_insert(int i, const std::vector<int>& s);

struct WeightVector {
  Weight weight;
  MVector vector;
};

/// Weight spaces of a module with diagonal E_ii, keyed by weight. Throws
/// std::invalid_argument("not a weight module") otherwise.
std::map<Weight, std::vector<std::size_t>> weight_decomposition(const GlModule& m);

/// Basis of the joint kernel of E_12, E_23, ..., E_{n-1,n}, split by weight.
/// Without a diagonal basis each kernel vector must itself be a weight vector.
std::vector<WeightVector> singular_vectors(const GlModule& m);

/// Smallest E_ij-invariant subspace containing v.
std::size_t cyclic_dimension(const GlModule& m, const MVector& v);

/// One singular line whose generator is cyclic.
bool is_irreducible(const GlModule& m);

/// k if m is isomorphic to the k-th exterior power (same dimension and
/// highest weight (1,..,1,0,..,0)); nullopt otherwise or when m is reducible.
std::optional<int> is_fundamental_exterior(const GlModule& m);

/// delta_li E_lj - E_li E_lj.
ExactMatrix claim3_operator(const GlModule& m, int l, int i, int j);

}  // namespace wittmod
