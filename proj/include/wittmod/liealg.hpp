#pragma once

// Vector fields W_n^{+}/W_n, the Weyl algebra K_n^{+}/K_n in normal order,
// the full toroidal algebra W_n x| gl_n(A_n), and the embedding tau of the
// first into the last.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wittmod/polyalg.hpp"

namespace wittmod {

/// Monomial vector field t^alpha d_j (j is 0-based).
struct WittMonomial {
  MultiIndex alpha;
  int j = 0;
  friend auto operator<=>(const WittMonomial&, const WittMonomial&) = default;
  friend bool operator==(const WittMonomial&, const WittMonomial&) = default;
};

/// sum_i f_i d_i.
class WittElement {
 public:
  WittElement(Mode mode, int n);
  static WittElement monomial(Mode mode, const MultiIndex& alpha, int j, const Scalar& c = Scalar(1));
  static WittElement from(Mode mode, const WittMonomial& m) { return monomial(mode, m.alpha, m.j); }

  Mode mode() const { return mode_; }
  int rank() const { return static_cast<int>(coeffs_.size()); }
  const PolyElement& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  PolyElement& coeff(int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;

  /// Decomposition into c * t^alpha d_j terms, ordered by (j, alpha).
  std::vector<std::pair<Scalar, WittMonomial>> terms() const;

  /// d(g) = sum_i f_i * d_i(g).
  PolyElement apply(const PolyElement& g) const;

  WittElement operator+(const WittElement& o) const;
  WittElement operator-(const WittElement& o) const;
  WittElement scaled(const Scalar& c) const;
  friend bool operator==(const WittElement&, const WittElement&) = default;

  std::string to_string() const;

 private:
  void check_compatible(const WittElement& o) const;
  Mode mode_;
  std::vector<PolyElement> coeffs_;
};

/// [sum f_i d_i, sum g_j d_j] = sum_{i,j} (f_j d_j(g_i) - g_j d_j(f_i)) d_i.
WittElement witt_bracket(const WittElement& x, const WittElement& y);

/// sum c * t^alpha d^beta with all t's to the left.
class WeylElement {
 public:
  using Key = std::pair<MultiIndex, MultiIndex>;

  WeylElement(Mode mode, int n);
  static WeylElement term(Mode mode, const MultiIndex& alpha, const MultiIndex& beta, const Scalar& c = Scalar(1));
  static WeylElement one(Mode mode, int n);
  static WeylElement t(Mode mode, int n, int i);
  static WeylElement d(Mode mode, int n, int i);

  Mode mode() const { return mode_; }
  int rank() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  void add_term(const MultiIndex& alpha, const MultiIndex& beta, const Scalar& c);

  WeylElement operator+(const WeylElement& o) const;
  WeylElement operator-(const WeylElement& o) const;
  WeylElement scaled(const Scalar& c) const;
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

  std::string to_string() const;

 private:
  Mode mode_;
  int n_;
  std::map<Key, Scalar> terms_;
};

/// Product rewritten into normal order via d_i t_i = t_i d_i + 1.
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
inline WeylElement operator*(const WeylElement& a, const WeylElement& b) { return weyl_mul(a, b); }

/// d + sum f_ij E_ij (i, j 0-based).
class ToroidalElement {
 public:
  ToroidalElement(Mode mode, int n);
  ToroidalElement(WittElement vf);
  static ToroidalElement matrix_term(Mode mode, int n, int i, int j, const PolyElement& f);

  Mode mode() const { return vf_.mode(); }
  int rank() const { return vf_.rank(); }
  const WittElement& vectorfield() const { return vf_; }
  WittElement& vectorfield() { return vf_; }
  const std::map<std::pair<int, int>, PolyElement>& matrixpart() const { return mat_; }
  void add_matrix_term(int i, int j, const PolyElement& f);
  bool is_zero() const { return vf_.is_zero() && mat_.empty(); }

  ToroidalElement operator+(const ToroidalElement& o) const;
  ToroidalElement operator-(const ToroidalElement& o) const;
  friend bool operator==(const ToroidalElement&, const ToroidalElement&) = default;

  std::string to_string() const;

 private:
  WittElement vf_;
  std::map<std::pair<int, int>, PolyElement> mat_;
};

/// [d1 + f1 A1, d2 + f2 A2] = [d1,d2] + d1(f2) A2 - d2(f1) A1 + f1 f2 [A1,A2].
ToroidalElement toroidal_bracket(const ToroidalElement& x, const ToroidalElement& y);

/// tau(sum f_i d_i) = sum f_i d_i + sum_{i,j} d_i(f_j) E_ij.
ToroidalElement shen_tau(const WittElement& x);

/// All t^alpha d_j with |alpha| <= bound (l1 norm in laurent mode).
std::vector<WittMonomial> monomial_operators(int n, Mode mode, int bound);

}  // namespace wittmod
