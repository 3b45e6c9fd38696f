#pragma once

// Multi-indices and the algebras A_n^+ = Q(params)[t1..tn] and
// A_n = Q(params)[t1^{+-1}..tn^{+-1}].

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "wittmod/exactnum.hpp"

namespace wittmod {

/// Coefficient ring selector: polynomials (the "plus" algebras) or Laurent
/// polynomials.
enum class Mode { plus, laurent };

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {}
  MultiIndex(std::initializer_list<int> entries) : e_(entries) {}
  static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  static MultiIndex unit(int n, int i);

  int rank() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& entries() const { return e_; }

  /// Signed total degree a_1 + ... + a_n.
  int total() const;
  /// Sum of absolute values.
  int l1() const;
  bool is_nonnegative() const;

  MultiIndex operator+(const MultiIndex& o) const;
  MultiIndex operator-(const MultiIndex& o) const;
  MultiIndex operator*(int k) const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  std::string to_string() const;

 private:
  std::vector<int> e_;
};

/// All multi-indices of rank n with |a| <= bound: nonnegative entries with
/// total <= bound in plus mode, l1 norm <= bound in laurent mode. The order is
/// increasing norm, then lexicographic.
std::vector<MultiIndex> multi_indices_up_to(int n, int bound, Mode mode);

/// "t1^2*t2^-1"; empty string for t^0.
std::string monomial_string(const MultiIndex& a, const char* var = "t");

/// Element of A_n^+ or A_n: finite sum of c * t^a.
class PolyElement {
 public:
  PolyElement(Mode mode, int n);
  static PolyElement monomial(Mode mode, const MultiIndex& a, const Scalar& c = Scalar(1));
  static PolyElement constant(Mode mode, int n, const Scalar& c);

  Mode mode() const { return mode_; }
  int rank() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const MultiIndex& a) const;

  void add_term(const MultiIndex& a, const Scalar& c);

  PolyElement operator+(const PolyElement& o) const;
  PolyElement operator-(const PolyElement& o) const;
  PolyElement operator-() const;
  PolyElement scaled(const Scalar& c) const;
  PolyElement& operator+=(const PolyElement& o);
  PolyElement& operator-=(const PolyElement& o);

  friend bool operator==(const PolyElement&, const PolyElement&) = default;

  std::string to_string() const;

 private:
  void check_compatible(const PolyElement& o) const;

  Mode mode_;
  int n_;
  std::map<MultiIndex, Scalar> terms_;
};

/// Throws std::invalid_argument on mode or rank mismatch.
PolyElement poly_mul(const PolyElement& f, const PolyElement& g);
inline PolyElement operator*(const PolyElement& f, const PolyElement& g) { return poly_mul(f, g); }

/// Formal partial derivative in the 0-based axis i.
PolyElement partial(int i, const PolyElement& f);

/// Sum of the terms of total degree d.
PolyElement graded_component(const PolyElement& f, int d);

}  // namespace wittmod
