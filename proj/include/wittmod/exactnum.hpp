#pragma once

// Exact coefficient field Q(l1, ..., lm) and sparse linear algebra over it.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wittmod {

using VarId = std::uint32_t;

/// Process-wide table of named field generators. Names are interned once and
/// never removed, so a VarId stays valid for the life of the program.
class ParameterRegistry {
 public:
  static VarId intern(std::string_view name);
  static std::string name(VarId id);
};

/// Power product of parameters, stored as (var, exponent) pairs sorted by var.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(VarId v, std::uint32_t exp = 1);

  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree_in(VarId v) const;
  std::uint32_t total_degree() const;
  std::optional<VarId> max_var() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) == true for `other / *this`.
  Monomial quotient(const Monomial& divisor) const;
  Monomial without(VarId v) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  const std::vector<std::pair<VarId, std::uint32_t>>& factors() const { return factors_; }

  /// Lexicographic order in which larger VarIds are more significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<std::pair<VarId, std::uint32_t>> factors_;
};

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return (a <=> b) > 0; }
};

/// Multivariate polynomial with integer coefficients. Iteration starts at the
/// lexicographically leading term.
class Poly {
 public:
  using Terms = std::map<Monomial, mpz_class, MonomialGreater>;

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  explicit Poly(const mpz_class& c);
  static Poly variable(VarId v);
  static Poly term(const mpz_class& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term value; only meaningful when is_constant().
  mpz_class constant_value() const;
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const mpz_class& leading_coefficient() const { return terms_.begin()->second; }
  std::size_t term_count() const { return terms_.size(); }
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(VarId v) const;
  std::optional<VarId> max_var() const;
  const Terms& terms() const { return terms_; }

  /// Coefficients of `v^d` as polynomials not involving v.
  std::map<std::uint32_t, Poly> split(VarId v) const;
  mpz_class integer_content() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly scaled(const mpz_class& c) const;
  Poly times_monomial(const mpz_class& c, const Monomial& m) const;

  /// Exact quotient, or nullopt when `divisor` does not divide *this.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend std::strong_ordering compare(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const mpz_class& c);
  Terms terms_;
};

/// Greatest common divisor in Z[l1..lm], normalized to a positive leading
/// coefficient. gcd(0, 0) == 0.
Poly gcd(const Poly& a, const Poly& b);

/// Element of Q(l1..lm). Rational constants are stored inline. Everything else
/// is a reduced fraction whose denominator has a positive leading coefficient,
/// so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v);  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q);
  static Scalar parameter(std::string_view name);
  static Scalar parameter(VarId id);
  static Scalar fraction(const Poly& num, const Poly& den);

  bool is_zero() const { return !fn_ && sgn(rat_) == 0; }
  bool is_one() const { return !fn_ && rat_ == 1; }
  bool is_rational() const { return !fn_; }
  /// Only valid when is_rational().
  const mpq_class& rational() const { return rat_; }
  Poly numerator() const;
  Poly denominator() const;
  /// Sum of numerator and denominator total degrees; used to rank pivots.
  std::uint32_t complexity() const;
  std::size_t term_count() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Throws std::domain_error("zero divisor") when o is zero.
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar pow(int e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  struct Fraction {
    Poly num;
    Poly den;
  };
  static Scalar from_reduced(Poly num, Poly den);

  mpq_class rat_{0};
  std::shared_ptr<const Fraction> fn_;
};

/// Finite linear combination indexed by an ordered key. Zero coefficients are
/// never stored.
template <class Key>
class SparseVector {
 public:
  using Map = std::map<Key, Scalar>;

  SparseVector() = default;
  static SparseVector unit(const Key& k) {
    SparseVector v;
    v.entries_.emplace(k, Scalar(1));
    return v;
  }

  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const Map& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Scalar get(const Key& k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? Scalar() : it->second;
  }
  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }
  void set(const Key& k, const Scalar& c) {
    if (c.is_zero()) {
      entries_.erase(k);
    } else {
      entries_[k] = c;
    }
  }
  void add_scaled(const SparseVector& o, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : o.entries_) add(k, v * c);
  }
  SparseVector scaled(const Scalar& c) const {
    SparseVector r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : entries_) r.entries_.emplace_hint(r.entries_.end(), k, v * c);
    return r;
  }
  SparseVector operator+(const SparseVector& o) const {
    SparseVector r = *this;
    r.add_scaled(o, Scalar(1));
    return r;
  }
  SparseVector operator-(const SparseVector& o) const {
    SparseVector r = *this;
    r.add_scaled(o, Scalar(-1));
    return r;
  }
  SparseVector& operator+=(const SparseVector& o) {
    add_scaled(o, Scalar(1));
    return *this;
  }
  SparseVector& operator-=(const SparseVector& o) {
    add_scaled(o, Scalar(-1));
    return *this;
  }
  friend bool operator==(const SparseVector& a, const SparseVector& b) = default;

  /// Keeps only the entries accepted by `pred`.
  template <class Pred>
  SparseVector filtered(Pred pred) const {
    SparseVector r;
    for (const auto& [k, v] : entries_) {
      if (pred(k)) r.entries_.emplace_hint(r.entries_.end(), k, v);
    }
    return r;
  }

 private:
  Map entries_;
};

namespace detail {
// Pick the entry with the smallest coefficient complexity; ties go to the
// smallest key.
template <class Key>
const Key& choose_pivot(const SparseVector<Key>& v) {
  auto best = v.begin();
  for (auto it = v.begin(); it != v.end(); ++it) {
    const auto c = it->second.complexity();
    const auto bc = best->second.complexity();
    if (c < bc || (c == bc && it->second.term_count() < best->second.term_count())) best = it;
  }
  return best->first;
}
}  // namespace detail

/// Semi-echelon basis of a subspace. Row k has pivot coefficient 1 and zeros at
/// the pivots of all earlier rows, so a single ordered pass reduces a vector.
template <class Key>
class EchelonBasis {
 public:
  std::size_t dim() const { return rows_.size(); }
  const std::vector<SparseVector<Key>>& rows() const { return rows_; }
  const std::vector<Key>& pivots() const { return pivots_; }

  /// Canonical residual modulo the span; linear in v.
  SparseVector<Key> reduce(SparseVector<Key> v) const {
    for (std::size_t k = 0; k < rows_.size() && !v.is_zero(); ++k) {
      const Scalar c = v.get(pivots_[k]);
      if (!c.is_zero()) v.add_scaled(rows_[k], -c);
    }
    return v;
  }
  bool contains(const SparseVector<Key>& v) const { return reduce(v).is_zero(); }

  /// Adds v to the span; returns false if it was already there.
  bool insert(const SparseVector<Key>& v) {
    SparseVector<Key> r = reduce(v);
    if (r.is_zero()) return false;
    const Key pivot = detail::choose_pivot(r);
    const Scalar inv = Scalar(1) / r.get(pivot);
    rows_.push_back(r.scaled(inv));
    pivots_.push_back(pivot);
    return true;
  }

 private:
  std::vector<SparseVector<Key>> rows_;
  std::vector<Key> pivots_;
};

/// Basis of {c : sum_i c_i * vectors[i] = 0}, each relation indexed by
/// position in `vectors`.
template <class Key>
std::vector<SparseVector<std::size_t>> linear_relations(const std::vector<SparseVector<Key>>& vectors) {
  std::vector<SparseVector<Key>> rows;
  std::vector<SparseVector<std::size_t>> combos;
  std::vector<Key> pivots;
  std::vector<SparseVector<std::size_t>> relations;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    SparseVector<Key> v = vectors[i];
    SparseVector<std::size_t> combo = SparseVector<std::size_t>::unit(i);
    for (std::size_t k = 0; k < rows.size() && !v.is_zero(); ++k) {
      const Scalar c = v.get(pivots[k]);
      if (c.is_zero()) continue;
      v.add_scaled(rows[k], -c);
      combo.add_scaled(combos[k], -c);
    }
    if (v.is_zero()) {
      relations.push_back(std::move(combo));
      continue;
    }
    const Key pivot = detail::choose_pivot(v);
    const Scalar inv = Scalar(1) / v.get(pivot);
    rows.push_back(v.scaled(inv));
    combos.push_back(combo.scaled(inv));
    pivots.push_back(pivot);
  }
  return relations;
}

/// Basis of span(vectors) intersected with the coordinate subspace of keys
/// accepted by `inside`. Vectors are combined so that their outside parts
/// cancel.
template <class Key, class Pred>
EchelonBasis<Key> span_within(const std::vector<SparseVector<Key>>& vectors, Pred inside) {
  EchelonBasis<Key> out;
  std::vector<SparseVector<Key>> outer;
  outer.reserve(vectors.size());
  bool any_outer = false;
  for (const auto& v : vectors) {
    outer.push_back(v.filtered([&](const Key& k) { return !inside(k); }));
    any_outer = any_outer || !outer.back().is_zero();
  }
  if (!any_outer) {
    for (const auto& v : vectors) out.insert(v);
    return out;
  }
  // In-window vectors go in directly; only the rest need relations.
  std::vector<std::size_t> mixed;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (outer[i].is_zero()) {
      out.insert(vectors[i]);
    } else {
      mixed.push_back(i);
    }
  }
  std::vector<SparseVector<Key>> mixed_outer;
  for (std::size_t i : mixed) mixed_outer.push_back(outer[i]);
  for (const auto& rel : linear_relations(mixed_outer)) {
    SparseVector<Key> v;
    for (const auto& [pos, c] : rel) v.add_scaled(vectors[mixed[pos]], c);
    out.insert(v.filtered(inside));
  }
  return out;
}

using DenseVector = std::vector<Scalar>;

/// Sparse matrix over Q(l1..lm). Stored entries are nonzero.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<DenseVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void add(std::size_t r, std::size_t c, const Scalar& v);
  const std::map<std::pair<std::size_t, std::size_t>, Scalar>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  bool is_diagonal() const;

  /// Columns as sparse vectors over the row index.
  std::vector<SparseVector<std::size_t>> columns() const;
  SparseVector<std::size_t> apply(const SparseVector<std::size_t>& v) const;
  DenseVector apply(const DenseVector& v) const;

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(const Scalar& c) const;
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> entries_;
};

std::size_t rank(const ExactMatrix& a);
/// Basis of the right null space; size is cols - rank.
std::vector<DenseVector> kernel_basis(const ExactMatrix& a);
/// Throws std::invalid_argument on dimension mismatch.
bool in_span(const DenseVector& v, const std::vector<DenseVector>& basis);

SparseVector<std::size_t> to_sparse(const DenseVector& v);
DenseVector to_dense(const SparseVector<std::size_t>& v, std::size_t dim);

}  // namespace wittmod
