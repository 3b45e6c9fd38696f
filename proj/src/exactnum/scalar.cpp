#include "wittmod/exactnum.hpp"

namespace wittmod {

namespace {

Poly numerator_of(const mpq_class& q) { return Poly(q.get_num()); }
Poly denominator_of(const mpq_class& q) { return Poly(q.get_den()); }

bool needs_parens(const Poly& p) { return p.term_count() > 1; }

}  // namespace

Scalar::Scalar(long v) : rat_(v) {}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("zero divisor");
  rat_ = mpq_class(num, den);
  rat_.canonicalize();
}

Scalar::Scalar(const mpq_class& q) : rat_(q) { rat_.canonicalize(); }

Scalar Scalar::parameter(std::string_view name) { return parameter(ParameterRegistry::intern(name)); }

Scalar Scalar::parameter(VarId id) {
  Scalar s;
  s.fn_ = std::make_shared<const Fraction>(Fraction{Poly::variable(id), Poly(1)});
  return s;
}

Scalar Scalar::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("zero divisor");
  if (num.is_zero()) return {};
  if (num.is_constant() && den.is_constant()) {
    mpq_class q(num.constant_value(), den.constant_value());
    q.canonicalize();
    return Scalar(q);
  }
  const Poly g = gcd(num, den);
  Poly n = *num.divide_exact(g);
  Poly d = *den.divide_exact(g);
  return from_reduced(std::move(n), std::move(d));
}

Scalar Scalar::from_reduced(Poly num, Poly den) {
  if (sgn(den.leading_coefficient()) < 0) {
    num = -num;
    den = -den;
  }
  if (num.is_constant() && den.is_constant()) {
    mpq_class q(num.constant_value(), den.constant_value());
    q.canonicalize();
    return Scalar(q);
  }
  Scalar s;
  s.fn_ = std::make_shared<const Fraction>(Fraction{std::move(num), std::move(den)});
  return s;
}

Poly Scalar::numerator() const { return fn_ ? fn_->num : numerator_of(rat_); }
Poly Scalar::denominator() const { return fn_ ? fn_->den : denominator_of(rat_); }

std::uint32_t Scalar::complexity() const {
  if (!fn_) return 0;
  return fn_->num.total_degree() + fn_->den.total_degree();
}

std::size_t Scalar::term_count() const {
  if (!fn_) return 1;
  return fn_->num.term_count() + fn_->den.term_count();
}

Scalar Scalar::operator-() const {
  if (!fn_) return Scalar(mpq_class(-rat_));
  Scalar s;
  s.fn_ = std::make_shared<const Fraction>(Fraction{-fn_->num, fn_->den});
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (!fn_ && !o.fn_) return Scalar(mpq_class(rat_ + o.rat_));
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const Poly an = numerator(), ad = denominator();
  const Poly bn = o.numerator(), bd = o.denominator();
  if (ad == bd) return fraction(an + bn, ad);
  // Combine over the lcm of the denominators to keep intermediate sizes down.
  const Poly g = gcd(ad, bd);
  const Poly adg = *ad.divide_exact(g);
  const Poly bdg = *bd.divide_exact(g);
  return fraction(an * bdg + bn * adg, adg * bd);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (!fn_ && !o.fn_) return Scalar(mpq_class(rat_ * o.rat_));
  if (is_zero() || o.is_zero()) return {};
  if (is_one()) return o;
  if (o.is_one()) return *this;
  const Poly an = numerator(), ad = denominator();
  const Poly bn = o.numerator(), bd = o.denominator();
  // Both inputs are reduced, so only cross cancellations remain.
  const Poly g1 = gcd(an, bd);
  const Poly g2 = gcd(bn, ad);
  Poly num = *an.divide_exact(g1) * *bn.divide_exact(g2);
  Poly den = *ad.divide_exact(g2) * *bd.divide_exact(g1);
  return from_reduced(std::move(num), std::move(den));
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw std::domain_error("zero divisor");
  if (!fn_ && !o.fn_) return Scalar(mpq_class(rat_ / o.rat_));
  Scalar inv;
  if (!o.fn_) {
    inv = Scalar(mpq_class(1 / o.rat_));
  } else {
    inv = from_reduced(o.fn_->den, o.fn_->num);
  }
  return *this * inv;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return (Scalar(1) / *this).pow(-e);
  Scalar r(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.fn_ && !b.fn_) return a.rat_ == b.rat_;
  if (!a.fn_ || !b.fn_) return false;
  return a.fn_->num == b.fn_->num && a.fn_->den == b.fn_->den;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (!a.fn_ && !b.fn_) {
    const int c = cmp(a.rat_, b.rat_);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  // Rational constants sort before genuine functions.
  if (!a.fn_) return std::strong_ordering::less;
  if (!b.fn_) return std::strong_ordering::greater;
  if (auto c = compare(a.fn_->num, b.fn_->num); c != 0) return c;
  return compare(a.fn_->den, b.fn_->den);
}

std::string Scalar::to_string() const {
  if (!fn_) return rat_.get_str();
  const Poly& n = fn_->num;
  const Poly& d = fn_->den;
  if (d.is_constant() && d.constant_value() == 1) return n.to_string();
  std::string ns = needs_parens(n) ? "(" + n.to_string() + ")" : n.to_string();
  const bool bare = d.is_constant() ||
                    (d.is_monomial() && d.leading_coefficient() == 1 && d.leading_monomial().factors().size() == 1);
  const std::string ds = bare ? d.to_string() : "(" + d.to_string() + ")";
  return ns + "/" + ds;
}

}  // namespace wittmod
