#include <set>

#include "wittmod/wittrep.hpp"

namespace wittmod {

std::vector<Weight> weight_support(const FPModule& f, int D) {
  std::set<Weight> out;
  for (const auto& c : f.window_basis(D)) out.insert(weight_of(f, c));
  return {out.begin(), out.end()};
}

namespace {

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Scalar mod_one(const Scalar& s) {
  if (s.is_rational()) {
    const mpq_class& q = s.rational();
    return s - Scalar(mpq_class(floor_div(q.get_num(), q.get_den())));
  }
  const Poly den = s.denominator();
  if (!den.is_constant()) return s;
  const Poly num = s.numerator();
  auto it = num.terms().find(Monomial());
  if (it == num.terms().end()) return s;
  return s - Scalar(mpq_class(floor_div(it->second, den.constant_value())));
}

}  // namespace

Weight weight_class(const Weight& w) {
  Weight out;
  out.reserve(w.size());
  for (const auto& s : w) out.push_back(mod_one(s));
  return out;
}

Fingerprint fingerprint(const FPModule& f, int D) {
  Fingerprint fp;
  fp.weight = f.P().is_weight() && f.M().has_diagonal_weights();
  if (fp.weight) {
    for (const auto& c : f.window_basis(D)) ++fp.classes[weight_class(weight_of(f, c))];
    return fp;
  }
  fp.graded_dims.assign(static_cast<std::size_t>(D + 1), 0);
  for (const auto& c : f.window_basis(D)) ++fp.graded_dims[static_cast<std::size_t>(f.level(c))];
  return fp;
}

}  // namespace wittmod
