#include "wittmod/liealg.hpp"

#include <sstream>

namespace wittmod {

namespace {

// Joins "coefficient*monomial" pieces with signs the way PolyElement does.
class TermWriter {
 public:
  void add(const Scalar& c, const std::string& body) {
    std::string coef;
    bool negative = false;
    if (c.is_rational()) {
      negative = sgn(c.rational()) < 0;
      const mpq_class mag = abs(c.rational());
      if (mag != 1 || body.empty()) coef = mag.get_str();
    } else {
      coef = "(" + c.to_string() + ")";
    }
    if (first_) {
      if (negative) os_ << '-';
    } else {
      os_ << (negative ? " - " : " + ");
    }
    first_ = false;
    os_ << coef;
    if (!coef.empty() && !body.empty()) os_ << '*';
    os_ << body;
  }
  std::string str() const { return first_ ? "0" : os_.str(); }

 private:
  std::ostringstream os_;
  bool first_ = true;
};

std::string join_star(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

Scalar falling(int c, int k) {
  Scalar r(1);
  for (int i = 0; i < k; ++i) r *= Scalar(c - i);
  return r;
}

Scalar binomial(int n, int k) {
  Scalar r(1);
  for (int i = 0; i < k; ++i) r = r * Scalar(n - i) / Scalar(i + 1);
  return r;
}

}  // namespace

// ------------------------------------------------------------- WittElement

WittElement::WittElement(Mode mode, int n) : mode_(mode) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  coeffs_.assign(static_cast<std::size_t>(n), PolyElement(mode, n));
}

WittElement WittElement::monomial(Mode mode, const MultiIndex& alpha, int j, const Scalar& c) {
  WittElement x(mode, alpha.rank());
  if (j < 0 || j >= alpha.rank()) throw std::out_of_range("derivation index out of range");
  x.coeff(j).add_term(alpha, c);
  return x;
}

bool WittElement::is_zero() const {
  for (const auto& f : coeffs_) {
    if (!f.is_zero()) return false;
  }
  return true;
}

std::vector<std::pair<Scalar, WittMonomial>> WittElement::terms() const {
  std::vector<std::pair<Scalar, WittMonomial>> out;
  for (int j = 0; j < rank(); ++j) {
    for (const auto& [a, c] : coeff(j).terms()) out.push_back({c, WittMonomial{a, j}});
  }
  return out;
}

PolyElement WittElement::apply(const PolyElement& g) const {
  PolyElement r(mode_, rank());
  for (int i = 0; i < rank(); ++i) {
    if (!coeff(i).is_zero()) r += poly_mul(coeff(i), partial(i, g));
  }
  return r;
}

void WittElement::check_compatible(const WittElement& o) const {
  if (o.mode_ != mode_) throw std::invalid_argument("mode mismatch");
  if (o.rank() != rank()) throw std::invalid_argument("rank mismatch");
}

WittElement WittElement::operator+(const WittElement& o) const {
  check_compatible(o);
  WittElement r = *this;
  for (int i = 0; i < rank(); ++i) r.coeff(i) += o.coeff(i);
  return r;
}

WittElement WittElement::operator-(const WittElement& o) const {
  check_compatible(o);
  WittElement r = *this;
  for (int i = 0; i < rank(); ++i) r.coeff(i) -= o.coeff(i);
  return r;
}

WittElement WittElement::scaled(const Scalar& c) const {
  WittElement r = *this;
  for (auto& f : r.coeffs_) f = f.scaled(c);
  return r;
}

std::string WittElement::to_string() const {
  TermWriter w;
  for (int j = 0; j < rank(); ++j) {
    for (const auto& [a, c] : coeff(j).terms()) w.add(c, join_star(monomial_string(a), "d" + std::to_string(j + 1)));
  }
  return w.str();
}

WittElement witt_bracket(const WittElement& x, const WittElement& y) {
  if (x.mode() != y.mode()) throw std::invalid_argument("mode mismatch");
  if (x.rank() != y.rank()) throw std::invalid_argument("rank mismatch");
  WittElement r(x.mode(), x.rank());
  for (int i = 0; i < x.rank(); ++i) r.coeff(i) = x.apply(y.coeff(i)) - y.apply(x.coeff(i));
  return r;
}

// ------------------------------------------------------------- WeylElement

WeylElement::WeylElement(Mode mode, int n) : mode_(mode), n_(n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
}

WeylElement WeylElement::term(Mode mode, const MultiIndex& alpha, const MultiIndex& beta, const Scalar& c) {
  WeylElement e(mode, alpha.rank());
  e.add_term(alpha, beta, c);
  return e;
}

WeylElement WeylElement::one(Mode mode, int n) { return term(mode, MultiIndex::zero(n), MultiIndex::zero(n)); }

WeylElement WeylElement::t(Mode mode, int n, int i) { return term(mode, MultiIndex::unit(n, i), MultiIndex::zero(n)); }

WeylElement WeylElement::d(Mode mode, int n, int i) { return term(mode, MultiIndex::zero(n), MultiIndex::unit(n, i)); }

void WeylElement::add_term(const MultiIndex& alpha, const MultiIndex& beta, const Scalar& c) {
  if (alpha.rank() != n_ || beta.rank() != n_) throw std::invalid_argument("multi-index rank mismatch");
  if (!beta.is_nonnegative()) throw std::invalid_argument("derivative exponents must be nonnegative");
  if (mode_ == Mode::plus && !alpha.is_nonnegative()) throw std::invalid_argument("negative t exponent in plus mode");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({alpha, beta}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
  if (o.mode_ != mode_ || o.n_ != n_) throw std::invalid_argument("mode/rank mismatch");
  WeylElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const { return *this + o.scaled(Scalar(-1)); }

WeylElement WeylElement::scaled(const Scalar& c) const {
  WeylElement r(mode_, n_);
  for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
  return r;
}

std::string WeylElement::to_string() const {
  TermWriter w;
  for (const auto& [k, c] : terms_) w.add(c, join_star(monomial_string(k.first), monomial_string(k.second, "d")));
  return w.str();
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  if (a.mode() != b.mode() || a.rank() != b.rank()) throw std::invalid_argument("mode/rank mismatch");
  const int n = a.rank();
  WeylElement r(a.mode(), n);
  // (t^p d^q)(t^c d^e) = sum_k prod_i C(q_i,k_i) (c_i)_{k_i} t^{p+c-k} d^{q-k+e}.
  for (const auto& [ka, ca] : a.terms()) {
    const auto& [p, q] = ka;
    for (const auto& [kb, cb] : b.terms()) {
      const auto& [c, e] = kb;
      MultiIndex k = MultiIndex::zero(n);
      while (true) {
        Scalar coef = ca * cb;
        for (int i = 0; i < n && !coef.is_zero(); ++i) coef *= binomial(q[i], k[i]) * falling(c[i], k[i]);
        if (!coef.is_zero()) r.add_term(p + c - k, q - k + e, coef);
        int pos = 0;
        while (pos < n && k[pos] == q[pos]) {
          k[pos] = 0;
          ++pos;
        }
        if (pos == n) break;
        ++k[pos];
      }
    }
  }
  return r;
}

// --------------------------------------------------------- ToroidalElement

ToroidalElement::ToroidalElement(Mode mode, int n) : vf_(mode, n) {}

ToroidalElement::ToroidalElement(WittElement vf) : vf_(std::move(vf)) {}

ToroidalElement ToroidalElement::matrix_term(Mode mode, int n, int i, int j, const PolyElement& f) {
  ToroidalElement x(mode, n);
  x.add_matrix_term(i, j, f);
  return x;
}

void ToroidalElement::add_matrix_term(int i, int j, const PolyElement& f) {
  if (i < 0 || j < 0 || i >= rank() || j >= rank()) throw std::out_of_range("matrix index out of range");
  if (f.mode() != mode() || f.rank() != rank()) throw std::invalid_argument("mode/rank mismatch");
  auto it = mat_.find({i, j});
  if (it == mat_.end()) {
    if (!f.is_zero()) mat_.emplace(std::make_pair(i, j), f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) mat_.erase(it);
}

ToroidalElement ToroidalElement::operator+(const ToroidalElement& o) const {
  ToroidalElement r(vf_ + o.vf_);
  r.mat_ = mat_;
  for (const auto& [ij, f] : o.mat_) r.add_matrix_term(ij.first, ij.second, f);
  return r;
}

ToroidalElement ToroidalElement::operator-(const ToroidalElement& o) const {
  ToroidalElement r(vf_ - o.vf_);
  r.mat_ = mat_;
  for (const auto& [ij, f] : o.mat_) r.add_matrix_term(ij.first, ij.second, -f);
  return r;
}

std::string ToroidalElement::to_string() const {
  TermWriter w;
  for (int j = 0; j < rank(); ++j) {
    for (const auto& [a, c] : vf_.coeff(j).terms()) w.add(c, join_star(monomial_string(a), "d" + std::to_string(j + 1)));
  }
  for (const auto& [ij, f] : mat_) {
    const std::string e = "E(" + std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1) + ")";
    for (const auto& [a, c] : f.terms()) w.add(c, join_star(monomial_string(a), e));
  }
  return w.str();
}

ToroidalElement toroidal_bracket(const ToroidalElement& x, const ToroidalElement& y) {
  if (x.mode() != y.mode() || x.rank() != y.rank()) throw std::invalid_argument("mode/rank mismatch");
  ToroidalElement r(witt_bracket(x.vectorfield(), y.vectorfield()));
  for (const auto& [ij, g] : y.matrixpart()) r.add_matrix_term(ij.first, ij.second, x.vectorfield().apply(g));
  for (const auto& [ij, f] : x.matrixpart()) r.add_matrix_term(ij.first, ij.second, -y.vectorfield().apply(f));
  // [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
  for (const auto& [ij, f] : x.matrixpart()) {
    for (const auto& [kl, g] : y.matrixpart()) {
      const auto [i, j] = ij;
      const auto [k, l] = kl;
      if (j != k && l != i) continue;
      const PolyElement fg = poly_mul(f, g);
      if (j == k) r.add_matrix_term(i, l, fg);
      if (l == i) r.add_matrix_term(k, j, -fg);
    }
  }
  return r;
}

ToroidalElement shen_tau(const WittElement& x) {
  ToroidalElement r(x);
  for (int i = 0; i < x.rank(); ++i) {
    for (int j = 0; j < x.rank(); ++j) r.add_matrix_term(i, j, partial(i, x.coeff(j)));
  }
  return r;
}

std::vector<WittMonomial> monomial_operators(int n, Mode mode, int bound) {
  std::vector<WittMonomial> out;
  for (const auto& a : multi_indices_up_to(n, bound, mode)) {
    for (int j = 0; j < n; ++j) out.push_back({a, j});
  }
  return out;
}

}  // namespace wittmod
