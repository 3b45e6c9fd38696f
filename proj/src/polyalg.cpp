#include "wittmod/polyalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace wittmod {

std::string to_string(Mode m) { return m == Mode::plus ? "plus" : "laurent"; }

Mode mode_from_string(const std::string& s) {
  if (s == "plus") return Mode::plus;
  if (s == "laurent") return Mode::laurent;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

MultiIndex MultiIndex::unit(int n, int i) {
  MultiIndex a = zero(n);
  a[i] = 1;
  return a;
}

int MultiIndex::total() const {
  int s = 0;
  for (int x : e_) s += x;
  return s;
}

int MultiIndex::l1() const {
  int s = 0;
  for (int x : e_) s += std::abs(x);
  return s;
}

bool MultiIndex::is_nonnegative() const {
  return std::all_of(e_.begin(), e_.end(), [](int x) { return x >= 0; });
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (o.rank() != rank()) throw std::invalid_argument("multi-index rank mismatch");
  MultiIndex r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  if (o.rank() != rank()) throw std::invalid_argument("multi-index rank mismatch");
  MultiIndex r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

MultiIndex MultiIndex::operator*(int k) const {
  MultiIndex r = *this;
  for (auto& x : r.e_) x *= k;
  return r;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e_.size(); ++i) os << (i ? "," : "") << e_[i];
  os << ')';
  return os.str();
}

namespace {

void enumerate(int n, int pos, int budget, Mode mode, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  if (pos == n) {
    out.emplace_back(cur);
    return;
  }
  const int lo = mode == Mode::plus ? 0 : -budget;
  for (int v = lo; v <= budget; ++v) {
    cur[static_cast<std::size_t>(pos)] = v;
    enumerate(n, pos + 1, budget - std::abs(v), mode, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices_up_to(int n, int bound, Mode mode) {
  std::vector<MultiIndex> out;
  if (bound < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  enumerate(n, 0, bound, mode, cur, out);
  std::stable_sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    if (a.l1() != b.l1()) return a.l1() < b.l1();
    return a < b;
  });
  return out;
}

std::string monomial_string(const MultiIndex& a, const char* var) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < a.rank(); ++i) {
    if (a[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << var << (i + 1);
    if (a[i] != 1) os << '^' << a[i];
  }
  return os.str();
}

// ------------------------------------------------------------- PolyElement

PolyElement::PolyElement(Mode mode, int n) : mode_(mode), n_(n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
}

PolyElement PolyElement::monomial(Mode mode, const MultiIndex& a, const Scalar& c) {
  PolyElement p(mode, a.rank());
  p.add_term(a, c);
  return p;
}

PolyElement PolyElement::constant(Mode mode, int n, const Scalar& c) { return monomial(mode, MultiIndex::zero(n), c); }

Scalar PolyElement::coefficient(const MultiIndex& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Scalar() : it->second;
}

void PolyElement::add_term(const MultiIndex& a, const Scalar& c) {
  if (a.rank() != n_) throw std::invalid_argument("multi-index rank mismatch");
  if (mode_ == Mode::plus && !a.is_nonnegative()) {
    throw std::invalid_argument("negative exponent " + a.to_string() + " in polynomial mode");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void PolyElement::check_compatible(const PolyElement& o) const {
  if (o.mode_ != mode_) throw std::invalid_argument("mode mismatch");
  if (o.n_ != n_) throw std::invalid_argument("rank mismatch");
}

PolyElement& PolyElement::operator+=(const PolyElement& o) {
  check_compatible(o);
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

PolyElement& PolyElement::operator-=(const PolyElement& o) {
  check_compatible(o);
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

PolyElement PolyElement::operator+(const PolyElement& o) const {
  PolyElement r = *this;
  r += o;
  return r;
}

PolyElement PolyElement::operator-(const PolyElement& o) const {
  PolyElement r = *this;
  r -= o;
  return r;
}

PolyElement PolyElement::operator-() const { return scaled(Scalar(-1)); }

PolyElement PolyElement::scaled(const Scalar& c) const {
  PolyElement r(mode_, n_);
  if (c.is_zero()) return r;
  for (const auto& [a, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), a, v * c);
  return r;
}

std::string PolyElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<MultiIndex, Scalar>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    if (x.first.total() != y.first.total()) return x.first.total() > y.first.total();
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : ordered) {
    const std::string mono = monomial_string(a);
    std::string coef;
    bool negative = false;
    if (c.is_rational()) {
      negative = sgn(c.rational()) < 0;
      const mpq_class mag = abs(c.rational());
      if (mag != 1 || mono.empty()) coef = mag.get_str();
    } else {
      coef = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << coef;
    if (!coef.empty() && !mono.empty()) os << '*';
    os << mono;
  }
  return os.str();
}

PolyElement poly_mul(const PolyElement& f, const PolyElement& g) {
  if (f.mode() != g.mode()) throw std::invalid_argument("mode mismatch");
  if (f.rank() != g.rank()) throw std::invalid_argument("rank mismatch");
  PolyElement r(f.mode(), f.rank());
  for (const auto& [a, c] : f.terms()) {
    for (const auto& [b, d] : g.terms()) r.add_term(a + b, c * d);
  }
  return r;
}

PolyElement partial(int i, const PolyElement& f) {
  if (i < 0 || i >= f.rank()) throw std::out_of_range("axis index out of range");
  PolyElement r(f.mode(), f.rank());
  for (const auto& [a, c] : f.terms()) {
    if (a[i] == 0) continue;
    MultiIndex b = a;
    b[i] -= 1;
    r.add_term(b, c * Scalar(a[i]));
  }
  return r;
}

PolyElement graded_component(const PolyElement& f, int d) {
  PolyElement r(f.mode(), f.rank());
  for (const auto& [a, c] : f.terms()) {
    if (a.total() == d) r.add_term(a, c);
  }
  return r;
}

}  // namespace wittmod
