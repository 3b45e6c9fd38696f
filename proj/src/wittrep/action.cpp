#include <sstream>

#include "wittmod/wittrep.hpp"

namespace wittmod {

FPModule::FPModule(WeylModule p, GlModule m, Mode mode) : p_(std::move(p)), m_(std::move(m)), mode_(mode) {
  if (p_.rank() != m_.rank()) {
    throw std::invalid_argument("rank mismatch: P has rank " + std::to_string(p_.rank()) + ", M has rank " +
                                std::to_string(m_.rank()));
  }
  if (!p_.supports(mode_)) throw std::invalid_argument(p_.name() + " is not a module over the Laurent Weyl algebra");
  m_diagonal_ = m_.has_diagonal_weights();
  if (m_diagonal_) {
    for (std::size_t b = 0; b < m_.dim(); ++b) m_weights_.push_back(m_.basis_weight(b));
  }
}

std::vector<Coord> FPModule::window_basis(int D) const {
  std::vector<Coord> out;
  for (const auto& k : p_.window_basis(D)) {
    for (std::size_t m = 0; m < m_.dim(); ++m) out.push_back({k, m});
  }
  return out;
}

Weight FPModule::block_key(const Coord& c) const {
  Weight key;
  if (!m_diagonal_) return key;
  const auto& mw = m_weights_[c.m];
  for (int i = 0; i < rank(); ++i) {
    const Factor& f = p_.factor(i);
    if (!f.is_weight()) continue;
    const Scalar pw = f.kind == FactorKind::twisted ? f.lambda + Scalar(c.p[i]) : Scalar(c.p[i]);
    key.push_back(pw + mw[static_cast<std::size_t>(i)]);
  }
  return key;
}

std::map<Weight, FPMVector> FPModule::split_blocks(const FPMVector& v) const {
  std::map<Weight, FPMVector> out;
  for (const auto& [c, a] : v) out[block_key(c)].set(c, a);
  return out;
}

FPMVector FPModule::tensor(const PVector& p, std::size_t m, const Scalar& c) const {
  FPMVector out;
  for (const auto& [k, a] : p) out.add({k, m}, a * c);
  return out;
}

std::string FPModule::vector_string(const FPMVector& v) const {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, a] : v) {
    if (!first) os << " + ";
    first = false;
    if (!a.is_one()) os << '(' << a.to_string() << ")*";
    os << p_.basis_label(c.p) << "(x)" << m_.labels()[c.m];
  }
  return os.str();
}

FPMVector fpm_act(const FPModule& f, const WittMonomial& x, const FPMVector& v) {
  const int n = f.rank();
  if (x.alpha.rank() != n) throw std::invalid_argument("operator rank mismatch");
  if (f.mode() == Mode::plus && !x.alpha.is_nonnegative()) throw std::invalid_argument("negative exponent in plus mode");
  const WeylModule& P = f.P();
  FPMVector out;
  for (const auto& [c, a] : v) {
    const PVector g = PVector::unit(c.p);
    out.add_scaled(f.tensor(P.act_t_power(x.alpha, P.act_generator(Gen::d, x.j, g)), c.m), a);
    for (int i = 0; i < n; ++i) {
      if (x.alpha[i] == 0) continue;
      const MVector ev = f.M().act(i, x.j, MVector::unit(c.m));
      if (ev.is_zero()) continue;
      const PVector h = P.act_t_power(x.alpha - MultiIndex::unit(n, i), g);
      for (const auto& [m, b] : ev) out.add_scaled(f.tensor(h, m), a * b * Scalar(x.alpha[i]));
    }
  }
  return out;
}

FPMVector fpm_act(const FPModule& f, const WittElement& x, const FPMVector& v) {
  FPMVector out;
  for (const auto& [c, m] : x.terms()) out.add_scaled(fpm_act(f, m, v), c);
  return out;
}

Weight weight_of(const FPModule& f, const Coord& c) {
  if (!f.P().is_weight() || !f.M().has_diagonal_weights()) throw std::invalid_argument("not a weight module");
  Weight w = f.P().weight(c.p);
  const Weight mw = f.M().basis_weight(c.m);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += mw[i];
  return w;
}

DeRham::DeRham(WeylModule p) : p_(std::move(p)) {
  const int n = p_.rank();
  for (int k = 0; k <= n; ++k) {
    ext_.push_back(exterior_power(k, n));
    subsets_.push_back(sorted_subsets(n, k));
    for (std::size_t i = 0; i < subsets_.back().size(); ++i) index_[subsets_.back()[i]] = i;
  }
}

FPMVector DeRham::pi(int k, const FPMVector& v) const {
  const int n = rank();
  if (k == n) throw std::invalid_argument("top degree");
  if (k < 0 || k > n) throw std::out_of_range("pi index out of range");
  FPMVector out;
  for (const auto& [c, a] : v) {
    const auto& s = subset(k, c.m);
    for (int l = 0; l < n; ++l) {
      auto ins = wedge_insert(l, s);
      if (!ins) continue;
      const PVector q = p_.act_generator(Gen::d, l, PVector::unit(c.p));
      const std::size_t target = subset_index(ins->second);
      for (const auto& [kk, b] : q) out.add({kk, target}, a * b * Scalar(ins->first));
    }
  }
  return out;
}

FPMVector pi_map(const WeylModule& p, int k, const FPMVector& v) { return DeRham(p).pi(k, v); }

namespace {

FPMVector torsion_sample(const FPModule& f, int l, int i, int j, const MultiIndex& alpha, const FPMVector& v, int m) {
  const int n = f.rank();
  const MultiIndex el = MultiIndex::unit(n, l);
  const FPMVector inner = fpm_act(f, WittMonomial{alpha + el * (2 - m), j}, v);
  return fpm_act(f, WittMonomial{el * m, i}, inner);
}

}  // namespace

FPMVector torsion_combination(const FPModule& f, int l, int i, int j, const MultiIndex& alpha, const FPMVector& v,
                              const std::array<Scalar, 3>& c) {
  FPMVector out;
  for (int m = 0; m <= 2; ++m) {
    if (!c[static_cast<std::size_t>(m)].is_zero()) out.add_scaled(torsion_sample(f, l, i, j, alpha, v, m), c[static_cast<std::size_t>(m)]);
  }
  return out;
}

FPMVector torsion_operator(const FPModule& f, int l, int i, int j, const MultiIndex& alpha, const FPMVector& v) {
  return torsion_combination(f, l, i, j, alpha, v, {Scalar(1, 2), Scalar(-1), Scalar(1, 2)});
}

FPMVector torsion_closed_form(const FPModule& f, int l, int i, int j, const MultiIndex& alpha, const FPMVector& v) {
  const ExactMatrix op = claim3_operator(f.M(), l, i, j);
  FPMVector out;
  for (const auto& [c, a] : v) {
    const MVector w = op.apply(MVector::unit(c.m));
    if (w.is_zero()) continue;
    const PVector p = f.P().act_t_power(alpha, PVector::unit(c.p));
    for (const auto& [m, b] : w) out.add_scaled(f.tensor(p, m), a * b);
  }
  return out;
}

}  // namespace wittmod
