#include "wittmod/weylmod.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace wittmod {

namespace {

Scalar binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(mpq_class(r));
}

// Rank-1 action of t^e on the basis vector k, as (index, coefficient) pairs.
std::vector<std::pair<int, Scalar>> factor_t_power(const Factor& f, int k, int e) {
  switch (f.kind) {
    case FactorKind::poly:
    case FactorKind::laurent:
    case FactorKind::twisted:
      return {{k + e, Scalar(1)}};
    case FactorKind::quot:
      if (k + e > -1) return {};
      return {{k + e, Scalar(1)}};
    case FactorKind::whittaker: {
      // lambda^e (x - e)^k
      std::vector<std::pair<int, Scalar>> out;
      const Scalar scale = f.lambda.pow(e);
      Scalar shift_pow(1);
      for (int i = k; i >= 0; --i) {
        out.push_back({i, scale * binom(k, i) * shift_pow});
        shift_pow *= Scalar(-e);
      }
      return out;
    }
  }
  return {};
}

std::vector<std::pair<int, Scalar>> factor_d(const Factor& f, int k) {
  switch (f.kind) {
    case FactorKind::poly:
    case FactorKind::laurent:
    case FactorKind::quot:
      if (k == 0) return {};
      return {{k - 1, Scalar(k)}};
    case FactorKind::twisted:
      return {{k - 1, f.lambda + Scalar(k)}};
    case FactorKind::whittaker: {
      // (x+1)^(k+1) / lambda
      std::vector<std::pair<int, Scalar>> out;
      const Scalar inv = Scalar(1) / f.lambda;
      for (int i = k + 1; i >= 0; --i) out.push_back({i, inv * binom(k + 1, i)});
      return out;
    }
  }
  return {};
}

template <class F>
PVector map_axis(const PVector& v, int i, F action) {
  PVector out;
  for (const auto& [k, c] : v) {
    for (const auto& [j, a] : action(k[i])) {
      MultiIndex r = k;
      r[i] = j;
      out.add(r, c * a);
    }
  }
  return out;
}

}  // namespace

bool Factor::valid(int k) const {
  switch (kind) {
    case FactorKind::poly:
    case FactorKind::whittaker:
      return k >= 0;
    case FactorKind::quot:
      return k <= -1;
    default:
      return true;
  }
}

int Factor::level(int k) const { return kind == FactorKind::quot ? -k : std::abs(k); }

std::string Factor::name() const {
  switch (kind) {
    case FactorKind::poly:
      return "Apoly";
    case FactorKind::laurent:
      return "Alaurent";
    case FactorKind::twisted:
      return "TL(" + lambda.to_string() + ")";
    case FactorKind::quot:
      return "Quot";
    case FactorKind::whittaker:
      return "Whittaker(" + lambda.to_string() + ")";
  }
  return "?";
}

WeylModule::WeylModule(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("rank must be positive");
  for (const auto& f : factors_) {
    if (f.kind == FactorKind::whittaker && f.lambda.is_zero()) {
      throw std::invalid_argument("Whittaker parameter must be nonzero");
    }
    if (f.kind == FactorKind::twisted && f.lambda.is_rational() && f.lambda.rational().get_den() == 1) {
      throw std::invalid_argument("TL exponent must not be an integer");
    }
  }
}

WeylModule WeylModule::apoly(int n) { return WeylModule(std::vector<Factor>(static_cast<std::size_t>(n), Factor{FactorKind::poly, {}})); }

WeylModule WeylModule::alaurent(int n) {
  return WeylModule(std::vector<Factor>(static_cast<std::size_t>(n), Factor{FactorKind::laurent, {}}));
}

WeylModule WeylModule::twisted(const std::vector<Scalar>& lambdas) {
  std::vector<Factor> f;
  for (const auto& l : lambdas) f.push_back({FactorKind::twisted, l});
  return WeylModule(std::move(f));
}

WeylModule WeylModule::quot(int n) { return WeylModule(std::vector<Factor>(static_cast<std::size_t>(n), Factor{FactorKind::quot, {}})); }

WeylModule WeylModule::whittaker(const std::vector<Scalar>& lambdas) {
  std::vector<Factor> f;
  for (const auto& l : lambdas) f.push_back({FactorKind::whittaker, l});
  return WeylModule(std::move(f));
}

bool WeylModule::all_factors(FactorKind kind) const {
  return std::all_of(factors_.begin(), factors_.end(), [&](const Factor& f) { return f.kind == kind; });
}

std::string WeylModule::name() const {
  if (all_factors(FactorKind::poly)) return "Apoly";
  if (all_factors(FactorKind::laurent)) return "Alaurent";
  if (all_factors(FactorKind::quot)) return "Quot";
  const bool tl = all_factors(FactorKind::twisted);
  const bool wh = all_factors(FactorKind::whittaker);
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    s += (i ? "," : "");
    s += (tl || wh) ? factors_[i].lambda.to_string() : factors_[i].name();
  }
  if (tl) return "TL(" + s + ")";
  if (wh) return "Whittaker(" + s + ")";
  return "Tensor(" + s + ")";
}

bool WeylModule::valid_index(const MultiIndex& k) const {
  if (k.rank() != rank()) return false;
  for (int i = 0; i < rank(); ++i) {
    if (!factor(i).valid(k[i])) return false;
  }
  return true;
}

int WeylModule::level(const MultiIndex& k) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) s += factor(i).level(k[i]);
  return s;
}

bool WeylModule::is_weight() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.is_weight(); });
}

bool WeylModule::supports(Mode mode) const {
  if (mode == Mode::plus) return true;
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.has_invertible_t(); });
}

bool WeylModule::is_natural() const { return all_factors(FactorKind::poly) || all_factors(FactorKind::laurent); }

Weight WeylModule::weight(const MultiIndex& k) const {
  if (!is_weight()) throw std::invalid_argument("not a weight module");
  Weight w;
  for (int i = 0; i < rank(); ++i) {
    const Factor& f = factor(i);
    w.push_back(f.kind == FactorKind::twisted ? f.lambda + Scalar(k[i]) : Scalar(k[i]));
  }
  return w;
}

PVector WeylModule::act_generator(Gen g, int i, const PVector& v) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("axis index out of range");
  if (g == Gen::t) return act_t_power(i, 1, v);
  return map_axis(v, i, [&](int k) { return factor_d(factor(i), k); });
}

PVector WeylModule::act_t_power(int i, int e, const PVector& v) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("axis index out of range");
  if (e == 0) return v;
  if (e < 0 && !factor(i).has_invertible_t()) throw std::invalid_argument("t" + std::to_string(i + 1) + " is not invertible on " + factor(i).name());
  return map_axis(v, i, [&](int k) { return factor_t_power(factor(i), k, e); });
}

PVector WeylModule::act_t_power(const MultiIndex& alpha, const PVector& v) const {
  PVector r = v;
  for (int i = 0; i < rank() && !r.is_zero(); ++i) r = act_t_power(i, alpha[i], r);
  return r;
}

PVector WeylModule::act_weyl(const WeylElement& w, const PVector& v) const {
  PVector out;
  for (const auto& [key, c] : w.terms()) {
    const auto& [alpha, beta] = key;
    PVector r = v;
    for (int i = 0; i < rank(); ++i) {
      for (int b = 0; b < beta[i] && !r.is_zero(); ++b) r = act_generator(Gen::d, i, r);
    }
    out.add_scaled(act_t_power(alpha, r), c);
  }
  return out;
}

std::vector<MultiIndex> WeylModule::window_basis(int D) const {
  std::vector<MultiIndex> out;
  if (D < 0) return out;
  std::vector<int> cur(factors_.size(), 0);
  auto rec = [&](auto&& self, int pos, int budget) -> void {
    if (pos == rank()) {
      out.emplace_back(cur);
      return;
    }
    const Factor& f = factor(pos);
    for (int k = -budget; k <= budget; ++k) {
      if (!f.valid(k) || f.level(k) > budget) continue;
      cur[static_cast<std::size_t>(pos)] = k;
      self(self, pos + 1, budget - f.level(k));
    }
  };
  rec(rec, 0, D);
  std::stable_sort(out.begin(), out.end(), [&](const MultiIndex& a, const MultiIndex& b) {
    const int la = level(a);
    const int lb = level(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

std::string WeylModule::basis_label(const MultiIndex& k) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < rank(); ++i) {
    const Factor& f = factor(i);
    const std::string var = (f.kind == FactorKind::whittaker ? "x" : "t") + std::to_string(i + 1);
    std::string piece;
    if (f.kind == FactorKind::twisted) {
      const std::string shift = k[i] == 0 ? "" : (k[i] < 0 ? "" : "+") + std::to_string(k[i]);
      piece = var + "^(" + f.lambda.to_string() + shift + ")";
    } else if (k[i] != 0) {
      piece = var + (k[i] == 1 ? "" : "^" + std::to_string(k[i]));
    }
    if (piece.empty()) continue;
    if (!first) os << '*';
    first = false;
    os << piece;
  }
  return first ? "1" : os.str();
}

std::string WeylModule::vector_string(const PVector& v) const {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << '(' << c.to_string() << ")*";
    os << basis_label(k);
  }
  return os.str();
}

std::size_t sum_partial_image_codim(const WeylModule& p, int D) {
  if (D < 1) throw std::invalid_argument("window must be at least 1");
  std::vector<PVector> images;
  for (const auto& k : p.window_basis(D)) {
    for (int i = 0; i < p.rank(); ++i) {
      PVector img = p.act_generator(Gen::d, i, PVector::unit(k));
      if (!img.is_zero()) images.push_back(std::move(img));
    }
  }
  const auto inside = [&](const MultiIndex& k) { return p.level(k) <= D - 1; };
  const auto span = span_within(images, inside);
  return p.window_basis(D - 1).size() - span.dim();
}

bool heuristic_simple(const WeylModule& p, Mode mode, int D) {
  if (!p.supports(mode)) return false;
  const auto window = p.window_basis(D);
  const auto inside = [&](const MultiIndex& k) { return p.level(k) <= D; };
  for (const auto& seed : window) {
    EchelonBasis<MultiIndex> span;
    std::vector<PVector> frontier{PVector::unit(seed)};
    span.insert(frontier.front());
    while (!frontier.empty() && span.dim() < window.size()) {
      const PVector x = frontier.back();
      frontier.pop_back();
      for (int i = 0; i < p.rank(); ++i) {
        std::vector<PVector> next{p.act_generator(Gen::t, i, x), p.act_generator(Gen::d, i, x)};
        if (mode == Mode::laurent) next.push_back(p.act_t_power(i, -1, x));
        for (auto& y : next) {
          y = y.filtered(inside);
          if (span.insert(y)) frontier.push_back(std::move(y));
        }
      }
    }
    if (span.dim() < window.size()) return false;
  }
  return true;
}

}  // namespace wittmod
