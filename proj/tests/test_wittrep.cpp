#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "wittmod/wittrep.hpp"

using namespace wittmod;
using wittmod::testing::uniform;

namespace {

const Mode P = Mode::plus;

Scalar par(const char* name) { return Scalar::parameter(name); }

WittMonomial op(std::initializer_list<int> a, int j) { return {MultiIndex(a), j}; }

FPMVector basis(std::initializer_list<int> k, std::size_t m, const Scalar& c = Scalar(1)) {
  return FPMVector::unit({MultiIndex(k), m}).scaled(c);
}

std::size_t label(const GlModule& m, const std::string& s) {
  const auto it = std::find(m.labels().begin(), m.labels().end(), s);
  REQUIRE(it != m.labels().end());
  return static_cast<std::size_t>(it - m.labels().begin());
}

FPMVector random_vector(const FPModule& f, int D, int terms) {
  const auto b = f.window_basis(D);
  FPMVector v;
  for (int k = 0; k < terms; ++k) v.add(b[static_cast<std::size_t>(uniform(0, static_cast<int>(b.size()) - 1))], Scalar(uniform(-3, 3)));
  return v;
}

bool subset(const FPModule& f, const WindowedSubspace& a, const WindowedSubspace& b) {
  for (const auto& v : a.basis()) {
    if (!b.contains(f, v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("fpm_act examples") {
  const FPModule f(WeylModule::apoly(2), exterior_power(1, 2), P);
  CHECK(fpm_act(f, op({1, 0}, 1), basis({0, 0}, 1)) == basis({0, 0}, 0));
  CHECK(fpm_act(f, op({1, 1}, 0), basis({1, 0}, 0)) == basis({1, 1}, 0, Scalar(2)) + basis({2, 0}, 1));
  const Scalar b = par("b");
  const FPModule tb(WeylModule::apoly(2), scalar_module(b, 2), P);
  // g = t1 t2^2
  const FPMVector g = basis({1, 2}, 0);
  CHECK(fpm_act(tb, op({2, 0}, 0), g) == basis({2, 2}, 0) + basis({2, 2}, 0, b));
}

TEST_CASE("fpm_act on elements is linear in the operator") {
  const FPModule f(WeylModule::twisted({par("l1"), par("l2")}), sym_power(2, 2), Mode::laurent);
  WittElement x = WittElement::monomial(Mode::laurent, MultiIndex{1, -1}, 0, Scalar(3));
  x = x + WittElement::monomial(Mode::laurent, MultiIndex{0, 2}, 1, Scalar(-1));
  const FPMVector v = basis({1, 0}, 0) + basis({0, -1}, 2, Scalar(2));
  const FPMVector expect = fpm_act(f, op({1, -1}, 0), v).scaled(Scalar(3)) - fpm_act(f, op({0, 2}, 1), v);
  CHECK(fpm_act(f, x, v) == expect);
}

TEST_CASE("laurent mode needs invertible t") {
  CHECK_THROWS_AS(FPModule(WeylModule::apoly(2), natural_module(2), Mode::laurent), std::invalid_argument);
  CHECK_THROWS_AS(FPModule(WeylModule::apoly(3), natural_module(2), P), std::invalid_argument);
}

TEST_CASE("weights of basis tensors") {
  const FPModule a(WeylModule::apoly(2), scalar_module(Scalar(0), 2), P);
  CHECK(weight_of(a, {MultiIndex{3, 1}, 0}) == Weight{Scalar(3), Scalar(1)});
  const Scalar l = par("l");
  const FPModule tl(WeylModule::twisted({l, par("m")}), scalar_module(Scalar(0), 2), P);
  CHECK(weight_of(tl, {MultiIndex{2, 0}, 0})[0] == l + Scalar(2));
  const FPModule e(WeylModule::apoly(2), exterior_power(1, 2), P);
  CHECK(weight_of(e, {MultiIndex{1, 0}, label(e.M(), "e2")}) == Weight{Scalar(1), Scalar(1)});
  const FPModule w(WeylModule::whittaker({l, l}), natural_module(2), P);
  CHECK_THROWS_WITH_AS(weight_of(w, {MultiIndex{0, 0}, 0}), "not a weight module", std::invalid_argument);
}

TEST_CASE("weights are eigenvalues of t_j d_j") {
  const FPModule f(WeylModule({{FactorKind::twisted, par("l")}, {FactorKind::quot, {}}}), sym_power(2, 2), P);
  for (const auto& c : f.window_basis(4)) {
    const Weight w = weight_of(f, c);
    for (int j = 0; j < 2; ++j) {
      MultiIndex a = MultiIndex::zero(2);
      a[j] = 1;
      CHECK(fpm_act(f, WittMonomial{a, j}, FPMVector::unit(c)) == FPMVector::unit(c).scaled(w[static_cast<std::size_t>(j)]));
    }
  }
}

TEST_CASE("pi_map examples") {
  const WeylModule p = WeylModule::apoly(2);
  const FPMVector f = basis({1, 1}, 0);
  CHECK(pi_map(p, 0, f) == basis({0, 1}, 0) + basis({1, 0}, 1));
  CHECK(pi_map(p, 1, basis({1, 0}, 0)).is_zero());
  CHECK_THROWS_WITH_AS(pi_map(p, 2, basis({0, 0}, 0)), "top degree", std::invalid_argument);
  // pi_1 (t2 e1) = d2 t2 e2^e1 = -e1^e2
  CHECK(pi_map(p, 1, basis({0, 1}, 0)) == basis({0, 0}, 0, Scalar(-1)));
}

TEST_CASE("pi squares to zero") {
  const std::vector<WeylModule> ps{WeylModule::apoly(3), WeylModule::whittaker({par("l1"), par("l2"), Scalar(3)}),
                                   WeylModule::twisted({par("l1"), par("l2"), par("l3")})};
  for (const auto& p : ps) {
    const DeRham dr(p);
    for (int k = 0; k + 1 < 3; ++k) {
      const FPModule src = dr.module(k, P);
      for (int trial = 0; trial < 20; ++trial) {
        const FPMVector v = random_vector(src, 3, 4);
        CHECK(dr.pi(k + 1, dr.pi(k, v)).is_zero());
      }
    }
  }
}

TEST_CASE("pi commutes with the action") {
  const WeylModule p = WeylModule({{FactorKind::twisted, par("l")}, {FactorKind::whittaker, Scalar(2)}});
  const DeRham dr(p);
  const auto ops = monomial_operators(2, P, 3);
  for (int k = 0; k < 2; ++k) {
    const FPModule src = dr.module(k, P);
    const FPModule tgt = dr.module(k + 1, P);
    for (int trial = 0; trial < 10; ++trial) {
      const FPMVector v = random_vector(src, 3, 3);
      for (const auto& x : ops) CHECK(dr.pi(k, fpm_act(src, x, v)) == fpm_act(tgt, x, dr.pi(k, v)));
    }
  }
}

TEST_CASE("torsion examples") {
  const FPModule s(WeylModule::apoly(2), sym_power(2, 2), P);
  const std::size_t e22 = label(s.M(), "e2^2");
  const std::size_t e11 = label(s.M(), "e1^2");
  const MultiIndex zero = MultiIndex::zero(2);
  CHECK(torsion_operator(s, 0, 0, 0, zero, basis({0, 0}, e22)).is_zero());
  CHECK(torsion_operator(s, 0, 0, 0, zero, basis({0, 0}, e11)) == basis({0, 0}, e11, Scalar(-2)));
  for (int k = 0; k <= 2; ++k) {
    const FPModule e(WeylModule::apoly(2), exterior_power(k, 2), P);
    for (const auto& c : e.window_basis(3)) {
      for (int l = 0; l < 2; ++l) {
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) CHECK(torsion_operator(e, l, i, j, MultiIndex{1, 0}, FPMVector::unit(c)).is_zero());
        }
      }
    }
  }
}

TEST_CASE("torsion operator matches its closed form") {
  const std::vector<FPModule> fs{FPModule(WeylModule::apoly(2), sym_power(2, 2), P),
                                 FPModule(WeylModule::whittaker({par("l1"), par("l2")}), natural_module(2), P),
                                 FPModule(WeylModule::twisted({par("l1"), par("l2")}), tensor_module(natural_module(2), natural_module(2)), P),
                                 FPModule(WeylModule::apoly(3), sym_power(2, 3), P)};
  for (const auto& f : fs) {
    const int n = f.rank();
    for (int trial = 0; trial < 25; ++trial) {
      const FPMVector v = random_vector(f, 3, 3);
      const int l = uniform(0, n - 1);
      const int i = uniform(0, n - 1);
      const int j = uniform(0, n - 1);
      const MultiIndex a = wittmod::testing::random_index(n, P, 2);
      CHECK(torsion_operator(f, l, i, j, a, v) == torsion_closed_form(f, l, i, j, a, v));
      const std::array<Scalar, 3> second{Scalar(1, 2), Scalar(-1), Scalar(1, 2)};
      CHECK(torsion_combination(f, l, i, j, a, v, second) == torsion_operator(f, l, i, j, a, v));
    }
  }
}

TEST_CASE("displayed torsion weights do not give the closed form") {
  const FPModule f(WeylModule::apoly(2), sym_power(2, 2), P);
  const std::array<Scalar, 3> displayed{Scalar(1), Scalar(-2), Scalar(1, 2)};
  std::size_t mismatches = 0;
  for (const auto& c : f.window_basis(2)) {
    const FPMVector v = FPMVector::unit(c);
    if (torsion_combination(f, 0, 0, 1, MultiIndex{0, 1}, v, displayed) != torsion_closed_form(f, 0, 0, 1, MultiIndex{0, 1}, v)) ++mismatches;
  }
  CHECK(mismatches > 0);
}

TEST_CASE("scalar module action formula") {
  const Scalar b = par("b");
  const std::vector<WeylModule> ps{WeylModule::apoly(2), WeylModule::whittaker({par("l1"), par("l2")}),
                                   WeylModule::twisted({par("l1"), par("l2")})};
  for (const auto& p : ps) {
    const int n = p.rank();
    const FPModule f(p, scalar_module(b, n), P);
    for (const auto& x : monomial_operators(n, P, 3)) {
      for (const auto& k : p.window_basis(3)) {
        const PVector g = PVector::unit(k);
        PVector expect = p.act_t_power(x.alpha, p.act_generator(Gen::d, x.j, g));
        const int aj = x.alpha[x.j];
        if (aj != 0) expect.add_scaled(p.act_t_power(x.alpha - MultiIndex::unit(n, x.j), g), b * Scalar(aj) / Scalar(n));
        CHECK(fpm_act(f, x, FPMVector::unit({k, 0})) == f.tensor(expect, 0));
      }
    }
  }
}

TEST_CASE("module axiom spot check for n = 3") {
  const FPModule f(WeylModule::apoly(3), exterior_power(1, 3), P);
  const auto ops = monomial_operators(3, P, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& x = ops[static_cast<std::size_t>(uniform(0, static_cast<int>(ops.size()) - 1))];
    const auto& y = ops[static_cast<std::size_t>(uniform(0, static_cast<int>(ops.size()) - 1))];
    const FPMVector v = random_vector(f, 2, 2);
    const WittElement xy = witt_bracket(WittElement::from(P, x), WittElement::from(P, y));
    CHECK(fpm_act(f, xy, v) == fpm_act(f, x, fpm_act(f, y, v)) - fpm_act(f, y, fpm_act(f, x, v)));
  }
}

TEST_CASE("closure examples") {
  const FPModule f(WeylModule::apoly(2), scalar_module(Scalar(0), 2), P);
  CHECK(submodule_closure(f, {basis({0, 0}, 0)}, 4, 5).dim() == 1);
  CHECK(submodule_closure(f, {basis({1, 0}, 0)}, 4, 5).dim() == f.window_basis(4).size());
  const DeRham dr(WeylModule::apoly(2));
  const FPModule e1 = dr.module(1, P);
  const WindowedSubspace c = submodule_closure(e1, {dr.pi(0, basis({1, 1}, 0))}, 4, 5);
  const WindowedSubspace L = L_window(dr, P, 1, 4);
  CHECK(c.dim() > 0);
  CHECK(subset(e1, c, L));
  CHECK_THROWS_AS(submodule_closure(f, {basis({5, 0}, 0)}, 4, 5), std::invalid_argument);
}

TEST_CASE("closure is monotone and idempotent") {
  const FPModule f(WeylModule::apoly(2), exterior_power(1, 2), P);
  const int D = 3;
  const int A = 4;
  for (int trial = 0; trial < 6; ++trial) {
    const FPMVector a = random_vector(f, D, 2);
    const FPMVector b = random_vector(f, D, 2);
    const WindowedSubspace ca = submodule_closure(f, {a}, D, A);
    const WindowedSubspace cab = submodule_closure(f, {a, b}, D, A);
    CHECK(subset(f, ca, cab));
    CHECK(same_subspace(f, submodule_closure(f, ca.basis(), D, A), ca));
  }
  std::vector<FPMVector> all;
  for (const auto& c : f.window_basis(D)) all.push_back(FPMVector::unit(c));
  CHECK(submodule_closure(f, all, D, A).dim() == all.size());
  CHECK(submodule_closure(f, {}, D, A).dim() == 0);
}

TEST_CASE("closure is deterministic") {
  const FPModule f(WeylModule::twisted({par("l1"), par("l2")}), natural_module(2), P);
  const auto seeds = low_level_seeds(f, 2);
  const auto a = submodule_closure(f, {seeds[1]}, 2, 3).basis();
  const auto b = submodule_closure(f, {seeds[1]}, 2, 3).basis();
  CHECK(a == b);
}

TEST_CASE("L window examples") {
  const DeRham a(WeylModule::apoly(2));
  for (int D = 1; D <= 4; ++D) CHECK(L_window(a, P, 2, D).dim() == a.module(2, P).window_basis(D).size());
  const DeRham w(WeylModule::whittaker({par("l1"), par("l2")}));
  for (int D = 1; D <= 3; ++D) CHECK(L_window(w, P, 2, D).dim() + 1 == w.module(2, P).window_basis(D).size());
  // degree-d part of L(Apoly, 1) is the image of pi_0 on degree d + 1
  const WindowedSubspace L = L_window(a, P, 1, 4);
  const auto filt = L.filtration_dims(a.module(1, P));
  REQUIRE(filt.size() == 5);
  for (int d = 0; d <= 4; ++d) {
    EchelonBasis<Coord> img;
    for (const auto& k : a.P().window_basis(d + 1)) {
      if (k.total() == d + 1) img.insert(a.pi(0, FPMVector::unit({k, 0})));
    }
    const std::size_t below = d == 0 ? 0 : filt[static_cast<std::size_t>(d - 1)];
    CHECK(filt[static_cast<std::size_t>(d)] - below == img.dim());
    CHECK(img.dim() == static_cast<std::size_t>(d + 2));
  }
}

TEST_CASE("membership identities modulo L") {
  const std::vector<WeylModule> ps{WeylModule::apoly(2), WeylModule::whittaker({par("l1"), par("l2")}),
                                   WeylModule::twisted({par("l1"), par("l2")})};
  const int D = 2;
  for (const auto& p : ps) {
    const DeRham dr(p);
    const int n = p.rank();
    for (int r = 1; r <= n; ++r) {
      const FPModule f = dr.module(r, P);
      const WindowedSubspace L36 = L_window(dr, P, r, D + 1);
      const GlModule& m = f.M();
      // sum_k (d_k p) (x) E_kj w lies in L
      for (const auto& k : p.window_basis(D)) {
        for (std::size_t wi = 0; wi < m.dim(); ++wi) {
          for (int j = 0; j < n; ++j) {
            FPMVector s;
            for (int kk = 0; kk < n; ++kk) {
              const PVector dp = p.act_generator(Gen::d, kk, PVector::unit(k));
              for (const auto& [row, c] : m.act(kk, j, MVector::unit(wi))) s += f.tensor(dp, row, c);
            }
            CHECK(L36.contains(f, s));
          }
        }
      }
      // x (p (x) w) - sum_s (t^g d_s p) (x) (delta_js w - E_sj w) lies in L
      const int G = 2;
      const WindowedSubspace L37 = L_window(dr, P, r, D + G + 1);
      for (const auto& x : monomial_operators(n, P, G)) {
        for (const auto& k : p.window_basis(D)) {
          for (std::size_t wi = 0; wi < m.dim(); ++wi) {
            FPMVector diff = fpm_act(f, x, FPMVector::unit({k, wi}));
            for (int s = 0; s < n; ++s) {
              const PVector q = p.act_t_power(x.alpha, p.act_generator(Gen::d, s, PVector::unit(k)));
              if (s == x.j) diff -= f.tensor(q, wi);
              for (const auto& [row, c] : m.act(s, x.j, MVector::unit(wi))) diff += f.tensor(q, row, c);
            }
            CHECK(L37.contains(f, diff));
          }
        }
      }
    }
  }
}

TEST_CASE("ltilde equals the kernel of pi") {
  const DeRham a(WeylModule::apoly(2));
  for (int r = 0; r <= 1; ++r) {
    const LtildeResult res = ltilde_window(a, P, r, 3, 4);
    REQUIRE(res.kernel);
    CHECK(res.matches_kernel);
    CHECK(same_subspace(a.module(r, P), res.ltilde, *res.kernel));
  }
  CHECK(ltilde_window(a, P, 0, 3, 4).ltilde.dim() == 1);
  CHECK(ltilde_window(a, P, 0, 3, 4).ltilde.contains(a.module(0, P), basis({0, 0}, 0)));
  // middle degree: ker pi_1 = im pi_0 inside the window
  const WindowedSubspace k1 = kernel_window(a, P, 1, 3);
  CHECK(same_subspace(a.module(1, P), k1, L_window(a, P, 1, 3)));
}

TEST_CASE("ltilde for r = n is the whole window when the quotient is trivial") {
  const DeRham w(WeylModule::whittaker({par("l1"), par("l2")}));
  const LtildeResult res = ltilde_window(w, P, 2, 2, 3);
  CHECK(!res.kernel);
  CHECK(res.ltilde.dim() == w.module(2, P).window_basis(2).size());
}

TEST_CASE("homology of the polynomial complex") {
  const HomologyTable t = complex_homology(WeylModule::apoly(2), 5);
  CHECK(!t.filtered);
  std::size_t interior = 0;
  for (const auto& e : t.entries) {
    if (!e.interior) continue;
    ++interior;
    CHECK(e.dim == (e.r == 0 && e.level == 0 ? 1u : 0u));
  }
  CHECK(interior >= 15);
  CHECK_THROWS_AS(complex_homology(WeylModule::apoly(2), 1), std::invalid_argument);
}

TEST_CASE("homology of the Laurent complex") {
  const HomologyTable t = complex_homology(WeylModule::alaurent(2), 3);
  std::size_t top = 0;
  std::size_t middle = 0;
  for (const auto& e : t.entries) {
    if (e.r == 2 && e.level == 0) top = e.dim;
    if (e.r == 1 && e.level == 0) middle = e.dim;
  }
  CHECK(top == 1);
  CHECK(middle == 2);
  // the class t1^-1 t2^-1 e1^e2 is not in the image
  const DeRham dr(WeylModule::alaurent(2));
  CHECK(!L_window(dr, Mode::laurent, 2, 3).contains(dr.module(2, Mode::laurent), basis({-1, -1}, 0)));
}

TEST_CASE("homology of a Whittaker complex") {
  const HomologyTable t = complex_homology(WeylModule::whittaker({par("l1"), par("l2")}), 3);
  CHECK(t.filtered);
  REQUIRE(t.entries.size() == 3);
  CHECK(t.entries[0].dim == 0);
  CHECK(t.entries[1].dim == 0);
  CHECK(t.entries[2].dim == 1);
  CHECK_THROWS_AS(complex_homology(WeylModule({{FactorKind::whittaker, Scalar(1)}, {FactorKind::poly, {}}}), 3), std::invalid_argument);
}

TEST_CASE("irreducibility report branches") {
  const int D = 3;
  const int A = 4;
  const auto sym = irreducibility_report(WeylModule::apoly(2), sym_power(2, 2), P, D, A);
  CHECK(sym.branch == "generic");
  CHECK(sym.certified);
  CHECK(sym.verdict.rfind("consistent with irreducible", 0) == 0);

  const auto ext = irreducibility_report(WeylModule::apoly(2), exterior_power(1, 2), P, D, A);
  CHECK(ext.branch == "exterior");
  CHECK(ext.certified);
  CHECK(ext.verdict.rfind("reducible", 0) == 0);
  REQUIRE(ext.witness_dim);
  CHECK(*ext.witness_dim > 0);
  CHECK(*ext.witness_dim < ext.window_dim);

  const auto top = irreducibility_report(WeylModule::whittaker({par("l1"), par("l2")}), exterior_power(2, 2), P, D, A);
  CHECK(top.branch == "top");
  CHECK(top.codim == 1);
  CHECK(top.certified);
  CHECK(*top.witness_dim + 1 == top.window_dim);

  const auto triv = irreducibility_report(WeylModule::apoly(2), scalar_module(Scalar(0), 2), P, D, A);
  CHECK(triv.branch == "trivial");
  CHECK(triv.certified);
  CHECK(triv.witness_dim == 1);

  const auto vv = irreducibility_report(WeylModule::apoly(2), tensor_module(natural_module(2), natural_module(2)), P, D, A);
  CHECK(vv.branch == "skipped");
  CHECK(vv.verdict == "skipped: M is not irreducible");

  const auto lp = irreducibility_report(WeylModule::alaurent(2), sym_power(2, 2), P, D, A);
  CHECK(lp.branch == "skipped");
}

TEST_CASE("low level seeds") {
  const FPModule f(WeylModule::apoly(2), sym_power(2, 2), P);
  CHECK(low_level_seeds(f, 4).size() == 9);
  const FPModule q(WeylModule::quot(2), natural_module(2), P);
  // levels 2 and 3 are the lowest present
  CHECK(low_level_seeds(q, 4).size() == 6);
}

TEST_CASE("weight supports") {
  const Scalar l = par("l");
  const Scalar m = par("m");
  const FPModule tl(WeylModule::twisted({l, m}), scalar_module(Scalar(0), 2), P);
  const auto s = weight_support(tl, 3);
  CHECK(s.size() == 25);
  CHECK(std::find(s.begin(), s.end(), Weight{l - Scalar(2), m + Scalar(1)}) != s.end());
  const FPModule a(WeylModule::apoly(2), scalar_module(Scalar(0), 2), P);
  const auto sa = weight_support(a, 3);
  CHECK(sa.size() == 10);
  for (const auto& w : sa) CHECK(w[0].rational() >= 0);
  const FPModule e(WeylModule::apoly(2), exterior_power(2, 2), P);
  const auto se = weight_support(e, 3);
  CHECK(se.size() == 10);
  CHECK(se.front() == Weight{Scalar(1), Scalar(1)});
  const FPModule w(WeylModule::whittaker({l, m}), natural_module(2), P);
  CHECK_THROWS_AS(weight_support(w, 2), std::invalid_argument);
}

TEST_CASE("weight classes") {
  const Scalar l = par("l");
  CHECK(weight_class({Scalar(7, 2), Scalar(-1, 3)}) == Weight{Scalar(1, 2), Scalar(2, 3)});
  CHECK(weight_class({l + Scalar(3)}) == Weight{l});
  CHECK(weight_class({l - Scalar(1, 2)}) == Weight{l + Scalar(1, 2)});
}

TEST_CASE("fingerprints") {
  const Scalar l = par("l1");
  const FPModule s(WeylModule::apoly(2), sym_power(2, 2), P);
  const FPModule st(WeylModule::apoly(2), tensor_module(sym_power(2, 2), scalar_module(Scalar(1), 2)), P);
  const FPModule tl(WeylModule::twisted({l, par("l2")}), scalar_module(Scalar(0), 2), P);
  const FPModule ap(WeylModule::apoly(2), scalar_module(Scalar(0), 2), P);
  CHECK(fingerprint(s, 4) != fingerprint(st, 4));
  CHECK(fingerprint(s, 4) == fingerprint(s, 4));
  CHECK(fingerprint(tl, 4) != fingerprint(ap, 4));
  const FPModule w(WeylModule::whittaker({l, l}), natural_module(2), P);
  const Fingerprint fw = fingerprint(w, 3);
  CHECK(!fw.weight);
  CHECK(fw.graded_dims == std::vector<std::size_t>{2, 4, 6, 8});
}
