#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>

#include "wittmod/exactnum.hpp"

namespace wittmod {

namespace {

struct Registry {
  std::mutex mu;
  std::deque<std::string> names;
  std::map<std::string, VarId, std::less<>> ids;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

VarId ParameterRegistry::intern(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  if (auto it = r.ids.find(name); it != r.ids.end()) return it->second;
  const auto id = static_cast<VarId>(r.names.size());
  r.names.emplace_back(name);
  r.ids.emplace(std::string(name), id);
  return id;
}

std::string ParameterRegistry::name(VarId id) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  if (id >= r.names.size()) throw std::out_of_range("unknown parameter id");
  return r.names[id];
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(VarId v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.factors_.emplace_back(v, exp);
  return m;
}

std::uint32_t Monomial::degree_in(VarId v) const {
  for (const auto& [var, e] : factors_) {
    if (var == v) return e;
  }
  return 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::optional<VarId> Monomial::max_var() const {
  if (factors_.empty()) return std::nullopt;
  return factors_.back().first;
}

bool Monomial::divides(const Monomial& other) const {
  std::size_t j = 0;
  for (const auto& [var, e] : factors_) {
    while (j < other.factors_.size() && other.factors_[j].first < var) ++j;
    if (j == other.factors_.size() || other.factors_[j].first != var || other.factors_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < factors_.size() || j < other.factors_.size()) {
    if (j == other.factors_.size() || (i < factors_.size() && factors_[i].first < other.factors_[j].first)) {
      r.factors_.push_back(factors_[i++]);
    } else if (i == factors_.size() || other.factors_[j].first < factors_[i].first) {
      r.factors_.push_back(other.factors_[j++]);
    } else {
      r.factors_.emplace_back(factors_[i].first, factors_[i].second + other.factors_[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r;
  for (const auto& [var, e] : factors_) {
    const auto d = divisor.degree_in(var);
    if (e > d) r.factors_.emplace_back(var, e - d);
  }
  return r;
}

Monomial Monomial::without(VarId v) const {
  Monomial r;
  for (const auto& f : factors_) {
    if (f.first != v) r.factors_.push_back(f);
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (const auto& [var, e] : a.factors_) {
    const auto d = std::min(e, b.degree_in(var));
    if (d > 0) r.factors_.emplace_back(var, d);
  }
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  auto i = a.factors_.rbegin();
  auto j = b.factors_.rbegin();
  while (i != a.factors_.rend() && j != b.factors_.rend()) {
    if (i->first != j->first) return i->first > j->first ? std::strong_ordering::greater : std::strong_ordering::less;
    if (i->second != j->second) return i->second <=> j->second;
    ++i;
    ++j;
  }
  if (i != a.factors_.rend()) return std::strong_ordering::greater;
  if (j != b.factors_.rend()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(long c) {
  if (c != 0) terms_.emplace(Monomial(), mpz_class(c));
}

Poly::Poly(const mpz_class& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial(), c);
}

Poly Poly::variable(VarId v) { return term(1, Monomial::variable(v)); }

Poly Poly::term(const mpz_class& c, const Monomial& m) {
  Poly p;
  if (sgn(c) != 0) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

mpz_class Poly::constant_value() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
  return d;
}

std::uint32_t Poly::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree_in(v));
  return d;
}

std::optional<VarId> Poly::max_var() const {
  // The lex order makes the leading monomial carry the largest variable.
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.max_var();
}

std::map<std::uint32_t, Poly> Poly::split(VarId v) const {
  std::map<std::uint32_t, Poly> out;
  for (const auto& [m, c] : terms_) out[m.degree_in(v)].add_term(m.without(v), c);
  return out;
}

mpz_class Poly::integer_content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void Poly::add_term(const Monomial& m, const mpz_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  }
  return r;
}

Poly Poly::scaled(const mpz_class& c) const {
  if (sgn(c) == 0) return {};
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly Poly::times_monomial(const mpz_class& c, const Monomial& m) const {
  Poly r;
  if (sgn(c) == 0) return r;
  for (const auto& [mm, cc] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, cc * c);
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("zero divisor");
  if (divisor.is_constant()) {
    const mpz_class d = divisor.constant_value();
    Poly q = *this;
    for (auto& t : q.terms_) {
      if (!mpz_divisible_p(t.second.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), d.get_mpz_t());
    }
    return q;
  }
  Poly rem = *this;
  Poly q;
  const Monomial& lm = divisor.leading_monomial();
  const mpz_class& lc = divisor.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    if (!lm.divides(rm)) return std::nullopt;
    const mpz_class& rc = rem.leading_coefficient();
    if (!mpz_divisible_p(rc.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), lc.get_mpz_t());
    const Monomial qm = rm.quotient(lm);
    q.add_term(qm, qc);
    rem -= divisor.times_monomial(qc, qm);
  }
  return q;
}

std::strong_ordering compare(const Poly& a, const Poly& b) {
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  for (; i != a.terms_.end() && j != b.terms_.end(); ++i, ++j) {
    if (auto c = i->first <=> j->first; c != 0) return c;
    const int cc = cmp(i->second, j->second);
    if (cc != 0) return cc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (i != a.terms_.end()) return std::strong_ordering::greater;
  if (j != b.terms_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || m.is_one()) {
      os << mag.get_str();
      need_star = true;
    }
    for (const auto& [var, e] : m.factors()) {
      if (need_star) os << '*';
      os << ParameterRegistry::name(var);
      if (e != 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

// --------------------------------------------------------------------- gcd

namespace {

Poly normalized(Poly p) {
  if (!p.is_zero() && sgn(p.leading_coefficient()) < 0) return -p;
  return p;
}

Poly divide_known(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("polynomial division expected to be exact");
  return *std::move(q);
}

Poly content_in(const Poly& p, VarId v) {
  Poly g;
  for (const auto& [d, c] : p.split(v)) {
    g = gcd(g, c);
    if (g.is_constant() && g.constant_value() == 1) break;
  }
  return g;
}

Poly leading_in(const Poly& p, VarId v, std::uint32_t& degree) {
  auto parts = p.split(v);
  degree = parts.rbegin()->first;
  return parts.rbegin()->second;
}

// Pseudo-remainder of a by b as polynomials in v.
Poly pseudo_remainder(Poly a, const Poly& b, VarId v) {
  std::uint32_t db = 0;
  const Poly lcb = leading_in(b, v, db);
  while (!a.is_zero()) {
    const auto da = a.degree_in(v);
    if (da < db) break;
    std::uint32_t dummy = 0;
    const Poly lca = leading_in(a, v, dummy);
    a = lcb * a - (lca * b).times_monomial(1, Monomial::variable(v, da - db));
  }
  return a;
}

Poly primitive_part(const Poly& p, VarId v) { return divide_known(p, content_in(p, v)); }

Poly monomial_gcd(const Poly& mono, const Poly& other) {
  mpz_class g = other.integer_content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mono.leading_coefficient().get_mpz_t());
  Monomial m = mono.leading_monomial();
  for (const auto& t : other.terms()) {
    m = Monomial::gcd(m, t.first);
    if (m.is_one()) break;
  }
  return Poly::term(g, m);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) {
    mpz_class g = a.integer_content();
    const mpz_class h = b.integer_content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
    return Poly(g);
  }
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  if (a == b) return normalized(a);

  const VarId v = std::max(*a.max_var(), *b.max_var());
  const auto dega = a.degree_in(v);
  const auto degb = b.degree_in(v);
  if (dega == 0) return gcd(a, content_in(b, v));
  if (degb == 0) return gcd(content_in(a, v), b);

  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  Poly r0 = divide_known(a, ca);
  Poly r1 = divide_known(b, cb);
  if (r0.degree_in(v) < r1.degree_in(v)) std::swap(r0, r1);
  Poly g;
  while (true) {
    Poly r = pseudo_remainder(r0, r1, v);
    if (r.is_zero()) {
      g = r1;
      break;
    }
    if (r.degree_in(v) == 0) {
      g = Poly(1);
      break;
    }
    r0 = std::move(r1);
    r1 = primitive_part(r, v);
  }
  if (g.degree_in(v) > 0) g = primitive_part(g, v);
  return normalized(gcd(ca, cb) * g);
}

}  // namespace wittmod
