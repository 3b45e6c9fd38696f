#include "wittmod/glmod.hpp"

#include <sstream>

#include "wittmod/polyalg.hpp"

namespace wittmod {

std::string weight_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].to_string();
  return s + ")";
}

GlModule::GlModule(int n, std::vector<std::string> labels, std::vector<ExactMatrix> action, std::string name)
    : n_(n), labels_(std::move(labels)), action_(std::move(action)), name_(std::move(name)) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (action_.size() != static_cast<std::size_t>(n * n)) throw std::invalid_argument("need n^2 action matrices");
  for (const auto& a : action_) {
    if (a.rows() != dim() || a.cols() != dim()) throw std::invalid_argument("action matrix has wrong size");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          ExactMatrix lhs = E(i, j) * E(k, l) - E(k, l) * E(i, j);
          ExactMatrix rhs(dim(), dim());
          if (j == k) rhs = rhs + E(i, l);
          if (l == i) rhs = rhs - E(k, j);
          if (!(lhs == rhs)) {
            throw std::invalid_argument("gl_n relation fails for [E" + std::to_string(i + 1) + std::to_string(j + 1) +
                                        ",E" + std::to_string(k + 1) + std::to_string(l + 1) + "]");
          }
        }
      }
    }
  }
}

bool GlModule::has_diagonal_weights() const {
  for (int i = 0; i < n_; ++i) {
    if (!E(i, i).is_diagonal()) return false;
  }
  return true;
}

Weight GlModule::basis_weight(std::size_t idx) const {
  Weight w;
  for (int i = 0; i < n_; ++i) w.push_back(E(i, i).at(idx, idx));
  return w;
}

std::string GlModule::vector_string(const MVector& v) const {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << '(' << c.to_string() << ")*";
    os << labels_[k];
  }
  return os.str();
}

namespace {

std::vector<ExactMatrix> zero_action(int n, std::size_t d) {
  return std::vector<ExactMatrix>(static_cast<std::size_t>(n * n), ExactMatrix(d, d));
}

void subsets_rec(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

GlModule natural_module(int n) {
  auto act = zero_action(n, static_cast<std::size_t>(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back("e" + std::to_string(i + 1));
    // E_ij e_j = e_i
    for (int j = 0; j < n; ++j) act[static_cast<std::size_t>(i * n + j)].set(i, j, Scalar(1));
  }
  return GlModule(n, std::move(labels), std::move(act), "Nat");
}

std::vector<std::vector<int>> sorted_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  subsets_rec(n, k, 0, cur, out);
  return out;
}

std::optional<std::pair<int, std::vector<int>>> wedge_insert(int i, const std::vector<int>& s) {
  std::size_t pos = 0;
  while (pos < s.size() && s[pos] < i) ++pos;
  if (pos < s.size() && s[pos] == i) return std::nullopt;
  std::vector<int> r = s;
  r.insert(r.begin() + static_cast<std::ptrdiff_t>(pos), i);
  return std::make_pair(pos % 2 == 0 ? 1 : -1, std::move(r));
}

GlModule exterior_power(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("Ext(" + std::to_string(k) + ") invalid for n=" + std::to_string(n));
  const auto basis = sorted_subsets(n, k);
  std::map<std::vector<int>, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    index[basis[b]] = b;
    std::string l;
    for (int x : basis[b]) l += (l.empty() ? "e" : "^e") + std::to_string(x + 1);
    labels.push_back(l.empty() ? "1" : l);
  }
  auto act = zero_action(n, basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const auto& s = basis[b];
    for (std::size_t p = 0; p < s.size(); ++p) {
      const int j = s[p];
      // Move e_j to the front, then replace it by e_i.
      std::vector<int> rest = s;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
      const int front_sign = p % 2 == 0 ? 1 : -1;
      for (int i = 0; i < n; ++i) {
        auto ins = wedge_insert(i, rest);
        if (!ins) continue;
        act[static_cast<std::size_t>(i * n + j)].add(index.at(ins->second), b, Scalar(front_sign * ins->first));
      }
    }
  }
  return GlModule(n, std::move(labels), std::move(act), "Ext(" + std::to_string(k) + ")");
}

GlModule scalar_module(const Scalar& b, int n) {
  auto act = zero_action(n, 1);
  for (int i = 0; i < n; ++i) act[static_cast<std::size_t>(i * n + i)].set(0, 0, b / Scalar(n));
  return GlModule(n, {"1"}, std::move(act), "Triv(" + b.to_string() + ")");
}

GlModule sym_power(int k, int n) {
  if (k < 0) throw std::invalid_argument("Sym(" + std::to_string(k) + ") invalid");
  std::vector<MultiIndex> basis;
  for (const auto& a : multi_indices_up_to(n, k, Mode::plus)) {
    if (a.total() == k) basis.push_back(a);
  }
  std::map<MultiIndex, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    index[basis[b]] = b;
    const std::string l = monomial_string(basis[b], "e");
    labels.push_back(l.empty() ? "1" : l);
  }
  auto act = zero_action(n, basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int aj = basis[b][j];
        if (aj == 0) continue;
        MultiIndex t = basis[b] - MultiIndex::unit(n, j) + MultiIndex::unit(n, i);
        act[static_cast<std::size_t>(i * n + j)].add(index.at(t), b, Scalar(aj));
      }
    }
  }
  return GlModule(n, std::move(labels), std::move(act), "Sym(" + std::to_string(k) + ")");
}

GlModule tensor_module(const GlModule& a, const GlModule& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in tensor product");
  const int n = a.rank();
  const std::size_t db = b.dim();
  const std::size_t d = a.dim() * db;
  std::vector<std::string> labels;
  for (const auto& la : a.labels()) {
    for (const auto& lb : b.labels()) labels.push_back("(" + la + ")x(" + lb + ")");
  }
  auto act = zero_action(n, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto& m = act[static_cast<std::size_t>(i * n + j)];
      for (const auto& [rc, v] : a.E(i, j).entries()) {
        for (std::size_t y = 0; y < db; ++y) m.add(rc.first * db + y, rc.second * db + y, v);
      }
      for (const auto& [rc, v] : b.E(i, j).entries()) {
        for (std::size_t x = 0; x < a.dim(); ++x) m.add(x * db + rc.first, x * db + rc.second, v);
      }
    }
  }
  return GlModule(n, std::move(labels), std::move(act), a.name() + "*" + b.name());
}

std::map<Weight, std::vector<std::size_t>> weight_decomposition(const GlModule& m) {
  if (!m.has_diagonal_weights()) throw std::invalid_argument("not a weight module");
  std::map<Weight, std::vector<std::size_t>> out;
  for (std::size_t b = 0; b < m.dim(); ++b) out[m.basis_weight(b)].push_back(b);
  return out;
}

namespace {

// Joint kernel over the whole module, each vector tested as an E_ii eigenvector.
std::vector<WeightVector> singular_vectors_general(const GlModule& m) {
  const int n = m.rank();
  std::vector<SparseVector<std::pair<int, std::size_t>>> cols;
  for (std::size_t b = 0; b < m.dim(); ++b) {
    SparseVector<std::pair<int, std::size_t>> col;
    for (int i = 0; i + 1 < n; ++i) {
      for (const auto& [r, c] : m.act(i, i + 1, MVector::unit(b))) col.add({i, r}, c);
    }
    cols.push_back(col);
  }
  std::vector<WeightVector> out;
  for (const auto& rel : linear_relations(cols)) {
    MVector v;
    for (const auto& [pos, c] : rel) v.add(pos, c);
    const auto& [lead, lc] = *v.begin();
    Weight w;
    for (int i = 0; i < n; ++i) {
      const MVector hv = m.act(i, i, v);
      const Scalar e = hv.get(lead) / lc;
      if (hv != v.scaled(e)) throw std::invalid_argument("not a weight module");
      w.push_back(e);
    }
    out.push_back({w, v});
  }
  return out;
}

}  // namespace

std::vector<WeightVector> singular_vectors(const GlModule& m) {
  if (!m.has_diagonal_weights()) return singular_vectors_general(m);
  std::vector<WeightVector> out;
  const int n = m.rank();
  for (const auto& [w, idx] : weight_decomposition(m)) {
    // Columns are the images of the weight-space basis under all raising operators.
    std::vector<SparseVector<std::pair<int, std::size_t>>> cols;
    for (std::size_t b : idx) {
      SparseVector<std::pair<int, std::size_t>> col;
      for (int i = 0; i + 1 < n; ++i) {
        for (const auto& [r, c] : m.act(i, i + 1, MVector::unit(b))) col.add({i, r}, c);
      }
      cols.push_back(col);
    }
    for (const auto& rel : linear_relations(cols)) {
      MVector v;
      for (const auto& [pos, c] : rel) v.add(idx[pos], c);
      out.push_back({w, v});
    }
  }
  return out;
}

std::size_t cyclic_dimension(const GlModule& m, const MVector& v) {
  EchelonBasis<std::size_t> span;
  std::vector<MVector> frontier;
  if (span.insert(v)) frontier.push_back(v);
  while (!frontier.empty()) {
    const MVector x = frontier.back();
    frontier.pop_back();
    for (int i = 0; i < m.rank(); ++i) {
      for (int j = 0; j < m.rank(); ++j) {
        MVector y = m.act(i, j, x);
        if (span.insert(y)) frontier.push_back(std::move(y));
      }
    }
  }
  return span.dim();
}

bool is_irreducible(const GlModule& m) {
  const auto sv = singular_vectors(m);
  return sv.size() == 1 && cyclic_dimension(m, sv.front().vector) == m.dim();
}

std::optional<int> is_fundamental_exterior(const GlModule& m) {
  if (!is_irreducible(m)) return std::nullopt;
  const Weight hw = singular_vectors(m).front().weight;
  int k = 0;
  while (k < m.rank() && hw[static_cast<std::size_t>(k)].is_one()) ++k;
  for (int i = k; i < m.rank(); ++i) {
    if (!hw[static_cast<std::size_t>(i)].is_zero()) return std::nullopt;
  }
  const auto expected = sorted_subsets(m.rank(), k).size();
  if (m.dim() != expected) return std::nullopt;
  return k;
}

ExactMatrix claim3_operator(const GlModule& m, int l, int i, int j) {
  ExactMatrix r = (m.E(l, i) * m.E(l, j)).scaled(Scalar(-1));
  if (l == i) r = r + m.E(l, j);
  return r;
}

}  // namespace wittmod
