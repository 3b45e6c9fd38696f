#include "wittmod/exactnum.hpp"

namespace wittmod {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar(1));
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<DenseVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Scalar ExactMatrix::at(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Scalar() : it->second;
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  if (v.is_zero()) {
    entries_.erase({r, c});
  } else {
    entries_[{r, c}] = v;
  }
}

void ExactMatrix::add(std::size_t r, std::size_t c, const Scalar& v) { set(r, c, at(r, c) + v); }

bool ExactMatrix::is_diagonal() const {
  for (const auto& e : entries_) {
    if (e.first.first != e.first.second) return false;
  }
  return true;
}

std::vector<SparseVector<std::size_t>> ExactMatrix::columns() const {
  std::vector<SparseVector<std::size_t>> cols(cols_);
  for (const auto& [rc, v] : entries_) cols[rc.second].set(rc.first, v);
  return cols;
}

SparseVector<std::size_t> ExactMatrix::apply(const SparseVector<std::size_t>& v) const {
  SparseVector<std::size_t> out;
  for (const auto& [rc, a] : entries_) {
    const Scalar x = v.get(rc.second);
    if (!x.is_zero()) out.add(rc.first, a * x);
  }
  return out;
}

DenseVector ExactMatrix::apply(const DenseVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
  DenseVector out(rows_);
  for (const auto& [rc, a] : entries_) out[rc.first] += a * v[rc.second];
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
  ExactMatrix r(rows_, o.cols_);
  // Index the right factor by row for a sparse-sparse product.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> by_row(o.rows_);
  for (const auto& [rc, v] : o.entries_) by_row[rc.first].emplace_back(rc.second, v);
  for (const auto& [rc, a] : entries_) {
    for (const auto& [c, b] : by_row[rc.second]) r.add(rc.first, c, a * b);
  }
  return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
  ExactMatrix r = *this;
  for (const auto& [rc, v] : o.entries_) r.add(rc.first, rc.second, v);
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const { return *this + o.scaled(Scalar(-1)); }

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
  ExactMatrix r(rows_, cols_);
  if (c.is_zero()) return r;
  for (const auto& [rc, v] : entries_) r.entries_.emplace(rc, v * c);
  return r;
}

std::size_t rank(const ExactMatrix& a) {
  EchelonBasis<std::size_t> basis;
  for (const auto& col : a.columns()) basis.insert(col);
  return basis.dim();
}

std::vector<DenseVector> kernel_basis(const ExactMatrix& a) {
  std::vector<DenseVector> out;
  for (const auto& rel : linear_relations(a.columns())) out.push_back(to_dense(rel, a.cols()));
  return out;
}

bool in_span(const DenseVector& v, const std::vector<DenseVector>& basis) {
  EchelonBasis<std::size_t> eb;
  for (const auto& b : basis) {
    if (b.size() != v.size()) throw std::invalid_argument("dimension mismatch");
    eb.insert(to_sparse(b));
  }
  return eb.contains(to_sparse(v));
}

SparseVector<std::size_t> to_sparse(const DenseVector& v) {
  SparseVector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i) s.set(i, v[i]);
  return s;
}

DenseVector to_dense(const SparseVector<std::size_t>& v, std::size_t dim) {
  DenseVector d(dim);
  for (const auto& [i, c] : v) {
    if (i >= dim) throw std::out_of_range("sparse index exceeds dimension");
    d[i] = c;
  }
  return d;
}

}  // namespace wittmod
