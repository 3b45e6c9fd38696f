#include <deque>

#include "wittmod/wittrep.hpp"

namespace wittmod {

std::size_t WindowedSubspace::dim() const {
  std::size_t d = 0;
  for (const auto& [k, b] : blocks_) d += b.dim();
  return d;
}

std::vector<FPMVector> WindowedSubspace::basis() const {
  std::vector<FPMVector> out;
  for (const auto& [k, b] : blocks_) out.insert(out.end(), b.rows().begin(), b.rows().end());
  return out;
}

std::size_t WindowedSubspace::insert(const FPModule& f, const FPMVector& v) {
  std::size_t added = 0;
  for (const auto& [key, part] : f.split_blocks(v)) added += blocks_[key].insert(part) ? 1 : 0;
  return added;
}

FPMVector WindowedSubspace::reduce(const FPModule& f, const FPMVector& v) const {
  FPMVector out;
  for (const auto& [key, part] : f.split_blocks(v)) {
    auto it = blocks_.find(key);
    out += it == blocks_.end() ? part : it->second.reduce(part);
  }
  return out;
}

std::vector<FPMVector> WindowedSubspace::absorb(const FPModule& f, const FPMVector& v) {
  std::vector<FPMVector> rows;
  for (const auto& [key, part] : f.split_blocks(v)) {
    auto& b = blocks_[key];
    if (b.insert(part)) rows.push_back(b.rows().back());
  }
  return rows;
}

bool WindowedSubspace::contains(const FPModule& f, const FPMVector& v) const { return reduce(f, v).is_zero(); }

std::vector<std::size_t> WindowedSubspace::filtration_dims(const FPModule& f) const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= window_; ++d) {
    std::size_t total = 0;
    for (const auto& [key, b] : blocks_) {
      total += span_within(b.rows(), [&](const Coord& c) { return f.level(c) <= d; }).dim();
    }
    out.push_back(total);
  }
  return out;
}

bool same_subspace(const FPModule& f, const WindowedSubspace& a, const WindowedSubspace& b) {
  if (a.dim() != b.dim()) return false;
  for (const auto& v : a.basis()) {
    if (!b.contains(f, v)) return false;
  }
  return true;
}

std::vector<WittMonomial> closure_operators(const FPModule& f, int A) { return monomial_operators(f.rank(), f.mode(), A); }

int level_shift_bound(const WeylModule& p, Mode, int A) {
  if (p.all_factors(FactorKind::whittaker)) return 1;
  return A + 1;
}

WindowedSubspace submodule_closure(const FPModule& f, const std::vector<FPMVector>& seeds, int D, int A) {
  const auto inside = [&](const Coord& c) { return f.level(c) <= D; };
  const auto ops = closure_operators(f, A);
  WindowedSubspace out(D);
  // Images that leave the window, kept per block until their outside parts
  // can be cancelled against each other.
  std::map<Weight, std::vector<FPMVector>> pending;
  std::map<Weight, bool> dirty;
  std::deque<FPMVector> work;

  const auto add = [&](const FPMVector& v) {
    for (auto& row : out.absorb(f, v)) work.push_back(std::move(row));
  };
  for (const auto& s : seeds) {
    for (const auto& [c, a] : s) {
      if (!inside(c)) throw std::invalid_argument("seed leaves the window");
    }
    add(s);
  }
  while (true) {
    while (!work.empty()) {
      const FPMVector x = std::move(work.front());
      work.pop_front();
      for (const auto& op : ops) {
        const FPMVector y = fpm_act(f, op, x);
        for (const auto& [key, part] : f.split_blocks(y)) {
          bool all_inside = true;
          for (const auto& [c, a] : part) all_inside = all_inside && inside(c);
          if (all_inside) {
            add(part);
          } else {
            pending[key].push_back(part);
            dirty[key] = true;
          }
        }
      }
    }
    bool progress = false;
    for (auto& [key, vs] : pending) {
      if (!dirty[key]) continue;
      dirty[key] = false;
      const auto span = span_within(vs, inside);
      for (const auto& row : span.rows()) {
        const std::size_t before = work.size();
        add(row);
        progress = progress || work.size() > before;
      }
    }
    if (!progress) break;
  }
  return out;
}

WindowedSubspace L_window(const DeRham& dr, Mode mode, int r, int D) {
  if (r < 1 || r > dr.rank()) throw std::invalid_argument("L window needs 1 <= r <= n");
  const FPModule src = dr.module(r - 1, mode);
  const FPModule tgt = dr.module(r, mode);
  std::map<Weight, std::vector<FPMVector>> images;
  for (const auto& c : src.window_basis(D + 1)) {
    const FPMVector y = dr.pi(r - 1, FPMVector::unit(c));
    for (auto& [key, part] : tgt.split_blocks(y)) images[key].push_back(std::move(part));
  }
  WindowedSubspace out(D);
  const auto inside = [&](const Coord& c) { return tgt.level(c) <= D; };
  for (const auto& [key, vs] : images) {
    const auto span = span_within(vs, inside);
    for (const auto& row : span.rows()) out.insert(tgt, row);
  }
  return out;
}

namespace {

// Kernel of a linear map given on the window basis, computed per block.
template <class Key, class Image>
WindowedSubspace window_kernel(const FPModule& f, int D, Image image) {
  std::map<Weight, std::vector<Coord>> by_block;
  for (const auto& c : f.window_basis(D)) by_block[f.block_key(c)].push_back(c);
  WindowedSubspace out(D);
  for (const auto& [key, coords] : by_block) {
    std::vector<SparseVector<Key>> imgs;
    imgs.reserve(coords.size());
    for (const auto& c : coords) imgs.push_back(image(c));
    for (const auto& rel : linear_relations(imgs)) {
      FPMVector v;
      for (const auto& [pos, a] : rel) v.add(coords[pos], a);
      out.insert(f, v);
    }
  }
  return out;
}

}  // namespace

WindowedSubspace kernel_window(const DeRham& dr, Mode mode, int r, int D) {
  const FPModule f = dr.module(r, mode);
  if (r == dr.rank()) {
    WindowedSubspace all(D);
    for (const auto& c : f.window_basis(D)) all.insert(f, FPMVector::unit(c));
    return all;
  }
  return window_kernel<Coord>(f, D, [&](const Coord& c) { return dr.pi(r, FPMVector::unit(c)); });
}

LtildeResult ltilde_window(const DeRham& dr, Mode mode, int r, int D, int A) {
  if (r < 0 || r > dr.rank()) throw std::invalid_argument("ltilde needs 0 <= r <= n");
  const FPModule f = dr.module(r, mode);
  const int wide = D + level_shift_bound(dr.P(), mode, A);
  const WindowedSubspace big = r >= 1 ? L_window(dr, mode, r, wide) : WindowedSubspace(wide);
  const auto ops = closure_operators(f, A);
  using Key = std::pair<std::size_t, Coord>;
  LtildeResult res;
  res.ltilde = window_kernel<Key>(f, D, [&](const Coord& c) {
    SparseVector<Key> out;
    const FPMVector e = FPMVector::unit(c);
    for (std::size_t o = 0; o < ops.size(); ++o) {
      const FPMVector y = fpm_act(f, ops[o], e).filtered([&](const Coord& d) { return f.level(d) <= wide; });
      for (const auto& [d, a] : big.reduce(f, y)) out.add({o, d}, a);
    }
    return out;
  });
  if (r < dr.rank()) {
    res.kernel = kernel_window(dr, mode, r, D);
    res.matches_kernel = same_subspace(f, res.ltilde, *res.kernel);
  }
  return res;
}

}  // namespace wittmod
