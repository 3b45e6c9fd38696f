#include <set>

#include "wittmod/wittrep.hpp"

namespace wittmod {

namespace {

std::size_t image_rank(const DeRham& dr, int r, const std::vector<Coord>& cells) {
  if (r >= dr.rank()) return 0;
  EchelonBasis<Coord> span;
  for (const auto& c : cells) span.insert(dr.pi(r, FPMVector::unit(c)));
  return span.dim();
}

MultiIndex indicator(int n, const std::vector<int>& s) {
  MultiIndex e = MultiIndex::zero(n);
  for (int i : s) e[i] = 1;
  return e;
}

HomologyTable filtered_homology(const DeRham& dr, int D) {
  const int n = dr.rank();
  std::vector<std::vector<Coord>> cells(static_cast<std::size_t>(n + 1));
  for (int r = 0; r <= n; ++r) {
    const std::size_t subsets = dr.ext(r).dim();
    for (const auto& k : dr.P().window_basis(D + r)) {
      for (std::size_t m = 0; m < subsets; ++m) cells[static_cast<std::size_t>(r)].push_back({k, m});
    }
  }
  HomologyTable t;
  t.filtered = true;
  std::size_t prev_rank = 0;
  for (int r = 0; r <= n; ++r) {
    const auto& c = cells[static_cast<std::size_t>(r)];
    const std::size_t rk = image_rank(dr, r, c);
    t.entries.push_back({r, D, c.size() - rk - prev_rank, true});
    prev_rank = rk;
  }
  return t;
}

}  // namespace

HomologyTable complex_homology(const WeylModule& p, int D) {
  if (D < 2) throw std::invalid_argument("homology window must be at least 2");
  const DeRham dr(p);
  if (p.all_factors(FactorKind::whittaker)) return filtered_homology(dr, D);
  if (!p.is_weight()) throw std::invalid_argument("homology needs all factors weight or all Whittaker");
  const int n = p.rank();
  std::vector<std::vector<std::vector<int>>> subsets;
  for (int r = 0; r <= n; ++r) subsets.push_back(sorted_subsets(n, r));

  std::set<MultiIndex> mus;
  for (const auto& k : p.window_basis(D)) {
    for (const auto& row : subsets) {
      for (const auto& s : row) mus.insert(k + indicator(n, s));
    }
  }
  struct LevelAcc {
    bool all_complete = true;
    bool any_complete = false;
    std::vector<std::size_t> dims;
  };
  std::map<int, LevelAcc> levels;
  for (const auto& mu : mus) {
    std::vector<std::vector<Coord>> cells(static_cast<std::size_t>(n + 1));
    bool complete = true;
    for (int r = 0; r <= n; ++r) {
      const auto& row = subsets[static_cast<std::size_t>(r)];
      for (std::size_t m = 0; m < row.size(); ++m) {
        const MultiIndex k = mu - indicator(n, row[m]);
        if (!p.valid_index(k)) continue;
        if (p.level(k) > D) complete = false;
        cells[static_cast<std::size_t>(r)].push_back({k, m});
      }
    }
    auto& acc = levels[mu.total()];
    acc.dims.resize(static_cast<std::size_t>(n + 1), 0);
    if (!complete) {
      acc.all_complete = false;
      continue;
    }
    acc.any_complete = true;
    std::size_t prev_rank = 0;
    for (int r = 0; r <= n; ++r) {
      const auto& c = cells[static_cast<std::size_t>(r)];
      const std::size_t rk = image_rank(dr, r, c);
      acc.dims[static_cast<std::size_t>(r)] += c.size() - rk - prev_rank;
      prev_rank = rk;
    }
  }
  HomologyTable t;
  for (int r = 0; r <= n; ++r) {
    for (const auto& [level, acc] : levels) {
      if (!acc.any_complete) continue;
      t.entries.push_back({r, level, acc.dims[static_cast<std::size_t>(r)], acc.all_complete});
    }
  }
  return t;
}

}  // namespace wittmod
