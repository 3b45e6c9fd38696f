#pragma once

#include <random>

#include "wittmod/polyalg.hpp"

namespace wittmod::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Scalar small_rational() {
  int den = uniform(1, 4);
  return Scalar(uniform(-5, 5), den);
}

inline MultiIndex random_index(int n, Mode mode, int bound) {
  MultiIndex a = MultiIndex::zero(n);
  for (int i = 0; i < n; ++i) a[i] = mode == Mode::plus ? uniform(0, bound) : uniform(-bound, bound);
  return a;
}

inline PolyElement random_poly(Mode mode, int n, int deg, int terms) {
  PolyElement f(mode, n);
  for (int k = 0; k < terms; ++k) {
    MultiIndex a = MultiIndex::zero(n);
    int left = deg;
    for (int i = 0; i < n; ++i) {
      a[i] = mode == Mode::plus ? uniform(0, left) : uniform(-left, left);
      left -= a[i] < 0 ? -a[i] : a[i];
    }
    f.add_term(a, small_rational());
  }
  return f;
}

}  // namespace wittmod::testing
