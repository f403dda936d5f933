#pragma once

#include <random>

#include "qtet/matrix.hpp"
#include "qtet/scalar.hpp"

namespace qtest {

using qtet::Matrix;
using qtet::Rat;

inline Matrix<Rat> random_int_matrix(std::mt19937& rng, int n, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix<Rat> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Rat(d(rng));
  return m;
}

// Product of random elementary row operations: determinant ±1, integer
// entries, guaranteed invertible.
inline Matrix<Rat> random_unimodular(std::mt19937& rng, int n, int ops = 8) {
  std::uniform_int_distribution<int> row(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  Matrix<Rat> t = Matrix<Rat>::identity(n);
  for (int k = 0; k < ops; ++k) {
    int i = row(rng), j = row(rng);
    if (i == j) continue;
    Matrix<Rat> e = Matrix<Rat>::identity(n);
    e(i, j) = Rat(coef(rng));
    t = e * t;
  }
  return t;
}

}  // namespace qtest
