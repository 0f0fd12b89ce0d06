#pragma once

#include "linsyz/exactlin.hpp"

#include <random>
#include <vector>

namespace testsupport {

// Random sparse matrix; `fill` is the probability an entry is nonzero.
inline linsyz::Mat random_mat(const linsyz::Field& f, std::mt19937_64& rng, std::size_t r, std::size_t c,
                              double fill) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<long long> val(-5, 5);
  linsyz::Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng) < fill) m.set(i, j, f.from_int(val(rng)));
  return m;
}

// Product of two random factors, so the rank is at most k.
inline linsyz::Mat low_rank_mat(const linsyz::Field& f, std::mt19937_64& rng, std::size_t r, std::size_t c,
                                std::size_t k) {
  return linsyz::multiply(random_mat(f, rng, r, k, 0.7), random_mat(f, rng, k, c, 0.7));
}

inline linsyz::SparseVec random_vec(const linsyz::Field& f, std::mt19937_64& rng, std::size_t n, double fill) {
  return random_mat(f, rng, 1, n, fill).row(0);
}

// Restores the elimination strategy knobs on scope exit.
struct StrategyGuard {
  double threshold = linsyz::dense_threshold();
  std::size_t small = linsyz::small_block_cells();
  ~StrategyGuard() {
    linsyz::set_dense_threshold(threshold);
    linsyz::set_small_block_cells(small);
  }
};

}  // namespace testsupport
