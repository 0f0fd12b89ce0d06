#include "doctest.h"
#include "support.hpp"

#include "linsyz/multilin.hpp"

#include <map>

using namespace linsyz;

namespace {

const Field F = Field::prime(kDefaultPrime);

Ring vars(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return Ring(names, F);
}

SparseVec unit(std::size_t i) { return {{i, F.one()}}; }

// Sign of a permutation given as a sequence of distinct integers, by counting inversions.
int perm_sign(const std::vector<std::size_t>& seq) {
  int s = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) s = -s;
  return s;
}

IndexedMap random_forms(std::mt19937_64& rng, std::size_t g, std::size_t nv) {
  return {"G", "V", testsupport::random_mat(F, rng, g, nv, 0.6)};
}

}  // namespace

TEST_SUITE("multilin") {

TEST_CASE("subsets and ranks") {
  CHECK(subsets(4, 2).size() == 6);
  CHECK(subsets(4, 2)[1] == MultiIndex{0, 2});
  CHECK(subsets(3, 0) == std::vector<MultiIndex>{MultiIndex{}});
  CHECK(subsets(2, 3).empty());
  for (std::size_t n = 0; n <= 7; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      auto all = subsets(n, k);
      CHECK(all.size() == binomial(n, k));
      for (std::size_t i = 0; i < all.size(); ++i) CHECK(subset_rank(all[i], n) == i);
    }
}

TEST_CASE("signs against inversion counting") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng() % 7;
    auto a = subsets(n, rng() % (n + 1));
    MultiIndex s = a[rng() % a.size()];
    auto b = subsets(n, rng() % (n + 1));
    MultiIndex u = b[rng() % b.size()];
    std::vector<std::size_t> seq(s);
    seq.insert(seq.end(), u.begin(), u.end());
    std::vector<std::size_t> sorted(seq);
    std::sort(sorted.begin(), sorted.end());
    bool meet = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    CHECK(wedge_sign(s, u) == (meet ? 0 : perm_sign(seq)));
    CHECK(complement_sign(s, n) == perm_sign([&] {
            auto c = s;
            auto r = complement(s, n);
            c.insert(c.end(), r.begin(), r.end());
            return c;
          }()));
  }
  MultiIndex out;
  CHECK(wedge_left(1, {0, 2}, out) == -1);
  CHECK(out == MultiIndex{0, 1, 2});
  CHECK(wedge_left(2, {0, 2}, out) == 0);
}

TEST_CASE("comultiply examples") {
  IndexedMap c0 = comultiply(F, 3, 0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(vec::equal(c0.matrix.row(i), unit(i)));
  // G* (x) L1G* has index i*3 + j
  IndexedMap c1 = comultiply(F, 3, 1);
  SparseVec e12 = c1.matrix.row(ExteriorSpace(3, 2).index_of({1, 2}));
  CHECK(vec::equal(e12, vec::from_pairs(F, {{1 * 3 + 2, F.one()}, {2 * 3 + 1, F.from_int(-1)}})));
  IndexedMap c2 = comultiply(F, 4, 2);
  ExteriorSpace l2(4, 2);
  SparseVec e123 = c2.matrix.row(ExteriorSpace(4, 3).index_of({1, 2, 3}));
  SparseVec want = vec::from_pairs(F, {{1 * 6 + l2.index_of({2, 3}), F.one()},
                                       {2 * 6 + l2.index_of({1, 3}), F.from_int(-1)},
                                       {3 * 6 + l2.index_of({1, 2}), F.one()}});
  CHECK(vec::equal(e123, want));
  CHECK_THROWS_AS(comultiply(F, 3, 3), std::invalid_argument);
}

TEST_CASE("comultiply then wedge is (k+1) times the identity") {
  for (std::size_t g = 1; g <= 6; ++g)
    for (std::size_t k = 0; k < g; ++k) {
      Mat m = then(comultiply(F, g, k), wedge_multiply(F, g, k)).matrix;
      Mat want(F, m.rows(), m.rows());
      for (std::size_t i = 0; i < m.rows(); ++i) want.set(i, i, F.from_int(static_cast<long long>(k + 1)));
      CHECK(m == want);
      CHECK(rank(comultiply(F, g, k).matrix) == binomial(g, k + 1));
    }
}

TEST_CASE("koszul contraction") {
  Ring r = vars(3);
  Subspace r2 = Subspace::full(F, r.dim(2));
  // p = 1 is multiplication
  IndexedMap k1 = koszul_contract(r, 1, r2, 2);
  std::size_t q = r.monomial_index(Monomial({1, 1, 0}));
  std::size_t src = 2 * r.dim(2) + q;  // x2 (x) x0x1
  CHECK(vec::equal(k1.matrix.row(src), unit(r.monomial_index(Monomial({1, 1, 1})))));
  // p = 2: (v0^v1) (x) q -> v1 (x) x0 q - v0 (x) x1 q
  IndexedMap k2 = koszul_contract(r, 2, r2, 2);
  SparseVec img = k2.matrix.row(0 * r.dim(2) + q);
  std::size_t r3 = r.dim(3);
  SparseVec want = vec::from_pairs(F, {{1 * r3 + r.monomial_index(Monomial({2, 1, 0})), F.one()},
                                       {0 * r3 + r.monomial_index(Monomial({1, 2, 0})), F.from_int(-1)}});
  CHECK(vec::equal(img, want));
}

TEST_CASE("koszul contraction squares to zero") {
  std::mt19937_64 rng(22);
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t p = 2; p <= std::min<std::size_t>(4, n); ++p) {
      Ring r = vars(n);
      int d = 1 + static_cast<int>(rng() % 2);
      Subspace w = Subspace::span(F, r.dim(d), {testsupport::random_vec(F, rng, r.dim(d), 0.4),
                                                testsupport::random_vec(F, rng, r.dim(d), 0.4)});
      IndexedMap a = koszul_contract(r, p, w, d);
      IndexedMap b = koszul_contract(r, p - 1, Subspace::full(F, r.dim(d + 1)), d + 1);
      CHECK(then(a, b).matrix.is_zero());
    }
}

TEST_CASE("wedge with theta examples") {
  Ring r = vars(2);
  IndexedMap forms{"G", "V", Mat::identity(F, 2)};
  IndexedMap t0 = wedge_theta(0, forms);
  // 1 -> e0 (x) x0 + e1 (x) x1; layout index(out) * 2 + var
  CHECK(vec::equal(t0.matrix.row(0), vec::from_pairs(F, {{0, F.one()}, {3, F.one()}})));
  IndexedMap t1 = wedge_theta(1, forms);
  CHECK(vec::equal(t1.matrix.row(0), vec::from_pairs(F, {{1, F.from_int(-1)}})));
  CHECK(vec::equal(t1.matrix.row(1), vec::from_pairs(F, {{0, F.one()}})));
}

TEST_CASE("theta squares to zero, against polynomial expansion") {
  std::mt19937_64 rng(23);
  Ring r = vars(5);
  const std::size_t g = 4;
  for (int t = 0; t < 5; ++t) {
    IndexedMap forms = random_forms(rng, g, 5);
    for (std::size_t m = 0; m + 2 <= g; ++m) {
      CHECK(then(wedge_theta(m, forms), wedge_theta_next(r, m, forms)).matrix.is_zero());
      // Oracle: sum_{i,j} (e_i ^ e_j ^ w) l_i l_j expanded as polynomials.
      std::vector<Poly> l;
      for (std::size_t i = 0; i < g; ++i) l.push_back(Poly::from_vector(r, 1, forms.matrix.row(i)));
      for (const auto& w : subsets(g, m)) {
        std::map<MultiIndex, Poly> acc;
        MultiIndex a, b;
        for (std::size_t j = 0; j < g; ++j) {
          int sj = wedge_left(j, w, a);
          if (!sj) continue;
          for (std::size_t i = 0; i < g; ++i) {
            int si = wedge_left(i, a, b);
            if (!si) continue;
            Poly term = (l[i] * l[j]).scaled(F.from_int(si * sj));
            auto it = acc.emplace(b, Poly(r, 2)).first;
            it->second = it->second + term;
          }
        }
        for (const auto& [idx, poly] : acc) CHECK(poly.is_zero());
      }
    }
  }
}

TEST_CASE("theta injectivity tracks independence of the forms") {
  std::mt19937_64 rng(24);
  for (std::size_t g = 2; g <= 5; ++g) {
    IndexedMap ind{"G", "V", Mat(F, g, g + 1)};
    for (std::size_t i = 0; i < g; ++i) ind.matrix.set(i, i, F.one());
    for (std::size_t i = 0; i < g; ++i) ind.matrix.set(i, g, F.from_int(static_cast<long long>(rng() % 9)));
    IndexedMap dep = ind;
    SparseVec other = g > 2 ? ind.matrix.row(g - 2) : SparseVec{};
    dep.matrix.set_row(g - 1, vec::axpy(F, F.from_int(3), ind.matrix.row(0), other));
    for (std::size_t m = 0; m < g; ++m) CHECK(kernel(wedge_theta(m, ind).matrix.transpose()).dim() == 0);
    CHECK(kernel(wedge_theta(g - 1, dep).matrix.transpose()).dim() > 0);
  }
}

}
