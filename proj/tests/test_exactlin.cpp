#include "doctest.h"
#include "support.hpp"

#include "linsyz/exactlin.hpp"

using namespace linsyz;
using testsupport::random_mat;

namespace {

const Field F = Field::prime(kDefaultPrime);

// Independent rank oracle: textbook Gaussian elimination on a dense copy.
std::size_t naive_rank(const Mat& m) {
  const Field& f = m.field();
  std::vector<std::vector<Scalar>> a;
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec::to_dense(f, m.row(i), m.cols()));
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c].is_zero()) continue;
      Scalar q = f.div(a[i][c], a[r][c]);
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] = f.sub(a[i][j], f.mul(q, a[r][j]));
    }
    ++r;
  }
  return r;
}

bool in_kernel(const Mat& m, const SparseVec& x) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Scalar acc = m.field().zero();
    for (const auto& e : m.row(i)) acc = m.field().add(acc, m.field().mul(e.value, vec::at(x, e.index)));
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("exactlin") {

TEST_CASE("field arithmetic and printing") {
  CHECK(F.name() == "F_32003");
  CHECK(F.to_string(F.from_int(-1)) == "-1");
  CHECK(F.to_string(F.from_int(16001)) == "16001");
  CHECK(F.to_string(F.from_int(16002)) == "-16001");
  Scalar a = F.from_int(7);
  CHECK(F.mul(a, F.inv(a)) == F.one());
  Field Q = Field::rationals();
  Scalar h = Q.from_rational(mpq_class(1, 2));
  CHECK(Q.to_string(Q.add(h, h)) == "1");
  CHECK(Q.to_string(Q.neg(h)) == "-1/2");
  CHECK(F.from_rational(mpq_class(1, 2)) == F.inv(F.from_int(2)));
  CHECK_THROWS_AS(Field::prime(32001), std::invalid_argument);
  CHECK_THROWS_AS(Field::parse("banana"), std::invalid_argument);
  CHECK(Field::parse("QQ") == Q);
  CHECK(Field::parse("65537") == Field::prime(65537));
}

TEST_CASE("rref examples") {
  CHECK(rref(Mat::identity(F, 2)) == Mat::identity(F, 2));
  Mat z(F, 2, 3);
  CHECK(rref(z) == z);
  Mat m = Mat::from_ints(F, {{1, 2}, {2, 4}});
  CHECK(rref(m) == Mat::from_ints(F, {{1, 2}, {0, 0}}));
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Mat::identity(F, 3)).dim() == 0);
  CHECK(kernel(Mat(F, 3, 3)).dim() == 3);
  Subspace k = kernel(Mat::from_ints(F, {{1, 1, 0}}));
  CHECK(k.dim() == 2);
  CHECK(k.contains(vec::from_dense({F.one(), F.from_int(-1), F.zero()})));
}

TEST_CASE("intersect examples") {
  Subspace a = Subspace::coordinate(F, 3, {0, 1});
  Subspace b = Subspace::coordinate(F, 3, {1, 2});
  CHECK(intersect(a, a) == a);
  CHECK(intersect(Subspace::coordinate(F, 3, {0}), b).dim() == 0);
  CHECK(intersect(a, b) == Subspace::coordinate(F, 3, {1}));
  CHECK_THROWS_AS(intersect(a, Subspace(F, 4)), std::invalid_argument);
}

TEST_CASE("solve examples") {
  SolveResult r = solve(Mat::identity(F, 2), Mat::from_ints(F, {{3}, {4}}));
  CHECK(r.consistent);
  CHECK(r.unique);
  CHECK(r.solution == Mat::from_ints(F, {{3}, {4}}));

  r = solve(Mat::from_ints(F, {{1, 1}}), Mat::from_ints(F, {{1}}));
  CHECK(r.consistent);
  CHECK_FALSE(r.unique);
  CHECK(r.solution == Mat::from_ints(F, {{1}, {0}}));

  r = solve(Mat::from_ints(F, {{1}, {1}}), Mat::from_ints(F, {{1}, {2}}));
  CHECK_FALSE(r.consistent);
  CHECK(r.inconsistent_columns == std::vector<std::size_t>{0});
}

TEST_CASE("rank plus nullity, against a naive oracle") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
    Mat m = t % 2 ? random_mat(F, rng, r, c, 0.3) : testsupport::low_rank_mat(F, rng, r, c, 1 + rng() % 4);
    std::size_t rk = rank(m);
    CHECK(rk == naive_rank(m));
    Subspace k = kernel(m);
    CHECK(rk + k.dim() == c);
    for (const auto& b : k.basis()) CHECK(in_kernel(m, b));
  }
}

TEST_CASE("rref is idempotent and canonical") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 2 + rng() % 8, c = 2 + rng() % 10;
    Mat m = testsupport::low_rank_mat(F, rng, r, c, 1 + rng() % 3);
    Mat e = rref(m);
    CHECK(rref(e) == e);
    // Left-multiplying by an invertible (unit lower triangular) matrix keeps the row space.
    Mat u = Mat::identity(F, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < i; ++j) u.set(i, j, F.from_int(static_cast<long long>(rng() % 7) - 3));
    CHECK(rref(multiply(u, m)) == e);
  }
}

TEST_CASE("dimension formula for sum and intersection") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 3 + rng() % 8;
    Mat a = testsupport::low_rank_mat(F, rng, 1 + rng() % n, n, 1 + rng() % n);
    Mat b = testsupport::low_rank_mat(F, rng, 1 + rng() % n, n, 1 + rng() % n);
    Subspace sa = Subspace::span(F, n, a.row_vectors()), sb = Subspace::span(F, n, b.row_vectors());
    Subspace meet = intersect(sa, sb);
    CHECK(sa.dim() + sb.dim() == sum(sa, sb).dim() + meet.dim());
    CHECK(sa.contains(meet));
    CHECK(sb.contains(meet));
  }
}

TEST_CASE("solve substitutes back exactly") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 2 + rng() % 8, c = 2 + rng() % 8;
    Mat m = random_mat(F, rng, r, c, 0.5);
    Mat x = random_mat(F, rng, c, 3, 0.6);
    Mat tg = multiply(m, x);
    SolveResult s = solve(m, tg);
    REQUIRE(s.consistent);
    CHECK(multiply(m, s.solution) == tg);
    CHECK(s.unique == (rank(m) == c));
  }
}

TEST_CASE("rationals agree with the prime field on small integer matrices") {
  std::mt19937_64 rng(15);
  Field Q = Field::rationals();
  for (int t = 0; t < 20; ++t) {
    Mat m = testsupport::low_rank_mat(Q, rng, 6, 7, 1 + rng() % 5);
    Mat mp(F, 6, 7);
    for (std::size_t i = 0; i < 6; ++i)
      for (const auto& e : m.row(i)) mp.set(i, e.index, F.from_rational(e.value.rational()));
    CHECK(rank(m) == rank(mp));
  }
}

TEST_CASE("dense and sparse kernels give identical echelon forms") {
  testsupport::StrategyGuard guard;
  std::mt19937_64 rng(16);
  for (int t = 0; t < 25; ++t) {
    std::size_t r = 5 + rng() % 30, c = 5 + rng() % 30;
    Mat m = t % 3 ? random_mat(F, rng, r, c, 0.1 + 0.05 * (t % 5)) : testsupport::low_rank_mat(F, rng, r, c, 4);
    set_small_block_cells(0);
    set_dense_threshold(0.0);
    Mat dense = rref(m);
    Subspace kd = kernel(m);
    set_dense_threshold(2.0);
    Mat sparse = rref(m);
    Subspace ks = kernel(m);
    CHECK(dense == sparse);
    CHECK(kd == ks);
  }
}

}
