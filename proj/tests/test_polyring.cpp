#include "doctest.h"

#include "linsyz/polyring.hpp"

using namespace linsyz;

namespace {

const Field F = Field::prime(kDefaultPrime);

Ring vars(std::size_t n, const std::string& stem = "x") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(stem + std::to_string(i));
  return Ring(names, F);
}

GradedIdeal ideal(const Ring& r, std::initializer_list<const char*> gens) {
  std::vector<Poly> g;
  for (const char* s : gens) g.push_back(parse_poly(r, s));
  return GradedIdeal(r, g);
}

GradedIdeal twisted_cubic() {
  Ring r = vars(4);
  return ideal(r, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
}

// Oracle for dim I_d: span of every product generator * monomial, computed
// by expanding polynomials rather than through ideal_piece.
std::size_t brute_piece_dim(const GradedIdeal& I, int d) {
  std::vector<SparseVec> rows;
  for (const auto& g : I.generators())
    for (const auto& m : I.ring().monomial_basis(d - g.degree()))
      rows.push_back((g * Poly::monomial(I.ring(), m, F.one())).to_vector());
  return Subspace::span(F, I.ring().dim(d), rows).dim();
}

}  // namespace

TEST_SUITE("polyring") {

TEST_CASE("monomial bases") {
  Ring r2 = vars(2), r4 = vars(4);
  CHECK(r4.monomial_basis(0).size() == 1);
  CHECK(r2.monomial_basis(2).size() == 3);
  CHECK(r4.monomial_basis(3).size() == 20);
  // grevlex with x0 > x1 > x2: x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2
  Ring r3 = vars(3);
  std::vector<std::string> s;
  for (const auto& m : r3.monomial_basis(2)) s.push_back(r3.monomial_string(m));
  CHECK(s == std::vector<std::string>{"x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x2^2"});
  for (std::size_t i = 0; i < 4; ++i) CHECK(r4.monomial_index(Monomial::variable(4, i)) == i);
}

TEST_CASE("ideal pieces") {
  Ring r2 = vars(2);
  GradedIdeal x0 = ideal(r2, {"x0"});
  CHECK(ideal_piece(x0, 1).dim() == 1);
  CHECK(ideal_piece(x0, 2).dim() == 2);
  CHECK(ideal_piece(x0, 0).dim() == 0);
  GradedIdeal tc = twisted_cubic();
  CHECK(ideal_piece(tc, 3).dim() == 10);  // 20 monomials minus h(3) = 10
  for (int d = 2; d <= 5; ++d) CHECK(ideal_piece(tc, d).dim() == brute_piece_dim(tc, d));
}

TEST_CASE("intersections of pieces") {
  Ring r({"x0", "x1", "y"}, F);
  GradedIdeal y = ideal(r, {"y"}), xs = ideal(r, {"x0", "x1"});
  Subspace meet = ideal_intersect_piece(y, xs, 2);
  CHECK(meet.dim() == 2);
  CHECK(meet == ideal_piece(ideal(r, {"x0*y", "x1*y"}), 2));
  CHECK(ideal_intersect_piece(y, y, 3) == ideal_piece(y, 3));
  Ring r2 = vars(2);
  CHECK(ideal_intersect_piece(ideal(r2, {"x0"}), ideal(r2, {"x1"}), 2).dim() == 1);
}

TEST_CASE("colon pieces") {
  Ring r2 = vars(2);
  GradedIdeal sq = ideal(r2, {"x0^2"});
  CHECK(colon_piece(sq, Poly::variable(r2, 0), 1) == Subspace::coordinate(F, 2, {0}));
  GradedIdeal tc = twisted_cubic();
  Poly l = parse_poly(tc.ring(), "x0 + 2*x1 - 3*x2 + 5*x3");
  for (int d = 1; d <= 3; ++d) CHECK(colon_piece(tc, l, d) == ideal_piece(tc, d));
  Ring r({"x0", "x1", "y"}, F);
  GradedIdeal red = ideal(r, {"x0*y", "x1*y"});
  Subspace c = colon_piece(red, parse_poly(r, "y"), 1);
  CHECK(c.dim() == 2);
  CHECK(saturation_check(red, 4).saturated);
}

TEST_CASE("saturation check") {
  Ring r3 = vars(3);
  CHECK(saturation_check(ideal(r3, {"x0"}), 5).saturated);
  GradedIdeal bad = ideal(r3, {"x0^2", "x0*x1", "x0*x2"});
  SaturationReport rep = saturation_check(bad, 3);
  CHECK_FALSE(rep.saturated);
  CHECK_FALSE(rep.rows[1].equal);
  CHECK(rep.rows[1].colon_dim == 1);
  CHECK(saturation_check(twisted_cubic(), 4).saturated);
}

TEST_CASE("hilbert functions") {
  Ring r4 = vars(4);
  GradedIdeal zero(r4, {});
  for (int d = 0; d <= 8; ++d) CHECK(hilbert_function(zero, d) == binomial(3 + d, d));
  CHECK(hilbert_values(twisted_cubic(), 1, 4) == std::vector<long long>{4, 7, 10, 13});
  CHECK(hilbert_function(ideal(r4, {"x0*x3 - x1*x2"}), 2) == 9);
  // Linear generators are quotiented out before counting.
  GradedIdeal mixed = ideal(r4, {"x0 - x3", "x1*x2"});
  for (int d = 0; d <= 5; ++d) CHECK(hilbert_function(mixed, d) == r4.dim(d) - brute_piece_dim(mixed, d));
}

TEST_CASE("dimension and degree estimates") {
  std::vector<long long> a{4, 7, 10, 13};
  DimDegreeEstimate e = dim_degree_estimate(a, 1);
  CHECK(e.stabilized);
  CHECK(e.dimension == 1);
  CHECK(e.degree == 3);
  std::vector<long long> pt{1, 1, 1, 1};
  e = dim_degree_estimate(pt, 1);
  CHECK(e.dimension == 0);
  CHECK(e.degree == 1);
  std::vector<long long> plane;
  for (int d = 1; d <= 5; ++d) plane.push_back(static_cast<long long>(binomial(d + 2, 2)));
  e = dim_degree_estimate(plane, 1);
  CHECK(e.dimension == 2);
  CHECK(e.degree == 1);
  std::vector<long long> cubic{1, 4, 10};
  CHECK_FALSE(dim_degree_estimate(cubic, 0).stabilized);
  std::vector<long long> empty{0, 0, 0};
  CHECK(dim_degree_estimate(empty, 3).dimension == -1);
}

TEST_CASE("parsing and printing") {
  Ring r4 = vars(4);
  Poly q = parse_poly(r4, "x0*x3 - x1*x2");
  CHECK(q.size() == 2);
  CHECK(q.degree() == 2);
  CHECK(print_poly(q) == "x0*x3 - x1*x2");
  CHECK(parse_poly(r4, "x1^2").size() == 1);
  CHECK(print_poly(parse_poly(r4, "-x2*x1 + 3*x3*x0 - 2 * (x0*x3)")) == "x0*x3 - x1*x2");
  CHECK(print_poly(parse_poly(r4, "(x0 + x1)^2 - x0^2 - x1^2")) == "2*x0*x1");
  CHECK(print_poly(parse_poly(r4, "x0 - x0")) == "0");
  CHECK_THROWS_WITH_AS(parse_poly(r4, "x0 + x1*x2"), doctest::Contains("inhomogeneous"), ParseError);
  try {
    parse_poly(r4, "x0 * * x1");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_WITH_AS(parse_poly(r4, "x0*z"), doctest::Contains("unknown variable 'z'"), ParseError);
  CHECK_THROWS_AS(parse_poly(r4, "(x0 + x1"), ParseError);
  Ring rq({"x", "y"}, Field::rationals());
  CHECK(print_poly(parse_poly(rq, "1/2*x*y - 3/4*y^2")) == "1/2*x*y - 3/4*y^2");
}

TEST_CASE("ideal files") {
  GradedIdeal I = parse_ideal_text("# a comment\nvars: a b c\n\na*b - c^2  # trailing\nb*c\n", F);
  CHECK(I.ring().nvars() == 3);
  CHECK(I.generators().size() == 2);
  CHECK(print_ideal_text(I) == "vars: a b c\na*b - c^2\nb*c\n");
  CHECK(print_ideal_text(parse_ideal_text(print_ideal_text(I), F)) == print_ideal_text(I));
  CHECK_THROWS_WITH_AS(parse_ideal_text("a*b\n", F), doctest::Contains("vars:"), ParseError);
  CHECK_THROWS_WITH_AS(parse_ideal_text("vars: a b\na*q\n", F), doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(parse_ideal_text("vars: a a\n", F), ParseError);
}

TEST_CASE("monotonicity and multiplication bound") {
  GradedIdeal tc = twisted_cubic();
  for (int d = 2; d <= 5; ++d) {
    // R_1 * I_d spans I_{d+1} because no generators live above degree 2.
    CHECK(ideal_piece(tc, d + 1).dim() >= ideal_piece(tc, d).dim());
    Ring r = tc.ring();
    std::vector<SparseVec> prods;
    for (const auto& b : polys_of(r, d, ideal_piece(tc, d)))
      for (std::size_t i = 0; i < r.nvars(); ++i) prods.push_back((b * Poly::variable(r, i)).to_vector());
    CHECK(Subspace::span(F, r.dim(d + 1), prods) == ideal_piece(tc, d + 1));
  }
  Ring r4 = vars(4);
  GradedIdeal small = ideal(r4, {"x0*x3 - x1*x2"});
  GradedIdeal big = ideal(r4, {"x0*x3 - x1*x2", "x0*x2 - x1^2"});
  for (int d = 2; d <= 4; ++d) CHECK(ideal_piece(big, d).contains(ideal_piece(small, d)));
  // A cubic generator adds beyond the products.
  GradedIdeal cub = ideal(r4, {"x0*x3 - x1*x2", "x2^3"});
  CHECK(ideal_piece(cub, 3).dim() == ideal_piece(small, 3).dim() + 1);
}

TEST_CASE("substitution") {
  Ring r2 = vars(2), r3 = vars(3, "t");
  std::vector<Poly> img{parse_poly(r3, "t0 + t1"), parse_poly(r3, "t2")};
  CHECK(print_poly(substitute(parse_poly(r2, "x0^2 - x1^2"), r3, img)) == "t0^2 + 2*t0*t1 + t1^2 - t2^2");
}

}
