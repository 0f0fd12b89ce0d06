#include "linsyz/gensyz.hpp"

#include <algorithm>

namespace linsyz {

namespace {

std::string y_name(const MultiIndex& t, std::size_t g) {
  if (t.empty()) return "y";
  std::string out = "y";
  for (auto i : t) out += (g > 10 ? "_" : "") + std::to_string(i);
  return out;
}

Scalar sgn(const Field& f, int s) { return s > 0 ? f.one() : f.neg(f.one()); }

GradedIdeal linear_ideal(const Ring& r, const std::vector<SparseVec>& forms) {
  std::vector<Poly> gens;
  for (const auto& v : forms)
    if (!v.empty()) gens.push_back(Poly::from_vector(r, 1, v));
  return GradedIdeal(r, std::move(gens));
}

// span R_1 * X, for X a subspace of R_d.
Subspace products(const Ring& r, const Subspace& x, int d) {
  const Field& f = r.field();
  std::vector<SparseVec> rows;
  const auto& basis = r.monomial_basis(d);
  for (const auto& b : x.basis()) {
    for (std::size_t v = 0; v < r.nvars(); ++v) {
      Monomial xv = Monomial::variable(r.nvars(), v);
      std::vector<Entry> row;
      row.reserve(b.size());
      for (const auto& e : b) row.push_back({r.monomial_index(xv * basis[e.index]), e.value});
      rows.push_back(vec::from_pairs(f, std::move(row)));
    }
  }
  return Subspace::span(f, r.dim(d + 1), rows);
}

// Fills rows for degrees 1..up_to comparing two families of pieces.
template <class Lhs, class Rhs>
void compare_pieces(const Ring& r, int up_to, Lhs lhs, Rhs rhs, DecompositionReport& rep) {
  std::optional<Subspace> pl, pr;
  for (int d = 1; d <= up_to; ++d) {
    Subspace a = lhs(d), b = rhs(d);
    DegreeCheck row;
    row.degree = d;
    row.lhs_dim = a.dim();
    row.rhs_dim = b.dim();
    row.equal = a == b;
    row.lhs_new = a.dim() - (pl ? products(r, *pl, d - 1).dim() : 0);
    row.rhs_new = b.dim() - (pr ? products(r, *pr, d - 1).dim() : 0);
    rep.rows.push_back(row);
    pl = std::move(a);
    pr = std::move(b);
  }
  if (!rep.rows.empty()) {
    const auto& last = rep.rows.back();
    rep.no_new_generators_at_bound = up_to <= 2 || (last.lhs_new == 0 && last.rhs_new == 0);
  }
}

bool rows_equal(const DecompositionReport& rep) {
  return std::all_of(rep.rows.begin(), rep.rows.end(), [](const DegreeCheck& c) { return c.equal; });
}

}  // namespace

GensyzModel generic_syzygy_ideal(std::size_t g, std::size_t k, const Field& field) {
  if (g == 0 || k >= g) throw std::invalid_argument("generic syzygy ideal needs 0 <= k < g");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g; ++i) names.push_back("x" + std::to_string(i));
  auto ts = subsets(g, k);
  for (const auto& t : ts) names.push_back(y_name(t, g));
  Ring ring(names, field);
  const std::size_t n = ring.nvars();
  std::vector<Poly> gens;
  auto ss = subsets(g, k + 1);
  for (const auto& s : ss) {
    Poly q(ring, 2);
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      Monomial m = Monomial::variable(n, s[pos]) * Monomial::variable(n, g + subset_rank(drop(s, pos), g));
      q.add_term(m, sgn(field, pos % 2 ? -1 : 1));
    }
    gens.push_back(std::move(q));
  }
  GradedIdeal ideal(ring, std::move(gens));
  return GensyzModel{g, k, ring, ideal, ts, ss};
}

std::pair<GradedIdeal, GradedIdeal> hyperplane_point_ideal(const GensyzModel& k0) {
  if (k0.k != 0) throw std::invalid_argument("hyperplane and point model needs k = 0");
  const Ring& r = k0.ring;
  std::vector<Poly> xs;
  for (std::size_t i = 0; i < k0.g; ++i) xs.push_back(Poly::variable(r, i));
  return {GradedIdeal(r, {Poly::variable(r, k0.g)}), GradedIdeal(r, xs)};
}

GradedIdeal segre_ideal(const GensyzModel& k1) {
  if (k1.k != 1) throw std::invalid_argument("Segre model needs k = 1");
  const Ring& r = k1.ring;
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < k1.g; ++i)
    for (std::size_t j = i + 1; j < k1.g; ++j) {
      Poly a = Poly::variable(r, i) * Poly::variable(r, k1.g + j);
      Poly b = Poly::variable(r, j) * Poly::variable(r, k1.g + i);
      gens.push_back(a - b);
    }
  return GradedIdeal(r, gens);
}

std::string pluecker_name(std::size_t i, std::size_t j, std::size_t w) {
  if (w > 10) return "p_" + std::to_string(i) + "_" + std::to_string(j);
  return "p" + std::to_string(i) + std::to_string(j);
}

Ring pluecker_ring(std::size_t w, const Field& field) {
  std::vector<std::string> names;
  for (const auto& t : subsets(w, 2)) names.push_back(pluecker_name(t[0], t[1], w));
  return Ring(names, field);
}

GradedIdeal pluecker_ideal(std::size_t w, const Field& field) {
  Ring r = pluecker_ring(w, field);
  auto var = [&](std::size_t i, std::size_t j) { return Poly::variable(r, subset_rank({i, j}, w)); };
  std::vector<Poly> gens;
  if (w >= 4)
    for (const auto& s : subsets(w, 4)) {
      auto [i, j, k, l] = std::array<std::size_t, 4>{s[0], s[1], s[2], s[3]};
      gens.push_back(var(i, j) * var(k, l) - var(i, k) * var(j, l) + var(i, l) * var(j, k));
    }
  return GradedIdeal(r, gens);
}

std::vector<Poly> pluecker_identification(const GensyzModel& k2) {
  if (k2.k != 2) throw std::invalid_argument("Pluecker identification needs k = 2");
  std::vector<Poly> images;
  for (const auto& t : subsets(k2.g + 1, 2)) {
    if (t[0] == 0)
      images.push_back(Poly::variable(k2.ring, k2.x_var(t[1] - 1)));
    else
      images.push_back(Poly::variable(k2.ring, k2.y_var({t[0] - 1, t[1] - 1})));
  }
  return images;
}

DecompositionReport decomposition_check_k0(std::size_t g, int up_to, const Field& field) {
  GensyzModel m = generic_syzygy_ideal(g, 0, field);
  auto [hyper, point] = hyperplane_point_ideal(m);
  DecompositionReport rep{g, 0, up_to, "(y) cap (x0..x" + std::to_string(g - 1) + ")", {}, {}, true, false};
  compare_pieces(
      m.ring, up_to, [&](int d) { return ideal_piece(m.ideal, d); },
      [&](int d) { return ideal_intersect_piece(hyper, point, d); }, rep);
  rep.saturation = saturation_check(m.ideal, up_to);
  rep.pass = rows_equal(rep) && rep.saturation->saturated;
  return rep;
}

DecompositionReport decomposition_check_k1(std::size_t g, const Field& field) {
  GensyzModel m = generic_syzygy_ideal(g, 1, field);
  GradedIdeal seg = segre_ideal(m);
  DecompositionReport rep{g, 1, 2, "Segre 2x2 minors", {}, {}, true, false};
  DegreeCheck row;
  row.degree = 2;
  Subspace a = ideal_piece(m.ideal, 2), b = ideal_piece(seg, 2);
  row.lhs_dim = row.lhs_new = a.dim();
  row.rhs_dim = row.rhs_new = b.dim();
  row.equal = a == b;
  rep.rows.push_back(row);
  rep.pass = row.equal && a.dim() == binomial(g, 2);
  return rep;
}

DecompositionReport grassmannian_union_check(std::size_t g, int up_to, const Field& field) {
  if (g < 3) throw std::invalid_argument("Grassmannian decomposition needs g >= 3");
  GensyzModel m = generic_syzygy_ideal(g, 2, field);
  std::vector<Poly> xs;
  for (std::size_t i = 0; i < g; ++i) xs.push_back(Poly::variable(m.ring, i));
  GradedIdeal ip(m.ring, xs);
  GradedIdeal pl = pluecker_ideal(g + 1, field);
  std::vector<Poly> img = pluecker_identification(m);
  std::vector<Poly> ig_gens;
  for (const auto& q : pl.generators()) ig_gens.push_back(substitute(q, m.ring, img));
  GradedIdeal ig(m.ring, ig_gens);
  DecompositionReport rep{g, 2, up_to, "I_P cap I_G", {}, {}, true, false};
  compare_pieces(
      m.ring, up_to, [&](int d) { return ideal_piece(m.ideal, d); },
      [&](int d) { return ideal_intersect_piece(ip, ig, d); }, rep);
  rep.saturation = saturation_check(m.ideal, up_to);
  rep.pass = rows_equal(rep) && rep.saturation->saturated;
  return rep;
}

PhiMap build_phi(const Syzygy& f, const ChainLift& lift) {
  const Field& fld = f.strand().field();
  const std::size_t p = lift.step, r = lift.rank, n = f.strand().nvars();
  if (r < p + 1) throw std::logic_error("rank below step + 1");
  const std::size_t k = r - p - 1;
  PhiMap phi{generic_syzygy_ideal(r, k, fld), Mat(fld, 0, 0)};
  std::vector<SparseVec> rows(lift.data.forms);
  for (const auto& t : phi.model.y_index) {
    MultiIndex c = complement(t, r);
    const SparseVec& a = lift.alpha.row(subset_rank(c, r));
    rows.push_back(complement_sign(t, r) > 0 ? a : vec::scale(fld, fld.neg(fld.one()), a));
  }
  phi.images = Mat::from_rows(fld, n, std::move(rows));
  return phi;
}

ConeReport verify_cone(const Syzygy& f, const ChainLift& lift, const PhiMap& phi) {
  const LinearStrand& s = f.strand();
  const Ring& R = s.ring();
  const Field& fld = s.field();
  ConeReport rep;
  rep.step = lift.step;
  rep.rank = lift.rank;
  rep.k = phi.model.k;
  std::vector<Poly> img;
  for (const auto& row : phi.images.row_vectors()) img.push_back(Poly::from_vector(R, 1, row));
  std::vector<SparseVec> pushed;
  for (const auto& q : phi.model.ideal.generators()) pushed.push_back(substitute(q, R, img).to_vector());
  Subspace a = Subspace::span(fld, R.dim(2), pushed);
  Subspace b = syzygy_quadrics(f, lift);
  rep.pushed_dim = a.dim();
  rep.syzygy_dim = b.dim();
  rep.spans_equal = a == b;
  rep.image_dim = rank(phi.images);
  rep.vertex_dim = R.nvars() - rep.image_dim;
  std::vector<SparseVec> xb(phi.images.row_vectors().begin(),
                            phi.images.row_vectors().begin() + static_cast<std::ptrdiff_t>(lift.rank));
  rep.x_block_is_gstar = Subspace::span(fld, R.nvars(), xb) == lift.data.gstar;
  rep.pass = rep.spans_equal && rep.x_block_is_gstar;
  return rep;
}

ConeReport verify_cone(const Syzygy& f) {
  ChainLift lift = chain_lift(f);
  return verify_cone(f, lift, build_phi(f, lift));
}

SubkoszulReport subkoszul_check(std::size_t g, std::size_t k, const Field& field) {
  GensyzModel m = generic_syzygy_ideal(g, k, field);
  SubkoszulReport rep;
  rep.g = g;
  rep.k = k;
  rep.step = g - k - 1;
  auto strand = std::make_shared<const LinearStrand>(compute_strand(m.ideal, std::max<std::size_t>(rep.step, 1)));
  for (std::size_t p = 0; p < strand->length(); ++p) rep.strand_dims.push_back(strand->dim(p));
  if (strand->length() <= rep.step || strand->dim(rep.step) == 0) return rep;

  const std::size_t n = m.ring.nvars();
  // psi[S] for the current exterior degree, in F_j coordinates.
  std::vector<SparseVec> psi;
  for (std::size_t i = 0; i < m.gen_index.size(); ++i) psi.push_back(SparseVec{{i, field.one()}});
  rep.embedded = true;
  for (std::size_t j = 1; j <= rep.step; ++j) {
    auto src = subsets(g, k + 1 + j);
    std::vector<SparseVec> next;
    for (const auto& S : src) {
      std::vector<Entry> t;
      for (std::size_t pos = 0; pos < S.size(); ++pos) {
        const SparseVec& lower = psi[subset_rank(drop(S, pos), g)];
        Scalar sg = sgn(field, pos % 2 ? -1 : 1);
        for (const auto& e : lower) t.push_back({e.index * n + m.x_var(S[pos]), field.mul(sg, e.value)});
      }
      std::vector<Scalar> coords;
      if (!strand->piece(j).coordinates(vec::from_pairs(field, std::move(t)), coords)) {
        rep.embedded = false;
        return rep;
      }
      next.push_back(vec::from_dense(coords));
    }
    if (Subspace::span(field, strand->dim(j), next).dim() != next.size()) rep.embedded = false;
    psi = std::move(next);
  }
  Syzygy dist(strand, rep.step, psi.front());
  InvolvedData inv = involved(dist);
  rep.distinguished_rank = inv.rank;
  rep.involved_dim = inv.g.dim();
  for (std::size_t i = 0; i < strand->dim(rep.step); ++i) {
    std::size_t r = involved(Syzygy::basis_element(strand, rep.step, i)).rank;
    rep.basis_ranks.push_back(r);
    if (r == g && !rep.rank_g_basis_index) rep.rank_g_basis_index = i;
  }
  rep.pass = rep.embedded && rep.distinguished_rank == g && rep.involved_dim == g;
  return rep;
}

// ---------------------------------------------------------------- 1-genericity

namespace {

using UPoly = std::vector<Scalar>;  // low degree first, no trailing zeros

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UPoly poly_mod(const Field& f, UPoly a, const UPoly& b) {
  trim(a);
  Scalar lead = f.inv(b.back());
  while (a.size() >= b.size()) {
    Scalar q = f.mul(a.back(), lead);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(q, b[i]));
    trim(a);
  }
  return a;
}

UPoly poly_gcd(const Field& f, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar li = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, li);
  }
  return a;
}

Scalar poly_eval(const Field& f, const UPoly& a, const Scalar& t) {
  Scalar acc = f.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, t), a[i]);
  return acc;
}

Scalar det(const Field& f, std::vector<std::vector<Scalar>> a) {
  const std::size_t n = a.size();
  Scalar d = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return f.zero();
    if (p != c) {
      std::swap(a[p], a[c]);
      d = f.neg(d);
    }
    d = f.mul(d, a[c][c]);
    Scalar inv = f.inv(a[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      Scalar q = f.mul(a[i][c], inv);
      for (std::size_t j = c; j < n; ++j) a[i][j] = f.sub(a[i][j], f.mul(q, a[c][j]));
    }
  }
  return d;
}

// Coefficients of the polynomial through (xs[i], ys[i]), by Newton's divided differences.
UPoly interpolate(const Field& f, const std::vector<Scalar>& xs, std::vector<Scalar> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) ys[i] = f.div(f.sub(ys[i], ys[i - 1]), f.sub(xs[i], xs[i - j]));
  UPoly out{ys[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // out = out * (t - xs[i]) + ys[i]
    UPoly next(out.size() + 1, f.zero());
    for (std::size_t k = 0; k < out.size(); ++k) {
      next[k + 1] = f.add(next[k + 1], out[k]);
      next[k] = f.sub(next[k], f.mul(xs[i], out[k]));
    }
    next[0] = f.add(next[0], ys[i]);
    out = std::move(next);
  }
  trim(out);
  return out;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

std::optional<Scalar> find_root(const Field& f, const UPoly& a, bool& searched) {
  searched = true;
  if (a.empty()) return f.zero();
  if (a.front().is_zero()) return f.zero();
  if (f.is_prime()) {
    for (std::uint32_t t = 1; t < f.characteristic(); ++t) {
      Scalar s(t);
      if (poly_eval(f, a, s).is_zero()) return s;
    }
    return std::nullopt;
  }
  // Rational root test on the integer multiple of a.
  mpz_class den = 1;
  for (const auto& c : a) den = lcm(den, mpz_class(c.rational().get_den()));
  std::vector<mpz_class> ints;
  for (const auto& c : a) ints.push_back(mpz_class(c.rational() * den));
  const mpz_class limit("1000000000000");
  if (abs(ints.front()) > limit || abs(ints.back()) > limit) {
    searched = false;
    return std::nullopt;
  }
  for (const auto& num : divisors(ints.front()))
    for (const auto& dn : divisors(ints.back()))
      for (int sign : {1, -1}) {
        Scalar t = f.from_rational(mpq_class(num * sign, dn));
        if (poly_eval(f, a, t).is_zero()) return t;
      }
  return std::nullopt;
}

}  // namespace

OneGenericReport is_one_generic_2xg(const Ring& ring, const std::vector<SparseVec>& row1,
                                    const std::vector<SparseVec>& row2) {
  const Field& f = ring.field();
  const std::size_t g = row1.size(), n = ring.nvars();
  if (row2.size() != g) throw std::invalid_argument("rows of different length");
  OneGenericReport rep;
  if (g == 0) {
    rep.one_generic = true;
    rep.reason = "empty matrix";
    return rep;
  }
  if (g > n) {
    rep.reason = "more forms per row than variables";
    rep.witness = {f.one(), f.zero()};
    return rep;
  }
  auto dense = [&](const std::vector<SparseVec>& row) {
    std::vector<std::vector<Scalar>> m;
    for (const auto& v : row) m.push_back(vec::to_dense(f, v, n));
    return m;
  };
  auto a = dense(row1), b = dense(row2);
  if (f.is_prime() && f.characteristic() <= g) throw std::invalid_argument("field too small for interpolation");

  bool infinity_root = true;
  UPoly acc;
  std::vector<Scalar> xs;
  for (std::size_t i = 0; i <= g; ++i) xs.push_back(f.from_int(static_cast<long long>(i)));
  for (const auto& cols : subsets(n, g)) {
    auto minor = [&](const std::vector<std::vector<Scalar>>& m1, const std::vector<std::vector<Scalar>>& m2,
                     const Scalar& t) {
      std::vector<std::vector<Scalar>> sq(g, std::vector<Scalar>(g));
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) sq[i][j] = f.add(f.mul(t, m1[i][cols[j]]), m2[i][cols[j]]);
      return det(f, sq);
    };
    // det(t*A + B) at g+1 points; its t^g coefficient is det A.
    std::vector<Scalar> ys;
    for (const auto& t : xs) ys.push_back(minor(a, b, t));
    UPoly c = interpolate(f, xs, ys);
    if (c.size() == g + 1) infinity_root = false;
    acc = acc.empty() ? c : poly_gcd(f, acc, c);
    if (acc.size() == 1 && !infinity_root) break;
  }
  if (infinity_root) {
    rep.reason = "dependent forms in row 1";
    rep.witness = {f.one(), f.zero()};
    return rep;
  }
  trim(acc);
  if (acc.size() == 1) {
    rep.one_generic = true;
    rep.reason = "maximal minors have no common root";
    return rep;
  }
  bool searched = true;
  auto root = find_root(f, acc, searched);
  if (root) {
    rep.witness = {*root, f.one()};
    rep.reason = "common root of the maximal minors";
  } else {
    rep.witness_outside_field = searched;
    rep.reason = searched ? "common root outside the base field" : "common root exists; search skipped";
  }
  return rep;
}

// ---------------------------------------------------------------- sections

GradedIdeal section_vanishing_ideal(std::size_t w, const std::vector<Scalar>& s, const Field& field) {
  if (s.size() != w) throw std::invalid_argument("section has the wrong length");
  if (std::all_of(s.begin(), s.end(), [](const Scalar& c) { return c.is_zero(); }))
    throw std::invalid_argument("zero section");
  Ring r = pluecker_ring(w, field);
  std::vector<SparseVec> forms;
  for (std::size_t j = 0; j < w; ++j) {
    std::vector<Entry> e;
    for (std::size_t i = 0; i < w; ++i) {
      if (i == j || s[i].is_zero()) continue;
      // e_i ^ e_j = +p_ij for i < j, -p_ji otherwise
      e.push_back({subset_rank({std::min(i, j), std::max(i, j)}, w), i < j ? s[i] : field.neg(s[i])});
    }
    forms.push_back(vec::from_pairs(field, std::move(e)));
  }
  Subspace span = Subspace::span(field, r.nvars(), forms);
  return GradedIdeal(r, polys_of(r, 1, span));
}

long long grassmannian_hilbert(std::size_t m, int d) {
  if (m < 2) return d == 0 ? 1 : 0;
  auto dd = static_cast<std::uint64_t>(d);
  return static_cast<long long>(binomial(m + dd - 1, dd) * binomial(m + dd - 2, dd) / (dd + 1));
}

SectionReport section_check(std::size_t w, const std::vector<Scalar>& s, const Field& field, int up_to) {
  SectionReport rep;
  rep.w = w;
  for (const auto& c : s) rep.section.push_back(field.to_string(c));
  GradedIdeal is = section_vanishing_ideal(w, s, field);
  rep.span_dim = is.generators().size();
  std::vector<Poly> gens = pluecker_ideal(w, field).generators();
  gens.insert(gens.end(), is.generators().begin(), is.generators().end());
  rep.hilbert = hilbert_values(GradedIdeal(is.ring(), gens), 0, up_to);
  for (int d = 0; d <= up_to; ++d) rep.expected.push_back(grassmannian_hilbert(w - 1, d));
  rep.pass = rep.span_dim == w - 1 && rep.hilbert == rep.expected;
  return rep;
}

std::vector<Scalar> random_vector(const Field& field, std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    std::vector<Scalar> v;
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t raw = rng();
      Scalar c = field.is_prime() ? Scalar(static_cast<std::uint32_t>(raw % field.characteristic()))
                                  : field.from_int(static_cast<long long>(raw % 19) - 9);
      nonzero = nonzero || !c.is_zero();
      v.push_back(c);
    }
    if (nonzero) return v;
  }
}

InjectivityReport h0_injectivity_check(const Syzygy& f, const ChainLift& lift, const PhiMap& phi,
                                       std::size_t random_sections, std::uint64_t seed) {
  const Field& fld = f.strand().field();
  if (phi.model.k != 2) throw std::invalid_argument("injectivity check needs a grassmannian syzygy");
  const std::size_t g = phi.model.g, w = g + 1, n = f.strand().nvars();
  InjectivityReport rep;
  rep.w = w;
  rep.kernel_dim = phi.images.rows() - rank(phi.images);
  std::vector<std::vector<Scalar>> sections;
  for (std::size_t i = 0; i < w; ++i) {
    std::vector<Scalar> e(w, fld.zero());
    e[i] = fld.one();
    sections.push_back(e);
  }
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < random_sections; ++t) sections.push_back(random_vector(fld, rng, w));
  auto ident = subsets(w, 2);
  for (const auto& s : sections) {
    std::string txt;
    for (const auto& c : s) txt += (txt.empty() ? "" : ",") + fld.to_string(c);
    rep.sections.push_back("(" + txt + ")");
    GradedIdeal is = section_vanishing_ideal(w, s, fld);
    std::vector<SparseVec> images;
    for (const auto& form : is.generators()) {
      SparseVec acc;
      for (const auto& [m, c] : form.terms()) {
        std::size_t pv = 0;
        while (m[pv] == 0) ++pv;
        const auto& t = ident[pv];
        std::size_t var = t[0] == 0 ? phi.model.x_var(t[1] - 1) : phi.model.y_var({t[0] - 1, t[1] - 1});
        acc = vec::axpy(fld, c, phi.images.row(var), acc);
      }
      images.push_back(std::move(acc));
    }
    rep.image_dims.push_back(Subspace::span(fld, n, images).dim());
  }
  (void)lift;
  rep.pass = std::all_of(rep.image_dims.begin(), rep.image_dims.end(), [](std::size_t d) { return d > 0; });
  return rep;
}

ReducibleReport reducible_check(const Syzygy& f, const ChainLift& lift, int up_to) {
  const Ring& R = f.strand().ring();
  ReducibleReport rep;
  rep.step = lift.step;
  rep.rank = lift.rank;
  if (lift.rank != lift.step + 1) return rep;
  const SparseVec& h = lift.alpha.row(0);
  rep.hyperplane = linear_form_string(R, h);
  for (const auto& l : lift.data.forms) rep.linear_space.push_back(linear_form_string(R, l));
  if (h.empty()) return rep;
  GradedIdeal hyper = linear_ideal(R, {h});
  GradedIdeal lin = linear_ideal(R, lift.data.forms);
  GradedIdeal sf(R, polys_of(R, 2, syzygy_quadrics(f, lift)));
  rep.pass = true;
  for (int d = 1; d <= up_to; ++d) {
    Subspace a = ideal_piece(sf, d), b = ideal_intersect_piece(hyper, lin, d);
    DegreeCheck row;
    row.degree = d;
    row.lhs_dim = a.dim();
    row.rhs_dim = b.dim();
    row.equal = a == b;
    rep.rows.push_back(row);
    rep.pass = rep.pass && row.equal;
  }
  return rep;
}

}  // namespace linsyz
