#include "linsyz/syzygy.hpp"

#include <map>

namespace linsyz {

InvolvedData involved(const Syzygy& f) {
  const LinearStrand& s = f.strand();
  const std::size_t p = f.step(), n = s.nvars();
  if (p == 0) throw std::invalid_argument("involved spaces need a syzygy of step at least 1");
  const Field& fld = s.field();
  const std::size_t rows = s.dim(p - 1);
  SparseVec d = strand_differential(f);
  // M[a][v] is the coefficient of (a, v).
  Mat m(fld, rows, n);
  for (const auto& e : d) m.set(e.index / n, e.index % n, e.value);
  Subspace gstar = Subspace::span(fld, n, m.row_vectors());

  InvolvedData out{p, gstar.dim(), {}, gstar.basis(), Subspace(fld, rows), gstar};
  for (auto pc : gstar.pivots()) {
    std::vector<Entry> col;
    for (std::size_t a = 0; a < rows; ++a) {
      Scalar c = m.at(a, pc);
      if (!c.is_zero()) col.push_back({a, c});
    }
    out.g_basis.push_back(vec::from_pairs(fld, std::move(col)));
  }
  out.g = Subspace::span(fld, rows, out.g_basis);
  if (out.g.dim() != out.rank) throw std::logic_error("involved spaces have different dimensions");
  if (out.rank < p + 1) throw std::logic_error("syzygy of rank below step + 1");
  return out;
}

SyzygyClass classify_rank(std::size_t step, std::size_t rank) {
  if (rank == step + 1) return SyzygyClass::Reducible;
  if (rank == step + 2) return SyzygyClass::Scrollar;
  if (rank == step + 3) return SyzygyClass::Grassmannian;
  return SyzygyClass::Higher;
}

SyzygyClass classify(const Syzygy& f) { return classify_rank(f.step(), involved(f).rank); }

std::string class_name(SyzygyClass c) {
  switch (c) {
    case SyzygyClass::Reducible: return "reducible";
    case SyzygyClass::Scrollar: return "scrollar";
    case SyzygyClass::Grassmannian: return "grassmannian";
    case SyzygyClass::Higher: return "higher";
  }
  return "higher";
}

SparseVec quadric_of(const LinearStrand& s, const SparseVec& f0) {
  SparseVec acc;
  for (const auto& e : f0) acc = vec::axpy(s.field(), e.value, s.quadric(e.index).to_vector(), acc);
  return acc;
}

namespace {

Scalar sgn(const Field& f, int s) { return s > 0 ? f.one() : f.neg(f.one()); }

// Differential of an F_k element (k >= 1) inside F_{k-1} (x) V.
SparseVec differential_of(const LinearStrand& s, std::size_t k, const SparseVec& x) {
  SparseVec acc;
  const auto& b = s.basis(k);
  for (const auto& e : x) acc = vec::axpy(s.field(), e.value, b[e.index], acc);
  return acc;
}

void verify_lift(const LinearStrand& s, const ChainLift& lift) {
  const Field& f = s.field();
  const std::size_t p = lift.step, r = lift.rank, n = s.nvars();
  IndexedMap forms{"G", "V", Mat::from_rows(f, n, lift.data.forms)};
  for (std::size_t k = p; k >= 1; --k) {
    IndexedMap theta = wedge_theta(p - k, forms);
    const Mat& upper = lift.phi[k];
    const Mat& lower = lift.phi[k - 1];
    for (std::size_t w = 0; w < upper.rows(); ++w) {
      SparseVec lhs = differential_of(s, k, upper.row(w));
      std::vector<Entry> rhs;
      for (const auto& e : theta.matrix.row(w)) {
        std::size_t out = e.index / n, v = e.index % n;
        for (const auto& c : lower.row(out)) rhs.push_back({c.index * n + v, f.mul(e.value, c.value)});
      }
      if (!vec::equal(lhs, vec::from_pairs(f, std::move(rhs))))
        throw std::logic_error("chain lift square fails at step " + std::to_string(k));
    }
  }
  // Bottom row, as a polynomial identity in R_2.
  const Ring& R = s.ring();
  std::vector<Poly> l, a;
  for (const auto& v : lift.data.forms) l.push_back(Poly::from_vector(R, 1, v));
  for (std::size_t t = 0; t < lift.alpha.rows(); ++t) a.push_back(Poly::from_vector(R, 1, lift.alpha.row(t)));
  auto top = subsets(r, p + 1);
  MultiIndex out;
  std::size_t w = 0;
  for (const auto& om : subsets(r, p)) {
    Poly q = Poly::from_vector(R, 2, quadric_of(s, lift.phi[0].row(w++)));
    Poly rhs(R, 2);
    for (std::size_t i = 0; i < r; ++i) {
      int sg = wedge_left(i, om, out);
      if (sg == 0) continue;
      rhs = rhs + (l[i] * a[subset_rank(out, r)]).scaled(sgn(f, sg));
    }
    if (!(q == rhs)) throw std::logic_error("alpha does not reproduce the quadric of " + index_string(om));
  }
  for (std::size_t k = 0; k <= p; ++k)
    if (lift.phi[k].is_zero()) throw std::logic_error("vertical map phi_" + std::to_string(k) + " vanishes");
}

}  // namespace

ChainLift chain_lift(const Syzygy& f) { return chain_lift(f, involved(f)); }

ChainLift chain_lift(const Syzygy& f, const InvolvedData& data) {
  const LinearStrand& s = f.strand();
  const Field& fld = s.field();
  const std::size_t p = f.step(), r = data.rank, n = s.nvars();
  ChainLift lift;
  lift.step = p;
  lift.rank = r;
  lift.data = data;
  lift.phi.assign(p + 1, Mat(fld, 0, 0));
  lift.phi[p] = Mat::from_rows(fld, s.dim(p), {f.coords()});

  // L^T, n x r: column i holds l_i.
  Mat lt = Mat::from_rows(fld, n, data.forms).transpose();
  for (std::size_t k = p; k >= 1; --k) {
    const std::size_t m = p - k;
    auto src = subsets(r, m);
    auto dst = subsets(r, m + 1);
    std::vector<SparseVec> rows(dst.size());
    std::vector<bool> set(dst.size(), false);
    const std::size_t below = s.dim(k - 1);
    MultiIndex out;
    for (std::size_t w = 0; w < src.size(); ++w) {
      SparseVec t = differential_of(s, k, lift.phi[k].row(w));
      // T^T: n x dim F_{k-1}, entry (v, a).
      Mat tt(fld, n, below);
      for (const auto& e : t) tt.set(e.index % n, e.index / n, e.value);
      SolveResult sol = solve(lt, tt);
      if (!sol.consistent) throw std::logic_error("chain lift square has no solution at step " + std::to_string(k));
      if (!sol.unique) throw std::logic_error("chain lift solution is not unique at step " + std::to_string(k));
      for (std::size_t i = 0; i < r; ++i) {
        const SparseVec& x = sol.solution.row(i);
        int sg = wedge_left(i, src[w], out);
        if (sg == 0) {
          if (!x.empty()) throw std::logic_error("chain lift hits e_i ^ e_i");
          continue;
        }
        std::size_t j = subset_rank(out, r);
        SparseVec val = sg > 0 ? x : vec::scale(fld, fld.neg(fld.one()), x);
        if (set[j]) {
          if (!vec::equal(rows[j], val)) throw std::logic_error("chain lift assignments disagree");
        } else {
          rows[j] = std::move(val);
          set[j] = true;
        }
      }
    }
    lift.phi[k - 1] = Mat::from_rows(fld, below, std::move(rows));
  }

  // alpha: unknowns (S, v) at index rank(S) * n + v, equations (omega, monomial of R_2).
  const Ring& R = s.ring();
  const std::size_t r2 = R.dim(2);
  auto low = subsets(r, p);
  auto top = subsets(r, p + 1);
  std::vector<std::vector<Entry>> cols(top.size() * n);
  MultiIndex out;
  for (std::size_t w = 0; w < low.size(); ++w) {
    for (std::size_t i = 0; i < r; ++i) {
      int sg = wedge_left(i, low[w], out);
      if (sg == 0) continue;
      std::size_t S = subset_rank(out, r);
      for (std::size_t v = 0; v < n; ++v) {
        Monomial xv = Monomial::variable(n, v);
        for (const auto& e : data.forms[i])
          cols[S * n + v].push_back({w * r2 + R.monomial_index(xv * Monomial::variable(n, e.index)),
                                     sg > 0 ? e.value : fld.neg(e.value)});
      }
    }
  }
  std::vector<SparseVec> colv;
  for (auto& c : cols) colv.push_back(vec::from_pairs(fld, std::move(c)));
  Mat system = Mat::from_rows(fld, low.size() * r2, std::move(colv)).transpose();
  std::vector<Entry> target;
  for (std::size_t w = 0; w < low.size(); ++w)
    for (const auto& e : quadric_of(s, lift.phi[0].row(w))) target.push_back({w * r2 + e.index, e.value});
  Mat tg = Mat::from_rows(fld, low.size() * r2, {vec::from_pairs(fld, std::move(target))}).transpose();
  SolveResult sol = solve(system, tg);
  if (!sol.consistent) throw std::logic_error("no alpha reproduces the bottom quadrics");
  lift.alpha_freedom = system.cols() - rank(system);
  std::vector<SparseVec> arows(top.size());
  for (std::size_t S = 0; S < top.size(); ++S) {
    std::vector<Entry> row;
    for (std::size_t v = 0; v < n; ++v) {
      Scalar c = vec::at(sol.solution.row(S * n + v), 0);
      if (!c.is_zero()) row.push_back({v, c});
    }
    arows[S] = vec::from_pairs(fld, std::move(row));
  }
  lift.alpha = Mat::from_rows(fld, n, std::move(arows));
  verify_lift(s, lift);
  return lift;
}

Subspace syzygy_quadrics(const Syzygy& f, const ChainLift& lift) {
  const LinearStrand& s = f.strand();
  std::vector<SparseVec> qs;
  for (const auto& row : lift.phi[0].row_vectors()) qs.push_back(quadric_of(s, row));
  return Subspace::span(s.field(), s.ring().dim(2), qs);
}

SyzygyIdealReport syzygy_ideal(const Syzygy& f, const ChainLift& lift, int max_degree) {
  const LinearStrand& s = f.strand();
  Subspace q = syzygy_quadrics(f, lift);
  if (q.dim() == 0) throw std::logic_error("empty syzygy ideal");
  SyzygyIdealReport rep{GradedIdeal(s.ring(), polys_of(s.ring(), 2, q)), {}, 1, {}, -1};
  rep.hilbert = hilbert_values(rep.ideal, 0, max_degree);
  if (max_degree >= 1) {
    std::span<const long long> window(rep.hilbert.data() + 1, rep.hilbert.size() - 1);
    rep.estimate = dim_degree_estimate(window, 1);
    if (rep.estimate.stabilized)
      rep.codimension = static_cast<int>(s.nvars()) - 1 - rep.estimate.dimension;
  }
  return rep;
}

std::string linear_form_string(const Ring& ring, const SparseVec& v) {
  return print_poly(Poly::from_vector(ring, 1, v));
}

}  // namespace linsyz
