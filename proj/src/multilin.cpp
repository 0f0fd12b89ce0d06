#include "linsyz/multilin.hpp"

#include <algorithm>

namespace linsyz {

std::vector<MultiIndex> subsets(std::size_t n, std::size_t k) {
  std::vector<MultiIndex> out;
  if (k > n) return out;
  MultiIndex s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

std::size_t subset_rank(const MultiIndex& s, std::size_t n) {
  // Count subsets that precede s lexicographically.
  const std::size_t k = s.size();
  std::size_t r = 0, prev = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = (i == 0 ? 0 : prev + 1); v < s[i]; ++v) r += binomial(n - v - 1, k - i - 1);
    prev = s[i];
  }
  return r;
}

int wedge_left(std::size_t i, const MultiIndex& s, MultiIndex& out) {
  auto it = std::lower_bound(s.begin(), s.end(), i);
  if (it != s.end() && *it == i) return 0;
  auto before = static_cast<std::size_t>(it - s.begin());
  out.assign(s.begin(), it);
  out.push_back(i);
  out.insert(out.end(), it, s.end());
  return before % 2 ? -1 : 1;
}

int wedge_sign(const MultiIndex& s, const MultiIndex& t) {
  // Count inversions between the two blocks.
  std::size_t inv = 0;
  for (auto a : s) {
    auto it = std::lower_bound(t.begin(), t.end(), a);
    if (it != t.end() && *it == a) return 0;
    inv += static_cast<std::size_t>(it - t.begin());
  }
  return inv % 2 ? -1 : 1;
}

MultiIndex complement(const MultiIndex& t, std::size_t n) {
  MultiIndex out;
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (j < t.size() && t[j] == i)
      ++j;
    else
      out.push_back(i);
  }
  return out;
}

int complement_sign(const MultiIndex& t, std::size_t n) { return wedge_sign(t, complement(t, n)); }

MultiIndex drop(const MultiIndex& s, std::size_t pos) {
  MultiIndex out(s);
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

std::string index_string(const MultiIndex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

ExteriorSpace::ExteriorSpace(std::size_t base_dim, std::size_t degree)
    : g_(base_dim), k_(degree), basis_(subsets(base_dim, degree)) {}

SparseVec IndexedMap::apply(const SparseVec& x) const {
  const Field& f = matrix.field();
  SparseVec acc;
  for (const auto& e : x) acc = vec::axpy(f, e.value, matrix.row(e.index), acc);
  return acc;
}

IndexedMap then(const IndexedMap& a, const IndexedMap& b) {
  if (a.target_dim() != b.source_dim()) throw std::invalid_argument("composing maps of mismatched shape");
  return {a.source, b.target, multiply(a.matrix, b.matrix)};
}

namespace {

Scalar signed_one(const Field& f, int sign) { return sign > 0 ? f.one() : f.neg(f.one()); }

}  // namespace

IndexedMap comultiply(const Field& f, std::size_t g, std::size_t k) {
  if (k >= g) throw std::invalid_argument("comultiply requires k < g");
  ExteriorSpace src(g, k + 1), tgt(g, k);
  std::vector<SparseVec> rows;
  for (const auto& s : src.basis()) {
    std::vector<Entry> r;
    for (std::size_t pos = 0; pos < s.size(); ++pos)
      r.push_back({s[pos] * tgt.dim() + tgt.index_of(drop(s, pos)), signed_one(f, pos % 2 ? -1 : 1)});
    rows.push_back(vec::from_pairs(f, std::move(r)));
  }
  return {"L" + std::to_string(k + 1) + "G*", "G*xL" + std::to_string(k) + "G*",
          Mat::from_rows(f, g * tgt.dim(), std::move(rows))};
}

IndexedMap wedge_multiply(const Field& f, std::size_t g, std::size_t k) {
  ExteriorSpace src(g, k), tgt(g, k + 1);
  std::vector<SparseVec> rows;
  MultiIndex out;
  for (std::size_t i = 0; i < g; ++i) {
    for (const auto& t : src.basis()) {
      int sg = wedge_left(i, t, out);
      SparseVec r;
      if (sg != 0) r.push_back({tgt.index_of(out), signed_one(f, sg)});
      rows.push_back(std::move(r));
    }
  }
  return {"G*xL" + std::to_string(k) + "G*", "L" + std::to_string(k + 1) + "G*",
          Mat::from_rows(f, tgt.dim(), std::move(rows))};
}

IndexedMap koszul_contract(const Ring& ring, std::size_t p, const Subspace& w, int d) {
  if (p == 0) throw std::invalid_argument("koszul_contract requires p >= 1");
  const Field& f = ring.field();
  const std::size_t n = ring.nvars();
  ExteriorSpace src(n, p), tgt(n, p - 1);
  const std::size_t up = ring.dim(d + 1);
  std::vector<Poly> qs = polys_of(ring, d, w);
  std::vector<SparseVec> rows;
  rows.reserve(src.dim() * qs.size());
  for (const auto& s : src.basis()) {
    for (const auto& q : qs) {
      std::vector<Entry> r;
      for (std::size_t j = 0; j < s.size(); ++j) {
        std::size_t base = tgt.index_of(drop(s, j)) * up;
        Scalar sg = signed_one(f, j % 2 ? -1 : 1);
        Monomial x = Monomial::variable(n, s[j]);
        for (const auto& [m, c] : q.terms()) r.push_back({base + ring.monomial_index(x * m), f.mul(sg, c)});
      }
      rows.push_back(vec::from_pairs(f, std::move(r)));
    }
  }
  return {"L" + std::to_string(p) + "V(x)W", "L" + std::to_string(p - 1) + "V(x)R" + std::to_string(d + 1),
          Mat::from_rows(f, tgt.dim() * up, std::move(rows))};
}

IndexedMap wedge_theta(std::size_t m, const IndexedMap& forms) {
  const Field& f = forms.matrix.field();
  const std::size_t g = forms.source_dim(), nv = forms.target_dim();
  if (m >= g) throw std::invalid_argument("wedge_theta requires m < g");
  ExteriorSpace src(g, m), tgt(g, m + 1);
  std::vector<SparseVec> rows;
  MultiIndex out;
  for (const auto& s : src.basis()) {
    std::vector<Entry> r;
    for (std::size_t i = 0; i < g; ++i) {
      int sg = wedge_left(i, s, out);
      if (sg == 0) continue;
      std::size_t base = tgt.index_of(out) * nv;
      for (const auto& e : forms.matrix.row(i)) r.push_back({base + e.index, sg > 0 ? e.value : f.neg(e.value)});
    }
    rows.push_back(vec::from_pairs(f, std::move(r)));
  }
  return {"L" + std::to_string(m) + "G", "L" + std::to_string(m + 1) + "GxV",
          Mat::from_rows(f, tgt.dim() * nv, std::move(rows))};
}

IndexedMap wedge_theta_next(const Ring& ring, std::size_t m, const IndexedMap& forms) {
  const Field& f = ring.field();
  const std::size_t g = forms.source_dim(), nv = forms.target_dim();
  if (nv != ring.nvars()) throw std::invalid_argument("forms do not live in the ring's linear space");
  ExteriorSpace src(g, m + 1), tgt(g, m + 2);
  const std::size_t r2 = ring.dim(2);
  std::vector<SparseVec> rows;
  MultiIndex out;
  for (const auto& s : src.basis()) {
    for (std::size_t v = 0; v < nv; ++v) {
      std::vector<Entry> r;
      Monomial xv = Monomial::variable(nv, v);
      for (std::size_t i = 0; i < g; ++i) {
        int sg = wedge_left(i, s, out);
        if (sg == 0) continue;
        std::size_t base = tgt.index_of(out) * r2;
        for (const auto& e : forms.matrix.row(i))
          r.push_back({base + ring.monomial_index(xv * Monomial::variable(nv, e.index)),
                       sg > 0 ? e.value : f.neg(e.value)});
      }
      rows.push_back(vec::from_pairs(f, std::move(r)));
    }
  }
  return {"L" + std::to_string(m + 1) + "GxV", "L" + std::to_string(m + 2) + "GxR2",
          Mat::from_rows(f, tgt.dim() * r2, std::move(rows))};
}

}  // namespace linsyz
