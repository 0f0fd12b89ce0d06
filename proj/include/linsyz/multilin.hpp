#pragma once

// Exterior-algebra bookkeeping. Multi-indices are strictly increasing and
// bases of exterior powers are lexicographic. Signs are position based:
// moving e_i into e_S past j earlier factors costs (-1)^j. Tensor products
// are laid out left-factor-major, so (a, b) sits at a * dim(B) + b.

#include "linsyz/exactlin.hpp"
#include "linsyz/polyring.hpp"

#include <string>
#include <vector>

namespace linsyz {

using MultiIndex = std::vector<std::size_t>;

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<MultiIndex> subsets(std::size_t n, std::size_t k);
// Position of s among subsets(n, s.size()).
std::size_t subset_rank(const MultiIndex& s, std::size_t n);

// e_i ^ e_S = sign * e_out; returns 0 (and leaves out untouched) when i is in S.
int wedge_left(std::size_t i, const MultiIndex& s, MultiIndex& out);
// e_S ^ e_T = sign * e_{S u T}; 0 when they meet.
int wedge_sign(const MultiIndex& s, const MultiIndex& t);
MultiIndex complement(const MultiIndex& t, std::size_t n);
// Sign of the permutation listing T followed by its complement.
int complement_sign(const MultiIndex& t, std::size_t n);
// S \ {s[pos]}
MultiIndex drop(const MultiIndex& s, std::size_t pos);
std::string index_string(const MultiIndex& s);

class ExteriorSpace {
 public:
  ExteriorSpace(std::size_t base_dim, std::size_t degree);
  std::size_t base_dim() const { return g_; }
  std::size_t degree() const { return k_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<MultiIndex>& basis() const { return basis_; }
  std::size_t index_of(const MultiIndex& s) const { return subset_rank(s, g_); }

 private:
  std::size_t g_, k_;
  std::vector<MultiIndex> basis_;
};

// A linear map between indexed spaces; row j of `matrix` is the image of
// source basis vector j.
struct IndexedMap {
  std::string source;
  std::string target;
  Mat matrix;

  std::size_t source_dim() const { return matrix.rows(); }
  std::size_t target_dim() const { return matrix.cols(); }
  SparseVec apply(const SparseVec& x) const;
};

// then(a, b): first a, then b.
IndexedMap then(const IndexedMap& a, const IndexedMap& b);

// wedge^{k+1} G* -> G* (x) wedge^k G*, e_S -> sum_i (-1)^pos(i,S) e_i (x) e_{S\i}.
IndexedMap comultiply(const Field& f, std::size_t g, std::size_t k);
// G* (x) wedge^k G* -> wedge^{k+1} G*, e_i (x) e_T -> e_i ^ e_T.
IndexedMap wedge_multiply(const Field& f, std::size_t g, std::size_t k);

// wedge^p V (x) W -> wedge^{p-1} V (x) R_{d+1}, with V = R_1 of `ring` and W a
// subspace of R_d (its echelon basis indexes the second factor):
// (v_S (x) q) -> sum_j (-1)^j v_{S minus s_j} (x) x_{s_j} q.
IndexedMap koszul_contract(const Ring& ring, std::size_t p, const Subspace& w, int d);

// forms: G -> V, row i the coefficients of l_i. Builds the map
// wedge^m G -> wedge^{m+1} G (x) V, w -> sum_i (e_i ^ w) (x) l_i.
IndexedMap wedge_theta(std::size_t m, const IndexedMap& forms);
// The next map of the same complex, wedge^{m+1} G (x) V -> wedge^{m+2} G (x) R_2,
// (w (x) v) -> sum_i (e_i ^ w) (x) l_i v.
IndexedMap wedge_theta_next(const Ring& ring, std::size_t m, const IndexedMap& forms);

}  // namespace linsyz
