#pragma once

// Generic syzygy ideals Gensyz_k(G), their geometric models, and the checks
// that tie a concrete syzygy to them.

#include "linsyz/syzygy.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace linsyz {

struct GensyzModel {
  std::size_t g = 0, k = 0;
  Ring ring;
  GradedIdeal ideal;
  std::vector<MultiIndex> y_index;    // T for variable g + j
  std::vector<MultiIndex> gen_index;  // S for generator j

  std::size_t x_var(std::size_t i) const { return i; }
  std::size_t y_var(const MultiIndex& t) const { return g + subset_rank(t, g); }
};

// Variables x0..x{g-1}, then y_T in lex order ("y" when k = 0).
// Generators q_S = sum_{i in S} (-1)^pos(i,S) x_i y_{S\i}.
GensyzModel generic_syzygy_ideal(std::size_t g, std::size_t k, const Field& field = Field::prime(kDefaultPrime));

// (y) and (x0, ..., x{g-1}) in the k = 0 ring.
std::pair<GradedIdeal, GradedIdeal> hyperplane_point_ideal(const GensyzModel& k0);
// 2x2 minors x_i y_j - x_j y_i in the k = 1 ring.
GradedIdeal segre_ideal(const GensyzModel& k1);

std::string pluecker_name(std::size_t i, std::size_t j, std::size_t w);
Ring pluecker_ring(std::size_t w, const Field& field);
// p_ij p_kl - p_ik p_jl + p_il p_jk over all i<j<k<l.
GradedIdeal pluecker_ideal(std::size_t w, const Field& field = Field::prime(kDefaultPrime));
// Images, in the k = 2 ring of g, of the Pluecker variables of W = C + G*:
// p_{0,i+1} -> x_i and p_{i+1,j+1} -> y_ij.
std::vector<Poly> pluecker_identification(const GensyzModel& k2);

struct DegreeCheck {
  int degree = 0;
  std::size_t lhs_dim = 0;  // the generic syzygy ideal
  std::size_t rhs_dim = 0;  // the model
  bool equal = false;
  // Dimension of X_d beyond R_1 * X_{d-1}, for both sides.
  std::size_t lhs_new = 0, rhs_new = 0;
};

struct DecompositionReport {
  std::size_t g = 0, k = 0;
  int up_to = 0;
  std::string model;
  std::vector<DegreeCheck> rows;
  std::optional<SaturationReport> saturation;
  bool no_new_generators_at_bound = true;
  bool pass = false;
};

DecompositionReport decomposition_check_k0(std::size_t g, int up_to, const Field& field);
DecompositionReport decomposition_check_k1(std::size_t g, const Field& field);
DecompositionReport grassmannian_union_check(std::size_t g, int up_to, const Field& field);

struct PhiMap {
  GensyzModel model;
  // Row j: image in V of model variable j.
  Mat images = Mat(Field::rationals(), 0, 0);
};

PhiMap build_phi(const Syzygy& f, const ChainLift& lift);

struct ConeReport {
  std::size_t step = 0, rank = 0, k = 0;
  std::size_t pushed_dim = 0;     // dim span phi(q_S)
  std::size_t syzygy_dim = 0;     // dim (I_f)_2
  bool spans_equal = false;
  std::size_t image_dim = 0;      // rank of phi
  std::size_t vertex_dim = 0;     // dim V - rank phi
  bool x_block_is_gstar = false;
  bool pass = false;
};

ConeReport verify_cone(const Syzygy& f, const ChainLift& lift, const PhiMap& phi);
ConeReport verify_cone(const Syzygy& f);

struct SubkoszulReport {
  std::size_t g = 0, k = 0, step = 0;
  std::vector<std::size_t> strand_dims;
  bool embedded = false;              // each Koszul term lands injectively in F_j
  std::size_t distinguished_rank = 0;
  std::size_t involved_dim = 0;
  std::optional<std::size_t> rank_g_basis_index;  // first basis syzygy of rank g
  std::vector<std::size_t> basis_ranks;
  bool pass = false;
};

SubkoszulReport subkoszul_check(std::size_t g, std::size_t k, const Field& field);

struct OneGenericReport {
  bool one_generic = false;
  std::string reason;
  // (a : b) with dependent a*row1 + b*row2, when it exists over the base field.
  std::optional<std::pair<Scalar, Scalar>> witness;
  bool witness_outside_field = false;
};

// rows[0], rows[1]: g linear forms each, as vectors in V of `ring`.
OneGenericReport is_one_generic_2xg(const Ring& ring, const std::vector<SparseVec>& row1,
                                    const std::vector<SparseVec>& row2);

// Linear span of s ^ e_j, j < w, in Pluecker variables.
GradedIdeal section_vanishing_ideal(std::size_t w, const std::vector<Scalar>& s, const Field& field);
// Hilbert function of the Grassmannian of 2-quotients of an m-space.
long long grassmannian_hilbert(std::size_t m, int d);

struct SectionReport {
  std::size_t w = 0;
  std::vector<std::string> section;
  std::size_t span_dim = 0;
  std::vector<long long> hilbert;
  std::vector<long long> expected;
  bool pass = false;
};

SectionReport section_check(std::size_t w, const std::vector<Scalar>& s, const Field& field, int up_to);
std::vector<Scalar> random_vector(const Field& field, std::mt19937_64& rng, std::size_t n);

struct InjectivityReport {
  std::size_t w = 0;
  std::vector<std::string> sections;   // printed coordinates
  std::vector<std::size_t> image_dims; // dim phi(I_s), must be positive
  std::size_t kernel_dim = 0;          // dim ker phi
  bool pass = false;
};

InjectivityReport h0_injectivity_check(const Syzygy& f, const ChainLift& lift, const PhiMap& phi,
                                       std::size_t random_sections, std::uint64_t seed);

struct ReducibleReport {
  std::size_t step = 0, rank = 0;
  std::string hyperplane;          // the linear form alpha(e_0 ^ ... ^ e_p)
  std::vector<std::string> linear_space;  // the involved forms
  std::vector<DegreeCheck> rows;
  bool pass = false;
};

// For a rank p+1 syzygy: I_f agrees degreewise with (h) cap (l_0, ..., l_p).
ReducibleReport reducible_check(const Syzygy& f, const ChainLift& lift, int up_to);

}  // namespace linsyz
