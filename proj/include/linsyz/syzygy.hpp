#pragma once

// Per-syzygy analysis: the involved spaces G and G*, rank and
// classification, the lift of the Koszul complex of G into the strand, and
// the syzygy ideal.

#include "linsyz/strand.hpp"

#include <string>
#include <vector>

namespace linsyz {

struct InvolvedData {
  std::size_t step = 0;
  std::size_t rank = 0;
  // e_i as vectors of F_{p-1}; l_i as linear forms (vectors in V). The
  // differential equals sum_i e_i (x) l_i. The l_i are the echelon basis of
  // their span, and e_i[a] is the coefficient of l_i's pivot in row a.
  std::vector<SparseVec> g_basis;
  std::vector<SparseVec> forms;
  Subspace g = Subspace(Field::rationals(), 0);
  Subspace gstar = Subspace(Field::rationals(), 0);
};

InvolvedData involved(const Syzygy& f);

enum class SyzygyClass { Reducible, Scrollar, Grassmannian, Higher };
SyzygyClass classify(const Syzygy& f);
SyzygyClass classify_rank(std::size_t step, std::size_t rank);
std::string class_name(SyzygyClass c);

struct ChainLift {
  std::size_t step = 0;
  std::size_t rank = 0;
  // phi[k] : wedge^{p-k} G -> F_k, row = lexicographic multi-index of G.
  std::vector<Mat> phi;
  // alpha : wedge^{p+1} G -> V.
  Mat alpha = Mat(Field::rationals(), 0, 0);
  // Dimension of the solution space of the alpha system; alpha is the
  // canonical solution (free unknowns zero).
  std::size_t alpha_freedom = 0;
  InvolvedData data;
};

// Throws std::logic_error if any square fails to close or to verify.
ChainLift chain_lift(const Syzygy& f);
ChainLift chain_lift(const Syzygy& f, const InvolvedData& data);

// Quadric of R_2 that an F_0 coordinate vector stands for.
SparseVec quadric_of(const LinearStrand& s, const SparseVec& f0);

struct SyzygyIdealReport {
  GradedIdeal ideal;
  std::vector<long long> hilbert;  // degrees 0..max_degree
  int estimate_from = 1;
  DimDegreeEstimate estimate;
  int codimension = -1;  // within P(V); -1 if no estimate
};

SyzygyIdealReport syzygy_ideal(const Syzygy& f, const ChainLift& lift, int max_degree = 5);
// Quadric span of the syzygy ideal inside R_2.
Subspace syzygy_quadrics(const Syzygy& f, const ChainLift& lift);

std::string linear_form_string(const Ring& ring, const SparseVec& v);

}  // namespace linsyz
