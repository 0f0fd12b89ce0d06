#pragma once

// The linear strand of a quadric-generated ideal, built as iterated kernels:
//   F_0 = I_2 with basis the given generators,
//   F_1 = ker(F_0 (x) V -> R_3),
//   F_p = ker(F_{p-1} (x) V -> F_{p-2} (x) R_2)  for p >= 2.
// F_p is held as a subspace of F_{p-1} (x) V, coordinates a * n + v where a
// indexes the basis of F_{p-1} and v a variable.

#include "linsyz/multilin.hpp"
#include "linsyz/polyring.hpp"

#include <memory>
#include <string>
#include <vector>

namespace linsyz {

inline constexpr std::size_t kDefaultStrandCap = 6;

class LinearStrand {
 public:
  const GradedIdeal& ideal() const { return ideal_; }
  const Ring& ring() const { return ideal_.ring(); }
  const Field& field() const { return ideal_.ring().field(); }
  std::size_t nvars() const { return ideal_.ring().nvars(); }

  // Number of computed pieces; the last one is zero when the strand ended.
  std::size_t length() const { return pieces_.size() + 1; }
  std::size_t dim(std::size_t p) const;
  bool ended() const { return dim(length() - 1) == 0; }
  // Basis of F_p (p >= 1) as vectors of F_{p-1} (x) V.
  const std::vector<SparseVec>& basis(std::size_t p) const;
  const Subspace& piece(std::size_t p) const { return pieces_.at(p - 1); }
  // The quadric of F_0 basis element a.
  const Poly& quadric(std::size_t a) const { return ideal_.generators().at(a); }
  std::size_t cap() const { return cap_; }

  // Image of a tensor in F_{p-1} (x) V under multiplication of the linear
  // factors: lands in R_3 when p = 1, in F_{p-2} (x) R_2 when p >= 2.
  SparseVec multiply_out(std::size_t p, const SparseVec& tensor) const;
  std::size_t multiply_out_dim(std::size_t p) const;

  // Coefficient of the tensor basis element (a, v).
  std::size_t tensor_index(std::size_t a, std::size_t v) const { return a * nvars() + v; }

  friend LinearStrand compute_strand(const GradedIdeal& ideal, std::size_t p_max);

 private:
  explicit LinearStrand(GradedIdeal ideal) : ideal_(std::move(ideal)) {}
  GradedIdeal ideal_;
  std::vector<Subspace> pieces_;  // F_1, F_2, ...
  std::size_t cap_ = kDefaultStrandCap;
};

// Throws std::invalid_argument for non-quadric or dependent generators.
// Computes up to F_{p_max}, stopping at the first zero piece.
LinearStrand compute_strand(const GradedIdeal& ideal, std::size_t p_max = kDefaultStrandCap);

// dim ker(wedge^p V (x) I_2 -> wedge^{p-1} V (x) I_3).
std::size_t koszul_betti(const GradedIdeal& ideal, std::size_t p);

class Syzygy {
 public:
  // coords in the basis of F_p; throws for out-of-range step or a zero vector.
  Syzygy(std::shared_ptr<const LinearStrand> strand, std::size_t step, SparseVec coords);
  static Syzygy basis_element(std::shared_ptr<const LinearStrand> strand, std::size_t step, std::size_t index);

  const LinearStrand& strand() const { return *strand_; }
  const std::shared_ptr<const LinearStrand>& strand_ptr() const { return strand_; }
  std::size_t step() const { return step_; }
  const SparseVec& coords() const { return coords_; }
  // The element itself inside F_{p-1} (x) V (p >= 1), or R_2 (p = 0).
  SparseVec element() const;

 private:
  std::shared_ptr<const LinearStrand> strand_;
  std::size_t step_;
  SparseVec coords_;
};

// The element of F_{p-1} (x) V that f is; throws for p = 0.
SparseVec strand_differential(const Syzygy& f);

// Rows "p: dim F_p".
std::string betti_text(const LinearStrand& s);

}  // namespace linsyz
