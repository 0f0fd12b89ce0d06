#include "linsyz/strand.hpp"

namespace linsyz {

std::size_t LinearStrand::dim(std::size_t p) const {
  if (p == 0) return ideal_.generators().size();
  return pieces_.at(p - 1).dim();
}

const std::vector<SparseVec>& LinearStrand::basis(std::size_t p) const {
  if (p == 0) throw std::invalid_argument("F_0 has the generators as basis");
  return pieces_.at(p - 1).basis();
}

std::size_t LinearStrand::multiply_out_dim(std::size_t p) const {
  if (p == 1) return ring().dim(3);
  return dim(p - 2) * ring().dim(2);
}

SparseVec LinearStrand::multiply_out(std::size_t p, const SparseVec& tensor) const {
  const Field& f = field();
  const std::size_t n = nvars();
  std::vector<Entry> out;
  if (p == 1) {
    for (const auto& e : tensor) {
      const Poly& q = quadric(e.index / n);
      Monomial x = Monomial::variable(n, e.index % n);
      for (const auto& [m, c] : q.terms()) out.push_back({ring().monomial_index(x * m), f.mul(e.value, c)});
    }
    return vec::from_pairs(f, std::move(out));
  }
  const std::size_t r2 = ring().dim(2);
  const auto& prev = basis(p - 1);
  for (const auto& e : tensor) {
    Monomial xv = Monomial::variable(n, e.index % n);
    for (const auto& b : prev[e.index / n]) {
      std::size_t a = b.index / n;
      Monomial xu = Monomial::variable(n, b.index % n);
      out.push_back({a * r2 + ring().monomial_index(xu * xv), f.mul(e.value, b.value)});
    }
  }
  return vec::from_pairs(f, std::move(out));
}

LinearStrand compute_strand(const GradedIdeal& ideal, std::size_t p_max) {
  if (!ideal.all_quadrics()) throw std::invalid_argument("linear strand needs an ideal generated by quadrics");
  const Ring& R = ideal.ring();
  std::vector<SparseVec> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.to_vector());
  if (Subspace::span(R.field(), R.dim(2), gens).dim() != gens.size())
    throw std::invalid_argument("quadric generators are linearly dependent");

  LinearStrand s(ideal);
  s.cap_ = p_max;
  const std::size_t n = R.nvars();
  for (std::size_t p = 1; p <= p_max; ++p) {
    const std::size_t src = s.dim(p - 1) * n;
    std::vector<SparseVec> images;
    images.reserve(src);
    for (std::size_t i = 0; i < src; ++i) images.push_back(s.multiply_out(p, SparseVec{{i, R.field().one()}}));
    s.pieces_.push_back(kernel_of_images(R.field(), s.multiply_out_dim(p), images));
    if (s.pieces_.back().dim() == 0) break;
  }
  return s;
}

std::size_t koszul_betti(const GradedIdeal& ideal, std::size_t p) {
  if (p == 0) throw std::invalid_argument("koszul_betti requires p >= 1");
  const Ring& R = ideal.ring();
  Subspace i2 = ideal_piece(ideal, 2);
  Subspace i3 = ideal_piece(ideal, 3);
  IndexedMap k = koszul_contract(R, p, i2, 2);
  const std::size_t r3 = R.dim(3);
  for (const auto& row : k.matrix.row_vectors()) {
    // Split the image into its wedge^{p-1} V blocks; each must lie in I_3.
    std::size_t i = 0;
    while (i < row.size()) {
      std::size_t block = row[i].index / r3;
      SparseVec part;
      for (; i < row.size() && row[i].index / r3 == block; ++i) part.push_back({row[i].index % r3, row[i].value});
      if (!i3.contains(part)) throw std::logic_error("koszul contraction left the ideal");
    }
  }
  return kernel_of_images(R.field(), k.target_dim(), k.matrix.row_vectors()).dim();
}

Syzygy::Syzygy(std::shared_ptr<const LinearStrand> strand, std::size_t step, SparseVec coords)
    : strand_(std::move(strand)), step_(step), coords_(std::move(coords)) {
  if (!strand_) throw std::invalid_argument("syzygy without a strand");
  if (step_ >= strand_->length()) throw std::out_of_range("step " + std::to_string(step_) + " beyond the strand");
  if (coords_.empty()) throw std::invalid_argument("zero syzygy");
  if (coords_.back().index >= strand_->dim(step_))
    throw std::out_of_range("coordinate index beyond dim F_" + std::to_string(step_));
}

Syzygy Syzygy::basis_element(std::shared_ptr<const LinearStrand> strand, std::size_t step, std::size_t index) {
  if (!strand) throw std::invalid_argument("syzygy without a strand");
  Scalar one = strand->field().one();
  return Syzygy(std::move(strand), step, SparseVec{{index, one}});
}

SparseVec Syzygy::element() const {
  const Field& f = strand_->field();
  SparseVec acc;
  if (step_ == 0) {
    for (const auto& e : coords_) acc = vec::axpy(f, e.value, strand_->quadric(e.index).to_vector(), acc);
    return acc;
  }
  const auto& b = strand_->basis(step_);
  for (const auto& e : coords_) acc = vec::axpy(f, e.value, b[e.index], acc);
  return acc;
}

SparseVec strand_differential(const Syzygy& f) {
  if (f.step() == 0) throw std::invalid_argument("no differential out of F_0");
  return f.element();
}

std::string betti_text(const LinearStrand& s) {
  std::string out;
  for (std::size_t p = 0; p < s.length(); ++p) out += std::to_string(p) + ": " + std::to_string(s.dim(p)) + "\n";
  return out;
}

}  // namespace linsyz
