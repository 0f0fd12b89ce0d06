#pragma once

// Exact scalars and linear algebra over a prime field or the rationals.
//
// Matrices are stored as sparse rows. Elimination splits a row family into
// connected components of its column-incidence graph and reduces each block
// independently, either densely or with a sparse pivot-row kernel depending on
// the block's density. Results are canonical: a Subspace is always held as the
// reduced row-echelon basis of its span, so equal spaces compare equal.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace linsyz {

inline constexpr std::uint32_t kDefaultPrime = 32003;

enum class FieldKind { Prime, Rationals };

class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(std::uint32_t residue) : rep_(residue) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}

  bool is_zero() const;
  bool is_rational() const { return rep_.index() == 1; }
  std::uint32_t residue() const { return std::get<0>(rep_); }
  const mpq_class& rational() const { return std::get<1>(rep_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.rep_ == b.rep_; }

 private:
  std::variant<std::uint32_t, mpq_class> rep_{std::uint32_t{0}};
};

class Field {
 public:
  // Throws std::invalid_argument unless p is a prime in [2, 2^31).
  static Field prime(std::uint64_t p);
  static Field rationals();
  // Accepts a decimal prime or "QQ".
  static Field parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  bool is_prime() const { return kind_ == FieldKind::Prime; }
  // 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  Scalar from_rational(const mpq_class& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  // Sign and magnitude of the canonical printed form. Prime-field residues
  // print as symmetric representatives in (-p/2, p/2].
  bool is_negative(const Scalar& a) const;
  std::string magnitude_string(const Scalar& a) const;
  std::string to_string(const Scalar& a) const;

  friend bool operator==(const Field& a, const Field& b) { return a.kind_ == b.kind_ && a.p_ == b.p_; }

 private:
  Field(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::uint32_t p_;
};

struct Entry {
  std::size_t index;
  Scalar value;
};

// Strictly increasing indices, no stored zeros.
using SparseVec = std::vector<Entry>;

namespace vec {
// y + a*x
SparseVec axpy(const Field& f, const Scalar& a, const SparseVec& x, const SparseVec& y);
SparseVec scale(const Field& f, const Scalar& a, const SparseVec& x);
Scalar at(const SparseVec& v, std::size_t index);
// Builds a SparseVec from unsorted (index, value) pairs, accumulating repeats.
SparseVec from_pairs(const Field& f, std::vector<Entry> entries);
SparseVec from_dense(const std::vector<Scalar>& dense);
std::vector<Scalar> to_dense(const Field& f, const SparseVec& v, std::size_t dim);
bool equal(const SparseVec& a, const SparseVec& b);
}  // namespace vec

class Mat {
 public:
  Mat(Field field, std::size_t rows, std::size_t cols);
  static Mat from_rows(Field field, std::size_t cols, std::vector<SparseVec> rows);
  static Mat from_ints(Field field, const std::vector<std::vector<long long>>& entries);
  static Mat identity(Field field, std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  const SparseVec& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<SparseVec>& row_vectors() const { return rows_; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);
  void set_row(std::size_t i, SparseVec v);

  Mat transpose() const;
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  friend bool operator==(const Mat& a, const Mat& b);

 private:
  Field field_;
  std::size_t cols_;
  std::vector<SparseVec> rows_;
};

Mat multiply(const Mat& a, const Mat& b);

// Reduced row-echelon form: nonzero rows first, sorted by pivot column, each
// pivot equal to one and the only nonzero in its column. Zero rows follow so
// the shape is preserved.
Mat rref(const Mat& m);
std::size_t rank(const Mat& m);

class Subspace {
 public:
  Subspace(Field field, std::size_t ambient_dim);

  static Subspace span(Field field, std::size_t ambient_dim, const std::vector<SparseVec>& vectors);
  static Subspace full(Field field, std::size_t ambient_dim);
  static Subspace coordinate(Field field, std::size_t ambient_dim, const std::vector<std::size_t>& coords);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const Field& field() const { return field_; }
  const std::vector<SparseVec>& basis() const { return basis_; }
  Mat basis_matrix() const;
  std::vector<std::size_t> pivots() const;

  // Residual of v after subtracting its projection along the pivot columns.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v in the echelon basis, or nothing when v is outside.
  bool coordinates(const SparseVec& v, std::vector<Scalar>& out) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<SparseVec> basis_;
};

// Right null space {x : m x = 0}.
Subspace kernel(const Mat& m);
// Null space of the map sending source basis vector j to images[j].
Subspace kernel_of_images(const Field& field, std::size_t target_dim, const std::vector<SparseVec>& images);
Subspace image_of(const Field& field, std::size_t target_dim, const std::vector<SparseVec>& images);

Subspace sum(const Subspace& a, const Subspace& b);
// Throws std::invalid_argument on ambient or field mismatch.
Subspace intersect(const Subspace& a, const Subspace& b);

struct SolveResult {
  bool consistent = true;
  std::vector<std::size_t> inconsistent_columns;
  bool unique = false;
  // cols(m) x cols(targets); free variables are zero, inconsistent columns zero.
  Mat solution = Mat(Field::rationals(), 0, 0);
};

// Solves m x = t for every column t of targets.
SolveResult solve(const Mat& m, const Mat& targets);

// Block density above which a component is eliminated densely.
void set_dense_threshold(double density);
double dense_threshold();
// Blocks with at most this many cells are always eliminated densely.
void set_small_block_cells(std::size_t cells);
std::size_t small_block_cells();

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

namespace detail {

struct Elimination {
  std::vector<SparseVec> pivot_rows;  // reduced, sorted by pivot column (< pivot_limit)
  std::vector<SparseVec> residual_rows;  // zero on [0, pivot_limit)
};

// Row-reduces `rows` (each over [0, width)) using pivots only in
// [0, pivot_limit). Components are formed on the pivot-eligible columns.
Elimination eliminate(const Field& field, std::size_t width, const std::vector<SparseVec>& rows,
                      std::size_t pivot_limit);

std::vector<SparseVec> echelon(const Field& field, std::size_t width, const std::vector<SparseVec>& rows);

}  // namespace detail

}  // namespace linsyz
