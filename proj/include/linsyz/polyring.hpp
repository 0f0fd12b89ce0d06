#pragma once

// Graded polynomial rings and homogeneous ideals, treated degree by degree as
// subspaces of the monomial spaces R_d. No Groebner bases are used anywhere:
// every ideal-theoretic question is a finite-dimensional linear-algebra
// question in a fixed degree.

#include "linsyz/exactlin.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace linsyz {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint16_t> exponents);
  static Monomial one(std::size_t nvars);
  static Monomial variable(std::size_t nvars, std::size_t i);

  const std::vector<std::uint16_t>& exponents() const { return exps_; }
  std::size_t nvars() const { return exps_.size(); }
  int degree() const { return degree_; }
  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Quotient other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<std::uint16_t> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

// Graded reverse lexicographic order with x0 > x1 > ... ; true when a > b.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

namespace detail {
struct RingData;
}

class Ring {
 public:
  Ring(std::vector<std::string> names, Field field);

  std::size_t nvars() const;
  const std::vector<std::string>& names() const;
  const std::string& name(std::size_t i) const { return names().at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  const Field& field() const;

  // Monomials of degree d in descending grevlex order; cached per ring.
  const std::vector<Monomial>& monomial_basis(int d) const;
  std::size_t monomial_index(const Monomial& m) const;
  std::size_t dim(int d) const;

  std::string monomial_string(const Monomial& m) const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  std::shared_ptr<detail::RingData> data_;
};

class Poly {
 public:
  using Terms = std::map<Monomial, Scalar, GrevlexGreater>;

  Poly(Ring ring, int degree);
  static Poly monomial(Ring ring, const Monomial& m, const Scalar& c);
  static Poly variable(Ring ring, std::size_t i);
  static Poly from_vector(Ring ring, int degree, const SparseVec& v);

  const Ring& ring() const { return ring_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);
  Poly scaled(const Scalar& c) const;
  SparseVec to_vector() const;

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  Ring ring_;
  int degree_;
  Terms terms_;
};

class GradedIdeal {
 public:
  // Throws std::invalid_argument for zero generators or ring mismatch.
  GradedIdeal(Ring ring, std::vector<Poly> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool all_quadrics() const;
  int min_degree() const;
  int max_degree() const;

 private:
  Ring ring_;
  std::vector<Poly> gens_;
};

// Span of g * (monomials of degree d - deg g) over all generators g.
Subspace ideal_piece(const GradedIdeal& ideal, int d);
// (I cap J)_d = I_d cap J_d.
Subspace ideal_intersect_piece(const GradedIdeal& i, const GradedIdeal& j, int d);
// {f in R_d : l f in I_{d+1}} for a linear form l.
Subspace colon_piece(const GradedIdeal& ideal, const Poly& l, int d);

struct SaturationRow {
  int degree;
  std::size_t ideal_dim;
  std::size_t colon_dim;  // dim of the intersection of (I : x)_d over all variables
  bool equal;
};

struct SaturationReport {
  int up_to;
  std::vector<SaturationRow> rows;
  bool saturated;  // "saturated up to degree up_to", nothing beyond
};

SaturationReport saturation_check(const GradedIdeal& ideal, int up_to);

std::size_t hilbert_function(const GradedIdeal& ideal, int d);
// Values for degrees d0..d1 inclusive; quotients out linear generators once.
std::vector<long long> hilbert_values(const GradedIdeal& ideal, int d0, int d1);

struct DimDegreeEstimate {
  int window_begin = 0;  // degree of the first value
  int window_end = 0;
  bool stabilized = false;
  int dimension = -1;  // projective; -1 for the empty scheme
  long long degree = 0;
  int steps = 0;  // differencing steps applied
};

// Successive differences until the sequence is constant (at least two equal
// values left); dimension is the number of differencing steps.
DimDegreeEstimate dim_degree_estimate(std::span<const long long> h, int first_degree);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar: integer coefficients (optionally a/b), identifiers naming ring
// variables, + - * ^ and parentheses. Rejects inhomogeneous input.
Poly parse_poly(const Ring& ring, std::string_view text);
std::string print_poly(const Poly& p);

// Ideal file: "vars: x0 x1 ...", then one generator per line, '#' comments.
GradedIdeal parse_ideal_text(std::string_view text, const Field& field);
GradedIdeal read_ideal_file(const std::string& path, const Field& field);
std::string print_ideal_text(const GradedIdeal& ideal);

// Ring homomorphism sending variable i of p's ring to images[i] (all of one
// common degree e); the result has degree e*deg(p).
Poly substitute(const Poly& p, const Ring& target, const std::vector<Poly>& images);

// Polynomials of degree d spanning a subspace of R_d.
std::vector<Poly> polys_of(const Ring& ring, int d, const Subspace& s);

// Quotient by the linear part: returns an ideal in the polynomial ring on the
// non-pivot variables whose Hilbert function equals that of the input.
GradedIdeal eliminate_linear_part(const GradedIdeal& ideal);

}  // namespace linsyz
