#include "linsyz/exactlin.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace linsyz {

// ---------------------------------------------------------------- scalars

bool Scalar::is_zero() const {
  if (rep_.index() == 0) return std::get<0>(rep_) == 0;
  return sgn(std::get<1>(rep_)) == 0;
}

namespace {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime_number(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field(FieldKind::Prime, static_cast<std::uint32_t>(p));
}

Field Field::rationals() { return Field(FieldKind::Rationals, 0); }

Field Field::parse(std::string_view text) {
  if (text == "QQ" || text == "Q" || text == "qq") return rationals();
  if (text.empty()) throw std::invalid_argument("empty field specification");
  std::uint64_t p = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("field must be a prime or QQ, got '" + std::string(text) + "'");
    p = p * 10 + static_cast<std::uint64_t>(c - '0');
    if (p > (std::uint64_t{1} << 32)) throw std::invalid_argument("field characteristic too large");
  }
  return prime(p);
}

std::string Field::name() const { return is_prime() ? "F_" + std::to_string(p_) : "QQ"; }

Scalar Field::zero() const { return is_prime() ? Scalar(std::uint32_t{0}) : Scalar(mpq_class(0)); }
Scalar Field::one() const { return is_prime() ? Scalar(std::uint32_t{1}) : Scalar(mpq_class(1)); }

Scalar Field::from_int(long long v) const {
  if (!is_prime()) return Scalar(mpq_class(mpz_class(std::to_string(v))));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar(static_cast<std::uint32_t>(r));
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (!is_prime()) return Scalar(mpq_class(v));
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return Scalar(static_cast<std::uint32_t>(r.get_ui()));
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (!is_prime()) return Scalar(v);
  Scalar den = from_mpz(v.get_den());
  if (den.is_zero()) throw std::invalid_argument("denominator vanishes in " + name());
  return div(from_mpz(v.get_num()), den);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_prime()) {
    std::uint64_t s = std::uint64_t{a.residue()} + b.residue();
    if (s >= p_) s -= p_;
    return Scalar(static_cast<std::uint32_t>(s));
  }
  return Scalar(mpq_class(a.rational() + b.rational()));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_prime()) {
    std::uint64_t s = std::uint64_t{a.residue()} + p_ - b.residue();
    if (s >= p_) s -= p_;
    return Scalar(static_cast<std::uint32_t>(s));
  }
  return Scalar(mpq_class(a.rational() - b.rational()));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_prime()) return Scalar(static_cast<std::uint32_t>((std::uint64_t{a.residue()} * b.residue()) % p_));
  return Scalar(mpq_class(a.rational() * b.rational()));
}

Scalar Field::neg(const Scalar& a) const {
  if (is_prime()) return Scalar(a.residue() == 0 ? 0u : p_ - a.residue());
  return Scalar(mpq_class(-a.rational()));
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw std::domain_error("division by zero in " + name());
  if (is_prime()) return Scalar(inverse_mod(a.residue(), p_));
  return Scalar(mpq_class(1 / a.rational()));
}

bool Field::is_negative(const Scalar& a) const {
  if (is_prime()) return a.residue() > p_ / 2;
  return sgn(a.rational()) < 0;
}

std::string Field::magnitude_string(const Scalar& a) const {
  if (is_prime()) {
    std::uint32_t r = a.residue();
    return std::to_string(r > p_ / 2 ? p_ - r : r);
  }
  mpq_class m = abs(a.rational());
  return m.get_str();
}

std::string Field::to_string(const Scalar& a) const {
  return (is_negative(a) ? "-" : "") + magnitude_string(a);
}

// ---------------------------------------------------------------- vectors

namespace vec {

SparseVec axpy(const Field& f, const Scalar& a, const SparseVec& x, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  if (a.is_zero()) return y;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].index < y[j].index)) {
      out.push_back({x[i].index, f.mul(a, x[i].value)});
      ++i;
    } else if (i == x.size() || y[j].index < x[i].index) {
      out.push_back(y[j]);
      ++j;
    } else {
      Scalar s = f.add(y[j].value, f.mul(a, x[i].value));
      if (!s.is_zero()) out.push_back({x[i].index, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scale(const Field& f, const Scalar& a, const SparseVec& x) {
  if (a.is_zero()) return {};
  SparseVec out;
  out.reserve(x.size());
  for (const auto& e : x) out.push_back({e.index, f.mul(a, e.value)});
  return out;
}

Scalar at(const SparseVec& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index, [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it != v.end() && it->index == index) return it->value;
  return Scalar();
}

SparseVec from_pairs(const Field& f, std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVec out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().index == e.index) {
      out.back().value = f.add(out.back().value, e.value);
    } else {
      if (!out.empty() && out.back().value.is_zero()) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && out.back().value.is_zero()) out.pop_back();
  return out;
}

SparseVec from_dense(const std::vector<Scalar>& dense) {
  SparseVec out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) out.push_back({i, dense[i]});
  return out;
}

std::vector<Scalar> to_dense(const Field& f, const SparseVec& v, std::size_t dim) {
  std::vector<Scalar> out(dim, f.zero());
  for (const auto& e : v) out.at(e.index) = e.value;
  return out;
}

bool equal(const SparseVec& a, const SparseVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].index != b[i].index || !(a[i].value == b[i].value)) return false;
  return true;
}

}  // namespace vec

// ---------------------------------------------------------------- elimination kernels

namespace {

std::atomic<double> g_dense_threshold{0.15};
std::atomic<std::size_t> g_small_block{4096};

struct PrimeOps {
  using E = std::uint32_t;
  std::uint64_t p;

  static E zero() { return 0; }
  static bool is_zero(E a) { return a == 0; }
  E from(const Scalar& s) const { return s.residue(); }
  Scalar to(E a) const { return Scalar(a); }
  E mul(E a, E b) const { return static_cast<E>((std::uint64_t{a} * b) % p); }
  E inv(E a) const { return inverse_mod(a, static_cast<std::uint32_t>(p)); }
  // a <- a - c*b
  void submul(E& a, E c, E b) const {
    a = static_cast<E>((a + (p - c) * std::uint64_t{b}) % p);
  }
};

struct RationalOps {
  using E = mpq_class;

  static E zero() { return E(0); }
  static bool is_zero(const E& a) { return sgn(a) == 0; }
  E from(const Scalar& s) const { return s.rational(); }
  Scalar to(const E& a) const { return Scalar(a); }
  E mul(const E& a, const E& b) const { return a * b; }
  E inv(const E& a) const { return 1 / a; }
  void submul(E& a, const E& c, const E& b) const { a -= c * b; }
};

template <class Fn>
decltype(auto) with_ops(const Field& f, Fn&& fn) {
  if (f.is_prime()) return fn(PrimeOps{f.characteristic()});
  return fn(RationalOps{});
}

template <class E>
using LocalRow = std::vector<std::pair<std::uint32_t, E>>;

// Gauss-Jordan on a dense block. Rows [0, rank) end up as the reduced pivot
// rows in pivot order; rows [rank, n) are zero on [0, limit).
template <class Ops>
std::size_t dense_rref(const Ops& ops, std::vector<std::vector<typename Ops::E>>& a, std::size_t width,
                       std::size_t limit) {
  using E = typename Ops::E;
  std::size_t r = 0;
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < limit && r < n; ++col) {
    std::size_t piv = r;
    while (piv < n && Ops::is_zero(a[piv][col])) ++piv;
    if (piv == n) continue;
    std::swap(a[r], a[piv]);
    auto& pr = a[r];
    E inv = ops.inv(pr[col]);
    for (std::size_t j = col; j < width; ++j)
      if (!Ops::is_zero(pr[j])) pr[j] = ops.mul(pr[j], inv);
    std::vector<std::uint32_t> nz;
    for (std::size_t j = col; j < width; ++j)
      if (!Ops::is_zero(pr[j])) nz.push_back(static_cast<std::uint32_t>(j));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r) continue;
      auto& row = a[i];
      if (Ops::is_zero(row[col])) continue;
      E c = row[col];
      for (std::uint32_t j : nz) ops.submul(row[j], c, pr[j]);
    }
    ++r;
  }
  return r;
}

// Incremental elimination with sparse pivot rows and a dense accumulator.
template <class Ops>
void sparse_reduce(const Ops& ops, const std::vector<LocalRow<typename Ops::E>>& rows, std::size_t width,
                   std::size_t limit, std::vector<LocalRow<typename Ops::E>>& pivots_out,
                   std::vector<LocalRow<typename Ops::E>>& residual_out) {
  using E = typename Ops::E;
  std::vector<E> acc(width, Ops::zero());
  std::vector<std::int64_t> pivot_at(limit, -1);
  std::vector<LocalRow<E>> piv_rows;
  std::vector<std::uint32_t> piv_cols;

  auto gather = [&](std::size_t from) {
    LocalRow<E> out;
    for (std::size_t j = from; j < width; ++j) {
      if (!Ops::is_zero(acc[j])) {
        out.emplace_back(static_cast<std::uint32_t>(j), acc[j]);
        acc[j] = Ops::zero();
      }
    }
    return out;
  };

  for (const auto& row : rows) {
    if (row.empty()) continue;
    if (limit == width && piv_rows.size() == limit) break;
    for (const auto& [j, v] : row) acc[j] = v;
    std::size_t c = row.front().first;
    std::int64_t new_pivot = -1;
    for (; c < limit; ++c) {
      if (Ops::is_zero(acc[c])) continue;
      std::int64_t slot = pivot_at[c];
      if (slot < 0) {
        new_pivot = static_cast<std::int64_t>(c);
        break;
      }
      E factor = acc[c];
      for (const auto& [j, v] : piv_rows[static_cast<std::size_t>(slot)]) ops.submul(acc[j], factor, v);
    }
    if (new_pivot >= 0) {
      std::size_t pc = static_cast<std::size_t>(new_pivot);
      E inv = ops.inv(acc[pc]);
      for (std::size_t j = pc; j < width; ++j)
        if (!Ops::is_zero(acc[j])) acc[j] = ops.mul(acc[j], inv);
      pivot_at[pc] = static_cast<std::int64_t>(piv_rows.size());
      piv_rows.push_back(gather(pc));
      piv_cols.push_back(static_cast<std::uint32_t>(pc));
    } else {
      auto res = gather(limit);
      if (!res.empty()) residual_out.push_back(std::move(res));
    }
  }

  // Back substitution, highest pivot first.
  std::vector<std::size_t> order(piv_rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return piv_cols[a] > piv_cols[b]; });
  for (std::size_t idx : order) {
    auto& pr = piv_rows[idx];
    bool needs = false;
    for (std::size_t t = 1; t < pr.size() && !needs; ++t)
      if (pr[t].first < limit && pivot_at[pr[t].first] >= 0) needs = true;
    if (!needs) continue;
    for (const auto& [j, v] : pr) acc[j] = v;
    for (std::size_t c = piv_cols[idx] + 1; c < limit; ++c) {
      if (Ops::is_zero(acc[c]) || pivot_at[c] < 0) continue;
      E factor = acc[c];
      for (const auto& [j, v] : piv_rows[static_cast<std::size_t>(pivot_at[c])]) ops.submul(acc[j], factor, v);
    }
    pr = gather(piv_cols[idx]);
  }
  for (std::size_t idx : order) pivots_out.push_back(std::move(piv_rows[idx]));
  std::reverse(pivots_out.end() - static_cast<std::ptrdiff_t>(order.size()), pivots_out.end());
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

template <class Ops>
void eliminate_block(const Ops& ops, const std::vector<SparseVec>& rows, const std::vector<std::size_t>& members,
                     std::size_t limit, detail::Elimination& out) {
  using E = typename Ops::E;
  std::vector<std::size_t> cols;
  std::size_t nnz = 0;
  for (std::size_t r : members) {
    for (const auto& e : rows[r]) cols.push_back(e.index);
    nnz += rows[r].size();
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  const std::size_t width = cols.size();
  const std::size_t local_limit =
      static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), limit) - cols.begin());
  auto local = [&](std::size_t global) {
    return static_cast<std::uint32_t>(std::lower_bound(cols.begin(), cols.end(), global) - cols.begin());
  };

  auto emit = [&](const LocalRow<E>& lr, std::vector<SparseVec>& sink) {
    SparseVec v;
    v.reserve(lr.size());
    for (const auto& [j, x] : lr) v.push_back({cols[j], ops.to(x)});
    sink.push_back(std::move(v));
  };

  const double cells = static_cast<double>(members.size()) * static_cast<double>(width);
  const bool dense = cells <= static_cast<double>(g_small_block.load()) || static_cast<double>(nnz) >= g_dense_threshold.load() * cells;
  if (dense) {
    std::vector<std::vector<E>> a(members.size(), std::vector<E>(width, Ops::zero()));
    for (std::size_t i = 0; i < members.size(); ++i)
      for (const auto& e : rows[members[i]]) a[i][local(e.index)] = ops.from(e.value);
    std::size_t rk = dense_rref(ops, a, width, local_limit);
    for (std::size_t i = 0; i < a.size(); ++i) {
      LocalRow<E> lr;
      for (std::size_t j = (i < rk ? 0 : local_limit); j < width; ++j)
        if (!Ops::is_zero(a[i][j])) lr.emplace_back(static_cast<std::uint32_t>(j), a[i][j]);
      if (lr.empty()) continue;
      emit(lr, i < rk ? out.pivot_rows : out.residual_rows);
    }
  } else {
    std::vector<LocalRow<E>> lrows;
    lrows.reserve(members.size());
    for (std::size_t r : members) {
      LocalRow<E> lr;
      lr.reserve(rows[r].size());
      for (const auto& e : rows[r]) lr.emplace_back(local(e.index), ops.from(e.value));
      lrows.push_back(std::move(lr));
    }
    std::vector<LocalRow<E>> piv, res;
    sparse_reduce(ops, lrows, width, local_limit, piv, res);
    for (const auto& lr : piv) emit(lr, out.pivot_rows);
    for (const auto& lr : res) emit(lr, out.residual_rows);
  }
}

}  // namespace

void set_dense_threshold(double density) { g_dense_threshold.store(density); }
double dense_threshold() { return g_dense_threshold.load(); }
void set_small_block_cells(std::size_t cells) { g_small_block.store(cells); }
std::size_t small_block_cells() { return g_small_block.load(); }

namespace detail {

Elimination eliminate(const Field& field, std::size_t width, const std::vector<SparseVec>& rows,
                      std::size_t pivot_limit) {
  Elimination out;
  if (pivot_limit > width) throw std::invalid_argument("pivot limit exceeds width");
  UnionFind uf(pivot_limit);
  std::vector<std::int64_t> anchor(rows.size(), -1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& e : rows[r]) {
      if (e.index >= width) throw std::invalid_argument("vector index outside ambient space");
      if (e.index >= pivot_limit) break;
      if (anchor[r] < 0)
        anchor[r] = static_cast<std::int64_t>(e.index);
      else
        uf.unite(static_cast<std::uint32_t>(anchor[r]), static_cast<std::uint32_t>(e.index));
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::int64_t> group_of_root(pivot_limit, -1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    if (anchor[r] < 0) {
      out.residual_rows.push_back(rows[r]);
      continue;
    }
    std::uint32_t root = uf.find(static_cast<std::uint32_t>(anchor[r]));
    if (group_of_root[root] < 0) {
      group_of_root[root] = static_cast<std::int64_t>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(group_of_root[root])].push_back(r);
  }
  with_ops(field, [&](const auto& ops) {
    for (const auto& g : groups) eliminate_block(ops, rows, g, pivot_limit, out);
    return 0;
  });
  std::sort(out.pivot_rows.begin(), out.pivot_rows.end(),
            [](const SparseVec& a, const SparseVec& b) { return a.front().index < b.front().index; });
  return out;
}

std::vector<SparseVec> echelon(const Field& field, std::size_t width, const std::vector<SparseVec>& rows) {
  return eliminate(field, width, rows, width).pivot_rows;
}

}  // namespace detail

// ---------------------------------------------------------------- matrices

Mat::Mat(Field field, std::size_t rows, std::size_t cols) : field_(field), cols_(cols), rows_(rows) {}

Mat Mat::from_rows(Field field, std::size_t cols, std::vector<SparseVec> rows) {
  Mat m(field, 0, cols);
  for (const auto& r : rows)
    for (const auto& e : r)
      if (e.index >= cols) throw std::invalid_argument("row entry outside column range");
  m.rows_ = std::move(rows);
  return m;
}

Mat Mat::from_ints(Field field, const std::vector<std::vector<long long>>& entries) {
  std::size_t cols = entries.empty() ? 0 : entries.front().size();
  Mat m(field, entries.size(), cols);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].size() != cols) throw std::invalid_argument("ragged matrix literal");
    for (std::size_t j = 0; j < cols; ++j) {
      Scalar s = field.from_int(entries[i][j]);
      if (!s.is_zero()) m.rows_[i].push_back({j, s});
    }
  }
  return m;
}

Mat Mat::identity(Field field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, field.one()});
  return m;
}

Scalar Mat::at(std::size_t i, std::size_t j) const {
  Scalar s = vec::at(rows_.at(i), j);
  return s.is_zero() ? field_.zero() : s;
}

void Mat::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (j >= cols_) throw std::out_of_range("column out of range");
  auto& r = rows_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t k) { return e.index < k; });
  if (it != r.end() && it->index == j) {
    if (v.is_zero())
      r.erase(it);
    else
      it->value = v;
  } else if (!v.is_zero()) {
    r.insert(it, Entry{j, v});
  }
}

void Mat::set_row(std::size_t i, SparseVec v) {
  for (const auto& e : v)
    if (e.index >= cols_) throw std::out_of_range("column out of range");
  rows_.at(i) = std::move(v);
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& e : rows_[i]) t.rows_[e.index].push_back({i, e.value});
  return t;
}

std::size_t Mat::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool operator==(const Mat& a, const Mat& b) {
  if (!(a.field_ == b.field_) || a.cols_ != b.cols_ || a.rows_.size() != b.rows_.size()) return false;
  for (std::size_t i = 0; i < a.rows_.size(); ++i)
    if (!vec::equal(a.rows_[i], b.rows_[i])) return false;
  return true;
}

Mat multiply(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in multiply");
  const Field& f = a.field();
  Mat out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<Entry> acc;
    for (const auto& e : a.row(i))
      for (const auto& g : b.row(e.index)) acc.push_back({g.index, f.mul(e.value, g.value)});
    out.set_row(i, vec::from_pairs(f, std::move(acc)));
  }
  return out;
}

Mat rref(const Mat& m) {
  auto rows = detail::echelon(m.field(), m.cols(), m.row_vectors());
  rows.resize(m.rows());
  return Mat::from_rows(m.field(), m.cols(), std::move(rows));
}

std::size_t rank(const Mat& m) { return detail::echelon(m.field(), m.cols(), m.row_vectors()).size(); }

// ---------------------------------------------------------------- subspaces

Subspace::Subspace(Field field, std::size_t ambient_dim) : field_(field), ambient_(ambient_dim) {}

Subspace Subspace::span(Field field, std::size_t ambient_dim, const std::vector<SparseVec>& vectors) {
  Subspace s(field, ambient_dim);
  s.basis_ = detail::echelon(field, ambient_dim, vectors);
  return s;
}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
  std::vector<std::size_t> all(ambient_dim);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return coordinate(field, ambient_dim, all);
}

Subspace Subspace::coordinate(Field field, std::size_t ambient_dim, const std::vector<std::size_t>& coords) {
  Subspace s(field, ambient_dim);
  std::vector<std::size_t> c = coords;
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (std::size_t i : c) {
    if (i >= ambient_dim) throw std::invalid_argument("coordinate outside ambient space");
    s.basis_.push_back(SparseVec{{i, field.one()}});
  }
  return s;
}

Mat Subspace::basis_matrix() const { return Mat::from_rows(field_, ambient_, basis_); }

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> p;
  p.reserve(basis_.size());
  for (const auto& b : basis_) p.push_back(b.front().index);
  return p;
}

SparseVec Subspace::reduce(const SparseVec& v) const {
  std::vector<Entry> acc(v.begin(), v.end());
  for (const auto& e : v) {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), e.index,
                               [](const SparseVec& b, std::size_t i) { return b.front().index < i; });
    if (it == basis_.end() || it->front().index != e.index) continue;
    Scalar c = field_.neg(e.value);
    for (const auto& b : *it) acc.push_back({b.index, field_.mul(c, b.value)});
  }
  return vec::from_pairs(field_, std::move(acc));
}

bool Subspace::contains(const SparseVec& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch in containment test");
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

bool Subspace::coordinates(const SparseVec& v, std::vector<Scalar>& out) const {
  if (!contains(v)) return false;
  out.assign(basis_.size(), field_.zero());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = vec::at(v, basis_[i].front().index);
    if (!c.is_zero()) out[i] = c;
  }
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (!(a.field_ == b.field_) || a.ambient_ != b.ambient_ || a.basis_.size() != b.basis_.size()) return false;
  for (std::size_t i = 0; i < a.basis_.size(); ++i)
    if (!vec::equal(a.basis_[i], b.basis_[i])) return false;
  return true;
}

namespace {
void check_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspaces live in different ambient spaces");
  if (!(a.field() == b.field())) throw std::invalid_argument("subspaces live over different fields");
}
}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  std::vector<SparseVec> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.field(), a.ambient_dim(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.field(), n);
  if (a.dim() == n) return b;
  if (b.dim() == n) return a;
  // Zassenhaus: rows (u | u) for u in a and (w | 0) for w in b; rows vanishing
  // on the left half carry a basis of the intersection on the right half.
  std::vector<SparseVec> rows;
  rows.reserve(a.dim() + b.dim());
  for (const auto& u : a.basis()) {
    SparseVec r = u;
    for (const auto& e : u) r.push_back({e.index + n, e.value});
    rows.push_back(std::move(r));
  }
  for (const auto& w : b.basis()) rows.push_back(w);
  auto elim = detail::eliminate(a.field(), 2 * n, rows, n);
  for (auto& r : elim.residual_rows)
    for (auto& e : r) e.index -= n;
  return Subspace::span(a.field(), n, elim.residual_rows);
}

Subspace kernel_of_images(const Field& field, std::size_t target_dim, const std::vector<SparseVec>& images) {
  const std::size_t m = images.size();
  std::vector<SparseVec> rows;
  rows.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    SparseVec r = images[j];
    r.push_back({target_dim + j, field.one()});
    rows.push_back(std::move(r));
  }
  auto elim = detail::eliminate(field, target_dim + m, rows, target_dim);
  for (auto& r : elim.residual_rows)
    for (auto& e : r) e.index -= target_dim;
  return Subspace::span(field, m, elim.residual_rows);
}

Subspace image_of(const Field& field, std::size_t target_dim, const std::vector<SparseVec>& images) {
  return Subspace::span(field, target_dim, images);
}

Subspace kernel(const Mat& m) {
  Mat t = m.transpose();
  return kernel_of_images(m.field(), m.rows(), t.row_vectors());
}

SolveResult solve(const Mat& m, const Mat& targets) {
  if (m.rows() != targets.rows()) throw std::invalid_argument("solve: target height differs from system height");
  if (!(m.field() == targets.field())) throw std::invalid_argument("solve: field mismatch");
  const std::size_t c = m.cols();
  std::vector<SparseVec> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseVec r = m.row(i);
    for (const auto& e : targets.row(i)) r.push_back({c + e.index, e.value});
    rows.push_back(std::move(r));
  }
  auto elim = detail::eliminate(m.field(), c + targets.cols(), rows, c);

  SolveResult res;
  std::vector<bool> bad(targets.cols(), false);
  for (const auto& r : elim.residual_rows)
    for (const auto& e : r) bad[e.index - c] = true;
  for (std::size_t t = 0; t < bad.size(); ++t)
    if (bad[t]) res.inconsistent_columns.push_back(t);
  res.consistent = res.inconsistent_columns.empty();
  res.unique = elim.pivot_rows.size() == c;

  std::vector<std::vector<Entry>> cols(c);
  for (const auto& r : elim.pivot_rows) {
    std::size_t pc = r.front().index;
    for (const auto& e : r)
      if (e.index >= c && !bad[e.index - c]) cols[pc].push_back({e.index - c, e.value});
  }
  std::vector<SparseVec> sol(c);
  for (std::size_t i = 0; i < c; ++i) sol[i] = vec::from_pairs(m.field(), std::move(cols[i]));
  res.solution = Mat::from_rows(m.field(), targets.cols(), std::move(sol));
  return res;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace linsyz
