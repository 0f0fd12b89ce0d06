#include "linsyz/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

namespace linsyz {

// ---------------------------------------------------------------- monomials

Monomial::Monomial(std::vector<std::uint16_t> exponents) : exps_(std::move(exponents)) {
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::one(std::size_t nvars) { return Monomial(std::vector<std::uint16_t>(nvars, 0)); }

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  std::vector<std::uint16_t> e(nvars, 0);
  e.at(i) = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.nvars() != nvars()) throw std::invalid_argument("monomials from different rings");
  std::vector<std::uint16_t> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(e[i] + other.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<std::uint16_t> e(other.exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(e[i] - exps_[i]);
  return Monomial(std::move(e));
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

bool GrevlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t i = a.nvars(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// ---------------------------------------------------------------- rings

namespace detail {

struct DegreeBasis {
  std::vector<Monomial> list;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
};

struct RingData {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> lookup;
  Field field;
  std::mutex mutex;
  std::map<int, std::unique_ptr<DegreeBasis>> bases;

  RingData(std::vector<std::string> n, Field f) : names(std::move(n)), field(f) {}

  const DegreeBasis& basis(int d) {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = bases.find(d);
    if (it != bases.end()) return *it->second;
    auto b = std::make_unique<DegreeBasis>();
    const std::size_t n = names.size();
    std::vector<std::uint16_t> e(n, 0);
    // Enumerate compositions of d into n parts.
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (n == 0) {
        if (left == 0) b->list.emplace_back(e);
        return;
      }
      if (i + 1 == n) {
        e[i] = static_cast<std::uint16_t>(left);
        b->list.emplace_back(e);
        e[i] = 0;
        return;
      }
      for (int a = left; a >= 0; --a) {
        e[i] = static_cast<std::uint16_t>(a);
        rec(i + 1, left - a);
      }
      e[i] = 0;
    };
    if (d >= 0) rec(0, d);
    std::sort(b->list.begin(), b->list.end(), GrevlexGreater{});
    b->index.reserve(b->list.size());
    for (std::size_t i = 0; i < b->list.size(); ++i) b->index.emplace(b->list[i], i);
    auto& ref = *b;
    bases.emplace(d, std::move(b));
    return ref;
  }
};

}  // namespace detail

Ring::Ring(std::vector<std::string> names, Field field) {
  data_ = std::make_shared<detail::RingData>(std::move(names), field);
  for (std::size_t i = 0; i < data_->names.size(); ++i) {
    const auto& nm = data_->names[i];
    if (nm.empty() || !(std::isalpha(static_cast<unsigned char>(nm[0])) || nm[0] == '_'))
      throw std::invalid_argument("invalid variable name '" + nm + "'");
    for (char c : nm)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw std::invalid_argument("invalid variable name '" + nm + "'");
    if (!data_->lookup.emplace(nm, i).second) throw std::invalid_argument("duplicate variable name '" + nm + "'");
  }
}

std::size_t Ring::nvars() const { return data_->names.size(); }
const std::vector<std::string>& Ring::names() const { return data_->names; }
const Field& Ring::field() const { return data_->field; }

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  auto it = data_->lookup.find(std::string(name));
  if (it == data_->lookup.end()) return std::nullopt;
  return it->second;
}

const std::vector<Monomial>& Ring::monomial_basis(int d) const { return data_->basis(d).list; }

std::size_t Ring::monomial_index(const Monomial& m) const {
  const auto& b = data_->basis(m.degree());
  auto it = b.index.find(m);
  if (it == b.index.end()) throw std::invalid_argument("monomial not in ring");
  return it->second;
}

std::size_t Ring::dim(int d) const {
  if (d < 0) return 0;
  if (nvars() == 0) return d == 0 ? 1 : 0;
  return static_cast<std::size_t>(binomial(nvars() + static_cast<std::size_t>(d) - 1, static_cast<std::size_t>(d)));
}

std::string Ring::monomial_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->names == b.data_->names && a.data_->field == b.data_->field;
}

// ---------------------------------------------------------------- polynomials

Poly::Poly(Ring ring, int degree) : ring_(std::move(ring)), degree_(degree) {}

Poly Poly::monomial(Ring ring, const Monomial& m, const Scalar& c) {
  Poly p(ring, m.degree());
  p.add_term(m, c);
  return p;
}

Poly Poly::variable(Ring ring, std::size_t i) {
  Monomial m = Monomial::variable(ring.nvars(), i);
  Scalar one = ring.field().one();
  return monomial(std::move(ring), m, one);
}

Poly Poly::from_vector(Ring ring, int degree, const SparseVec& v) {
  Poly p(ring, degree);
  const auto& basis = ring.monomial_basis(degree);
  for (const auto& e : v) p.terms_.emplace(basis.at(e.index), e.value);
  return p;
}

Scalar Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ring_.field().zero() : it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (m.degree() != degree_) throw std::invalid_argument("term degree differs from polynomial degree");
  if (m.nvars() != ring_.nvars()) throw std::invalid_argument("monomial from a different ring");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second = ring_.field().add(it->second, c);
  if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::scaled(const Scalar& c) const {
  Poly p(ring_, degree_);
  if (c.is_zero()) return p;
  for (const auto& [m, v] : terms_) p.terms_.emplace(m, ring_.field().mul(c, v));
  return p;
}

SparseVec Poly::to_vector() const {
  std::vector<Entry> e;
  e.reserve(terms_.size());
  for (const auto& [m, v] : terms_) e.push_back({ring_.monomial_index(m), v});
  return vec::from_pairs(ring_.field(), std::move(e));
}

Poly Poly::operator+(const Poly& other) const {
  if (!(ring_ == other.ring_)) throw std::invalid_argument("polynomials from different rings");
  if (other.degree_ != degree_ && !other.is_zero() && !is_zero())
    throw std::invalid_argument("adding polynomials of different degrees");
  if (is_zero()) return other;
  Poly p = *this;
  for (const auto& [m, v] : other.terms_) p.add_term(m, v);
  return p;
}

Poly Poly::operator-(const Poly& other) const { return *this + other.scaled(ring_.field().neg(ring_.field().one())); }

Poly Poly::operator*(const Poly& other) const {
  if (!(ring_ == other.ring_)) throw std::invalid_argument("polynomials from different rings");
  Poly p(ring_, degree_ + other.degree_);
  const Field& f = ring_.field();
  for (const auto& [m1, v1] : terms_)
    for (const auto& [m2, v2] : other.terms_) p.add_term(m1 * m2, f.mul(v1, v2));
  return p;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.ring_ == b.ring_)) return false;
  if (a.is_zero() && b.is_zero()) return true;
  if (a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [m, v] : a.terms_) {
    if (!(m == it->first) || !(v == it->second)) return false;
    ++it;
  }
  return true;
}

// ---------------------------------------------------------------- ideals

GradedIdeal::GradedIdeal(Ring ring, std::vector<Poly> generators) : ring_(std::move(ring)), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (!(g.ring() == ring_)) throw std::invalid_argument("generator from a different ring");
    if (g.is_zero()) throw std::invalid_argument("zero generator");
  }
}

bool GradedIdeal::all_quadrics() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Poly& g) { return g.degree() == 2; });
}

int GradedIdeal::min_degree() const {
  int d = -1;
  for (const auto& g : gens_) d = d < 0 ? g.degree() : std::min(d, g.degree());
  return d;
}

int GradedIdeal::max_degree() const {
  int d = -1;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

Subspace ideal_piece(const GradedIdeal& ideal, int d) {
  const Ring& R = ideal.ring();
  const Field& f = R.field();
  const std::size_t n = R.dim(d);
  std::vector<SparseVec> rows;
  for (const auto& g : ideal.generators()) {
    int e = d - g.degree();
    if (e < 0) continue;
    std::vector<std::pair<Monomial, Scalar>> terms(g.terms().begin(), g.terms().end());
    for (const auto& m : R.monomial_basis(e)) {
      std::vector<Entry> row;
      row.reserve(terms.size());
      for (const auto& [t, c] : terms) row.push_back({R.monomial_index(t * m), c});
      rows.push_back(vec::from_pairs(f, std::move(row)));
    }
  }
  return Subspace::span(f, n, rows);
}

Subspace ideal_intersect_piece(const GradedIdeal& i, const GradedIdeal& j, int d) {
  if (!(i.ring() == j.ring())) throw std::invalid_argument("ideals live in different rings");
  return intersect(ideal_piece(i, d), ideal_piece(j, d));
}

namespace {

Subspace colon_with(const Ring& R, const Subspace& upper, const Poly& l, int d) {
  const Field& f = R.field();
  std::vector<SparseVec> residuals;
  const auto& basis = R.monomial_basis(d);
  residuals.reserve(basis.size());
  for (const auto& m : basis) {
    std::vector<Entry> img;
    for (const auto& [t, c] : l.terms()) img.push_back({R.monomial_index(t * m), c});
    residuals.push_back(upper.reduce(vec::from_pairs(f, std::move(img))));
  }
  return kernel_of_images(f, R.dim(d + 1), residuals);
}

}  // namespace

Subspace colon_piece(const GradedIdeal& ideal, const Poly& l, int d) {
  if (l.is_zero() || l.degree() != 1) throw std::invalid_argument("colon requires a nonzero linear form");
  if (!(l.ring() == ideal.ring())) throw std::invalid_argument("linear form from a different ring");
  return colon_with(ideal.ring(), ideal_piece(ideal, d + 1), l, d);
}

SaturationReport saturation_check(const GradedIdeal& ideal, int up_to) {
  const Ring& R = ideal.ring();
  SaturationReport rep{up_to, {}, true};
  for (int d = 0; d <= up_to; ++d) {
    Subspace here = ideal_piece(ideal, d);
    Subspace upper = ideal_piece(ideal, d + 1);
    std::optional<Subspace> meet;
    for (std::size_t x = 0; x < R.nvars(); ++x) {
      Subspace c = colon_with(R, upper, Poly::variable(R, x), d);
      meet = meet ? intersect(*meet, c) : c;
      // The intersection always contains I_d, so it can only shrink to it.
      if (meet->dim() == here.dim()) break;
    }
    std::size_t cd = meet ? meet->dim() : R.dim(d);
    bool eq = cd == here.dim();
    rep.rows.push_back({d, here.dim(), cd, eq});
    rep.saturated = rep.saturated && eq;
  }
  return rep;
}

GradedIdeal eliminate_linear_part(const GradedIdeal& ideal) {
  const Ring& R = ideal.ring();
  const Field& f = R.field();
  std::vector<SparseVec> linear;
  for (const auto& g : ideal.generators())
    if (g.degree() == 1) linear.push_back(g.to_vector());
  if (linear.empty()) return ideal;
  Subspace L = Subspace::span(f, R.nvars(), linear);
  std::vector<bool> is_pivot(R.nvars(), false);
  for (auto p : L.pivots()) is_pivot[p] = true;
  std::vector<std::string> names;
  std::vector<std::size_t> new_index(R.nvars(), 0);
  for (std::size_t i = 0; i < R.nvars(); ++i) {
    if (is_pivot[i]) continue;
    new_index[i] = names.size();
    names.push_back(R.name(i));
  }
  Ring target(names, f);
  std::vector<Poly> images(R.nvars(), Poly(target, 1));
  for (std::size_t i = 0; i < R.nvars(); ++i)
    if (!is_pivot[i]) images[i] = Poly::variable(target, new_index[i]);
  for (const auto& row : L.basis()) {
    Poly img(target, 1);
    for (std::size_t t = 1; t < row.size(); ++t)
      img.add_term(Monomial::variable(target.nvars(), new_index[row[t].index]), f.neg(row[t].value));
    images[row.front().index] = img;
  }
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) {
    if (g.degree() <= 1) continue;
    Poly s = substitute(g, target, images);
    if (!s.is_zero()) gens.push_back(std::move(s));
  }
  return GradedIdeal(target, std::move(gens));
}

std::vector<long long> hilbert_values(const GradedIdeal& ideal, int d0, int d1) {
  std::vector<long long> out;
  if (ideal.min_degree() == 0) {
    out.assign(static_cast<std::size_t>(std::max(0, d1 - d0 + 1)), 0);
    return out;
  }
  GradedIdeal red = eliminate_linear_part(ideal);
  for (int d = d0; d <= d1; ++d) {
    long long full = static_cast<long long>(red.ring().dim(d));
    out.push_back(full - static_cast<long long>(ideal_piece(red, d).dim()));
  }
  return out;
}

std::size_t hilbert_function(const GradedIdeal& ideal, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  return static_cast<std::size_t>(hilbert_values(ideal, d, d).front());
}

DimDegreeEstimate dim_degree_estimate(std::span<const long long> h, int first_degree) {
  DimDegreeEstimate est;
  est.window_begin = first_degree;
  est.window_end = first_degree + static_cast<int>(h.size()) - 1;
  std::vector<long long> cur(h.begin(), h.end());
  int steps = 0;
  while (cur.size() >= 2) {
    if (std::all_of(cur.begin(), cur.end(), [&](long long v) { return v == cur.front(); })) {
      est.stabilized = true;
      est.steps = steps;
      if (steps == 0 && cur.front() == 0) {
        est.dimension = -1;
        est.degree = 0;
      } else {
        est.dimension = steps;
        est.degree = cur.front();
      }
      return est;
    }
    std::vector<long long> next;
    for (std::size_t i = 1; i < cur.size(); ++i) next.push_back(cur[i] - cur[i - 1]);
    cur = std::move(next);
    ++steps;
  }
  est.stabilized = false;
  est.steps = steps;
  return est;
}

// ---------------------------------------------------------------- parsing

namespace {

using Raw = std::map<std::vector<std::uint16_t>, Scalar>;

class PolyParser {
 public:
  PolyParser(const Ring& ring, std::string_view text) : ring_(ring), f_(ring.field()), s_(text) {}

  Raw parse() {
    Raw r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("syntax error at position " + std::to_string(pos_) + ": " + msg, pos_);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void add_into(Raw& acc, const Raw& r, bool negate) const {
    for (const auto& [m, c] : r) {
      Scalar v = negate ? f_.neg(c) : c;
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(m, v);
      } else {
        it->second = f_.add(it->second, v);
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }

  Raw multiply(const Raw& a, const Raw& b) const {
    Raw out;
    for (const auto& [m1, c1] : a) {
      for (const auto& [m2, c2] : b) {
        std::vector<std::uint16_t> m(m1);
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(m[i] + m2[i]);
        add_into(out, Raw{{m, f_.mul(c1, c2)}}, false);
      }
    }
    return out;
  }

  Raw constant(const Scalar& c) const {
    Raw r;
    if (!c.is_zero()) r.emplace(std::vector<std::uint16_t>(ring_.nvars(), 0), c);
    return r;
  }

  Raw expr() {
    Raw acc;
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    add_into(acc, term(), neg);
    for (;;) {
      if (accept('+'))
        add_into(acc, term(), false);
      else if (accept('-'))
        add_into(acc, term(), true);
      else
        break;
    }
    return acc;
  }

  Raw term() {
    Raw acc = power();
    while (accept('*')) acc = multiply(acc, power());
    return acc;
  }

  Raw power() {
    Raw base = primary();
    if (accept('^')) {
      skip();
      mpz_class e = integer();
      if (e > 65535) fail("exponent too large");
      Raw out = constant(f_.one());
      for (unsigned long k = e.get_ui(); k > 0; --k) out = multiply(out, base);
      return out;
    }
    return base;
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  Raw primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Raw r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      if (accept('/')) {
        std::size_t at = pos_;
        mpz_class den = integer();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        mpq_class q(num, den);
        q.canonicalize();
        try {
          return constant(f_.from_rational(q));
        } catch (const std::invalid_argument& e) {
          pos_ = at;
          fail(e.what());
        }
      }
      return constant(f_.from_mpz(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      auto idx = ring_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      std::vector<std::uint16_t> m(ring_.nvars(), 0);
      m[*idx] = 1;
      return Raw{{m, f_.one()}};
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const Ring& ring_;
  const Field& f_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const Ring& ring, std::string_view text) {
  Raw raw = PolyParser(ring, text).parse();
  std::set<int> degrees;
  for (const auto& [m, c] : raw) degrees.insert(Monomial(m).degree());
  if (degrees.size() > 1) {
    std::string msg = "inhomogeneous polynomial; terms by degree:";
    for (int d : degrees) {
      msg += " [" + std::to_string(d) + ":";
      for (const auto& [m, c] : raw)
        if (Monomial(m).degree() == d) msg += " " + ring.monomial_string(Monomial(m));
      msg += "]";
    }
    throw ParseError(msg, std::string::npos);
  }
  int deg = degrees.empty() ? 0 : *degrees.begin();
  Poly p(ring, deg);
  for (const auto& [m, c] : raw) p.add_term(Monomial(m), c);
  return p;
}

std::string print_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  const Field& f = p.ring().field();
  // Printed in lex order, which reads naturally for determinantal forms.
  std::vector<std::pair<Monomial, Scalar>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first.exponents() > b.first.exponents(); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    bool neg = f.is_negative(c);
    std::string mag = f.magnitude_string(c);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    bool unit = mag == "1";
    if (m.degree() == 0) {
      out += mag;
    } else {
      if (!unit) out += mag + "*";
      out += p.ring().monomial_string(m);
    }
  }
  return out;
}

GradedIdeal parse_ideal_text(std::string_view text, const Field& field) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Ring> ring;
  std::vector<Poly> gens;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    std::string body = line.substr(b, e - b + 1);
    if (!ring) {
      if (body.rfind("vars:", 0) != 0)
        throw ParseError("line " + std::to_string(lineno) + ": expected 'vars:' header", 0);
      std::istringstream names(body.substr(5));
      std::vector<std::string> vs;
      std::string v;
      while (names >> v) vs.push_back(v);
      if (vs.empty()) throw ParseError("line " + std::to_string(lineno) + ": no variables declared", 0);
      try {
        ring.emplace(vs, field);
      } catch (const std::invalid_argument& err) {
        throw ParseError("line " + std::to_string(lineno) + ": " + err.what(), 0);
      }
      continue;
    }
    try {
      Poly p = parse_poly(*ring, body);
      if (p.is_zero()) throw ParseError("zero generator", 0);
      gens.push_back(std::move(p));
    } catch (const ParseError& err) {
      throw ParseError("line " + std::to_string(lineno) + ": " + err.what(), err.position());
    }
  }
  if (!ring) throw ParseError("missing 'vars:' header", 0);
  return GradedIdeal(*ring, std::move(gens));
}

GradedIdeal read_ideal_file(const std::string& path, const Field& field) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ideal file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ideal_text(ss.str(), field);
}

std::string print_ideal_text(const GradedIdeal& ideal) {
  std::string out = "vars:";
  for (const auto& n : ideal.ring().names()) out += " " + n;
  out += "\n";
  for (const auto& g : ideal.generators()) out += print_poly(g) + "\n";
  return out;
}

Poly substitute(const Poly& p, const Ring& target, const std::vector<Poly>& images) {
  if (images.size() != p.ring().nvars()) throw std::invalid_argument("substitution needs one image per variable");
  int e = -1;
  for (const auto& im : images) {
    if (!(im.ring() == target)) throw std::invalid_argument("substitution image from a different ring");
    if (e < 0) e = im.degree();
    if (im.degree() != e) throw std::invalid_argument("substitution images must share one degree");
  }
  if (e < 0) e = 0;
  const Field& f = target.field();
  Poly out(target, e * p.degree());
  // Cache powers of each image.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const Poly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Poly::monomial(target, Monomial::one(target.nvars()), f.one()));
    while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * images[i]);
    return pw[static_cast<std::size_t>(k)];
  };
  for (const auto& [m, c] : p.terms()) {
    Poly t = Poly::monomial(target, Monomial::one(target.nvars()), c);
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (m[i] > 0) t = t * power(i, m[i]);
    out = out + t;
  }
  return out;
}

std::vector<Poly> polys_of(const Ring& ring, int d, const Subspace& s) {
  std::vector<Poly> out;
  for (const auto& b : s.basis()) out.push_back(Poly::from_vector(ring, d, b));
  return out;
}

}  // namespace linsyz
