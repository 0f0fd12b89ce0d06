#include "linsyz/workbench.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <map>
#include <sstream>
#include <thread>

namespace linsyz {

GradedIdeal rnc_ideal(std::size_t d, const Field& field) {
  if (d < 2) throw std::invalid_argument("rational normal curve needs d >= 2");
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= d; ++i) names.push_back("x" + std::to_string(i));
  Ring r(names, field);
  auto x = [&](std::size_t i) { return Poly::variable(r, i); };
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) gens.push_back(x(i) * x(j + 1) - x(j) * x(i + 1));
  return GradedIdeal(r, gens);
}

GradedIdeal reducible_example(const Field& field) {
  Ring r({"x0", "x1", "y"}, field);
  return GradedIdeal(r, {Poly::variable(r, 0) * Poly::variable(r, 2), Poly::variable(r, 1) * Poly::variable(r, 2)});
}

std::vector<CorpusEntry> corpus(const Field& field, const std::string& user_dir, std::vector<std::string>* diagnostics) {
  std::vector<CorpusEntry> out;
  for (std::size_t d = 3; d <= 5; ++d)
    out.push_back({"rnc" + std::to_string(d), "d=" + std::to_string(d), "rational normal curve, Hankel minors",
                   rnc_ideal(d, field)});
  for (std::size_t g = 2; g <= 5; ++g)
    out.push_back({"segre" + std::to_string(g), "g=" + std::to_string(g), "Segre P^(g-1) x P^1, 2x2 minors",
                   segre_ideal(generic_syzygy_ideal(g, 1, field))});
  out.push_back({"pluecker5", "w=5", "Grassmannian G(2,5), Pluecker quadrics", pluecker_ideal(5, field)});
  for (std::size_t g = 2; g <= 5; ++g)
    for (std::size_t k = 0; k <= 2 && k < g; ++k)
      out.push_back({"gensyz_" + std::to_string(g) + "_" + std::to_string(k),
                     "g=" + std::to_string(g) + " k=" + std::to_string(k), "generic syzygy ideal",
                     generic_syzygy_ideal(g, k, field).ideal});
  out.push_back({"reducible", "", "(x0*y, x1*y): a line and a point", reducible_example(field)});
  if (!user_dir.empty()) {
    std::vector<std::filesystem::path> files;
    std::error_code ec;
    for (const auto& e : std::filesystem::directory_iterator(user_dir, ec))
      if (e.is_regular_file() && e.path().extension() == ".ideal") files.push_back(e.path());
    if (ec && diagnostics) diagnostics->push_back("cannot read corpus directory '" + user_dir + "': " + ec.message());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      try {
        out.push_back({f.stem().string(), "", "user file " + f.filename().string(), read_ideal_file(f.string(), field)});
      } catch (const std::exception& ex) {
        if (diagnostics) diagnostics->push_back("skipping " + f.string() + ": " + ex.what());
      }
    }
  }
  return out;
}

GradedIdeal resolve_ideal(const std::string& name, const Field& field, const std::string& user_dir) {
  for (auto& e : corpus(field, user_dir))
    if (e.name == name) return e.ideal;
  if (std::filesystem::is_regular_file(name)) return read_ideal_file(name, field);
  throw std::invalid_argument("unknown ideal '" + name + "' (not a corpus name or a readable file)");
}

std::vector<Cell> run_cells(const std::vector<std::function<Cell()>>& jobs, std::size_t threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(jobs.size(), 1));
  std::vector<Cell> cells(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        cells[i] = jobs[i]();
      } catch (const std::exception& ex) {
        cells[i].pass = false;
        cells[i].summary = std::string("error: ") + ex.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.key < b.key; });
  return cells;
}

// ---------------------------------------------------------------- suite

namespace {

std::string pass_word(bool b) { return b ? "PASS" : "FAIL"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string degree_table(const DecompositionReport& r) {
  std::vector<std::string> parts;
  for (const auto& row : r.rows)
    parts.push_back("d" + std::to_string(row.degree) + " " + std::to_string(row.lhs_dim) + "/" +
                    std::to_string(row.rhs_dim));
  std::string s = join(parts, ", ");
  if (r.saturation) s += "; saturated up to " + std::to_string(r.up_to) + ": " + (r.saturation->saturated ? "yes" : "no");
  return s;
}

std::string key2(int criterion) {
  std::string n = std::to_string(criterion);
  return "c" + std::string(n.size() < 2 ? 1 : 0, '0') + n;
}

std::shared_ptr<const LinearStrand> strand_of(const GradedIdeal& I, std::size_t cap) {
  return std::make_shared<const LinearStrand>(compute_strand(I, cap));
}

}  // namespace

std::vector<std::function<Cell()>> suite_cells(const SuiteOptions& opt) {
  std::vector<std::function<Cell()>> jobs;
  auto add = [&](int criterion, std::function<Cell()> job) {
    if (opt.criteria.empty() || std::find(opt.criteria.begin(), opt.criteria.end(), criterion) != opt.criteria.end())
      jobs.push_back(std::move(job));
  };
  const Field f = opt.field;
  const int D = opt.max_degree;

  for (std::size_t g = 2; g <= 6; ++g)
    add(1, [=] {
      auto r = decomposition_check_k0(g, D, f);
      return Cell{key2(1) + "/gensyz0/g" + std::to_string(g), r.pass, degree_table(r)};
    });
  for (std::size_t g = 2; g <= 6; ++g)
    add(2, [=] {
      auto r = decomposition_check_k1(g, f);
      return Cell{key2(2) + "/gensyz1-segre/g" + std::to_string(g), r.pass, degree_table(r)};
    });
  for (std::size_t g = 3; g <= 5; ++g)
    add(3, [=] {
      auto r = grassmannian_union_check(g, D, f);
      std::string s = degree_table(r) + "; no new generators at bound: " + (r.no_new_generators_at_bound ? "yes" : "no");
      return Cell{key2(3) + "/gensyz2-grassmannian/g" + std::to_string(g), r.pass, s};
    });

  for (const auto& e : corpus(f)) {
    if (!e.ideal.all_quadrics()) continue;
    add(4, [=] {
      auto s = strand_of(e.ideal, opt.strand_cap);
      std::vector<std::string> a, b;
      bool ok = true;
      for (std::size_t p = 0; p < s->length(); ++p) {
        a.push_back(std::to_string(s->dim(p)));
        if (p == 0) continue;
        std::size_t kb = koszul_betti(e.ideal, p);
        b.push_back(std::to_string(kb));
        ok = ok && kb == s->dim(p);
      }
      return Cell{key2(4) + "/dual-strand/" + e.name, ok, "strand " + join(a, " ") + "; koszul " + join(b, " ")};
    });
    add(5, [=] {
      auto s = strand_of(e.ideal, kDefaultStrandCap);
      std::vector<std::string> parts;
      bool ok = true;
      for (std::size_t p = 1; p < s->length(); ++p) {
        std::map<std::size_t, std::size_t> hist;
        for (std::size_t i = 0; i < s->dim(p); ++i) {
          std::size_t r = involved(Syzygy::basis_element(s, p, i)).rank;
          ok = ok && r >= p + 1;
          ++hist[r];
        }
        std::vector<std::string> h;
        for (auto [r, c] : hist) h.push_back("r" + std::to_string(r) + "x" + std::to_string(c));
        if (!h.empty()) parts.push_back("p" + std::to_string(p) + " " + join(h, " "));
      }
      return Cell{key2(5) + "/rank-bound/" + e.name, ok, parts.empty() ? "no syzygies" : join(parts, "; ")};
    });
  }

  std::vector<std::pair<std::string, GradedIdeal>> cone_targets;
  for (std::size_t d = 3; d <= 5; ++d) cone_targets.emplace_back("rnc" + std::to_string(d), rnc_ideal(d, f));
  cone_targets.emplace_back("reducible", reducible_example(f));
  for (std::size_t g = 2; g <= 4; ++g)
    for (std::size_t k = 0; k <= 2 && k < g; ++k)
      cone_targets.emplace_back("gensyz_" + std::to_string(g) + "_" + std::to_string(k),
                                generic_syzygy_ideal(g, k, f).ideal);
  for (const auto& [name, I] : cone_targets)
    add(6, [=, name = name, I = I] {
      auto s = strand_of(I, opt.strand_cap);
      std::vector<std::string> parts;
      bool ok = true;
      for (std::size_t p = 1; p < s->length(); ++p) {
        std::size_t good = 0;
        for (std::size_t i = 0; i < s->dim(p); ++i) {
          ConeReport c = verify_cone(Syzygy::basis_element(s, p, i));
          good += c.pass ? 1 : 0;
        }
        ok = ok && good == s->dim(p);
        if (s->dim(p)) parts.push_back("p" + std::to_string(p) + " " + std::to_string(good) + "/" + std::to_string(s->dim(p)));
      }
      return Cell{key2(6) + "/cone/" + name, ok, parts.empty() ? "no syzygies" : join(parts, "; ")};
    });

  for (std::size_t d = 3; d <= 4; ++d)
    add(7, [=] {
      auto s = strand_of(rnc_ideal(d, f), 1);
      std::vector<std::string> parts;
      bool ok = true;
      std::size_t scrollar = 0;
      for (std::size_t i = 0; i < s->dim(1); ++i) {
        Syzygy syz = Syzygy::basis_element(s, 1, i);
        ChainLift lift = chain_lift(syz);
        if (classify_rank(1, lift.rank) != SyzygyClass::Scrollar) continue;
        ++scrollar;
        SyzygyIdealReport rep = syzygy_ideal(syz, lift, D);
        PhiMap phi = build_phi(syz, lift);
        std::vector<SparseVec> r1, r2;
        for (std::size_t j = 0; j < lift.rank; ++j) {
          r1.push_back(phi.images.row(phi.model.x_var(j)));
          r2.push_back(phi.images.row(phi.model.y_var({j})));
        }
        bool gen = is_one_generic_2xg(s->ring(), r1, r2).one_generic;
        bool good = rep.estimate.stabilized && rep.estimate.degree == 3 && rep.codimension == 2 && gen;
        ok = ok && good;
        parts.push_back("#" + std::to_string(i) + " deg " + std::to_string(rep.estimate.degree) + " codim " +
                        std::to_string(rep.codimension) + (gen ? " 1-generic" : " not 1-generic"));
      }
      ok = ok && scrollar > 0;
      return Cell{key2(7) + "/scroll/rnc" + std::to_string(d), ok, join(parts, "; ")};
    });

  for (auto [g, k] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 1}, {4, 1}, {4, 2}, {5, 2}})
    add(8, [=] {
      auto r = subkoszul_check(g, k, f);
      std::string s = "dim F_" + std::to_string(r.step) + " = " +
                      std::to_string(r.strand_dims.size() > r.step ? r.strand_dims[r.step] : 0) +
                      "; distinguished rank " + std::to_string(r.distinguished_rank) + "; involved dim " +
                      std::to_string(r.involved_dim) + "; embedded " + (r.embedded ? "yes" : "no");
      return Cell{key2(8) + "/subkoszul/g" + std::to_string(g) + "k" + std::to_string(k), r.pass, s};
    });

  for (std::size_t w = 4; w <= 5; ++w) {
    std::vector<std::vector<Scalar>> sections;
    for (std::size_t i = 0; i < w; ++i) {
      std::vector<Scalar> e(w, f.zero());
      e[i] = f.one();
      sections.push_back(e);
    }
    std::mt19937_64 rng(opt.seed + w);
    for (int t = 0; t < 5; ++t) sections.push_back(random_vector(f, rng, w));
    for (std::size_t j = 0; j < sections.size(); ++j)
      add(9, [=, s = sections[j]] {
        auto r = section_check(w, s, f, D);
        std::vector<std::string> h;
        for (auto v : r.hilbert) h.push_back(std::to_string(v));
        std::string label = j < w ? "basis" + std::to_string(j) : "random" + std::to_string(j - w);
        return Cell{key2(9) + "/section/w" + std::to_string(w) + "/" + label, r.pass,
                    "span " + std::to_string(r.span_dim) + "; h " + join(h, " ")};
      });
  }

  add(10, [=] {
    auto s = strand_of(reducible_example(f), 1);
    bool ok = false;
    std::string summary = "no rank p+1 syzygy";
    for (std::size_t i = 0; i < s->dim(1); ++i) {
      Syzygy syz = Syzygy::basis_element(s, 1, i);
      ChainLift lift = chain_lift(syz);
      if (lift.rank != 2) continue;
      ReducibleReport r = reducible_check(syz, lift, D);
      std::vector<std::string> parts;
      for (const auto& row : r.rows)
        parts.push_back("d" + std::to_string(row.degree) + " " + std::to_string(row.lhs_dim) + "/" +
                        std::to_string(row.rhs_dim));
      ok = r.pass;
      summary = "#" + std::to_string(i) + " rank 2: " + join(parts, ", ");
      break;
    }
    return Cell{key2(10) + "/reducible", ok, summary};
  });

  // Not numbered criteria: the injectivity condition on grassmannian syzygies.
  add(0, [=] {
    // Quartic basis syzygies all have rank 3; this combination has rank 4.
    auto s = strand_of(rnc_ideal(4, f), 1);
    Syzygy syz(s, 1, {{0, f.one()}, {2, f.one()}});
    ChainLift lift = chain_lift(syz);
    if (lift.rank != 4) return Cell{"x01/h0-injectivity/rnc4", false, "rank " + std::to_string(lift.rank)};
    InjectivityReport r = h0_injectivity_check(syz, lift, build_phi(syz, lift), 5, opt.seed);
    return Cell{"x01/h0-injectivity/rnc4", r.pass,
                "e0+e2 sections " + std::to_string(r.image_dims.size()) + " kernel " + std::to_string(r.kernel_dim)};
  });
  add(0, [=] {
    auto s = strand_of(rnc_ideal(5, f), 1);
    std::vector<std::string> parts;
    bool ok = true;
    for (std::size_t i = 0; i < s->dim(1); ++i) {
      Syzygy syz = Syzygy::basis_element(s, 1, i);
      ChainLift lift = chain_lift(syz);
      if (classify_rank(1, lift.rank) != SyzygyClass::Grassmannian) continue;
      InjectivityReport r = h0_injectivity_check(syz, lift, build_phi(syz, lift), 5, opt.seed);
      ok = ok && r.pass;
      parts.push_back("#" + std::to_string(i) + " sections " + std::to_string(r.image_dims.size()) + " kernel " +
                      std::to_string(r.kernel_dim));
    }
    return Cell{"x01/h0-injectivity/rnc5", ok && !parts.empty(), join(parts, "; ")};
  });
  return jobs;
}

// ---------------------------------------------------------------- rendering

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "-";
  return v.dump();
}

bool flat_object(const Json& v) {
  if (!v.is_object()) return false;
  for (const auto& [k, x] : v.items())
    if (x.is_structured()) return false;
  return true;
}

void render(const Json& obj, const std::string& indent, std::string& out) {
  for (const auto& [key, v] : obj.items()) {
    if (!v.is_structured()) {
      out += indent + key + ": " + scalar_text(v) + "\n";
      continue;
    }
    out += indent + key + ":\n";
    const std::string in = indent + "  ";
    if (v.is_object()) {
      render(v, in, out);
      continue;
    }
    if (v.empty()) {
      out += in + "(none)\n";
      continue;
    }
    bool tables = std::all_of(v.begin(), v.end(), flat_object);
    if (!tables) {
      for (const auto& x : v) {
        if (x.is_object()) {
          out += in + "-\n";
          render(x, in + "  ", out);
        } else {
          out += in + "- " + scalar_text(x) + "\n";
        }
      }
      continue;
    }
    if (v.front().size() == 2) {
      for (const auto& x : v) {
        auto it = x.begin();
        std::string a = scalar_text(*it++);
        out += in + a + ": " + scalar_text(*it) + "\n";
      }
      continue;
    }
    std::vector<std::string> cols;
    for (const auto& [k, x] : v.front().items()) cols.push_back(k);
    std::vector<std::size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    for (const auto& x : v)
      for (std::size_t c = 0; c < cols.size(); ++c)
        width[c] = std::max(width[c], scalar_text(x.value(cols[c], Json())).size());
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s = in;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        s += cells[c];
        if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
      }
      out += s + "\n";
    };
    line(cols);
    for (const auto& x : v) {
      std::vector<std::string> cells;
      for (const auto& c : cols) cells.push_back(scalar_text(x.value(c, Json())));
      line(cells);
    }
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::string out;
  render(report, "", out);
  return out;
}

// ---------------------------------------------------------------- reports

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json estimate_json(const DimDegreeEstimate& e, int codim) {
  Json j;
  j["window"] = std::to_string(e.window_begin) + ".." + std::to_string(e.window_end);
  j["stabilized"] = e.stabilized;
  if (e.stabilized) {
    j["dimension"] = e.dimension;
    j["degree"] = e.degree;
    if (codim >= 0) j["codimension"] = codim;
  } else {
    j["note"] = "window too small";
  }
  return j;
}

Json strings(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

std::vector<std::string> form_strings(const Ring& r, const std::vector<SparseVec>& forms) {
  std::vector<std::string> out;
  for (const auto& f : forms) out.push_back(linear_form_string(r, f));
  return out;
}

std::string coords_text(const Field& f, const SparseVec& v, std::size_t dim) {
  std::vector<std::string> parts;
  for (const auto& c : vec::to_dense(f, v, dim)) parts.push_back(f.to_string(c));
  return join(parts, ",");
}

SparseVec parse_coords(const Field& f, const std::string& text, std::size_t dim) {
  std::vector<Entry> e;
  std::stringstream ss(text);
  std::string tok;
  std::size_t i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= dim) throw UsageError("--coords has more than " + std::to_string(dim) + " entries");
    try {
      mpq_class q(tok);
      q.canonicalize();
      e.push_back({i, f.from_rational(q)});
    } catch (const std::invalid_argument&) {
      throw UsageError("--coords entry '" + tok + "' is not a number");
    }
    ++i;
  }
  if (i != dim) throw UsageError("--coords needs " + std::to_string(dim) + " entries");
  SparseVec v = vec::from_pairs(f, std::move(e));
  if (v.empty()) throw UsageError("--coords is the zero vector");
  return v;
}

Json header(const std::string& command, const Field& f) {
  Json j;
  j["command"] = command;
  j["field"] = f.name();
  return j;
}

std::shared_ptr<const LinearStrand> strand_for_step(const GradedIdeal& I, std::size_t step, std::size_t cap) {
  if (step > cap) throw UsageError("step " + std::to_string(step) + " exceeds --max-step " + std::to_string(cap));
  auto s = std::make_shared<const LinearStrand>(compute_strand(I, std::max<std::size_t>(step, 1)));
  if (step >= s->length() || s->dim(step) == 0)
    throw UsageError("step " + std::to_string(step) + " is out of range: F_" + std::to_string(step) + " = 0");
  return s;
}

Json strand_report(const std::string& name, const GradedIdeal& I, std::size_t cap, const Field& f) {
  LinearStrand s = compute_strand(I, cap);
  Json j = header("strand", f);
  j["ideal"] = name;
  j["cap"] = cap;
  Json betti = Json::array(), dual = Json::array();
  bool ok = true;
  for (std::size_t p = 0; p < s.length(); ++p) {
    betti.push_back({{"p", p}, {"dim", s.dim(p)}});
    if (p == 0) continue;
    std::size_t kb = koszul_betti(I, p);
    ok = ok && kb == s.dim(p);
    dual.push_back({{"p", p}, {"strand", s.dim(p)}, {"koszul", kb}, {"agree", kb == s.dim(p)}});
  }
  j["betti"] = betti;
  j["ended"] = s.ended();
  j["dual_check"] = dual;
  j["status"] = pass_word(ok);
  return j;
}

Json syzygy_row(const Syzygy& syz) {
  InvolvedData d = involved(syz);
  Json r;
  r["rank"] = d.rank;
  r["class"] = class_name(classify_rank(syz.step(), d.rank));
  r["gstar"] = join(form_strings(syz.strand().ring(), d.forms), ", ");
  return r;
}

Json syzygies_report(const std::string& name, const GradedIdeal& I, std::size_t step, std::size_t cap,
                     std::size_t samples, std::uint64_t seed, const Field& f) {
  if (step == 0) throw UsageError("--step must be at least 1");
  auto s = strand_for_step(I, step, cap);
  Json j = header("syzygies", f);
  j["ideal"] = name;
  j["step"] = step;
  j["dim"] = s->dim(step);
  Json rows = Json::array();
  for (std::size_t i = 0; i < s->dim(step); ++i) {
    Json r{{"index", i}};
    r.update(syzygy_row(Syzygy::basis_element(s, step, i)));
    rows.push_back(r);
  }
  j["basis"] = rows;
  if (samples > 0) {
    j["seed"] = seed;
    std::mt19937_64 rng(seed);
    Json sm = Json::array();
    for (std::size_t t = 0; t < samples; ++t) {
      auto v = random_vector(f, rng, s->dim(step));
      SparseVec c = vec::from_dense(v);
      Json r{{"sample", t}, {"coords", coords_text(f, c, s->dim(step))}};
      r.update(syzygy_row(Syzygy(s, step, c)));
      sm.push_back(r);
    }
    j["samples"] = sm;
  }
  j["status"] = "PASS";
  return j;
}

Syzygy select_syzygy(const std::shared_ptr<const LinearStrand>& s, std::size_t step, std::optional<std::size_t> index,
                     const std::string& coords) {
  if (!coords.empty()) return Syzygy(s, step, parse_coords(s->field(), coords, s->dim(step)));
  std::size_t i = index.value_or(0);
  if (i >= s->dim(step))
    throw UsageError("index " + std::to_string(i) + " is out of range: dim F_" + std::to_string(step) + " = " +
                     std::to_string(s->dim(step)));
  return Syzygy::basis_element(s, step, i);
}

Json syzscheme_report(const std::string& name, const GradedIdeal& I, std::size_t step, std::size_t cap,
                      std::optional<std::size_t> index, const std::string& coords, int max_degree, const Field& f) {
  if (step == 0) throw UsageError("--step must be at least 1");
  auto s = strand_for_step(I, step, cap);
  Syzygy syz = select_syzygy(s, step, index, coords);
  ChainLift lift = chain_lift(syz);
  SyzygyIdealReport rep = syzygy_ideal(syz, lift, max_degree);
  Json j = header("syzscheme", f);
  j["ideal"] = name;
  j["step"] = step;
  j["coords"] = coords_text(f, syz.coords(), s->dim(step));
  j["rank"] = lift.rank;
  j["class"] = class_name(classify_rank(step, lift.rank));
  j["gstar"] = strings(form_strings(s->ring(), lift.data.forms));
  std::vector<std::string> gens;
  for (const auto& g : rep.ideal.generators()) gens.push_back(print_poly(g));
  j["generators"] = strings(gens);
  bool inside = ideal_piece(I, 2).contains(syzygy_quadrics(syz, lift));
  j["contained_in_I2"] = inside;
  Json h = Json::array();
  for (std::size_t d = 0; d < rep.hilbert.size(); ++d) h.push_back({{"d", d}, {"h", rep.hilbert[d]}});
  j["hilbert"] = h;
  j["estimate"] = estimate_json(rep.estimate, rep.codimension);
  j["status"] = pass_word(inside && !gens.empty());
  return j;
}

Json gensyz_report(std::size_t g, std::size_t k, const Field& f) {
  GensyzModel m = generic_syzygy_ideal(g, k, f);
  Json j = header("gensyz", f);
  j["g"] = g;
  j["k"] = k;
  j["variables"] = strings(m.ring.names());
  std::vector<std::string> gens;
  for (const auto& q : m.ideal.generators()) gens.push_back(print_poly(q));
  j["generators"] = strings(gens);
  return j;
}

Json cone_report(const std::string& name, const GradedIdeal& I, std::optional<std::size_t> step,
                 std::optional<std::size_t> index, const std::string& coords, bool all, std::size_t cap,
                 const Field& f) {
  Json j = header("verify-cone", f);
  j["ideal"] = name;
  std::vector<Syzygy> targets;
  if (all) {
    auto s = std::make_shared<const LinearStrand>(compute_strand(I, cap));
    for (std::size_t p = 1; p < s->length(); ++p)
      for (std::size_t i = 0; i < s->dim(p); ++i) targets.push_back(Syzygy::basis_element(s, p, i));
  } else {
    std::size_t p = step.value_or(1);
    if (p == 0) throw UsageError("--step must be at least 1");
    auto s = strand_for_step(I, p, cap);
    targets.push_back(select_syzygy(s, p, index, coords));
  }
  Json rows = Json::array();
  bool ok = true;
  for (const auto& syz : targets) {
    ConeReport c = verify_cone(syz);
    ok = ok && c.pass;
    rows.push_back({{"step", c.step},
                    {"coords", coords_text(f, syz.coords(), syz.strand().dim(syz.step()))},
                    {"rank", c.rank},
                    {"k", c.k},
                    {"pushed", c.pushed_dim},
                    {"syzygy", c.syzygy_dim},
                    {"image", c.image_dim},
                    {"vertex", c.vertex_dim},
                    {"status", pass_word(c.pass)}});
  }
  j["checks"] = rows;
  j["status"] = pass_word(ok);
  return j;
}

Json decomposition_report(std::size_t k, std::size_t g, int max_degree, const Field& f) {
  DecompositionReport r;
  if (k == 0)
    r = decomposition_check_k0(g, max_degree, f);
  else if (k == 1)
    r = decomposition_check_k1(g, f);
  else if (k == 2)
    r = grassmannian_union_check(g, max_degree, f);
  else
    throw UsageError("verify-decomposition supports k = 0, 1, 2");
  Json j = header("verify-decomposition", f);
  j["g"] = g;
  j["k"] = k;
  j["max_degree"] = r.up_to;
  j["model"] = r.model;
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"degree", row.degree},
                    {"gensyz", row.lhs_dim},
                    {"model", row.rhs_dim},
                    {"equal", row.equal},
                    {"gensyz_new", row.lhs_new},
                    {"model_new", row.rhs_new}});
  j["degrees"] = rows;
  if (r.saturation) {
    Json sat = Json::array();
    for (const auto& row : r.saturation->rows)
      sat.push_back({{"degree", row.degree}, {"ideal", row.ideal_dim}, {"colon", row.colon_dim}, {"equal", row.equal}});
    j["saturation"] = sat;
    j["saturated_up_to_bound"] = r.saturation->saturated;
  }
  j["no_new_generators_at_bound"] = r.no_new_generators_at_bound;
  j["status"] = pass_word(r.pass);
  return j;
}

Json hilbert_report(const std::string& name, const GradedIdeal& I, int max_degree, const Field& f) {
  if (max_degree < 0) throw UsageError("--max-degree must be non-negative");
  Json j = header("hilbert", f);
  j["ideal"] = name;
  auto h = hilbert_values(I, 0, max_degree);
  Json rows = Json::array();
  for (std::size_t d = 0; d < h.size(); ++d) rows.push_back({{"d", d}, {"h", h[d]}});
  j["values"] = rows;
  if (max_degree >= 1) {
    std::span<const long long> window(h.data() + 1, h.size() - 1);
    DimDegreeEstimate e = dim_degree_estimate(window, 1);
    int codim = e.stabilized ? static_cast<int>(I.ring().nvars()) - 1 - e.dimension : -1;
    j["estimate"] = estimate_json(e, codim);
  }
  return j;
}

Json verify_all_report(const SuiteOptions& opt) {
  Json j = header("verify-all", opt.field);
  j["seed"] = opt.seed;
  j["max_degree"] = opt.max_degree;
  j["strand_cap"] = opt.strand_cap;
  auto cells = run_cells(suite_cells(opt));
  Json rows = Json::array();
  std::size_t passed = 0;
  for (const auto& c : cells) {
    passed += c.pass ? 1 : 0;
    rows.push_back({{"key", c.key}, {"status", pass_word(c.pass)}, {"summary", c.summary}});
  }
  j["cells"] = rows;
  j["passed"] = passed;
  j["failed"] = cells.size() - passed;
  j["status"] = pass_word(passed == cells.size());
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear strands, syzygy schemes and generic syzygy ideals over exact fields", "linsyz"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string field_text = std::to_string(kDefaultPrime), format = "text", corpus_dir;
  std::size_t max_step = kDefaultStrandCap;
  int max_degree = 5;
  std::uint64_t seed = 42;
  app.add_option("--field", field_text, "prime characteristic or QQ")->capture_default_str();
  app.add_option("--max-step", max_step, "strand cap")->capture_default_str();
  app.add_option("--max-degree", max_degree, "degree bound for Hilbert and decomposition checks")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for random samples and sections")->capture_default_str();
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--corpus-dir", corpus_dir, "directory of extra *.ideal files");

  std::string ideal_name;
  std::size_t step = 1, samples = 0, g = 0, k = 0;
  std::optional<std::size_t> index, step_opt;
  std::string coords;
  bool all = false;

  auto* c_strand = app.add_subcommand("strand", "Betti table of the linear strand");
  c_strand->add_option("ideal", ideal_name, "corpus name or ideal file")->required();
  auto* c_syz = app.add_subcommand("syzygies", "rank and class of the basis syzygies at one step");
  c_syz->add_option("ideal", ideal_name)->required();
  c_syz->add_option("--step", step)->required();
  c_syz->add_option("--samples", samples, "additional seeded random combinations");
  auto* c_scheme = app.add_subcommand("syzscheme", "syzygy ideal report");
  c_scheme->add_option("ideal", ideal_name)->required();
  c_scheme->add_option("--step", step)->required();
  auto* c_scheme_index = c_scheme->add_option("--index", index);
  c_scheme->add_option("--coords", coords, "comma-separated coordinates in the basis of F_p")->excludes(c_scheme_index);
  auto* c_gen = app.add_subcommand("gensyz", "generators of a generic syzygy ideal");
  c_gen->add_option("--g", g)->required();
  c_gen->add_option("--k", k)->required();
  auto* c_cone = app.add_subcommand("verify-cone", "check the cone description of syzygy schemes");
  c_cone->add_option("ideal", ideal_name)->required();
  auto* c_cone_step = c_cone->add_option("--step", step_opt);
  auto* c_cone_index = c_cone->add_option("--index", index);
  auto* c_cone_coords = c_cone->add_option("--coords", coords)->excludes(c_cone_index);
  c_cone->add_flag("--all", all, "every basis syzygy up to --max-step")
      ->excludes(c_cone_step)
      ->excludes(c_cone_index)
      ->excludes(c_cone_coords);
  auto* c_dec = app.add_subcommand("verify-decomposition", "degreewise decomposition of Gensyz_k");
  c_dec->add_option("--k", k)->required();
  c_dec->add_option("--g", g)->required();
  auto* c_all = app.add_subcommand("verify-all", "the full verification suite");
  auto* c_hilb = app.add_subcommand("hilbert", "Hilbert function and dimension estimate");
  c_hilb->add_option("ideal", ideal_name)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    Field field = Field::parse(field_text);
    auto ideal = [&] { return resolve_ideal(ideal_name, field, corpus_dir); };
    Json report;
    if (c_strand->parsed()) {
      report = strand_report(ideal_name, ideal(), max_step, field);
    } else if (c_syz->parsed()) {
      report = syzygies_report(ideal_name, ideal(), step, max_step, samples, seed, field);
    } else if (c_scheme->parsed()) {
      report = syzscheme_report(ideal_name, ideal(), step, max_step, index, coords, max_degree, field);
    } else if (c_gen->parsed()) {
      if (k >= g) throw UsageError("gensyz needs 0 <= k < g");
      report = gensyz_report(g, k, field);
    } else if (c_cone->parsed()) {
      report = cone_report(ideal_name, ideal(), step_opt, index, coords, all, max_step, field);
    } else if (c_dec->parsed()) {
      if (k == 2 && g < 3) throw UsageError("k = 2 needs g >= 3");
      if (k >= g) throw UsageError("verify-decomposition needs k < g");
      report = decomposition_report(k, g, max_degree, field);
    } else if (c_all->parsed()) {
      SuiteOptions opt;
      opt.field = field;
      opt.seed = seed;
      opt.max_degree = max_degree;
      opt.strand_cap = std::min<std::size_t>(max_step, 4);
      report = verify_all_report(opt);
    } else if (c_hilb->parsed()) {
      report = hilbert_report(ideal_name, ideal(), max_degree, field);
    }
    if (format == "json")
      out << report.dump(2) << "\n";
    else
      out << render_text(report);
    return report.value("status", std::string("PASS")) == "PASS" ? 0 : 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace linsyz
