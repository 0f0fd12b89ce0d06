// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "linsyz/workbench.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace linsyz;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome run_criterion(int id, const SuiteOptions& base) {
  SuiteOptions opt = base;
  opt.criteria = {id};
  auto cells = run_cells(suite_cells(opt));
  std::size_t bad = 0;
  std::string first;
  for (const auto& c : cells)
    if (!c.pass && bad++ == 0) first = c.key + ": " + c.summary;
  Outcome o{!cells.empty() && bad == 0, std::to_string(cells.size() - bad) + "/" + std::to_string(cells.size()) + " cells"};
  if (bad) o.detail += "; first failure " + first;
  return o;
}

Outcome segre_dimensions(const SuiteOptions& opt) {
  Outcome o = run_criterion(2, opt);
  for (std::size_t g = 2; g <= 6; ++g) {
    DecompositionReport r = decomposition_check_k1(g, opt.field);
    if (r.rows.size() != 1 || r.rows[0].lhs_dim != binomial(g, 2) || r.rows[0].rhs_dim != binomial(g, 2)) {
      o.pass = false;
      o.detail += "; dimension C(g,2) not met at g=" + std::to_string(g);
    }
  }
  return o;
}

std::string cli_out(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  return out.str();
}

Outcome determinism() {
  int c1 = 0, c2 = 0, c3 = 0;
  std::string a = cli_out({"verify-all", "--seed", "42"}, c1);
  std::string b = cli_out({"verify-all", "--seed", "42"}, c2);
  std::string pj = cli_out({"verify-all", "--seed", "42", "--format", "json"}, c1);
  std::string qj = cli_out({"verify-all", "--seed", "42", "--field", "65537", "--format", "json"}, c3);
  Json p = Json::parse(pj), q = Json::parse(qj);
  bool same_bytes = a == b && !a.empty();
  bool same_tables = p.at("cells") == q.at("cells");
  Outcome o{same_bytes && same_tables && c1 == 0 && c2 == 0 && c3 == 0, ""};
  o.detail = std::string("repeat ") + (same_bytes ? "identical" : "differs") + "; 65537 tables " +
             (same_tables ? "identical" : "differ") + "; " + std::to_string(p.at("cells").size()) + " cells";
  return o;
}

}  // namespace

int main() {
  SuiteOptions opt;
  opt.seed = 42;
  opt.max_degree = 5;
  opt.strand_cap = 4;

  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  auto cells = [&](int id) { return [id, &opt] { return run_criterion(id, opt); }; };
  std::vector<Criterion> criteria = {
      {1, "Gensyz_0 = hyperplane cup point, saturated, d <= 5", 5, cells(1)},
      {2, "Gensyz_1 = Segre quadric spans", 1, [&] { return segre_dimensions(opt); }},
      {3, "Gensyz_2 = point cup Grassmannian, saturated, d <= 5", 120, cells(3)},
      {4, "strand agrees with koszul kernels", 120, cells(4)},
      {5, "rank f >= p + 1", 300, cells(5)},
      {6, "cone over a linear section", 180, cells(6)},
      {7, "scrollar syzygies: degree 3, codim 2, 1-generic", 30, cells(7)},
      {8, "koszul subcomplex and rank g syzygy", 120, cells(8)},
      {9, "section ideals cut linear Grassmannians", 30, cells(9)},
      {10, "reducible syzygy scheme splits", 5, cells(10)},
      {11, "verify-all deterministic across runs and primes", 300, determinism},
  };

  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < c.limit_s;
    bool pass = o.pass && in_time;
    all = all && pass;
    char line[64];
    std::snprintf(line, sizeof line, "%s criterion %2d (%.2fs, limit %.0fs): ", pass ? "PASS" : "FAIL", c.id, secs,
                  c.limit_s);
    std::cout << line << c.name << " -- " << o.detail << (in_time ? "" : "; over time limit") << "\n";
  }
  return all ? 0 : 1;
}
