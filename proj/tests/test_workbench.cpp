#include "doctest.h"

#include "linsyz/workbench.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace linsyz;

namespace {

const Field F = Field::prime(kDefaultPrime);

struct RunResult {
  int code;
  std::string out, err;
};

RunResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

void leaves(const Json& j, std::vector<std::string>& out) {
  if (j.is_structured()) {
    for (const auto& x : j) leaves(x, out);
    return;
  }
  if (j.is_string())
    out.push_back(j.get<std::string>());
  else if (j.is_boolean())
    out.push_back(j.get<bool>() ? "yes" : "no");
  else if (!j.is_null())
    out.push_back(j.dump());
}

// Top-level keys every report carries.
void check_schema(const Json& j, const std::string& command) {
  REQUIRE(j.is_object());
  CHECK(j.at("command") == command);
  CHECK(j.at("field").is_string());
}

}  // namespace

TEST_SUITE("workbench") {
  TEST_CASE("rational normal curves") {
    CHECK(rnc_ideal(2, F).generators().size() == 1);
    CHECK(rnc_ideal(3, F).generators().size() == 3);
    CHECK(rnc_ideal(3, F).ring().nvars() == 4);
    CHECK(rnc_ideal(4, F).generators().size() == 6);
    CHECK(print_poly(rnc_ideal(2, F).generators()[0]) == "x0*x2 - x1^2");
    CHECK_THROWS(rnc_ideal(1, F));
  }

  TEST_CASE("corpus contents") {
    auto c = corpus(F);
    CHECK(c.size() >= 12);
    std::set<std::string> names;
    for (const auto& e : c) names.insert(e.name);
    CHECK(names.size() == c.size());
    for (const char* n : {"rnc3", "rnc4", "rnc5", "segre2", "segre5", "pluecker5", "gensyz_5_2", "reducible"})
      CHECK(names.count(n) == 1);
    for (const auto& e : c) {
      CAPTURE(e.name);
      GradedIdeal back = parse_ideal_text(print_ideal_text(e.ideal), F);
      CHECK(print_ideal_text(back) == print_ideal_text(e.ideal));
      CHECK(e.ideal.all_quadrics());
      CHECK(compute_strand(e.ideal, 0).dim(0) > 0);
    }
  }

  TEST_CASE("user corpus directory") {
    auto dir = std::filesystem::temp_directory_path() / "linsyz_corpus_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "good.ideal") << "vars: x y z\nx*y\ny*z\n";
    std::ofstream(dir / "bad.ideal") << "vars: x y\nx*q\n";
    std::ofstream(dir / "notes.txt") << "ignored\n";
    std::vector<std::string> diag;
    auto c = corpus(F, dir.string(), &diag);
    CHECK(c.back().name == "good");
    REQUIRE(diag.size() == 1);
    CHECK(diag[0].find("bad.ideal") != std::string::npos);
    CHECK(resolve_ideal("good", F, dir.string()).generators().size() == 2);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("resolve by name or path") {
    CHECK(resolve_ideal("rnc4", F).generators().size() == 6);
    GradedIdeal file = resolve_ideal(std::string(LINSYZ_TEST_DATA) + "/twisted_cubic.ideal", F);
    CHECK(ideal_piece(file, 2).dim() == 3);
    CHECK_THROWS_AS(resolve_ideal("no_such_ideal", F), std::invalid_argument);
  }

  TEST_CASE("work pool sorts cells and matches a serial run") {
    std::vector<std::function<Cell()>> jobs;
    for (int i = 9; i >= 0; --i)
      jobs.push_back([i] { return Cell{"k" + std::to_string(i), i % 3 != 0, std::to_string(i * i)}; });
    jobs.push_back([]() -> Cell { throw std::runtime_error("boom"); });
    auto serial = run_cells(jobs, 1), pooled = run_cells(jobs, 4);
    REQUIRE(serial.size() == pooled.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].key == pooled[i].key);
      CHECK(serial[i].summary == pooled[i].summary);
      CHECK(serial[i].pass == pooled[i].pass);
    }
    CHECK(std::is_sorted(serial.begin(), serial.end(), [](const Cell& a, const Cell& b) { return a.key < b.key; }));
    CHECK(serial.front().key.empty());
    CHECK(serial.front().summary == "error: boom");
  }

  TEST_CASE("text rendering") {
    Json j;
    j["name"] = "x";
    j["flag"] = true;
    j["list"] = {"a", "b"};
    j["pairs"] = Json::array({{{"p", 0}, {"dim", 3}}, {{"p", 1}, {"dim", 2}}});
    j["table"] = Json::array({{{"a", 1}, {"b", "long"}, {"c", false}}});
    CHECK(render_text(j) ==
          "name: x\nflag: yes\nlist:\n  - a\n  - b\npairs:\n  0: 3\n  1: 2\ntable:\n  a  b     c\n  1  long  no\n");
  }

  TEST_CASE("text and json carry the same data") {
    std::vector<std::vector<std::string>> commands = {
        {"strand", "rnc4"},
        {"syzygies", "rnc4", "--step", "2", "--samples", "2"},
        {"syzscheme", "rnc3", "--step", "1", "--index", "1"},
        {"gensyz", "--g", "3", "--k", "1"},
        {"verify-cone", "rnc3", "--all"},
        {"verify-decomposition", "--k", "0", "--g", "3", "--max-degree", "4"},
        {"hilbert", "rnc5", "--max-degree", "4"},
    };
    for (auto args : commands) {
      CAPTURE(args[0]);
      RunResult text = cli(args);
      args.push_back("--format");
      args.push_back("json");
      RunResult js = cli(args);
      CHECK(text.code == 0);
      CHECK(js.code == 0);
      Json j = Json::parse(js.out);
      check_schema(j, args[0]);
      CHECK(render_text(j) == text.out);
      std::vector<std::string> vals;
      leaves(j, vals);
      for (const auto& v : vals) CHECK(text.out.find(v) != std::string::npos);
    }
  }

  TEST_CASE("report schemas") {
    Json s = Json::parse(cli({"strand", "rnc3", "--format", "json"}).out);
    CHECK(s.at("betti").size() == 3);
    CHECK(s.at("betti")[1].at("dim") == 2);
    CHECK(s.at("status") == "PASS");
    Json c = Json::parse(cli({"verify-cone", "rnc4", "--step", "2", "--index", "1", "--format", "json"}).out);
    for (const char* key : {"step", "coords", "rank", "k", "pushed", "syzygy", "image", "vertex", "status"})
      CHECK(c.at("checks")[0].contains(key));
    Json d = Json::parse(cli({"verify-decomposition", "--k", "2", "--g", "3", "--format", "json"}).out);
    CHECK(d.at("degrees").size() == 5);
    CHECK(d.contains("saturation"));
    CHECK(d.at("status") == "PASS");
    Json h = Json::parse(cli({"hilbert", "rnc3", "--max-degree", "5", "--format", "json"}).out);
    CHECK(h.at("estimate").at("degree") == 3);
    CHECK(h.at("estimate").at("dimension") == 1);
  }

  TEST_CASE("user specified coordinates are echoed") {
    Json j = Json::parse(cli({"syzscheme", "rnc4", "--step", "1", "--coords", "1,1,0,0,0,0,0,0", "--format", "json"}).out);
    CHECK(j.at("coords") == "1,1,0,0,0,0,0,0");
    CHECK(j.at("rank").get<int>() >= 2);
  }

  TEST_CASE("verify-all is deterministic") {
    RunResult a = cli({"verify-all", "--seed", "42", "--format", "json"});
    RunResult b = cli({"verify-all", "--seed", "42", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    Json j = Json::parse(a.out);
    CHECK(j.at("seed") == 42);
    CHECK(j.at("failed") == 0);
    CHECK(j.at("cells").size() == j.at("passed").get<std::size_t>());
  }

  TEST_CASE("errors give one line and a nonzero exit") {
    std::vector<std::vector<std::string>> bad = {
        {"strand", "no_such_ideal"},
        {"syzscheme", "rnc3", "--step", "2", "--index", "0"},
        {"syzscheme", "rnc3", "--step", "1", "--index", "7"},
        {"syzscheme", "rnc3", "--step", "1", "--coords", "1,2,3"},
        {"syzygies", "rnc3", "--step", "0"},
        {"verify-cone", "rnc3", "--step", "9", "--index", "0"},
        {"gensyz", "--g", "2", "--k", "5"},
        {"strand", "rnc3", "--field", "12"},
        {"hilbert", std::string(LINSYZ_TEST_DATA) + "/missing.ideal"},
    };
    for (const auto& args : bad) {
      CAPTURE(args[0]);
      CAPTURE(args[1]);
      RunResult r = cli(args);
      CHECK(r.code != 0);
      CHECK(r.out.empty());
      CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }
    CHECK(cli({}).code != 0);
    CHECK(cli({"frobnicate"}).code != 0);
  }

  TEST_CASE("ideal files through the cli") {
    RunResult r = cli({"strand", std::string(LINSYZ_TEST_DATA) + "/twisted_cubic.ideal"});
    CHECK(r.code == 0);
    CHECK(r.out.find("  1: 2\n") != std::string::npos);
    RunResult h = cli({"hilbert", std::string(LINSYZ_TEST_DATA) + "/plane_cubic.ideal", "--max-degree", "5"});
    CHECK(h.code == 0);
    CHECK(h.out.find("  5: 15\n") != std::string::npos);
    RunResult nq = cli({"strand", std::string(LINSYZ_TEST_DATA) + "/plane_cubic.ideal"});
    CHECK(nq.code != 0);
  }
}
