#pragma once

// Example corpus, report assembly and the command-line front end.

#include "linsyz/gensyz.hpp"

#include <json.hpp>

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace linsyz {

using Json = nlohmann::ordered_json;

// 2x2 minors of the 2 x d Hankel matrix [[x0..x{d-1}], [x1..xd]].
GradedIdeal rnc_ideal(std::size_t d, const Field& field = Field::prime(kDefaultPrime));
// x0*y, x1*y in variables x0 x1 y.
GradedIdeal reducible_example(const Field& field = Field::prime(kDefaultPrime));

struct CorpusEntry {
  std::string name;
  std::string params;
  std::string provenance;
  GradedIdeal ideal;
};

// Built-in entries, then every *.ideal file in `user_dir` (if given).
// Malformed files are skipped with a line on `diagnostics`.
std::vector<CorpusEntry> corpus(const Field& field, const std::string& user_dir = "",
                                std::vector<std::string>* diagnostics = nullptr);
// A corpus name, or a path to an ideal file.
GradedIdeal resolve_ideal(const std::string& name, const Field& field, const std::string& user_dir = "");

struct Cell {
  std::string key;
  bool pass = false;
  std::string summary;  // dimensions and statuses only, no field-dependent data
};

// Runs the cells on a small thread pool; result sorted by key.
std::vector<Cell> run_cells(const std::vector<std::function<Cell()>>& jobs, std::size_t threads = 0);

struct SuiteOptions {
  Field field = Field::prime(kDefaultPrime);
  std::uint64_t seed = 42;
  int max_degree = 5;
  std::size_t strand_cap = 4;
  // Criterion numbers to include; empty means all, 0 the unnumbered cells.
  std::vector<int> criteria;
};

// Every acceptance cell, numbered by criterion.
std::vector<std::function<Cell()>> suite_cells(const SuiteOptions& opt);

// Text rendering of a report: scalars as "key: value", arrays of two-field
// objects as "a: b" rows, other object arrays as aligned tables.
std::string render_text(const Json& report);

// The CLI; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linsyz
