#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nsmm/frobenius.hpp"
#include "nsmm/zhu.hpp"

namespace nsmm::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kComputation = 3 };

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Check {
  int id;
  std::string title;
  bool pass = false;
  std::string detail = {};
};

/// The golden suite behind `verify`, one entry per acceptance criterion.
std::vector<Check> acceptance_checks();

// JSON encodings shared by the subcommands.
nlohmann::json to_json(const DiffOpSystem& sys);
nlohmann::json to_json(const OdeSystem& sys);
nlohmann::json to_json(const RegularSingularSystem& sys);
nlohmann::json to_json(const SeriesSolution& sol);
nlohmann::json to_json(const DiffEntry& entry);
nlohmann::json to_json(const FusionRow& row);

}  // namespace nsmm::cli
