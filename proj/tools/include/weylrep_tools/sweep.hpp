#pragma once

// Verification sweeps over a grid of root systems.

#include <cstdint>
#include <string>
#include <vector>

#include "weylrep_tools/io.hpp"

namespace weylrep::io {

inline constexpr int kReportSchemaVersion = 1;

struct CheckToggles {
  bool constants = true;  // Jacobi identity and structural rules of the constant table
  bool formula1 = true;   // height difference as a sum over the inversion set
  bool cocycle = true;    // Tits cocycle against the flipping-set prediction
  bool formula2 = true;   // Coxeter-number identity and F_w(R) parity
  bool fibers = true;     // constant fibers of the R/S triples
  bool c_d = true;        // character of the highest-root relation on Omega
  bool fixer = true;      // torus witness for every generic functional
};

struct SweepConfig {
  std::vector<std::string> types{"A1", "A2", "A3"};
  /// Lattice names for the fixer check; empty means every intermediate lattice.
  std::vector<std::string> lattices;
  CheckToggles checks;
  /// Largest number of group elements (or element pairs) handled exhaustively;
  /// beyond it a check switches to this many seeded samples.
  std::uint64_t budget = 200000;
  std::uint64_t seed = 1;
  std::vector<std::int64_t> field_sizes{5, 7, 13};
  int fixer_samples = 50;
  /// Optional constant-table fixture replacing the extraspecial construction.
  /// Only meaningful when the grid has a single type.
  std::string constants_file;
  int threads = 0;  // 0: hardware concurrency
};

/// Reads a config document. Unknown keys and type mismatches are errors
/// (std::invalid_argument).
SweepConfig config_from_json(const json& doc);
json config_to_json(const SweepConfig& c);

struct CheckResult {
  std::string type;
  std::string check;
  std::string mode;  // "exhaustive", "sampled", "vacuous" or "skipped"
  std::uint64_t count = 0;
  bool passed = true;
  json witness;  // replayable counterexample when !passed
  std::string note;
};

struct Report {
  SweepConfig config;
  std::vector<CheckResult> results;
  bool passed() const;
  json to_json() const;
  std::string to_text() const;
};

Report run_sweep(const SweepConfig& config);

/// The results for one root system type; run_sweep maps this over the grid.
std::vector<CheckResult> run_cell(const SweepConfig& config, const std::string& type);

/// Simple-reflection word with 1-based labels, as written in reports.
json word_json(const Word& w);
Word word_from_json(const json& j);

}  // namespace weylrep::io
