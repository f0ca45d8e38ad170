#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qunit/hilbert.hpp"
#include "qunit/symmetry.hpp"
#include "qunit_cli/state_json.hpp"

namespace qunit::cli {

// Stable process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kIdentityFailed = 1,
  kUsage = 2,
  kInputData = 3,
};

enum class Format { Json, Csv, Pretty };

struct CommandConfig {
  std::string subcommand;
  int n = 2;
  int N = 2;
  std::optional<tableaux::Partition> lambda;
  double tol = hilbert::Tolerances{}.verdict;
  double structural_tol = hilbert::Tolerances{}.structural;
  int max_levels = hilbert::kDefaultMaxLevels;
  Format format = Format::Json;
  std::optional<std::string> input_path;
  std::optional<std::string> output_path;
  std::optional<std::uint64_t> seed;
  std::string method = "ghz";
  symmetry::CouplingConvention convention = symmetry::CouplingConvention::Sequential;
  std::optional<int> copy_index;
  bool with_spectra = false;
  bool with_bipartitions = false;
};

// One rendered command result in all three formats.
struct Rendered {
  Json json;
  std::string csv;
  std::string pretty;
  int exit_code = kSuccess;
};

Rendered cmd_partitions(const CommandConfig& config);
Rendered cmd_dims(const CommandConfig& config);
Rendered cmd_characters(const CommandConfig& config);
Rendered cmd_basis(const CommandConfig& config);
Rendered cmd_entangle(const CommandConfig& config);
Rendered cmd_verify(const CommandConfig& config);
Rendered cmd_project(const CommandConfig& config);
Rendered cmd_classify(const CommandConfig& config);

// Reads and validates a state file; renormalizes when the norm is within 1e-6
// of 1, otherwise throws InputError.
hilbert::StateVector load_state(const std::string& path, int max_levels);

// Gaussian amplitudes, normalized. Deterministic for a given seed.
hilbert::StateVector random_state(const hilbert::SpaceSpec& space, std::uint64_t seed);

// Full command line (args excludes the program name). Writes the rendered
// result to out (or --output) and diagnostics to err; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qunit::cli
