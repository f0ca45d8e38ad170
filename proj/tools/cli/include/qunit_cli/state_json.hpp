#pragma once

#include <string>

#include "json.hpp"
#include "qunit/entangle.hpp"
#include "qunit/errors.hpp"
#include "qunit/hilbert.hpp"

namespace qunit::cli {

// Malformed or inconsistent input data (exit code 3).
class InputError : public Error {
 public:
  using Error::Error;
};

using Json = nlohmann::ordered_json;

// Rounds to 12 significant digits and turns -0 into 0.
double round_sig(double value);

// {"n", "N", "amplitudes": [{"word": [...], "re", "im"}, ...]}. Words are
// 1-indexed; amplitudes with modulus <= drop are omitted.
Json state_to_json(const hilbert::StateVector& psi, double drop = 1e-14);

// Validates against the state schema. Errors name the offending field, e.g.
// "amplitudes[2].word[0]". Missing "im" reads as 0; repeated words are rejected.
hilbert::StateVector state_from_json(const nlohmann::json& doc,
                                     int max_levels = hilbert::kDefaultMaxLevels);

// Parses text and validates; syntax errors report line and column.
hilbert::StateVector parse_state_text(const std::string& text,
                                      int max_levels = hilbert::kDefaultMaxLevels);

// {"entropies", "maximal", "tolerance", "rdm_deviation"}, optionally followed
// by "rdm_eigenvalues".
Json report_to_json(const entangle::EntanglementReport& report, bool with_spectra = false);

Json partition_to_json(const tableaux::Partition& lambda);

}  // namespace qunit::cli
