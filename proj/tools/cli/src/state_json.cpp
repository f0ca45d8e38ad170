#include "qunit_cli/state_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <set>

namespace qunit::cli {

double round_sig(double value) {
  if (value == 0.0 || !std::isfinite(value)) return value == 0.0 ? 0.0 : value;
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  double rounded = std::strtod(buffer, nullptr);
  return rounded == 0.0 ? 0.0 : rounded;
}

Json partition_to_json(const tableaux::Partition& lambda) { return Json(lambda.parts()); }

Json state_to_json(const hilbert::StateVector& psi, double drop) {
  Json amplitudes = Json::array();
  for (const auto& [word, amplitude] : psi.terms(drop)) {
    amplitudes.push_back(Json{{"word", word.letters},
                              {"re", round_sig(amplitude.real())},
                              {"im", round_sig(amplitude.imag())}});
  }
  return Json{{"n", psi.space().levels()},
              {"N", psi.space().particles()},
              {"amplitudes", std::move(amplitudes)}};
}

namespace {

const nlohmann::json& require(const nlohmann::json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

int require_int(const nlohmann::json& value, const std::string& where) {
  if (!value.is_number_integer()) throw InputError(where + ": expected an integer");
  return value.get<int>();
}

double require_number(const nlohmann::json& value, const std::string& where) {
  if (!value.is_number()) throw InputError(where + ": expected a number");
  return value.get<double>();
}

}  // namespace

hilbert::StateVector state_from_json(const nlohmann::json& doc, int max_levels) {
  if (!doc.is_object()) throw InputError("state: expected a JSON object");
  const int n = require_int(require(doc, "n", "state"), "n");
  const int N = require_int(require(doc, "N", "state"), "N");
  const nlohmann::json& entries = require(doc, "amplitudes", "state");
  if (!entries.is_array()) throw InputError("amplitudes: expected an array");

  std::optional<hilbert::SpaceSpec> space;
  try {
    space.emplace(n, N, max_levels);
  } catch (const Error& e) {
    throw InputError(std::string("n/N: ") + e.what());
  }

  std::vector<std::pair<hilbert::BasisWord, hilbert::Complex>> terms;
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "amplitudes[" + std::to_string(i) + "]";
    const nlohmann::json& entry = entries[i];
    if (!entry.is_object()) throw InputError(where + ": expected an object");
    const nlohmann::json& word_json = require(entry, "word", where);
    if (!word_json.is_array()) throw InputError(where + ".word: expected an array");
    if (static_cast<int>(word_json.size()) != N) {
      throw InputError(where + ".word: length " + std::to_string(word_json.size()) +
                       " does not match N = " + std::to_string(N));
    }
    hilbert::BasisWord word;
    for (std::size_t k = 0; k < word_json.size(); ++k) {
      const std::string letter_where = where + ".word[" + std::to_string(k) + "]";
      const int letter = require_int(word_json[k], letter_where);
      if (letter < 1 || letter > n) {
        throw InputError(letter_where + ": letter " + std::to_string(letter) + " outside 1.." +
                         std::to_string(n));
      }
      word.letters.push_back(letter);
    }
    if (!seen.insert(word.letters).second) {
      throw InputError(where + ".word: repeated word " + word.to_string());
    }
    const double re = require_number(require(entry, "re", where), where + ".re");
    const double im = entry.contains("im") ? require_number(entry["im"], where + ".im") : 0.0;
    terms.emplace_back(std::move(word), hilbert::Complex(re, im));
  }
  return hilbert::StateVector::from_terms(*space, terms);
}

hilbert::StateVector parse_state_text(const std::string& text, int max_levels) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": malformed JSON");
  }
  return state_from_json(doc, max_levels);
}

Json report_to_json(const entangle::EntanglementReport& report, bool with_spectra) {
  Json entropies = Json::array();
  for (double s : report.per_particle_entropy) entropies.push_back(round_sig(s));
  Json out{{"entropies", std::move(entropies)},
           {"maximal", report.maximal},
           {"tolerance", round_sig(report.tolerance_used)},
           {"rdm_deviation", round_sig(report.rdm_deviation)}};
  if (with_spectra) {
    Json spectra = Json::array();
    for (const auto& spectrum : report.rdm_spectra) {
      Json values = Json::array();
      for (double v : spectrum) values.push_back(round_sig(v));
      spectra.push_back(std::move(values));
    }
    out["rdm_eigenvalues"] = std::move(spectra);
  }
  return out;
}

}  // namespace qunit::cli
