// Runs every acceptance criterion at its stated tolerance and time budget.
// Prints one [PASS]/[FAIL] line per criterion; exits nonzero if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "qunit/entangle.hpp"
#include "qunit/symmetry.hpp"
#include "qunit/tableaux.hpp"
#include "qunit_cli/commands.hpp"

using namespace qunit;
using hilbert::Complex;
using hilbert::Matrix;
using hilbert::SpaceSpec;
using hilbert::StateVector;
using hilbert::Vector;
using tableaux::Partition;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool condition, const std::string& what) {
    if (!condition && pass) detail = what;
    pass = pass && condition;
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> body;
};

std::string fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3g", v);
  return buffer;
}

cli::Json run_json(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (code != cli::kSuccess) throw std::runtime_error("qunit exited " + std::to_string(code) + ": " + err.str());
  return cli::Json::parse(out.str());
}

StateVector state_of(const cli::Json& doc) {
  return cli::state_from_json(nlohmann::json::parse(doc.dump()));
}

StateVector ket(int n, std::initializer_list<std::pair<const char*, double>> terms) {
  std::vector<std::pair<hilbert::BasisWord, Complex>> expanded;
  int N = 0;
  for (const auto& [word, c] : terms) {
    hilbert::BasisWord w;
    for (const char* p = word; *p; ++p) w.letters.push_back(*p - '0');
    N = w.length();
    expanded.emplace_back(w, c);
  }
  return StateVector::from_terms(SpaceSpec(n, N), expanded);
}

double distance_up_to_phase(const StateVector& a, const StateVector& b) {
  const Complex overlap = b.amplitudes().dot(a.amplitudes());
  const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : 1.0;
  return (a.amplitudes() - phase * b.amplitudes()).cwiseAbs().maxCoeff();
}

double max_gram_error(const std::vector<StateVector>& states) {
  const Matrix gram = hilbert::gram_matrix(states);
  return (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

Matrix span_projector(const std::vector<StateVector>& states) {
  const auto dim = states.front().amplitudes().size();
  Matrix p = Matrix::Zero(dim, dim);
  for (const auto& s : states) p += s.amplitudes() * s.amplitudes().adjoint();
  return p;
}

Outcome bell_reproduction() {
  Outcome o;
  const cli::Json doc = run_json({"entangle", "--N", "2", "--n", "2", "--method", "paper-pairs"});
  const double r2 = 1 / std::sqrt(2.0);
  std::vector<StateVector> expected = {
      ket(2, {{"11", r2}, {"22", r2}}), ket(2, {{"11", r2}, {"22", -r2}}),
      ket(2, {{"12", r2}, {"21", r2}}), ket(2, {{"12", r2}, {"21", -r2}})};
  o.require(doc["states"].size() == 4, "state count " + std::to_string(doc["states"].size()));
  std::vector<bool> matched(expected.size(), false);
  for (const auto& s : doc["states"]) {
    const StateVector psi = state_of(s["state"]);
    bool found = false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (!matched[i] && distance_up_to_phase(psi, expected[i]) < 1e-10) matched[i] = found = true;
    }
    o.require(found, "unmatched state " + s["label"]["text"].get<std::string>());
    o.require(s["report"]["maximal"].get<bool>(), "not maximal");
    o.require(s["report"]["rdm_deviation"].get<double>() < 1e-10, "rdm deviation too large");
  }
  if (o.pass) o.detail = "4/4 Bell states, all maximal";
  return o;
}

Outcome three_qubit_tables() {
  Outcome o;
  const double r2 = 1 / std::sqrt(2.0), r3 = 1 / std::sqrt(3.0), r6 = 1 / std::sqrt(6.0);
  const std::vector<std::pair<std::string, StateVector>> table = {
      {"|3/2,3/2;1>", ket(2, {{"111", 1}})},
      {"|3/2,1/2;1>", ket(2, {{"112", r3}, {"121", r3}, {"211", r3}})},
      {"|3/2,-1/2;1>", ket(2, {{"221", r3}, {"212", r3}, {"122", r3}})},
      {"|3/2,-3/2;1>", ket(2, {{"222", 1}})},
      {"|1/2,1/2;1>", ket(2, {{"211", 2 * r6}, {"112", -r6}, {"121", -r6}})},
      {"|1/2,-1/2;1>", ket(2, {{"212", r6}, {"221", r6}, {"122", -2 * r6}})},
      {"|1/2,1/2;2>", ket(2, {{"112", r2}, {"121", -r2}})},
      {"|1/2,-1/2;2>", ket(2, {{"221", r2}, {"212", -r2}})},
  };
  const cli::Json fixtures =
      run_json({"basis", "--N", "3", "--n", "2", "--convention", "paper-fixtures"});
  o.require(fixtures["states"].size() == 8, "fixture count");
  double worst = 0.0;
  std::size_t reproduced = 0;
  for (const auto& [text, expected] : table) {
    for (const auto& s : fixtures["states"]) {
      if (s["label"]["text"] != text) continue;
      const double err = (state_of(s["state"]).amplitudes() - expected.amplitudes()).cwiseAbs().maxCoeff();
      worst = std::max(worst, err);
      reproduced += err < 1e-10;
    }
  }
  o.require(reproduced == table.size(), std::to_string(reproduced) + "/8 reproduced");

  const cli::Json canonical = run_json({"basis", "--N", "3", "--n", "2"});
  double span_distance = 0.0;
  for (int twice_j : {3, 1}) {
    std::vector<StateVector> ours, theirs;
    for (const auto& s : canonical["states"]) {
      if (std::lround(2 * s["label"]["j"].get<double>()) == twice_j) ours.push_back(state_of(s["state"]));
    }
    for (const auto& [text, v] : table) {
      if ((twice_j == 3) == (text.rfind("|3/2", 0) == 0)) theirs.push_back(v);
    }
    span_distance = std::max(span_distance,
                             (span_projector(ours) - span_projector(theirs)).cwiseAbs().maxCoeff());
  }
  o.require(span_distance < 1e-10, "span distance " + fmt(span_distance));
  if (o.pass) o.detail = "8/8 within 1e-10 (max error " + fmt(worst) + "), span distance " + fmt(span_distance);
  return o;
}

Outcome count_claims() {
  Outcome o;
  std::ostringstream detail;
  for (int N : {2, 3, 4}) {
    std::vector<StateVector> states;
    for (const auto& p : entangle::paper_pair_basis(N)) states.push_back(p.vector);
    o.require(states.size() == (std::size_t{1} << N), "paired basis N=" + std::to_string(N) + " count");
    o.require(max_gram_error(states) < 1e-10, "paired basis N=" + std::to_string(N) + " not orthonormal");
    detail << "pairs N=" << N << ":" << states.size() << " ";
  }
  const auto ghz = entangle::ghz_basis(SpaceSpec(3, 3));
  std::vector<StateVector> states;
  double worst = 0.0;
  for (const auto& g : ghz) {
    states.push_back(g.state);
    worst = std::max(worst, entangle::verify_entanglement(g.state).rdm_deviation);
  }
  o.require(ghz.size() == 27, "ghz count " + std::to_string(ghz.size()));
  o.require(max_gram_error(states) < 1e-10, "ghz not orthonormal");
  o.require(worst < 1e-9, "ghz rdm deviation " + fmt(worst));
  detail << "ghz(3,3):" << ghz.size() << " max dev " << fmt(worst);
  if (o.pass) o.detail = detail.str();
  return o;
}

Outcome schur_weyl() {
  Outcome o;
  for (int N = 1; N <= 8; ++N) {
    for (int n = 1; n <= 4; ++n) {
      const auto check = tableaux::schur_weyl_identity(N, n);
      o.require(check.holds && check.total == check.expected,
                "identity fails at N=" + std::to_string(N) + " n=" + std::to_string(n));
    }
    std::int64_t sum_squares = 0;
    for (const auto& lambda : tableaux::enumerate_partitions(N)) {
      const auto f = tableaux::hook_length_dim(lambda);
      sum_squares += f * f;
      if (N <= 6) {
        o.require(f == oracle::count_standard_fillings(lambda.parts()) &&
                      f == static_cast<std::int64_t>(tableaux::enumerate_standard_tableaux(lambda).size()),
                  "f mismatch for " + lambda.to_string());
      }
    }
    o.require(sum_squares == tableaux::factorial(N), "sum f^2 != N! at N=" + std::to_string(N));
  }
  if (o.pass) o.detail = "32 (N,n) pairs exact, SYT counts N<=6, sum f^2 = N! N<=8";
  return o;
}

Outcome projector_suite() {
  Outcome o;
  double worst_idem = 0, worst_orth = 0, worst_complete = 0, worst_young = 0;
  for (auto [n, N] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
    const SpaceSpec space(n, N);
    const auto dim = static_cast<Eigen::Index>(space.dimension());
    std::vector<Matrix> projectors;
    Matrix sum = Matrix::Zero(dim, dim);
    for (const auto& lambda : tableaux::enumerate_partitions(N)) {
      const Matrix p = symmetry::isotypic_projector(lambda, space);
      worst_idem = std::max(worst_idem, (p * p - p).cwiseAbs().maxCoeff());
      Eigen::SelfAdjointEigenSolver<Matrix> solver(p, Eigen::EigenvaluesOnly);
      const auto rank = (solver.eigenvalues().array() > 0.5).count();
      const auto expected = tableaux::hook_length_dim(lambda) * tableaux::weyl_dim(lambda, n);
      o.require(rank == expected, "rank of " + lambda.to_string() + " is " + std::to_string(rank));
      for (const auto& q : projectors) worst_orth = std::max(worst_orth, (p * q).cwiseAbs().maxCoeff());
      sum += p;
      projectors.push_back(p);
    }
    worst_complete = std::max(worst_complete, (sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff());
  }
  for (int N = 1; N <= 4; ++N) {
    const SpaceSpec space(std::max(2, N), N);
    for (const auto& lambda : tableaux::enumerate_partitions(N)) {
      const double scale = static_cast<double>(tableaux::factorial(N)) /
                           static_cast<double>(tableaux::hook_length_dim(lambda));
      for (const auto& t : tableaux::enumerate_standard_tableaux(lambda)) {
        const Matrix c = symmetry::young_symmetrizer(t, space);
        const double rel = (c * c - scale * c).cwiseAbs().maxCoeff() / (scale * c.cwiseAbs().maxCoeff());
        worst_young = std::max(worst_young, rel);
      }
    }
  }
  o.require(worst_idem < 1e-8, "idempotence " + fmt(worst_idem));
  o.require(worst_orth < 1e-8, "orthogonality " + fmt(worst_orth));
  o.require(worst_complete < 1e-10, "completeness " + fmt(worst_complete));
  o.require(worst_young < 1e-8, "young quasi-idempotence " + fmt(worst_young));
  if (o.pass) {
    o.detail = "|P^2-P| " + fmt(worst_idem) + ", |PQ| " + fmt(worst_orth) + ", |sum-I| " +
               fmt(worst_complete) + ", young rel " + fmt(worst_young);
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  double worst = 0.0;
  int states = 0;
  for (int n = 2; n <= 3; ++n) {
    for (int N = 2; N <= 4; ++N) {
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto amplitudes = oracle::random_amplitudes(n, N, 1000 * n + 100 * N + seed);
        Vector v(static_cast<Eigen::Index>(amplitudes.size()));
        for (std::size_t i = 0; i < amplitudes.size(); ++i) v[static_cast<Eigen::Index>(i)] = amplitudes[i];
        const auto report = entangle::verify_entanglement(StateVector(SpaceSpec(n, N), v));
        bool oracle_maximal = true;
        for (int p = 1; p <= N; ++p) {
          const auto rho = oracle::partial_trace_by_definition(amplitudes, n, N, {p});
          worst = std::max(worst, std::abs(report.per_particle_entropy[p - 1] - oracle::entropy_bits(rho)));
          oracle_maximal = oracle_maximal && oracle::deviation_from_identity_over_dim(rho) < 1e-8;
        }
        o.require(oracle_maximal == report.maximal, "verdict mismatch");
        ++states;
      }
    }
  }
  o.require(worst < 1e-9, "entropy disagreement " + fmt(worst));
  if (o.pass) o.detail = std::to_string(states) + " states, max entropy gap " + fmt(worst);
  return o;
}

Outcome ladder_property() {
  Outcome o;
  for (int N = 2; N <= 5; ++N) {
    const auto profile = entangle::manifold_profile(entangle::dicke_manifold(N));
    const std::size_t k = profile.size();
    o.require(k == static_cast<std::size_t>(N + 1), "profile length");
    for (std::size_t i = 0; i < k; ++i) {
      o.require(std::abs(profile[i].mean_entropy - profile[k - 1 - i].mean_entropy) < 1e-10,
                "asymmetric at N=" + std::to_string(N));
      for (std::size_t j = 0; j < k; ++j) {
        if (std::abs(profile[j].m) > std::abs(profile[i].m)) {
          o.require(profile[j].mean_entropy <= profile[i].mean_entropy + 1e-12,
                    "increasing in |m| at N=" + std::to_string(N));
        }
      }
    }
  }
  const auto three = entangle::manifold_profile(entangle::dicke_manifold(3));
  const std::vector<double> expected = {0, 0.9183, 0.9183, 0};
  std::ostringstream values;
  for (std::size_t i = 0; i < 4; ++i) {
    o.require(std::abs(three[i].mean_entropy - expected[i]) < 1e-4, "N=3 value mismatch");
    values << (i ? ", " : "") << std::fixed;
    values.precision(4);
    values << three[i].mean_entropy;
  }
  if (o.pass) o.detail = "N=3 profile [" + values.str() + "]";
  return o;
}

Outcome discrepancy_check() {
  Outcome o;
  const cli::Json doc =
      run_json({"entangle", "--N", "3", "--n", "2", "--method", "paper-pairs", "--spectra"});
  const cli::Json* target = nullptr;
  for (const auto& s : doc["states"]) {
    if (s["label"]["text"] == "|3/2,1/2;1> + |3/2,-1/2;1>") target = &s;
  }
  o.require(target != nullptr, "pair not emitted");
  if (!target) return o;
  const auto spectrum = (*target)["report"]["rdm_eigenvalues"][0].get<std::vector<double>>();
  o.require(spectrum.size() == 2 && std::abs(spectrum[0] - 5.0 / 6.0) < 1e-10 &&
                std::abs(spectrum[1] - 1.0 / 6.0) < 1e-10,
            "spectrum differs from {5/6, 1/6}");
  o.require(!(*target)["report"]["maximal"].get<bool>(), "flagged maximal");

  const StateVector psi = state_of((*target)["state"]);
  const auto& v = psi.amplitudes();
  const auto rho = oracle::partial_trace_by_definition(oracle::Amplitudes(v.data(), v.data() + v.size()), 2, 3, {1});
  const auto oracle_spectrum = oracle::hermitian_eigenvalues_jacobi(rho);
  o.require(std::abs(oracle_spectrum[0] - spectrum[0]) < 1e-10 &&
                std::abs(oracle_spectrum[1] - spectrum[1]) < 1e-10,
            "oracle disagrees");
  if (o.pass) {
    o.detail = "particle-1 eigenvalues {" + std::to_string(spectrum[0]) + ", " +
               std::to_string(spectrum[1]) + "}, oracle agrees; pair is not maximal (" +
               std::to_string(doc["summary"]["maximal_count"].get<int>()) + "/8 maximal)";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Bell reproduction", 1.0, bell_reproduction},
      {2, "Three-qubit tables", 1.0, three_qubit_tables},
      {3, "Count claims", 5.0, count_claims},
      {4, "Schur-Weyl identity", 5.0, schur_weyl},
      {5, "Projector suite", 30.0, projector_suite},
      {6, "Oracle equivalence", 30.0, oracle_equivalence},
      {7, "Ladder property", 5.0, ladder_property},
      {8, "Honest-discrepancy check", 5.0, discrepancy_check},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.budget_seconds) {
      o.pass = false;
      o.detail += " (over budget " + fmt(c.budget_seconds) + " s)";
    }
    failures += !o.pass;
    std::printf("[%s] %d %s (%.3f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
