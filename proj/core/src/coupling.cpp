#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "qunit/errors.hpp"
#include "qunit/symmetry.hpp"

namespace qunit::symmetry {

namespace {

using hilbert::BasisWord;
using hilbert::Vector;

struct PartialState {
  std::vector<int> path;  // doubled intermediate spins, one per coupled prefix
  int twice_m;
  Vector amplitudes;      // over 2^k words of the coupled prefix
};

// Appends one spin-1/2 to every state of a k-particle chain.
std::vector<PartialState> couple_next(const std::vector<PartialState>& previous) {
  // Index prefix states by (path, m) for lookup.
  auto find = [&](const std::vector<int>& path, int twice_m) -> const PartialState* {
    for (const auto& s : previous) {
      if (s.twice_m == twice_m && s.path == path) return &s;
    }
    return nullptr;
  };

  std::vector<std::vector<int>> paths;
  for (const auto& s : previous) {
    if (std::find(paths.begin(), paths.end(), s.path) == paths.end()) paths.push_back(s.path);
  }

  std::vector<PartialState> out;
  for (const auto& path : paths) {
    const int tj = path.back();
    for (int tJ : {tj + 1, tj - 1}) {
      if (tJ < 0) continue;
      std::vector<int> next_path = path;
      next_path.push_back(tJ);
      for (int tM = tJ; tM >= -tJ; tM -= 2) {
        // Condon-Shortley coefficients for j1 (x) 1/2 -> J.
        const double plus = std::sqrt((tj + tM + 1) / (2.0 * (tj + 1)));
        const double minus = std::sqrt((tj - tM + 1) / (2.0 * (tj + 1)));
        const double up_coeff = tJ > tj ? plus : -minus;
        const double down_coeff = tJ > tj ? minus : plus;

        const PartialState* up = find(path, tM - 1);
        const PartialState* down = find(path, tM + 1);
        const Eigen::Index half = previous.front().amplitudes.size();
        Vector v = Vector::Zero(2 * half);
        for (Eigen::Index i = 0; i < half; ++i) {
          if (up) v[2 * i] += up_coeff * up->amplitudes[i];
          if (down) v[2 * i + 1] += down_coeff * down->amplitudes[i];
        }
        out.push_back({next_path, tM, std::move(v)});
      }
    }
  }
  return out;
}

std::vector<CoupledState> sequential_basis(const SpaceSpec& space) {
  Vector up = Vector::Zero(2), down = Vector::Zero(2);
  up[0] = 1.0;
  down[1] = 1.0;
  std::vector<PartialState> chain{{{1}, 1, up}, {{1}, -1, down}};
  for (int k = 1; k < space.particles(); ++k) chain = couple_next(chain);

  // d counts distinct paths per final j, in generation order.
  std::vector<std::pair<std::vector<int>, int>> path_index;
  std::vector<CoupledState> out;
  for (auto& s : chain) {
    auto it = std::find_if(path_index.begin(), path_index.end(),
                           [&](const auto& entry) { return entry.first == s.path; });
    int d = 0;
    if (it == path_index.end()) {
      d = 1 + static_cast<int>(std::count_if(path_index.begin(), path_index.end(), [&](const auto& e) {
            return e.first.back() == s.path.back();
          }));
      path_index.emplace_back(s.path, d);
    } else {
      d = it->second;
    }
    out.push_back({{s.path.back(), s.twice_m, d}, StateVector(space, std::move(s.amplitudes))});
  }
  std::stable_sort(out.begin(), out.end(), [](const CoupledState& a, const CoupledState& b) {
    if (a.label.twice_j != b.label.twice_j) return a.label.twice_j > b.label.twice_j;
    if (a.label.d != b.label.d) return a.label.d < b.label.d;
    return a.label.twice_m > b.label.twice_m;
  });
  return out;
}

StateVector fixture(const SpaceSpec& space, double scale,
                    std::initializer_list<std::pair<const char*, double>> terms) {
  std::vector<std::pair<BasisWord, Complex>> expanded;
  for (const auto& [word, coefficient] : terms) {
    BasisWord w;
    for (const char* c = word; *c; ++c) w.letters.push_back(*c - '0');
    expanded.emplace_back(w, coefficient * scale);
  }
  return StateVector::from_terms(space, expanded);
}

std::vector<CoupledState> paper_fixture_basis(const SpaceSpec& space) {
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r6 = 1.0 / std::sqrt(6.0);
  if (space.particles() == 2) {
    return {
        {{2, 2, 1}, fixture(space, 1.0, {{"11", 1}})},
        {{2, 0, 1}, fixture(space, r2, {{"12", 1}, {"21", 1}})},
        {{2, -2, 1}, fixture(space, 1.0, {{"22", 1}})},
        {{0, 0, 1}, fixture(space, r2, {{"12", 1}, {"21", -1}})},
    };
  }
  return {
      {{3, 3, 1}, fixture(space, 1.0, {{"111", 1}})},
      {{3, 1, 1}, fixture(space, r3, {{"112", 1}, {"121", 1}, {"211", 1}})},
      {{3, -1, 1}, fixture(space, r3, {{"221", 1}, {"212", 1}, {"122", 1}})},
      {{3, -3, 1}, fixture(space, 1.0, {{"222", 1}})},
      {{1, 1, 1}, fixture(space, r6, {{"211", 2}, {"112", -1}, {"121", -1}})},
      {{1, -1, 1}, fixture(space, r6, {{"212", 1}, {"221", 1}, {"122", -2}})},
      {{1, 1, 2}, fixture(space, r2, {{"112", 1}, {"121", -1}})},
      {{1, -1, 2}, fixture(space, r2, {{"221", 1}, {"212", -1}})},
  };
}

void require_qubits(const StateVector& psi) {
  if (psi.space().levels() != 2) throw UnsupportedError("spin operators are defined for n = 2 only");
}

}  // namespace

std::string half_integer_string(int twice_value) {
  if (twice_value % 2 == 0) return std::to_string(twice_value / 2);
  return std::to_string(twice_value) + "/2";
}

std::string CoupledLabel::to_string() const {
  std::ostringstream os;
  os << '|' << half_integer_string(twice_j) << ',' << half_integer_string(twice_m) << ';' << d << '>';
  return os.str();
}

Partition coupled_partition(int N, int twice_j) {
  if (twice_j < 0 || twice_j > N || (N - twice_j) % 2 != 0) {
    throw DomainError("no spin " + half_integer_string(twice_j) + " sector for N = " +
                      std::to_string(N));
  }
  const int first = (N + twice_j) / 2;
  const int second = (N - twice_j) / 2;
  return second > 0 ? Partition({first, second}) : Partition({first});
}

int coupled_multiplicity(int N, int twice_j) {
  return static_cast<int>(tableaux::hook_length_dim(coupled_partition(N, twice_j)));
}

std::vector<CoupledState> coupled_basis(const SpaceSpec& space, CouplingConvention convention) {
  if (space.levels() != 2) {
    throw UnsupportedError("coupled |j,m;d> basis needs n = 2; use isotypic_projector for n = " +
                           std::to_string(space.levels()));
  }
  if (space.particles() < 2) throw BoundsError("coupled basis needs N >= 2");
  if (convention == CouplingConvention::PaperFixtures) {
    if (space.particles() > 3) throw UnsupportedError("paper-fixtures convention covers N <= 3 only");
    return paper_fixture_basis(space);
  }
  return sequential_basis(space);
}

StateVector total_lowering(const StateVector& psi) {
  require_qubits(psi);
  const int N = psi.space().particles();
  hilbert::Vector out = hilbert::Vector::Zero(psi.amplitudes().size());
  for (std::size_t i = 0; i < psi.space().dimension(); ++i) {
    for (int k = 0; k < N; ++k) {
      const std::size_t bit = std::size_t{1} << (N - 1 - k);
      if ((i & bit) == 0) out[static_cast<Eigen::Index>(i | bit)] += psi[i];
    }
  }
  return StateVector(psi.space(), std::move(out));
}

StateVector total_jz(const StateVector& psi) {
  require_qubits(psi);
  const int N = psi.space().particles();
  hilbert::Vector out(psi.amplitudes().size());
  for (std::size_t i = 0; i < psi.space().dimension(); ++i) {
    const int down = std::popcount(i);
    out[static_cast<Eigen::Index>(i)] = 0.5 * (N - 2 * down) * psi[i];
  }
  return StateVector(psi.space(), std::move(out));
}

}  // namespace qunit::symmetry
