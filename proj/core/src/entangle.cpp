#include "qunit/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qunit/errors.hpp"

namespace qunit::entangle {

std::string to_string(Provenance provenance) {
  return provenance == Provenance::CoupledPairing ? "coupled-pairing" : "word-pairing";
}

PairedState pair_conjugates(const StateVector& psi, Complex phase, PairSource source, double tol) {
  if (!psi.is_normalized(tol)) throw DomainError("pair_conjugates needs a normalized state");
  if (std::abs(std::abs(phase) - 1.0) > tol) throw DomainError("pairing phase must have modulus 1");
  const StateVector partner = hilbert::conjugate_state(psi);
  if (std::abs(hilbert::inner_product(psi, partner)) > 1.0 - tol) {
    throw DegeneratePairError("state is parallel to its conjugate; pairing is degenerate");
  }
  StateVector sum = psi + partner * phase;
  const Provenance provenance = std::holds_alternative<CoupledLabel>(source)
                                    ? Provenance::CoupledPairing
                                    : Provenance::WordPairing;
  return {std::move(source), phase, sum.normalized(), provenance};
}

std::vector<PairedState> paper_pair_basis(int N, symmetry::CouplingConvention convention) {
  if (N < 2 || N > kMaxPairBasisParticles) {
    throw BoundsError("paired coupled basis needs 2 <= N <= " + std::to_string(kMaxPairBasisParticles));
  }
  const SpaceSpec space(2, N);
  const auto coupled = symmetry::coupled_basis(space, convention);
  auto lookup = [&](int twice_j, int twice_m, int d) -> const StateVector& {
    for (const auto& c : coupled) {
      if (c.label == CoupledLabel{twice_j, twice_m, d}) return c.state;
    }
    throw DomainError("coupled basis lacks a partner state");
  };

  const double r2 = 1.0 / std::numbers::sqrt2;
  std::vector<PairedState> out;
  for (const auto& c : coupled) {
    const CoupledLabel& label = c.label;
    if (label.twice_m < 0) continue;
    if (label.twice_m == 0) {
      out.push_back({label, 1.0, c.state, Provenance::CoupledPairing});
      continue;
    }
    const StateVector& partner = lookup(label.twice_j, -label.twice_m, label.d);
    for (double phase : {1.0, -1.0}) {
      out.push_back({label, phase, (c.state + partner * phase) * r2, Provenance::CoupledPairing});
    }
  }
  return out;
}

std::string GhzState::label() const {
  std::ostringstream os;
  os << "k=" << phase_index << ";a=";
  for (std::size_t i = 0; i < shifts.size(); ++i) os << (i ? "," : "") << shifts[i];
  return os.str();
}

std::vector<GhzState> ghz_basis(const SpaceSpec& space) {
  const int n = space.levels();
  const int N = space.particles();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<GhzState> out;
  out.reserve(space.dimension());

  // Enumerate (k, a_2..a_N) as the digits of a base-n counter.
  for (std::size_t label = 0; label < space.dimension(); ++label) {
    const BasisWord digits = hilbert::index_word(label, space);
    const int k = digits.letters[0] - 1;
    std::vector<int> shifts;
    for (int p = 1; p < N; ++p) shifts.push_back(digits.letters[p] - 1);

    hilbert::Vector amplitudes = hilbert::Vector::Zero(static_cast<Eigen::Index>(space.dimension()));
    for (int level = 0; level < n; ++level) {
      BasisWord word{std::vector<int>(N)};
      word.letters[0] = level + 1;
      for (int p = 1; p < N; ++p) word.letters[p] = (level + shifts[p - 1]) % n + 1;
      const double angle = 2.0 * std::numbers::pi * k * level / n;
      amplitudes[static_cast<Eigen::Index>(hilbert::word_index(word, space))] =
          scale * std::polar(1.0, angle);
    }
    out.push_back({k, std::move(shifts), StateVector(space, std::move(amplitudes))});
  }
  return out;
}

EntanglementReport verify_entanglement(const StateVector& psi, double tol) {
  if (!psi.is_normalized(hilbert::Tolerances{}.structural)) {
    throw DomainError("verify_entanglement needs a normalized state (norm " +
                      std::to_string(psi.norm()) + ")");
  }
  const int N = psi.space().particles();
  if (N < 2) throw DomainError("entanglement needs at least two particles");

  EntanglementReport report;
  report.tolerance_used = tol;
  for (int p = 1; p <= N; ++p) {
    const auto rho = hilbert::reduced_density_matrix(psi, {p});
    const double deviation = rho.deviation_from_maximally_mixed();
    const Eigen::VectorXd spectrum = rho.eigenvalues();
    report.per_particle_entropy.push_back(hilbert::von_neumann_entropy(rho));
    report.per_particle_deviation.push_back(deviation);
    report.rdm_spectra.emplace_back(spectrum.begin(), spectrum.end());
  }
  const auto& s = report.per_particle_entropy;
  report.min_entropy = *std::min_element(s.begin(), s.end());
  report.max_entropy = *std::max_element(s.begin(), s.end());
  report.rdm_deviation = *std::max_element(report.per_particle_deviation.begin(),
                                           report.per_particle_deviation.end());
  report.maximal = report.rdm_deviation < tol;
  return report;
}

std::vector<BipartitionEntropy> bipartition_entropies(const StateVector& psi) {
  const int N = psi.space().particles();
  std::vector<BipartitionEntropy> out;
  for (int size = 1; size <= N / 2; ++size) {
    std::vector<bool> chosen(N, false);
    std::fill(chosen.begin(), chosen.begin() + size, true);
    do {
      std::vector<int> keep;
      for (int p = 0; p < N; ++p) {
        if (chosen[p]) keep.push_back(p + 1);
      }
      if (2 * size == N && keep.front() != 1) continue;
      out.push_back({keep, hilbert::von_neumann_entropy(hilbert::reduced_density_matrix(psi, keep))});
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
  }
  return out;
}

std::vector<ProfilePoint> manifold_profile(const std::vector<CoupledState>& manifold) {
  if (manifold.empty()) return {};
  const CoupledLabel& first = manifold.front().label;
  std::vector<ProfilePoint> out;
  for (const auto& [label, state] : manifold) {
    if (label.twice_j != first.twice_j || label.d != first.d) {
      throw DomainError("manifold mixes " + first.to_string() + " and " + label.to_string());
    }
    const int N = state.space().particles();
    double total = 0.0;
    for (int p = 1; p <= N; ++p) {
      total += hilbert::von_neumann_entropy(hilbert::reduced_density_matrix(state, {p}));
    }
    out.push_back({label.m(), total / N});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ProfilePoint& a, const ProfilePoint& b) { return a.m > b.m; });
  return out;
}

std::vector<CoupledState> dicke_manifold(int N) {
  std::vector<CoupledState> out;
  for (auto& c : symmetry::coupled_basis(SpaceSpec(2, N))) {
    if (c.label.twice_j == N) out.push_back(std::move(c));
  }
  return out;
}

Decomposition classify_all(const SpaceSpec& space, double tol) {
  if (space.particles() < 2) throw BoundsError("classification needs N >= 2");
  Decomposition result{space.levels(), space.particles(), {}, 0};
  const double structural = hilbert::Tolerances{}.structural;
  for (const Partition& lambda : tableaux::enumerate_partitions(space.particles())) {
    SectorReport sector{lambda, 0,
                        tableaux::hook_length_dim(lambda) * tableaux::weyl_dim(lambda, space.levels()),
                        symmetry::sector_basis(lambda, space).vectors, {}};
    sector.dimension = static_cast<std::int64_t>(sector.basis.size());
    result.total_dimension += sector.dimension;

    std::vector<StateVector> kept;
    auto is_repeat = [&](const StateVector& v) {
      return std::any_of(kept.begin(), kept.end(), [&](const StateVector& k) {
        return std::abs(hilbert::inner_product(k, v)) > 1.0 - 1e-8;
      });
    };
    for (const StateVector& b : sector.basis) {
      std::vector<PairedState> candidates;
      try {
        for (double phase : {1.0, -1.0}) {
          candidates.push_back(pair_conjugates(b, phase, std::monostate{}, structural));
        }
      } catch (const DegeneratePairError&) {
        candidates = {{std::monostate{}, 1.0, b, Provenance::WordPairing}};
      }
      for (auto& candidate : candidates) {
        if (is_repeat(candidate.vector)) continue;
        kept.push_back(candidate.vector);
        EntanglementReport report = verify_entanglement(candidate.vector, tol);
        sector.candidates.push_back({std::move(candidate), std::move(report)});
      }
    }
    result.sectors.push_back(std::move(sector));
  }
  return result;
}

}  // namespace qunit::entangle
