#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qunit/hilbert.hpp"
#include "qunit/symmetry.hpp"

namespace qunit::entangle {

using hilbert::BasisWord;
using hilbert::Complex;
using hilbert::SpaceSpec;
using hilbert::StateVector;
using symmetry::CoupledLabel;
using symmetry::CoupledState;
using tableaux::Partition;

inline constexpr int kMaxPairBasisParticles = 6;

enum class Provenance { CoupledPairing, WordPairing };

std::string to_string(Provenance provenance);

using PairSource = std::variant<std::monostate, CoupledLabel, BasisWord>;

// Normalized superposition of a state and its level-conjugate (or, for the
// coupled basis, of |j,m;d> and |j,-m;d>).
struct PairedState {
  PairSource source;
  Complex phase;
  StateVector vector;
  Provenance provenance;
};

// normalize(psi + phase * conjugate_state(psi)).
// Throws DomainError if psi is not normalized or |phase| != 1, and
// DegeneratePairError if psi is parallel to its conjugate.
PairedState pair_conjugates(const StateVector& psi, Complex phase, PairSource source = {},
                            double tol = hilbert::Tolerances{}.structural);

// 2^N states (|j,m;d> +/- |j,-m;d>)/sqrt(2) for m > 0, plus every |j,0;d>
// unpaired. Qubits only; 2 <= N <= kMaxPairBasisParticles.
std::vector<PairedState> paper_pair_basis(
    int N, symmetry::CouplingConvention convention = symmetry::CouplingConvention::Sequential);

struct GhzState {
  int phase_index;          // k: coefficient of level l is omega^(k l)
  std::vector<int> shifts;  // a_2..a_N: particle p sits in level l + a_p (mod n)
  StateVector state;

  // "k=1;a=0,2"
  std::string label() const;
};

// n^N states (1/sqrt n) sum_l omega^(k l) |l, l+a_2, ..., l+a_N>, omega = e^(2 pi i/n),
// ordered lexicographically by (k, a_2, ..., a_N).
std::vector<GhzState> ghz_basis(const SpaceSpec& space);

struct EntanglementReport {
  std::vector<double> per_particle_entropy;     // bits
  std::vector<double> per_particle_deviation;   // max |rho - I/n|
  std::vector<std::vector<double>> rdm_spectra; // descending eigenvalues
  double min_entropy = 0.0;
  double max_entropy = 0.0;
  double rdm_deviation = 0.0;                   // max over particles
  bool maximal = false;
  double tolerance_used = 0.0;
};

// maximal iff every single-particle RDM is within tol (max-abs) of I/n.
// Throws DomainError if psi is not normalized within the structural tolerance
// or has a single particle.
EntanglementReport verify_entanglement(const StateVector& psi,
                                       double tol = hilbert::Tolerances{}.verdict);

struct BipartitionEntropy {
  std::vector<int> keep;  // 1-indexed
  double entropy;
};

// Entropy of every cut, one representative per {A, complement} pair: the side
// with fewer particles, or the side holding particle 1 for equal halves.
std::vector<BipartitionEntropy> bipartition_entropies(const StateVector& psi);

struct ProfilePoint {
  double m;
  double mean_entropy;
};

// Mean single-particle entropy per m, sorted by m descending.
// Throws DomainError if the states do not share a single (j, d).
std::vector<ProfilePoint> manifold_profile(const std::vector<CoupledState>& manifold);

// Coupled states with j = N/2 (the symmetric ladder).
std::vector<CoupledState> dicke_manifold(int N);

struct CandidateReport {
  PairedState candidate;
  EntanglementReport report;
};

struct SectorReport {
  Partition lambda;
  std::int64_t dimension;
  std::int64_t expected_dimension;  // f^lambda * weyl_dim
  std::vector<StateVector> basis;
  std::vector<CandidateReport> candidates;
};

struct Decomposition {
  int n;
  int N;
  std::vector<SectorReport> sectors;
  std::int64_t total_dimension;
};

// Splits H^N into isotypic sectors. Within each sector, every basis vector is
// paired with its conjugate (phases +1 and -1), or kept as is when it is
// self-conjugate; candidates that repeat an earlier one up to phase are dropped.
// Subject to the dense projector guard.
Decomposition classify_all(const SpaceSpec& space, double tol = hilbert::Tolerances{}.verdict);

}  // namespace qunit::entangle
