#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qunit/permutation.hpp"

namespace qunit::hilbert {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr int kDefaultMaxLevels = 4;
inline constexpr int kHardMaxLevels = 6;
inline constexpr int kMaxParticles = 8;
inline constexpr std::size_t kMaxDimension = std::size_t{1} << 20;

// Structural checks (normalization, Hermiticity) and maximality verdicts use
// separate tolerances.
struct Tolerances {
  double structural = 1e-10;
  double verdict = 1e-8;
};

// n levels per particle, N particles. Construction enforces 2 <= n <= max_levels
// (max_levels itself capped at kHardMaxLevels), 1 <= N <= kMaxParticles and
// n^N <= 2^20.
class SpaceSpec {
 public:
  SpaceSpec(int levels, int particles, int max_levels = kDefaultMaxLevels);

  int levels() const { return levels_; }
  int particles() const { return particles_; }
  std::size_t dimension() const { return dimension_; }
  // n^k for k <= N.
  std::size_t power(int k) const;

  friend bool operator==(const SpaceSpec& a, const SpaceSpec& b) {
    return a.levels_ == b.levels_ && a.particles_ == b.particles_;
  }

 private:
  int levels_;
  int particles_;
  std::size_t dimension_;
};

// N-tuple of 1-indexed levels, e.g. {1,1,2} for |112>.
struct BasisWord {
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  // "112"; letters above 9 are comma separated.
  std::string to_string() const;

  friend bool operator==(const BasisWord&, const BasisWord&) = default;
  friend auto operator<=>(const BasisWord&, const BasisWord&) = default;
};

// Lexicographic index with letter 1 smallest and the leftmost letter most
// significant. Throws DomainError for a wrong length or out-of-range letter.
std::size_t word_index(const BasisWord& word, const SpaceSpec& space);
BasisWord index_word(std::size_t index, const SpaceSpec& space);

// Dense amplitude vector over the n^N product basis. Immutable once built.
class StateVector {
 public:
  // Throws DomainError when the amplitude count differs from space.dimension().
  StateVector(SpaceSpec space, Vector amplitudes);

  static StateVector basis(const SpaceSpec& space, const BasisWord& word);
  // Sum of coefficient * |word>; repeated words accumulate.
  static StateVector from_terms(const SpaceSpec& space,
                                const std::vector<std::pair<BasisWord, Complex>>& terms);

  const SpaceSpec& space() const { return space_; }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex amplitude(const BasisWord& word) const;
  Complex operator[](std::size_t index) const { return amplitudes_[static_cast<Eigen::Index>(index)]; }

  double norm() const { return amplitudes_.norm(); }
  // Throws DomainError for a (numerically) zero vector.
  StateVector normalized() const;
  bool is_normalized(double tol) const;

  // Words with |amplitude| > threshold, in lexicographic order.
  std::vector<std::pair<BasisWord, Complex>> terms(double threshold = 0.0) const;

  StateVector operator+(const StateVector& other) const;
  StateVector operator-(const StateVector& other) const;
  StateVector operator*(Complex scale) const;

 private:
  SpaceSpec space_;
  Vector amplitudes_;
};

// Hermitian, unit-trace matrix over the kept particles' space.
class DensityMatrix {
 public:
  // Throws NumericalError when the matrix is not square, not Hermitian, or
  // trace differs from 1 beyond tol.
  explicit DensityMatrix(Matrix entries, double tol = Tolerances{}.structural);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }

  // Eigenvalues in descending order.
  Eigen::VectorXd eigenvalues() const;
  // max |rho_ij - delta_ij / dim|.
  double deviation_from_maximally_mixed() const;

 private:
  Matrix entries_;
};

// Particle at position k moves to position sigma(k): the amplitude of w in the
// result is the amplitude in psi of the word v with v_k = w_sigma(k).
StateVector apply_permutation(const Permutation& sigma, const StateVector& psi);

// For every basis index i, the index of U(sigma)|i>.
std::vector<std::size_t> permutation_index_map(const Permutation& sigma, const SpaceSpec& space);

// Letterwise level reversal i -> n + 1 - i.
BasisWord conjugate_word(const BasisWord& word, int levels);
StateVector conjugate_state(const StateVector& psi);

// Partial trace over the particles not in keep (1-indexed positions). Kept
// particles keep their relative order in the output basis.
// Throws DomainError if keep is empty, covers every particle, or repeats.
DensityMatrix reduced_density_matrix(const StateVector& psi, const std::vector<int>& keep);

// -sum p log2 p over eigenvalues, with eigenvalues clipped to [0, 1].
// Throws NumericalError if an eigenvalue is below -negative_tol.
double von_neumann_entropy(const DensityMatrix& rho, double negative_tol = 1e-10);

// <phi|psi> is conjugate-linear in the first argument.
Complex inner_product(const StateVector& phi, const StateVector& psi);
Matrix gram_matrix(const std::vector<StateVector>& states);

}  // namespace qunit::hilbert
