#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qunit/hilbert.hpp"
#include "qunit/tableaux.hpp"

namespace qunit::symmetry {

using hilbert::Complex;
using hilbert::Matrix;
using hilbert::Permutation;
using hilbert::SpaceSpec;
using hilbert::StateVector;
using tableaux::Partition;

inline constexpr int kMaxCharacterDegree = 8;
// Dense projectors are materialized only up to N = 6 and n^N = 729.
inline constexpr int kMaxDenseParticles = 6;
inline constexpr std::size_t kMaxDenseDimension = 729;

struct ConjugacyClass {
  Partition cycle_type;
  std::int64_t size;
};

// Classes of S_N, ordered like enumerate_partitions(N).
std::vector<ConjugacyClass> conjugacy_classes(int N);

// chi^lambda at the class with the given cycle type (Murnaghan-Nakayama).
// Throws DomainError if the partitions have different sizes and BoundsError
// beyond kMaxCharacterDegree. Results are memoized in a thread-safe table.
std::int64_t character(const Partition& lambda, const Partition& cycle_type);
std::int64_t character(const Partition& lambda, const ConjugacyClass& cls);

struct CharacterTable {
  int N;
  std::vector<Partition> irreps;
  std::vector<ConjugacyClass> classes;
  std::vector<std::vector<std::int64_t>> values;  // values[irrep][class]
};
CharacterTable character_table(int N);

// Formal combination sum_k c_k sigma_k in the group algebra C[S_N].
struct GroupAlgebraElement {
  int degree;
  std::vector<std::pair<Permutation, double>> terms;
};

// (f^lambda / N!) sum_sigma chi^lambda(sigma) sigma.
GroupAlgebraElement isotypic_element(const Partition& lambda);
// Row symmetrizer times column antisymmetrizer of the tableau.
GroupAlgebraElement young_element(const tableaux::StandardTableau& tableau);

// Dense matrix of the element acting on H^N through apply_permutation.
// Throws BoundsError beyond the dense guard.
Matrix representation_matrix(const GroupAlgebraElement& element, const SpaceSpec& space);
// Matrix-free action; usable up to kMaxCharacterDegree particles.
StateVector apply_element(const GroupAlgebraElement& element, const StateVector& psi);

// Projector onto the lambda-isotypic component of H^N. Rank is
// f^lambda * weyl_dim(lambda, n).
Matrix isotypic_projector(const Partition& lambda, const SpaceSpec& space);
StateVector apply_isotypic_projector(const Partition& lambda, const StateVector& psi);

// c_t with c_t^2 == (N!/f^lambda) c_t.
Matrix young_symmetrizer(const tableaux::StandardTableau& tableau, const SpaceSpec& space);

// ||P_lambda psi||^2.
double sector_membership(const StateVector& psi, const Partition& lambda);

struct SectorBasis {
  Partition lambda;
  std::vector<StateVector> vectors;
  // Set when the basis spans the single copy cut out by one standard tableau.
  std::optional<int> copy_index;
};

// Orthonormal basis of the isotypic component, obtained by Gram-Schmidt on
// P_lambda|w> over words in lexicographic order.
SectorBasis sector_basis(const Partition& lambda, const SpaceSpec& space);
// Orthonormal basis of the image of the Young symmetrizer of the copy_index-th
// standard tableau of lambda: one copy of the Weyl module.
SectorBasis sector_copy_basis(const Partition& lambda, int copy_index, const SpaceSpec& space);

// Orthonormalizes the columns of a matrix in order, dropping columns whose
// residual norm falls below drop_tol.
std::vector<StateVector> orthonormal_columns(const Matrix& columns, const SpaceSpec& space,
                                             double drop_tol = 1e-7);

// ---- Coupled |j, m; d> basis for qubit chains --------------------------------

// Spin quantum numbers are stored doubled so that half-integers stay exact.
struct CoupledLabel {
  int twice_j;
  int twice_m;
  int d;  // 1-based degenerate copy

  double j() const { return twice_j / 2.0; }
  double m() const { return twice_m / 2.0; }
  // "|3/2,-1/2;1>"
  std::string to_string() const;

  friend bool operator==(const CoupledLabel&, const CoupledLabel&) = default;
};

// "3/2", "-1", "0".
std::string half_integer_string(int twice_value);

enum class CouplingConvention {
  Sequential,     // Clebsch-Gordan chain ((1 x 2) x 3) x ..., Condon-Shortley phases
  PaperFixtures,  // literal two- and three-qubit tables, N <= 3
};

struct CoupledState {
  CoupledLabel label;
  StateVector state;
};

// Level 1 is spin up (m = +1/2), level 2 spin down. Output is ordered by j
// descending, then d ascending, then m descending. For the sequential
// convention, d enumerates coupling paths with larger intermediate spins first.
// Throws UnsupportedError for n != 2 or PaperFixtures with N > 3.
std::vector<CoupledState> coupled_basis(const SpaceSpec& space,
                                        CouplingConvention convention = CouplingConvention::Sequential);

// Number of coupled copies with total spin j: f^lambda for
// lambda = [N/2 + j, N/2 - j].
int coupled_multiplicity(int N, int twice_j);
Partition coupled_partition(int N, int twice_j);

// Total J- = sum_k sigma^-_k and J_z on qubit states.
StateVector total_lowering(const StateVector& psi);
StateVector total_jz(const StateVector& psi);

}  // namespace qunit::symmetry
