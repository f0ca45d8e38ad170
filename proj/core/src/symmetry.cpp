#include "qunit/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "qunit/errors.hpp"

namespace qunit::symmetry {

namespace {

using Parts = std::vector<int>;

class CharacterMemo {
 public:
  std::optional<std::int64_t> find(const Parts& lambda, const Parts& mu) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find({lambda, mu});
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void store(const Parts& lambda, const Parts& mu, std::int64_t value) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::make_pair(lambda, mu), value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<Parts, Parts>, std::int64_t> table_;
};

CharacterMemo& memo() {
  static CharacterMemo instance;
  return instance;
}

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r from lambda
// is moving one bead from position b to b - r on an abacus, with sign
// (-1)^(beads strictly between).
std::int64_t murnaghan_nakayama(const Parts& lambda, const Parts& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  if (auto hit = memo().find(lambda, mu)) return *hit;

  const int k = static_cast<int>(lambda.size());
  std::vector<int> beta(k);
  for (int i = 0; i < k; ++i) beta[i] = lambda[i] + (k - 1 - i);

  const int r = mu.front();
  const Parts rest_mu(mu.begin() + 1, mu.end());
  std::int64_t total = 0;
  for (int i = 0; i < k; ++i) {
    const int moved = beta[i] - r;
    if (moved < 0 || std::find(beta.begin(), beta.end(), moved) != beta.end()) continue;
    int between = 0;
    for (int b : beta) between += (b > moved && b < beta[i]);

    std::vector<int> next_beta = beta;
    next_beta[i] = moved;
    std::sort(next_beta.rbegin(), next_beta.rend());
    Parts next;
    for (int j = 0; j < k; ++j) {
      int part = next_beta[j] - (k - 1 - j);
      if (part > 0) next.push_back(part);
    }
    const std::int64_t sign = (between % 2 == 0) ? 1 : -1;
    total += sign * murnaghan_nakayama(next, rest_mu);
  }
  memo().store(lambda, mu, total);
  return total;
}

void require_dense(const SpaceSpec& space) {
  if (space.particles() > kMaxDenseParticles || space.dimension() > kMaxDenseDimension) {
    throw BoundsError("dense operators limited to N <= " + std::to_string(kMaxDenseParticles) +
                      " and n^N <= " + std::to_string(kMaxDenseDimension) +
                      "; use the apply form instead");
  }
}

void require_degree(int N) {
  if (N < 1 || N > kMaxCharacterDegree) {
    throw BoundsError("symmetric group degree must be in 1.." +
                      std::to_string(kMaxCharacterDegree));
  }
}

}  // namespace

std::vector<ConjugacyClass> conjugacy_classes(int N) {
  require_degree(N);
  std::vector<ConjugacyClass> out;
  const std::int64_t order = tableaux::factorial(N);
  for (const Partition& mu : tableaux::enumerate_partitions(N)) {
    // |class| = N! / prod_i (i^m_i m_i!)
    std::map<int, int> multiplicity;
    for (int part : mu.parts()) ++multiplicity[part];
    std::int64_t centralizer = 1;
    for (auto [length, count] : multiplicity) {
      for (int c = 0; c < count; ++c) centralizer *= length;
      centralizer *= tableaux::factorial(count);
    }
    out.push_back({mu, order / centralizer});
  }
  return out;
}

std::int64_t character(const Partition& lambda, const Partition& cycle_type) {
  if (lambda.size() != cycle_type.size()) {
    throw DomainError("character of " + lambda.to_string() + " at class " +
                      cycle_type.to_string() + ": sizes differ");
  }
  require_degree(lambda.size());
  return murnaghan_nakayama(lambda.parts(), cycle_type.parts());
}

std::int64_t character(const Partition& lambda, const ConjugacyClass& cls) {
  return character(lambda, cls.cycle_type);
}

CharacterTable character_table(int N) {
  CharacterTable table{N, tableaux::enumerate_partitions(N), conjugacy_classes(N), {}};
  for (const Partition& lambda : table.irreps) {
    std::vector<std::int64_t> row;
    for (const ConjugacyClass& cls : table.classes) row.push_back(character(lambda, cls));
    table.values.push_back(std::move(row));
  }
  return table;
}

GroupAlgebraElement isotypic_element(const Partition& lambda) {
  const int N = lambda.size();
  require_degree(N);
  const double scale = static_cast<double>(tableaux::hook_length_dim(lambda)) /
                       static_cast<double>(tableaux::factorial(N));
  std::map<Parts, std::int64_t> by_class;
  GroupAlgebraElement element{N, {}};
  for (const Permutation& sigma : hilbert::all_permutations(N)) {
    const Partition type = sigma.cycle_type();
    auto it = by_class.find(type.parts());
    if (it == by_class.end()) it = by_class.emplace(type.parts(), character(lambda, type)).first;
    if (it->second != 0) element.terms.emplace_back(sigma, scale * static_cast<double>(it->second));
  }
  return element;
}

GroupAlgebraElement young_element(const tableaux::StandardTableau& tableau) {
  const int N = tableau.shape.size();
  require_degree(N);
  std::vector<std::vector<int>> columns;
  for (int c = 0; c < tableau.shape[0]; ++c) columns.push_back(tableau.column(c));
  const auto row_group = hilbert::block_stabilizer(N, tableau.rows);
  const auto column_group = hilbert::block_stabilizer(N, columns);

  GroupAlgebraElement element{N, {}};
  element.terms.reserve(row_group.size() * column_group.size());
  for (const Permutation& sigma : row_group) {
    for (const Permutation& tau : column_group) {
      element.terms.emplace_back(sigma * tau, static_cast<double>(tau.sign()));
    }
  }
  return element;
}

Matrix representation_matrix(const GroupAlgebraElement& element, const SpaceSpec& space) {
  require_dense(space);
  if (element.degree != space.particles()) throw DomainError("group algebra degree differs from N");
  const auto dim = static_cast<Eigen::Index>(space.dimension());
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& [sigma, coefficient] : element.terms) {
    const auto map = hilbert::permutation_index_map(sigma, space);
    for (std::size_t i = 0; i < map.size(); ++i) {
      out(static_cast<Eigen::Index>(map[i]), static_cast<Eigen::Index>(i)) += coefficient;
    }
  }
  return out;
}

StateVector apply_element(const GroupAlgebraElement& element, const StateVector& psi) {
  if (element.degree != psi.space().particles()) {
    throw DomainError("group algebra degree differs from N");
  }
  hilbert::Vector out = hilbert::Vector::Zero(psi.amplitudes().size());
  for (const auto& [sigma, coefficient] : element.terms) {
    const auto map = hilbert::permutation_index_map(sigma, psi.space());
    for (std::size_t i = 0; i < map.size(); ++i) {
      out[static_cast<Eigen::Index>(map[i])] += coefficient * psi[i];
    }
  }
  return StateVector(psi.space(), std::move(out));
}

Matrix isotypic_projector(const Partition& lambda, const SpaceSpec& space) {
  if (lambda.size() != space.particles()) throw DomainError("partition size differs from N");
  require_dense(space);
  return representation_matrix(isotypic_element(lambda), space);
}

StateVector apply_isotypic_projector(const Partition& lambda, const StateVector& psi) {
  if (lambda.size() != psi.space().particles()) throw DomainError("partition size differs from N");
  return apply_element(isotypic_element(lambda), psi);
}

Matrix young_symmetrizer(const tableaux::StandardTableau& tableau, const SpaceSpec& space) {
  if (tableau.shape.size() != space.particles()) throw DomainError("tableau size differs from N");
  require_dense(space);
  return representation_matrix(young_element(tableau), space);
}

double sector_membership(const StateVector& psi, const Partition& lambda) {
  const StateVector projected = apply_isotypic_projector(lambda, psi);
  return projected.amplitudes().squaredNorm();
}

std::vector<StateVector> orthonormal_columns(const Matrix& columns, const SpaceSpec& space,
                                             double drop_tol) {
  std::vector<hilbert::Vector> basis;
  for (Eigen::Index c = 0; c < columns.cols(); ++c) {
    hilbert::Vector v = columns.col(c);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) v -= b * b.dot(v);
    }
    const double residual = v.norm();
    if (residual > drop_tol) basis.push_back(v / residual);
  }
  std::vector<StateVector> out;
  out.reserve(basis.size());
  for (auto& b : basis) out.emplace_back(space, std::move(b));
  return out;
}

SectorBasis sector_basis(const Partition& lambda, const SpaceSpec& space) {
  return {lambda, orthonormal_columns(isotypic_projector(lambda, space), space), std::nullopt};
}

SectorBasis sector_copy_basis(const Partition& lambda, int copy_index, const SpaceSpec& space) {
  const auto tableaux_list = tableaux::enumerate_standard_tableaux(lambda);
  if (copy_index < 1 || copy_index > static_cast<int>(tableaux_list.size())) {
    throw DomainError("copy index must be in 1.." + std::to_string(tableaux_list.size()));
  }
  const Matrix c = young_symmetrizer(tableaux_list[copy_index - 1], space);
  return {lambda, orthonormal_columns(c, space), copy_index};
}

}  // namespace qunit::symmetry
