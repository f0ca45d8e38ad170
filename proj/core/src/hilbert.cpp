#include "qunit/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qunit/errors.hpp"

namespace qunit::hilbert {

SpaceSpec::SpaceSpec(int levels, int particles, int max_levels)
    : levels_(levels), particles_(particles), dimension_(1) {
  if (max_levels < 2 || max_levels > kHardMaxLevels) {
    throw BoundsError("level guard must be in 2.." + std::to_string(kHardMaxLevels));
  }
  if (levels < 2 || levels > max_levels) {
    throw BoundsError("n must be in 2.." + std::to_string(max_levels) + ", got " +
                      std::to_string(levels));
  }
  if (particles < 1 || particles > kMaxParticles) {
    throw BoundsError("N must be in 1.." + std::to_string(kMaxParticles) + ", got " +
                      std::to_string(particles));
  }
  for (int k = 0; k < particles; ++k) {
    dimension_ *= static_cast<std::size_t>(levels);
    if (dimension_ > kMaxDimension) {
      throw BoundsError("n^N exceeds 2^20 for n=" + std::to_string(levels) +
                        ", N=" + std::to_string(particles));
    }
  }
}

std::size_t SpaceSpec::power(int k) const {
  std::size_t out = 1;
  for (int i = 0; i < k; ++i) out *= static_cast<std::size_t>(levels_);
  return out;
}

std::string BasisWord::to_string() const {
  bool wide = std::any_of(letters.begin(), letters.end(), [](int l) { return l > 9; });
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (wide && i) os << ',';
    os << letters[i];
  }
  return os.str();
}

std::size_t word_index(const BasisWord& word, const SpaceSpec& space) {
  if (word.length() != space.particles()) {
    throw DomainError("word " + word.to_string() + " has length " +
                      std::to_string(word.length()) + ", expected " +
                      std::to_string(space.particles()));
  }
  std::size_t index = 0;
  for (int letter : word.letters) {
    if (letter < 1 || letter > space.levels()) {
      throw DomainError("letter " + std::to_string(letter) + " outside 1.." +
                        std::to_string(space.levels()));
    }
    index = index * static_cast<std::size_t>(space.levels()) + static_cast<std::size_t>(letter - 1);
  }
  return index;
}

BasisWord index_word(std::size_t index, const SpaceSpec& space) {
  if (index >= space.dimension()) throw DomainError("basis index out of range");
  BasisWord word{std::vector<int>(space.particles())};
  const auto n = static_cast<std::size_t>(space.levels());
  for (int k = space.particles() - 1; k >= 0; --k) {
    word.letters[k] = static_cast<int>(index % n) + 1;
    index /= n;
  }
  return word;
}

StateVector::StateVector(SpaceSpec space, Vector amplitudes)
    : space_(space), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != space_.dimension()) {
    throw DomainError("amplitude count " + std::to_string(amplitudes_.size()) +
                      " does not match n^N = " + std::to_string(space_.dimension()));
  }
}

StateVector StateVector::basis(const SpaceSpec& space, const BasisWord& word) {
  Vector amplitudes = Vector::Zero(static_cast<Eigen::Index>(space.dimension()));
  amplitudes[static_cast<Eigen::Index>(word_index(word, space))] = 1.0;
  return StateVector(space, std::move(amplitudes));
}

StateVector StateVector::from_terms(const SpaceSpec& space,
                                    const std::vector<std::pair<BasisWord, Complex>>& terms) {
  Vector amplitudes = Vector::Zero(static_cast<Eigen::Index>(space.dimension()));
  for (const auto& [word, coefficient] : terms) {
    amplitudes[static_cast<Eigen::Index>(word_index(word, space))] += coefficient;
  }
  return StateVector(space, std::move(amplitudes));
}

Complex StateVector::amplitude(const BasisWord& word) const {
  return amplitudes_[static_cast<Eigen::Index>(word_index(word, space_))];
}

StateVector StateVector::normalized() const {
  double n = norm();
  if (!(n > 1e-300)) throw DomainError("cannot normalize a zero vector");
  return StateVector(space_, amplitudes_ / n);
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

std::vector<std::pair<BasisWord, Complex>> StateVector::terms(double threshold) const {
  std::vector<std::pair<BasisWord, Complex>> out;
  for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
    if (std::abs(amplitudes_[i]) > threshold) {
      out.emplace_back(index_word(static_cast<std::size_t>(i), space_), amplitudes_[i]);
    }
  }
  return out;
}

StateVector StateVector::operator+(const StateVector& other) const {
  if (!(other.space_ == space_)) throw DomainError("state spaces differ");
  return StateVector(space_, amplitudes_ + other.amplitudes_);
}

StateVector StateVector::operator-(const StateVector& other) const {
  if (!(other.space_ == space_)) throw DomainError("state spaces differ");
  return StateVector(space_, amplitudes_ - other.amplitudes_);
}

StateVector StateVector::operator*(Complex scale) const {
  return StateVector(space_, amplitudes_ * scale);
}

DensityMatrix::DensityMatrix(Matrix entries, double tol) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw NumericalError("density matrix must be square and non-empty");
  }
  double asymmetry = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > tol) {
    throw NumericalError("density matrix is not Hermitian (deviation " +
                         std::to_string(asymmetry) + ")");
  }
  Complex trace = entries_.trace();
  if (std::abs(trace - 1.0) > tol) {
    throw NumericalError("density matrix trace " + std::to_string(trace.real()) + " != 1");
  }
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_, Eigen::EigenvaluesOnly);
  Eigen::VectorXd values = solver.eigenvalues();
  return values.reverse();
}

double DensityMatrix::deviation_from_maximally_mixed() const {
  Matrix target = Matrix::Identity(dim(), dim()) / static_cast<double>(dim());
  return (entries_ - target).cwiseAbs().maxCoeff();
}

std::vector<std::size_t> permutation_index_map(const Permutation& sigma, const SpaceSpec& space) {
  const int N = space.particles();
  if (sigma.degree() != N) {
    throw DomainError("permutation of " + std::to_string(sigma.degree()) +
                      " positions applied to " + std::to_string(N) + " particles");
  }
  // stride[k] is the place value of position k in the lexicographic index.
  std::vector<std::size_t> stride(N);
  for (int k = 0; k < N; ++k) stride[k] = space.power(N - 1 - k);
  const auto n = static_cast<std::size_t>(space.levels());

  std::vector<std::size_t> map(space.dimension());
  for (std::size_t i = 0; i < map.size(); ++i) {
    std::size_t rest = i;
    std::size_t target = 0;
    for (int k = N - 1; k >= 0; --k) {
      target += (rest % n) * stride[sigma(k)];
      rest /= n;
    }
    map[i] = target;
  }
  return map;
}

StateVector apply_permutation(const Permutation& sigma, const StateVector& psi) {
  auto map = permutation_index_map(sigma, psi.space());
  Vector out(psi.amplitudes().size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    out[static_cast<Eigen::Index>(map[i])] = psi[i];
  }
  return StateVector(psi.space(), std::move(out));
}

BasisWord conjugate_word(const BasisWord& word, int levels) {
  BasisWord out = word;
  for (int& letter : out.letters) {
    if (letter < 1 || letter > levels) throw DomainError("letter outside 1..n");
    letter = levels + 1 - letter;
  }
  return out;
}

StateVector conjugate_state(const StateVector& psi) {
  // Reversing every letter maps index i to n^N - 1 - i.
  return StateVector(psi.space(), psi.amplitudes().reverse());
}

DensityMatrix reduced_density_matrix(const StateVector& psi, const std::vector<int>& keep) {
  const SpaceSpec& space = psi.space();
  const int N = space.particles();
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (kept.empty()) throw DomainError("keep set must be non-empty");
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw DomainError("keep set repeats a particle");
  }
  if (kept.front() < 1 || kept.back() > N) {
    throw DomainError("keep set must lie in 1.." + std::to_string(N));
  }
  if (static_cast<int>(kept.size()) == N) {
    throw DomainError("keep set covers every particle; nothing to trace out");
  }

  std::vector<bool> is_kept(N, false);
  for (int p : kept) is_kept[p - 1] = true;
  const auto n = static_cast<std::size_t>(space.levels());
  const std::size_t kept_dim = space.power(static_cast<int>(kept.size()));
  const std::size_t traced_dim = space.dimension() / kept_dim;

  // Reshape psi into a kept x traced matrix M; then rho = M M^dagger.
  Matrix reshaped = Matrix::Zero(static_cast<Eigen::Index>(kept_dim),
                                 static_cast<Eigen::Index>(traced_dim));
  for (std::size_t i = 0; i < space.dimension(); ++i) {
    std::size_t rest = i;
    std::size_t kept_index = 0, kept_place = 1;
    std::size_t traced_index = 0, traced_place = 1;
    for (int k = N - 1; k >= 0; --k) {
      std::size_t digit = rest % n;
      rest /= n;
      if (is_kept[k]) {
        kept_index += digit * kept_place;
        kept_place *= n;
      } else {
        traced_index += digit * traced_place;
        traced_place *= n;
      }
    }
    reshaped(static_cast<Eigen::Index>(kept_index), static_cast<Eigen::Index>(traced_index)) = psi[i];
  }
  Matrix rho = reshaped * reshaped.adjoint();
  return DensityMatrix(std::move(rho));
}

double von_neumann_entropy(const DensityMatrix& rho, double negative_tol) {
  Eigen::VectorXd values = rho.eigenvalues();
  double entropy = 0.0;
  for (double p : values) {
    if (p < -negative_tol) {
      throw NumericalError("density matrix has negative eigenvalue " + std::to_string(p));
    }
    p = std::clamp(p, 0.0, 1.0);
    if (p > 0.0) entropy -= p * std::log2(p);
  }
  return std::max(entropy, 0.0);
}

Complex inner_product(const StateVector& phi, const StateVector& psi) {
  if (!(phi.space() == psi.space())) throw DomainError("inner product of states in different spaces");
  return phi.amplitudes().dot(psi.amplitudes());
}

Matrix gram_matrix(const std::vector<StateVector>& states) {
  const auto count = static_cast<Eigen::Index>(states.size());
  if (count == 0) return Matrix(0, 0);
  Matrix stacked(states.front().amplitudes().size(), count);
  for (Eigen::Index c = 0; c < count; ++c) {
    const auto& state = states[static_cast<std::size_t>(c)];
    if (!(state.space() == states.front().space())) {
      throw DomainError("gram matrix of states in different spaces");
    }
    stacked.col(c) = state.amplitudes();
  }
  return stacked.adjoint() * stacked;
}

}  // namespace qunit::hilbert
