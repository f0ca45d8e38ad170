#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qunit::tableaux {

inline constexpr int kMaxPartitionSize = 12;
inline constexpr int kMaxTableauSize = 8;
inline constexpr int kMaxWeylLevels = 8;

// A non-increasing tuple of positive integers. Indexes the irreducible
// representations of S_N and the symmetry sectors of H^N.
class Partition {
 public:
  // Throws DomainError unless parts is non-empty, non-increasing and positive.
  explicit Partition(std::vector<int> parts);

  // Parses "2,1" or "[2,1]".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int operator[](int row) const { return parts_[static_cast<std::size_t>(row)]; }

  // Transposed diagram.
  Partition conjugate() const;

  // "[2,1]"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Cell {
  int row;
  int col;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Cell set of a partition, 0-indexed, in row-major order.
class YoungDiagram {
 public:
  explicit YoungDiagram(Partition shape);

  const Partition& shape() const { return shape_; }
  const std::vector<Cell>& cells() const { return cells_; }

  bool contains(Cell c) const;
  int arm(Cell c) const;
  int leg(Cell c) const;
  int hook_length(Cell c) const { return arm(c) + leg(c) + 1; }
  int content(Cell c) const { return c.col - c.row; }

 private:
  Partition shape_;
  std::vector<Cell> cells_;
};

// Filling of a diagram by 1..N with strictly increasing rows and columns.
struct StandardTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  // Entries of column c, top to bottom.
  std::vector<int> column(int c) const;
  std::string to_string() const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

// All partitions of N in reverse-lexicographic order: [N] first, [1^N] last.
// Throws BoundsError unless 1 <= N <= kMaxPartitionSize.
std::vector<Partition> enumerate_partitions(int N);

// f^lambda = N! / prod(hook lengths): the dimension of the Specht module.
std::int64_t hook_length_dim(const Partition& lambda);

// Number of semistandard tableaux of shape lambda with entries in 1..n, via the
// hook content formula. Zero when lambda has more than n rows.
// Throws BoundsError unless 1 <= n <= kMaxWeylLevels.
std::int64_t weyl_dim(const Partition& lambda, int n);

struct SchurWeylTerm {
  Partition lambda;
  std::int64_t specht_dim;  // f^lambda
  std::int64_t weyl_dim;    // dim T^lambda
  std::int64_t product;
};

struct SchurWeylCheck {
  int N;
  int n;
  std::int64_t total;
  std::int64_t expected;  // n^N
  bool holds;
  std::vector<SchurWeylTerm> per_lambda;
};

// Evaluates sum_lambda f^lambda * dim T^lambda against n^N.
SchurWeylCheck schur_weyl_identity(int N, int n);

// Standard tableaux of the given shape, ordered by placing 1..N row-first.
// Throws BoundsError when N > kMaxTableauSize.
std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& lambda);

std::int64_t factorial(int k);

// Multiplies with overflow detection; throws BoundsError on overflow.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace qunit::tableaux
