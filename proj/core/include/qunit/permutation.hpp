#pragma once

#include <string>
#include <vector>

#include "qunit/tableaux.hpp"

namespace qunit::hilbert {

// A bijection on particle positions. Stored 0-indexed; constructed and printed
// 1-indexed in one-line notation, so {2,1,3} swaps the first two particles.
class Permutation {
 public:
  static Permutation identity(int N);
  // Throws DomainError unless images is a bijection on 1..N.
  static Permutation from_one_line(const std::vector<int>& images);
  // Transposition of positions a and b (1-indexed).
  static Permutation transposition(int N, int a, int b);
  // Cycle a1 -> a2 -> ... -> ak -> a1 (1-indexed).
  static Permutation cycle(int N, const std::vector<int>& positions);

  int degree() const { return static_cast<int>(image_.size()); }
  // Image of a 0-indexed position.
  int operator()(int position) const { return image_[position]; }

  // (*this * other)(i) == (*this)(other(i)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  int sign() const;
  tableaux::Partition cycle_type() const;
  std::vector<int> one_line() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}
  std::vector<int> image_;
};

// All N! permutations in lexicographic order of their one-line notation.
std::vector<Permutation> all_permutations(int N);

// Permutations that map each block onto itself (a Young subgroup). Blocks hold
// 1-indexed positions and must be disjoint.
std::vector<Permutation> block_stabilizer(int N, const std::vector<std::vector<int>>& blocks);

}  // namespace qunit::hilbert
