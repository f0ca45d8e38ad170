#include "qunit/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qunit/errors.hpp"

namespace qunit::hilbert {

Permutation Permutation::identity(int N) {
  std::vector<int> image(N);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  const int N = static_cast<int>(images.size());
  std::vector<int> image(N);
  std::vector<bool> seen(N, false);
  for (int i = 0; i < N; ++i) {
    int target = images[i] - 1;
    if (target < 0 || target >= N || seen[target]) {
      throw DomainError("not a permutation of 1.." + std::to_string(N));
    }
    seen[target] = true;
    image[i] = target;
  }
  return Permutation(std::move(image));
}

Permutation Permutation::transposition(int N, int a, int b) {
  return cycle(N, {a, b});
}

Permutation Permutation::cycle(int N, const std::vector<int>& positions) {
  Permutation out = identity(N);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    int from = positions[k] - 1;
    int to = positions[(k + 1) % positions.size()] - 1;
    if (from < 0 || from >= N || to < 0 || to >= N) {
      throw DomainError("cycle position out of range 1.." + std::to_string(N));
    }
    out.image_[from] = to;
  }
  std::vector<int> check = out.image_;
  std::sort(check.begin(), check.end());
  if (std::adjacent_find(check.begin(), check.end()) != check.end()) {
    throw DomainError("cycle repeats a position");
  }
  return out;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.degree() != degree()) throw DomainError("permutation degree mismatch");
  std::vector<int> image(image_.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = image_[other.image_[i]];
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> image(image_.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[image_[i]] = static_cast<int>(i);
  return Permutation(std::move(image));
}

tableaux::Partition Permutation::cycle_type() const {
  std::vector<bool> seen(image_.size(), false);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (std::size_t i = start; !seen[i]; i = image_[i]) {
      seen[i] = true;
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return tableaux::Partition(std::move(lengths));
}

int Permutation::sign() const {
  const tableaux::Partition type = cycle_type();
  int even_cycles = 0;
  for (int length : type.parts()) even_cycles += (length % 2 == 0);
  return even_cycles % 2 == 0 ? 1 : -1;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(image_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = image_[i] + 1;
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < image_.size(); ++i) os << (i ? " " : "") << image_[i] + 1;
  os << ')';
  return os.str();
}

std::vector<Permutation> all_permutations(int N) {
  std::vector<Permutation> out;
  std::vector<int> line(N);
  std::iota(line.begin(), line.end(), 1);
  do {
    out.push_back(Permutation::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::vector<Permutation> block_stabilizer(int N, const std::vector<std::vector<int>>& blocks) {
  std::vector<Permutation> out{Permutation::identity(N)};
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Permutation> local;
    std::vector<int> arrangement = sorted;
    do {
      std::vector<int> line(N);
      std::iota(line.begin(), line.end(), 1);
      for (std::size_t k = 0; k < sorted.size(); ++k) line[sorted[k] - 1] = arrangement[k];
      local.push_back(Permutation::from_one_line(line));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));

    std::vector<Permutation> next;
    next.reserve(out.size() * local.size());
    for (const auto& a : out) {
      for (const auto& b : local) next.push_back(a * b);
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace qunit::hilbert
