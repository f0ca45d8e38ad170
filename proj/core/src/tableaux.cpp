#include "qunit/tableaux.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "qunit/errors.hpp"

namespace qunit::tableaux {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("partition must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive: " + to_string());
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be non-increasing: " + to_string());
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string_view rest = text;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '[')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ']')) s.remove_suffix(1);
    return s;
  };
  rest = trim(rest);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view token = trim(rest.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw DomainError("cannot parse partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> cols(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int c = 0; c < p; ++c) ++cols[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

YoungDiagram::YoungDiagram(Partition shape) : shape_(std::move(shape)) {
  for (int r = 0; r < shape_.rows(); ++r) {
    for (int c = 0; c < shape_[r]; ++c) cells_.push_back({r, c});
  }
}

bool YoungDiagram::contains(Cell c) const {
  return c.row >= 0 && c.col >= 0 && c.row < shape_.rows() && c.col < shape_[c.row];
}

int YoungDiagram::arm(Cell c) const { return shape_[c.row] - c.col - 1; }

int YoungDiagram::leg(Cell c) const {
  int below = 0;
  for (int r = c.row + 1; r < shape_.rows() && shape_[r] > c.col; ++r) ++below;
  return below;
}

std::vector<int> StandardTableau::column(int c) const {
  std::vector<int> out;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) > c) out.push_back(row[static_cast<std::size_t>(c)]);
  }
  return out;
}

std::string StandardTableau::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) os << '/';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) os << ' ';
      os << rows[r][c];
    }
  }
  return os.str();
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw BoundsError("integer overflow in dimension arithmetic");
  }
  return out;
}

std::int64_t factorial(int k) {
  if (k < 0) throw DomainError("factorial of negative number");
  std::int64_t out = 1;
  for (int i = 2; i <= k; ++i) out = checked_mul(out, i);
  return out;
}

std::vector<Partition> enumerate_partitions(int N) {
  if (N < 1 || N > kMaxPartitionSize) {
    throw BoundsError("N must be in 1.." + std::to_string(kMaxPartitionSize) + ", got " +
                      std::to_string(N));
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(prefix);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      prefix.push_back(p);
      recurse(remaining - p, p);
      prefix.pop_back();
    }
  };
  recurse(N, N);
  return out;
}

std::int64_t hook_length_dim(const Partition& lambda) {
  if (lambda.size() > kMaxPartitionSize) {
    throw BoundsError("partition size exceeds " + std::to_string(kMaxPartitionSize));
  }
  YoungDiagram diagram(lambda);
  std::int64_t hooks = 1;
  for (const Cell& c : diagram.cells()) hooks = checked_mul(hooks, diagram.hook_length(c));
  return factorial(lambda.size()) / hooks;
}

std::int64_t weyl_dim(const Partition& lambda, int n) {
  if (n < 1 || n > kMaxWeylLevels) {
    throw BoundsError("n must be in 1.." + std::to_string(kMaxWeylLevels) + ", got " +
                      std::to_string(n));
  }
  if (lambda.size() > kMaxPartitionSize) {
    throw BoundsError("partition size exceeds " + std::to_string(kMaxPartitionSize));
  }
  if (lambda.rows() > n) return 0;
  YoungDiagram diagram(lambda);
  std::int64_t numerator = 1;
  std::int64_t hooks = 1;
  for (const Cell& c : diagram.cells()) {
    numerator = checked_mul(numerator, n + diagram.content(c));
    hooks = checked_mul(hooks, diagram.hook_length(c));
  }
  return numerator / hooks;
}

SchurWeylCheck schur_weyl_identity(int N, int n) {
  SchurWeylCheck check{N, n, 0, 1, false, {}};
  for (const Partition& lambda : enumerate_partitions(N)) {
    std::int64_t f = hook_length_dim(lambda);
    std::int64_t d = weyl_dim(lambda, n);
    std::int64_t product = checked_mul(f, d);
    check.total += product;
    check.per_lambda.push_back({lambda, f, d, product});
  }
  for (int i = 0; i < N; ++i) check.expected = checked_mul(check.expected, n);
  check.holds = check.total == check.expected;
  return check;
}

std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& lambda) {
  if (lambda.size() > kMaxTableauSize) {
    throw BoundsError("standard tableau enumeration limited to N <= " +
                      std::to_string(kMaxTableauSize));
  }
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.rows()));
  const int N = lambda.size();
  std::function<void(int)> place = [&](int next) {
    if (next > N) {
      out.push_back({lambda, rows});
      return;
    }
    for (int r = 0; r < lambda.rows(); ++r) {
      auto len = static_cast<int>(rows[static_cast<std::size_t>(r)].size());
      if (len >= lambda[r]) continue;
      if (r > 0 && static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size()) <= len) continue;
      rows[static_cast<std::size_t>(r)].push_back(next);
      place(next + 1);
      rows[static_cast<std::size_t>(r)].pop_back();
    }
  };
  place(1);
  return out;
}

}  // namespace qunit::tableaux
