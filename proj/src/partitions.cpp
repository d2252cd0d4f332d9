#include "pertex/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace pertex {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
  }
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> result;
  for (int part : parts_) {
    if (!result.empty() && result.back().first == part)
      ++result.back().second;
    else
      result.emplace_back(part, 1);
  }
  return result;
}

std::string Partition::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

// Builds partitions whose ordering invariant is guaranteed by construction.
class PartitionBuilder {
public:
  static Partition make(std::vector<int> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    return p;
  }
};

namespace {

// Successor in decreasing dictionary order: split the lowest entry that is
// still reducible (> 1), then refill the tail with the largest parts the new
// bound allows. Returns false once the all-ones partition is reached.
bool decrement(std::vector<int>& parts) {
  std::size_t j = parts.size();
  while (j > 0 && parts[j - 1] == 1) --j;
  if (j == 0) return false;

  int tail_sum = parts[j - 1] + static_cast<int>(parts.size() - j);
  int bound = parts[j - 1] - 1;
  parts.resize(j - 1);
  while (tail_sum >= bound) {
    parts.push_back(bound);
    tail_sum -= bound;
  }
  if (tail_sum > 0) parts.push_back(tail_sum);
  return true;
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::domain_error("cannot partition a negative integer");
  if (n == 0) return {Partition()};

  std::vector<Partition> result;
  std::vector<int> parts{n};
  do {
    result.push_back(PartitionBuilder::make(parts));
  } while (decrement(parts));
  return result;
}

namespace {

std::vector<int> normalized_parts(const std::vector<int>& allowed_parts) {
  if (allowed_parts.empty()) throw std::invalid_argument("allowed part set must be non-empty");
  std::vector<int> parts = allowed_parts;
  std::sort(parts.begin(), parts.end(), std::greater<>());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  if (parts.back() < 1) throw std::invalid_argument("allowed parts must be positive");
  return parts;
}

void descend(int remaining, std::size_t start, const std::vector<int>& allowed,
             std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(PartitionBuilder::make(current));
    return;
  }
  for (std::size_t i = start; i < allowed.size(); ++i) {
    if (allowed[i] > remaining) continue;
    current.push_back(allowed[i]);
    descend(remaining - allowed[i], i, allowed, current, out);
    current.pop_back();
  }
}

} // namespace

std::vector<Partition> enumerate_restricted(int n, const std::vector<int>& allowed_parts) {
  if (n < 0) throw std::domain_error("cannot partition a negative integer");
  std::vector<int> allowed = normalized_parts(allowed_parts);
  std::vector<Partition> result;
  std::vector<int> current;
  descend(n, 0, allowed, current, result);
  return result;
}

std::uint64_t count_partitions(int n) {
  if (n < 0) throw std::domain_error("cannot partition a negative integer");
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  return n == 0 ? 1 : count_restricted(n, all);
}

std::uint64_t count_restricted(int n, const std::vector<int>& allowed_parts) {
  if (n < 0) throw std::domain_error("cannot partition a negative integer");
  std::vector<int> allowed = normalized_parts(allowed_parts);
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part : allowed) {
    for (int m = part; m <= n; ++m)
      ways[static_cast<std::size_t>(m)] += ways[static_cast<std::size_t>(m - part)];
  }
  return ways[static_cast<std::size_t>(n)];
}

} // namespace pertex
