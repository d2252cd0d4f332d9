#ifndef PERTEX_PARTITIONS_HPP
#define PERTEX_PARTITIONS_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace pertex {

// Multiset of positive integers in non-increasing order. The default
// instance is the empty partition of 0.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts); // validates ordering and positivity

  const std::vector<int>& parts() const { return parts_; }
  int total() const;
  std::size_t count() const { return parts_.size(); }

  // (part, multiplicity) pairs, largest part first.
  std::vector<std::pair<int, int>> multiplicities() const;

  std::string str() const; // "[3,2,1]", "[]" for the empty partition
  friend std::ostream& operator<<(std::ostream& os, const Partition& p);

  // Lexicographic on the part sequence; enumeration order is descending
  // under this comparison.
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  friend class PartitionBuilder;
  std::vector<int> parts_;
};

// All partitions of n in decreasing dictionary order: the first part decides
// rank, ties fall to later parts. n = 0 yields the single empty partition.
// Throws std::domain_error for negative n.
std::vector<Partition> enumerate_partitions(int n);

// Partitions of n using only the given parts, decreasing dictionary order.
// The allowed set must be non-empty; duplicates are ignored. An empty result
// is valid (no partition exists).
std::vector<Partition> enumerate_restricted(int n, const std::vector<int>& allowed_parts);

std::uint64_t count_partitions(int n);
std::uint64_t count_restricted(int n, const std::vector<int>& allowed_parts);

} // namespace pertex

#endif
