#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sc7 {

// Nonincreasing sequence of positive parts; the empty partition has size 0.
// Ordered lexicographically by parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  bool empty() const { return parts_.empty(); }
  std::size_t length() const { return parts_.size(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

using HookGrid = std::vector<std::vector<int>>;

Partition conjugate(const Partition& p);

// Cell (i, j) of the Ferrers-Young diagram holds arm + leg + 1.
HookGrid hook_lengths(const Partition& p);

bool is_t_core(const Partition& p, int t);

// Self-conjugate partition whose diagonal hooks have the given lengths
// (distinct odd parts, any order).
Partition from_diagonal_hooks(std::vector<int> odd_parts);

// Every self-conjugate partition of n, sorted. Generated from the partitions
// of n into distinct odd parts.
std::vector<Partition> self_conjugate_partitions(int n);

// Every partition of n, sorted. Exponential in n; small n only.
std::vector<Partition> all_partitions(int n);

std::int64_t sc_count(int n, int t);

// sc_t(k) for every 0 <= k <= max_n from a single pruned search.
std::vector<std::int64_t> sc_counts_upto(int max_n, int t);

// Number of t-cores of n by full enumeration. Exponential in n.
std::int64_t c_count(int n, int t);

}  // namespace sc7
