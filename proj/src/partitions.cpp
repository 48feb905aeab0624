#include "partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "error.hpp"

namespace sc7 {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("Partition: parts must be nonincreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition conjugate(const Partition& p) {
  const auto& parts = p.parts();
  if (parts.empty()) return {};
  std::vector<int> cols(static_cast<std::size_t>(parts.front()), 0);
  for (int row : parts)
    for (int j = 0; j < row; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

HookGrid hook_lengths(const Partition& p) {
  const auto& rows = p.parts();
  const auto cols = conjugate(p).parts();
  HookGrid grid(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    grid[i].resize(static_cast<std::size_t>(rows[i]));
    for (std::size_t j = 0; j < grid[i].size(); ++j) {
      int arm = rows[i] - static_cast<int>(j) - 1;
      int leg = cols[j] - static_cast<int>(i) - 1;
      grid[i][j] = arm + leg + 1;
    }
  }
  return grid;
}

bool is_t_core(const Partition& p, int t) {
  if (t < 1) throw InvalidArgument("is_t_core: t must be positive");
  for (const auto& row : hook_lengths(p))
    for (int h : row)
      if (h % t == 0) return false;
  return true;
}

Partition from_diagonal_hooks(std::vector<int> odd_parts) {
  std::sort(odd_parts.begin(), odd_parts.end(), std::greater<>());
  for (std::size_t i = 0; i < odd_parts.size(); ++i) {
    if (odd_parts[i] <= 0 || odd_parts[i] % 2 == 0)
      throw InvalidArgument("from_diagonal_hooks: parts must be positive and odd");
    if (i > 0 && odd_parts[i] == odd_parts[i - 1])
      throw InvalidArgument("from_diagonal_hooks: parts must be distinct");
  }
  const int k = static_cast<int>(odd_parts.size());
  std::vector<int> rows;
  // Diagonal cell i has arm = leg = (d_i - 1) / 2.
  for (int i = 0; i < k; ++i) rows.push_back((odd_parts[static_cast<std::size_t>(i)] - 1) / 2 + i + 1);
  const int height = rows.empty() ? 0 : rows.front();
  for (int r = k + 1; r <= height; ++r) {
    int len = 0;
    for (int i = 0; i < k; ++i)
      if (rows[static_cast<std::size_t>(i)] >= r) ++len;
    rows.push_back(len);
  }
  return Partition(std::move(rows));
}

namespace {

void distinct_odd_parts(int remaining, int max_part, std::vector<int>& current,
                        std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(from_diagonal_hooks(current));
    return;
  }
  int top = std::min(remaining, max_part);
  if (top % 2 == 0) --top;
  for (int d = top; d >= 1; d -= 2) {
    current.push_back(d);
    distinct_odd_parts(remaining - d, d - 2, current, out);
    current.pop_back();
  }
}

void all_parts(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    all_parts(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> self_conjugate_partitions(int n) {
  if (n < 0) throw InvalidArgument("self_conjugate_partitions: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> current;
  distinct_odd_parts(n, n, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> all_partitions(int n) {
  if (n < 0) throw InvalidArgument("all_partitions: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> current;
  all_parts(n, n, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Stripping the outermost diagonal hook (first row and column) of a
// partition leaves every remaining hook length unchanged, so the inner
// partition of a t-core is a t-core. Growing self-conjugate partitions from
// the innermost hook outward and discarding non-cores therefore visits every
// self-conjugate t-core, and only the new first row needs checking.
//
// Wrapping an outer hook of length d = 2L - 1 around a self-conjugate inner
// partition mu with k rows gives rows (L, mu_1 + 1, ..., mu_k + 1, 1, ..., 1).
void grow_cores(const std::vector<int>& inner, int size, int max_n, int t, std::vector<std::int64_t>& counts) {
  ++counts[static_cast<std::size_t>(size)];
  const int k = static_cast<int>(inner.size());
  const int first = inner.empty() ? 1 : 2 * inner.front() + 1;
  for (int d = first; size + d <= max_n; d += 2) {
    if (d % t == 0) continue;
    const int len = (d + 1) / 2;
    bool core = true;
    // Hook of cell (0, c) is (len - 1 - c) + rows[c] with rows[c] = inner[c - 1] + 1
    // for 1 <= c <= k and rows[c] = 1 beyond.
    for (int c = 1; c < len && core; ++c) {
      const int row = c <= k ? inner[static_cast<std::size_t>(c - 1)] + 1 : 1;
      if ((len - 1 - c + row) % t == 0) core = false;
    }
    if (!core) continue;
    std::vector<int> outer;
    outer.reserve(static_cast<std::size_t>(len));
    outer.push_back(len);
    for (int r : inner) outer.push_back(r + 1);
    while (static_cast<int>(outer.size()) < len) outer.push_back(1);
    grow_cores(outer, size + d, max_n, t, counts);
  }
}

}  // namespace

std::vector<std::int64_t> sc_counts_upto(int max_n, int t) {
  if (max_n < 0) throw InvalidArgument("sc_counts_upto: n must be non-negative");
  if (t < 1) throw InvalidArgument("sc_counts_upto: t must be positive");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(max_n) + 1, 0);
  grow_cores({}, 0, max_n, t, counts);
  return counts;
}

std::int64_t sc_count(int n, int t) { return sc_counts_upto(n, t)[static_cast<std::size_t>(n)]; }

std::int64_t c_count(int n, int t) {
  if (t < 1) throw InvalidArgument("c_count: t must be positive");
  std::int64_t count = 0;
  for (const auto& p : all_partitions(n))
    if (is_t_core(p, t)) ++count;
  return count;
}

}  // namespace sc7
