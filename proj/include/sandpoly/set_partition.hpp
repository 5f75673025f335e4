#pragma once

#include <algorithm>
#include <vector>

namespace sandpoly {

/// Sequence of non-empty blocks; each block is kept sorted ascending.
using OrderedSetPartition = std::vector<std::vector<int>>;

inline std::vector<int> partition_type(const OrderedSetPartition& p) {
  std::vector<int> t;
  for (const auto& b : p) t.push_back(static_cast<int>(b.size()));
  return t;
}

/// True iff p is an ordered set partition of {lo..hi} into non-empty sorted blocks.
inline bool is_ordered_set_partition(const OrderedSetPartition& p, int lo, int hi) {
  std::vector<int> seen;
  for (const auto& b : p) {
    if (b.empty() || !std::is_sorted(b.begin(), b.end())) return false;
    seen.insert(seen.end(), b.begin(), b.end());
  }
  std::sort(seen.begin(), seen.end());
  if (static_cast<int>(seen.size()) != std::max(0, hi - lo + 1)) return false;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != lo + static_cast<int>(i)) return false;
  return true;
}

namespace detail {

template <class F>
void assign_blocks(int lo, int hi, int x, int k, std::vector<int>& block_of, F& f) {
  if (x > hi) {
    OrderedSetPartition p(k);
    for (int e = lo; e <= hi; ++e) p[block_of[e - lo]].push_back(e);
    for (const auto& b : p)
      if (b.empty()) return;
    f(p);
    return;
  }
  for (int b = 0; b < k; ++b) {
    block_of[x - lo] = b;
    assign_blocks(lo, hi, x + 1, k, block_of, f);
  }
}

}  // namespace detail

/// All ordered set partitions of {lo..hi} with exactly k blocks.
template <class F>
void for_each_ordered_set_partition(int lo, int hi, int k, F&& f) {
  if (hi < lo) {
    if (k == 0) f(OrderedSetPartition{});
    return;
  }
  if (k < 1) return;
  std::vector<int> block_of(hi - lo + 1, 0);
  detail::assign_blocks(lo, hi, lo, k, block_of, f);
}

/// All ordered set partitions of {lo..hi}, by increasing number of blocks.
template <class F>
void for_each_ordered_set_partition(int lo, int hi, F&& f) {
  if (hi < lo) {
    f(OrderedSetPartition{});
    return;
  }
  for (int k = 1; k <= hi - lo + 1; ++k) for_each_ordered_set_partition(lo, hi, k, f);
}

}  // namespace sandpoly
