#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "sandpoly/error.hpp"
#include "sandpoly/sandpile_bipartite.hpp"
#include "sandpoly/set_partition.hpp"
#include "sandpoly/special_classes.hpp"

namespace sandpoly {

using Relation = std::vector<std::pair<int, int>>;  // (x, y) means x < y

namespace detail {

// below[y] = sorted down-set of y; throws unless the relation is a strict partial order.
inline std::vector<std::vector<int>> down_sets(int n, const Relation& rel) {
  std::vector<std::vector<char>> lt(n + 1, std::vector<char>(n + 1, 0));
  for (auto [x, y] : rel) {
    if (x < 1 || x > n || y < 1 || y > n)
      throw Error(Errc::not_interval_order, "relation element out of range");
    lt[x][y] = 1;
  }
  for (int x = 1; x <= n; ++x) {
    if (lt[x][x]) throw Error(Errc::not_interval_order, "relation is not irreflexive");
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        if (lt[x][y] && lt[y][z] && !lt[x][z])
          throw Error(Errc::not_interval_order, "relation is not transitive");
  }
  std::vector<std::vector<int>> below(n + 1);
  for (int y = 1; y <= n; ++y)
    for (int x = 1; x <= n; ++x)
      if (lt[x][y]) below[y].push_back(x);
  return below;
}

inline bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

/// (2+2)-free poset on {1..n} as its chain of distinct down-sets
/// D_0 = {} < D_1 < ... < D_{k-1} and levels L_i = {x : D(x) = D_i}.
class IntervalOrder {
 public:
  IntervalOrder() = default;

  static IntervalOrder from_relation(int n, const Relation& rel) {
    const auto below = detail::down_sets(n, rel);
    std::vector<std::vector<int>> ds;
    for (int x = 1; x <= n; ++x) ds.push_back(below[x]);
    std::sort(ds.begin(), ds.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    for (std::size_t i = 1; i < ds.size(); ++i) {
      if (!detail::is_subset(ds[i - 1], ds[i]))
        throw Error(Errc::not_interval_order, "down-sets are not a chain (induced 2+2)");
    }
    IntervalOrder p;
    p.n_ = n;
    p.downsets_ = ds;
    p.levels_.assign(ds.size(), {});
    for (int x = 1; x <= n; ++x) {
      const auto it = std::find(ds.begin(), ds.end(), below[x]);
      p.levels_[it - ds.begin()].push_back(x);
    }
    return p;
  }

  /// Build from the chain form directly; checked by rebuilding the relation.
  static IntervalOrder from_chains(int n, std::vector<std::vector<int>> downsets,
                                   std::vector<std::vector<int>> levels) {
    IntervalOrder p;
    p.n_ = n;
    p.downsets_ = std::move(downsets);
    p.levels_ = std::move(levels);
    for (auto& d : p.downsets_) std::sort(d.begin(), d.end());
    for (auto& l : p.levels_) std::sort(l.begin(), l.end());
    if (p.downsets_.size() != p.levels_.size() || !is_ordered_set_partition(p.levels_, 1, n) ||
        (n > 0 && (p.downsets_.empty() || !p.downsets_[0].empty())))
      throw Error(Errc::not_interval_order, "malformed level/down-set chains");
    if (from_relation(n, p.relation()) != p)
      throw Error(Errc::not_interval_order, "chains do not describe a poset");
    return p;
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return static_cast<int>(levels_.size()); }
  const std::vector<std::vector<int>>& downsets() const noexcept { return downsets_; }
  const std::vector<std::vector<int>>& levels() const noexcept { return levels_; }

  /// D_i with the convention D_k = whole ground set.
  std::vector<int> downset(int i) const {
    if (i == k()) {
      std::vector<int> all(n_);
      for (int x = 1; x <= n_; ++x) all[x - 1] = x;
      return all;
    }
    return downsets_.at(i);
  }

  int level_of(int x) const {
    for (int i = 0; i < k(); ++i)
      if (std::binary_search(levels_[i].begin(), levels_[i].end(), x)) return i;
    throw Error(Errc::invalid_argument, "element not in ground set");
  }

  bool precedes(int x, int y) const {
    const auto& d = downsets_[level_of(y)];
    return std::binary_search(d.begin(), d.end(), x);
  }

  Relation relation() const {
    Relation r;
    for (int y = 1; y <= n_; ++y)
      for (int x : downsets_[level_of(y)]) r.emplace_back(x, y);
    std::sort(r.begin(), r.end());
    return r;
  }

  friend bool operator==(const IntervalOrder&, const IntervalOrder&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> downsets_;
  std::vector<std::vector<int>> levels_;
};

/// Down-set chain test; the relation must be a strict partial order.
inline bool is_two_plus_two_free(int n, const Relation& rel) {
  try {
    IntervalOrder::from_relation(n, rel);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::not_interval_order) {
      detail::down_sets(n, rel);  // rethrows if not a partial order at all
      return false;
    }
    throw;
  }
}

/// Dual order via L_{k-i-1}(P*) = D_{i+1}(P) \ D_i(P) and
/// D_{k-1-i}(P*) = L_{i+1}(P) u ... u L_{k-1}(P).
inline IntervalOrder dual_poset(const IntervalOrder& p) {
  const int k = p.k();
  std::vector<std::vector<int>> L(k), D(k);
  for (int i = 0; i < k; ++i) {
    const auto hi = p.downset(i + 1);
    const auto lo = p.downset(i);
    std::set_difference(hi.begin(), hi.end(), lo.begin(), lo.end(),
                        std::back_inserter(L[k - i - 1]));
    for (int j = i + 1; j < k; ++j)
      D[k - 1 - i].insert(D[k - 1 - i].end(), p.levels()[j].begin(), p.levels()[j].end());
  }
  return IntervalOrder::from_chains(p.n(), std::move(D), std::move(L));
}

/// Upper-triangular bicomposition matrix -> interval order: x < y iff col(x) < row(y).
inline IntervalOrder mtp(const BicompMatrix& M) {
  if (!M.is_upper_triangular())
    throw Error(Errc::not_upper_triangular, "mtp needs an upper-triangular matrix");
  std::vector<int> row(M.ground + 1), col(M.ground + 1);
  for (int i = 1; i <= M.k; ++i)
    for (int j = 1; j <= M.k; ++j)
      for (int x : M.at(i, j)) {
        row[x] = i;
        col[x] = j;
      }
  Relation rel;
  for (int x = 1; x <= M.ground; ++x)
    for (int y = 1; y <= M.ground; ++y)
      if (col[x] < row[y]) rel.emplace_back(x, y);
  return IntervalOrder::from_relation(M.ground, rel);
}

/// M_ij = L_{i-1} intersected with D_j \ D_{j-1}.
inline BicompMatrix mtp_inv(const IntervalOrder& p) {
  const int k = p.k();
  std::vector<std::vector<std::vector<int>>> M(k, std::vector<std::vector<int>>(k));
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      const auto hi = p.downset(j);
      const auto lo = p.downset(j - 1);
      std::vector<int> band;
      std::set_difference(hi.begin(), hi.end(), lo.begin(), lo.end(), std::back_inserter(band));
      const auto& lev = p.levels()[i - 1];
      std::set_intersection(lev.begin(), lev.end(), band.begin(), band.end(),
                            std::back_inserter(M[i - 1][j - 1]));
    }
  }
  return BicompMatrix(p.n(), std::move(M));
}

/// Square top-heavy minanz configuration read off the levels of P and its dual.
inline BipartiteConfig config_from_poset(const IntervalOrder& p, int n) {
  if (p.n() != n - 1) throw Error(Errc::invalid_argument, "poset must live on {1..n-1}");
  const IntervalOrder d = dual_poset(p);
  std::vector<BipartiteConfig::Height> h(2 * n - 1, 0);
  for (int j = 0; j < p.k(); ++j)
    for (int x : p.levels()[j]) h[x - 1] = n - p.downset(j + 1).size();
  for (int j = 0; j < d.k(); ++j)
    for (int x : d.levels()[j]) h[n + x - 1] = d.downset(j + 1).size();
  return BipartiteConfig(n, n, std::move(h));
}

}  // namespace sandpoly
