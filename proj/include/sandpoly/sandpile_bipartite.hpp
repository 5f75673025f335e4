#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "sandpoly/combinatorics.hpp"
#include "sandpoly/error.hpp"
#include "sandpoly/limits.hpp"
#include "sandpoly/polyomino.hpp"
#include "sandpoly/set_partition.hpp"

namespace sandpoly {

/// Heights on the non-sink vertices v_1..v_{m+n-1} of D_{m,n}.
/// Vertices 1..m-1 form the top row (out-degree n), m..m+n-1 the bottom row (out-degree m).
class BipartiteConfig {
 public:
  using Height = std::uint64_t;

  BipartiteConfig() = default;
  BipartiteConfig(int m, int n, std::vector<Height> heights)
      : m_(m), n_(n), h_(std::move(heights)) {
    if (m < 1 || n < 1) throw Error(Errc::invalid_argument, "m and n must be positive");
    if (static_cast<int>(h_.size()) != m + n - 1)
      throw Error(Errc::invalid_argument, "expected " + std::to_string(m + n - 1) + " heights");
  }

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int size() const noexcept { return m_ + n_ - 1; }
  const std::vector<Height>& heights() const noexcept { return h_; }

  /// 1-based vertex access.
  Height operator[](int v) const { return h_.at(v - 1); }
  Height& operator[](int v) { return h_.at(v - 1); }

  bool is_top(int v) const noexcept { return v < m_; }
  Height degree(int v) const noexcept { return is_top(v) ? n_ : m_; }
  bool is_unstable(int v) const { return (*this)[v] >= degree(v); }
  bool is_stable() const {
    for (int v = 1; v <= size(); ++v)
      if (is_unstable(v)) return false;
    return true;
  }

  friend bool operator==(const BipartiteConfig&, const BipartiteConfig&) = default;
  friend auto operator<=>(const BipartiteConfig& a, const BipartiteConfig& b) {
    return std::tie(a.m_, a.n_, a.h_) <=> std::tie(b.m_, b.n_, b.h_);
  }

 private:
  int m_ = 1;
  int n_ = 1;
  std::vector<Height> h_{0};
};

struct StabilizeResult {
  BipartiteConfig config;
  std::vector<std::uint64_t> topples;  // topples[v-1]
};

/// Topple vertex v `times` times; grains sent to the sink are dropped.
inline void topple(BipartiteConfig& c, int v, std::uint64_t times = 1) {
  c[v] -= times * c.degree(v);
  if (c.is_top(v)) {
    for (int w = c.m(); w <= c.size(); ++w) c[w] += times;
  } else {
    for (int w = 1; w < c.m(); ++w) c[w] += times;
  }
}

/// Stabilise by sweeping and toppling each unstable vertex as often as it can.
inline StabilizeResult stabilize(BipartiteConfig c) {
  std::vector<std::uint64_t> t(c.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 1; v <= c.size(); ++v) {
      if (c.is_unstable(v)) {
        const std::uint64_t k = c[v] / c.degree(v);
        topple(c, v, k);
        t[v - 1] += k;
        changed = true;
      }
    }
  }
  return {std::move(c), std::move(t)};
}

/// Stabilise one topple at a time; `pick` receives the unstable vertices and
/// returns one of them.
template <class Pick>
StabilizeResult stabilize_with(BipartiteConfig c, Pick&& pick) {
  std::vector<std::uint64_t> t(c.size(), 0);
  std::vector<int> unstable;
  for (;;) {
    unstable.clear();
    for (int v = 1; v <= c.size(); ++v)
      if (c.is_unstable(v)) unstable.push_back(v);
    if (unstable.empty()) break;
    const int v = pick(static_cast<const std::vector<int>&>(unstable));
    topple(c, v);
    ++t[v - 1];
  }
  return {std::move(c), std::move(t)};
}

struct Wave {
  enum class Side { bottom, top };
  Side side = Side::bottom;
  std::vector<int> vertices;
  friend bool operator==(const Wave&, const Wave&) = default;
};

/// (Q_1, P_1, Q_2, P_2, ...) with only non-empty waves recorded.
struct CanonTopTrace {
  std::vector<Wave> waves;
  BipartiteConfig final_config;
  std::vector<std::uint64_t> topples;

  std::vector<int> sizes() const {
    std::vector<int> s;
    for (const Wave& w : waves) s.push_back(static_cast<int>(w.vertices.size()));
    return s;
  }
  OrderedSetPartition top_blocks() const { return blocks(Wave::Side::top); }
  OrderedSetPartition bottom_blocks() const { return blocks(Wave::Side::bottom); }

 private:
  OrderedSetPartition blocks(Wave::Side s) const {
    OrderedSetPartition r;
    for (const Wave& w : waves)
      if (w.side == s) r.push_back(w.vertices);
    return r;
  }
};

inline void require_stable(const BipartiteConfig& u) {
  if (!u.is_stable()) throw Error(Errc::invalid_argument, "configuration is not stable");
}

/// Sink topples (one grain to each bottom vertex), then bottom and top waves alternate.
inline CanonTopTrace canon_top(const BipartiteConfig& u) {
  require_stable(u);
  CanonTopTrace tr;
  BipartiteConfig c = u;
  tr.topples.assign(c.size(), 0);
  for (int v = c.m(); v <= c.size(); ++v) c[v] += 1;
  Wave::Side side = Wave::Side::bottom;
  for (;;) {
    Wave w{side, {}};
    const int lo = side == Wave::Side::bottom ? c.m() : 1;
    const int hi = side == Wave::Side::bottom ? c.size() : c.m() - 1;
    for (int v = lo; v <= hi; ++v)
      if (c.is_unstable(v)) w.vertices.push_back(v);
    if (w.vertices.empty()) break;
    for (int v : w.vertices) {
      topple(c, v);
      ++tr.topples[v - 1];
    }
    tr.waves.push_back(std::move(w));
    side = side == Wave::Side::bottom ? Wave::Side::top : Wave::Side::bottom;
  }
  tr.final_config = std::move(c);
  return tr;
}

inline bool is_recurrent(const BipartiteConfig& u) {
  const CanonTopTrace tr = canon_top(u);
  if (!(tr.final_config == u)) return false;
  return std::all_of(tr.topples.begin(), tr.topples.end(), [](auto t) { return t == 1; });
}

/// Dhar's criterion with the generic stabiliser: sigma(u + bottom increment) == u.
inline bool is_recurrent_dhar(const BipartiteConfig& u) {
  require_stable(u);
  BipartiteConfig c = u;
  for (int v = c.m(); v <= c.size(); ++v) c[v] += 1;
  return stabilize(c).config == u;
}

struct IncDecomp {
  BipartiteConfig inc;
  std::vector<int> perm;  // u[i] = inc[perm[i-1]], 1-based values
};

/// Sorts each row weakly increasing; perm is the lexicographically smallest
/// block-preserving permutation with u_i = inc_{perm(i)}.
inline IncDecomp inc_decomp(const BipartiteConfig& u) {
  require_stable(u);
  std::vector<BipartiteConfig::Height> h = u.heights();
  const int m = u.m();
  std::sort(h.begin(), h.begin() + (m - 1));
  std::sort(h.begin() + (m - 1), h.end());
  std::vector<int> perm(u.size());
  std::vector<bool> used(u.size(), false);
  for (int i = 1; i <= u.size(); ++i) {
    const int lo = u.is_top(i) ? 1 : m;
    const int hi = u.is_top(i) ? m - 1 : u.size();
    for (int p = lo; p <= hi; ++p) {
      if (!used[p - 1] && h[p - 1] == u[i]) {
        used[p - 1] = true;
        perm[i - 1] = p;
        break;
      }
    }
  }
  return {BipartiteConfig(u.m(), u.n(), std::move(h)), std::move(perm)};
}

inline bool is_increasing(const BipartiteConfig& u) {
  const auto& h = u.heights();
  return std::is_sorted(h.begin(), h.begin() + (u.m() - 1)) &&
         std::is_sorted(h.begin() + (u.m() - 1), h.end());
}

inline HeightSeqs heights_of_increasing(const BipartiteConfig& inc) {
  HeightSeqs s;
  s.m = inc.m();
  s.n = inc.n();
  for (int v = 1; v < inc.m(); ++v) s.a.push_back(static_cast<int>(inc[v]));
  for (int v = inc.m(); v <= inc.size(); ++v) s.b.push_back(static_cast<int>(inc[v]));
  return s;
}

inline CellSet f_map(const BipartiteConfig& u) {
  return cells_from_heights(heights_of_increasing(inc_decomp(u).inc));
}

inline std::optional<ParaPolyomino> f_map_para(const BipartiteConfig& u) {
  return ParaPolyomino::from_cells(f_map(u));
}

/// Increasing recurrent configuration whose image is p.
inline BipartiteConfig f_inverse(const ParaPolyomino& p) {
  const HeightSeqs h = height_seqs(p);
  std::vector<BipartiteConfig::Height> v(h.a.begin(), h.a.end());
  v.insert(v.end(), h.b.begin(), h.b.end());
  return BipartiteConfig(p.m(), p.n(), std::move(v));
}

/// Element of SetPara: a polyomino with ordered set partitions A of the top
/// vertices and B of the bottom vertices, typed by the even and odd bounce runs.
struct DecoratedPolyomino {
  ParaPolyomino poly;
  OrderedSetPartition A;
  OrderedSetPartition B;

  void validate() const {
    const BounceSeq c = bounce_seq(poly);
    const int m = poly.m(), n = poly.n();
    if (!is_ordered_set_partition(A, 1, m - 1) || partition_type(A) != ebounce(c))
      throw Error(Errc::invalid_argument, "A does not match the even bounce runs");
    if (!is_ordered_set_partition(B, m, m + n - 1) || partition_type(B) != obounce(c))
      throw Error(Errc::invalid_argument, "B does not match the odd bounce runs");
  }
  friend bool operator==(const DecoratedPolyomino&, const DecoratedPolyomino&) = default;
};

inline DecoratedPolyomino rtosp(const BipartiteConfig& u) {
  const CanonTopTrace tr = canon_top(u);
  if (!(tr.final_config == u) ||
      !std::all_of(tr.topples.begin(), tr.topples.end(), [](auto t) { return t == 1; }))
    throw Error(Errc::not_recurrent, "rtosp needs a recurrent configuration");
  auto p = f_map_para(u);
  return {*p, tr.top_blocks(), tr.bottom_blocks()};
}

/// Section of rtosp: heights of the increasing preimage are handed out wave by
/// wave (highest first), ascending values to ascending labels inside a block.
inline BipartiteConfig rtosp_inv(const DecoratedPolyomino& d) {
  d.validate();
  const BipartiteConfig inc = f_inverse(d.poly);
  BipartiteConfig u = inc;
  auto spread = [&](const OrderedSetPartition& blocks, int last) {
    int hi = last;
    for (const auto& blk : blocks) {
      const int lo = hi - static_cast<int>(blk.size()) + 1;
      for (std::size_t k = 0; k < blk.size(); ++k) u[blk[k]] = inc[lo + static_cast<int>(k)];
      hi = lo - 1;
    }
  };
  spread(d.A, inc.m() - 1);
  spread(d.B, inc.size());
  return u;
}

/// Total grains minus n(m-1).
inline std::int64_t level(const BipartiteConfig& u) {
  if (!is_recurrent(u)) throw Error(Errc::not_recurrent, "level needs a recurrent configuration");
  std::int64_t s = 0;
  for (auto h : u.heights()) s += static_cast<std::int64_t>(h);
  return s - static_cast<std::int64_t>(u.n()) * (u.m() - 1);
}

/// Every stable configuration, odometer order with v_1 varying slowest.
template <class F>
void for_each_stable(int m, int n, F&& f) {
  BipartiteConfig c(m, n, std::vector<BipartiteConfig::Height>(m + n - 1, 0));
  for (;;) {
    f(static_cast<const BipartiteConfig&>(c));
    int v = c.size();
    while (v >= 1 && c[v] + 1 == c.degree(v)) {
      c[v] = 0;
      --v;
    }
    if (v < 1) return;
    c[v] += 1;
  }
}

/// Distinct rearrangements of u within the top block and within the bottom block.
template <class F>
void for_each_block_rearrangement(const BipartiteConfig& inc, F&& f) {
  std::vector<BipartiteConfig::Height> h = inc.heights();
  const auto mid = h.begin() + (inc.m() - 1);
  std::sort(h.begin(), mid);
  std::sort(mid, h.end());
  do {
    do {
      f(BipartiteConfig(inc.m(), inc.n(), h));
    } while (std::next_permutation(mid, h.end()));
  } while (std::next_permutation(h.begin(), mid));
}

/// Increasing recurrent configurations, in the canonical polyomino order.
template <class F>
void for_each_rec_star(int m, int n, F&& f) {
  for_each_para(m, n, [&](const ParaPolyomino& p) { f(f_inverse(p)); });
}

/// All recurrent configurations: each increasing one expanded into its rearrangements.
template <class F>
void for_each_rec(int m, int n, F&& f) {
  for_each_rec_star(m, n, [&](const BipartiteConfig& inc) { for_each_block_rearrangement(inc, f); });
}

inline BigInt count_rec(int m, int n) { return ipow(m, n - 1) * ipow(n, m - 1); }

inline std::vector<BipartiteConfig> enumerate_rec(int m, int n,
                                                  const Limits& limits = Limits::from_env()) {
  limits.require(count_rec(m, n), "enumerate_rec");
  std::vector<BipartiteConfig> out;
  for_each_rec(m, n, [&](const BipartiteConfig& u) { out.push_back(u); });
  return out;
}

inline std::vector<BipartiteConfig> enumerate_rec_star(int m, int n,
                                                       const Limits& limits = Limits::from_env()) {
  limits.require(narayana_number(m + n - 1, m), "enumerate_rec_star");
  std::vector<BipartiteConfig> out;
  for_each_rec_star(m, n, [&](const BipartiteConfig& u) { out.push_back(u); });
  return out;
}

}  // namespace sandpoly
