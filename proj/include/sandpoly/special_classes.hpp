#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "sandpoly/combinatorics.hpp"
#include "sandpoly/error.hpp"
#include "sandpoly/limits.hpp"
#include "sandpoly/polyomino.hpp"
#include "sandpoly/sandpile_bipartite.hpp"
#include "sandpoly/set_partition.hpp"

namespace sandpoly {

inline void require_recurrent(const BipartiteConfig& u) {
  if (!u.is_stable() || !is_recurrent(u))
    throw Error(Errc::not_recurrent, "configuration is not recurrent");
}

inline bool is_minimal(const BipartiteConfig& u) {
  require_recurrent(u);
  return level(u) == 0;
}

/// Minimal, and every height except possibly u_m is positive.
inline bool is_minanz(const BipartiteConfig& u) {
  if (!is_minimal(u)) return false;
  for (int v = 1; v <= u.size(); ++v)
    if (v != u.m() && u[v] == 0) return false;
  return true;
}

/// Wave index i with v in P_i or Q_i of the canonical toppling.
inline int wave(const CanonTopTrace& tr, int v) {
  for (std::size_t w = 0; w < tr.waves.size(); ++w) {
    const auto& vs = tr.waves[w].vertices;
    if (std::find(vs.begin(), vs.end(), v) != vs.end()) return static_cast<int>(w / 2) + 1;
  }
  throw Error(Errc::vertex_not_toppled, "vertex " + std::to_string(v) + " never topples");
}

inline int wave(const BipartiteConfig& u, int v) { return wave(canon_top(u), v); }

/// Square minanz configuration in which no top vertex v_x topples after the
/// bottom vertex v_{n+x}. This is the orientation under which ttm(u) is upper
/// triangular; the opposite inequality does not match it.
inline bool is_top_heavy(const BipartiteConfig& u) {
  if (u.m() != u.n()) throw Error(Errc::invalid_argument, "top-heavy needs m = n");
  if (!is_minanz(u)) return false;
  const int n = u.n();
  const CanonTopTrace tr = canon_top(u);
  for (int x = 1; x < n; ++x)
    if (wave(tr, x) > wave(tr, n + x)) return false;
  return true;
}

/// k x k matrix of disjoint sorted sets whose union is {1..ground}, no empty row or column.
struct BicompMatrix {
  int k = 0;
  int ground = 0;
  std::vector<std::vector<std::vector<int>>> rows;

  BicompMatrix() = default;
  BicompMatrix(int ground_, std::vector<std::vector<std::vector<int>>> r)
      : k(static_cast<int>(r.size())), ground(ground_), rows(std::move(r)) {
    validate();
  }

  const std::vector<int>& at(int i, int j) const { return rows.at(i - 1).at(j - 1); }

  OrderedSetPartition row_unions() const {
    OrderedSetPartition p(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) p[i].insert(p[i].end(), rows[i][j].begin(), rows[i][j].end());
    for (auto& b : p) std::sort(b.begin(), b.end());
    return p;
  }
  OrderedSetPartition column_unions() const {
    OrderedSetPartition p(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) p[j].insert(p[j].end(), rows[i][j].begin(), rows[i][j].end());
    for (auto& b : p) std::sort(b.begin(), b.end());
    return p;
  }

  bool is_upper_triangular() const {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < i; ++j)
        if (!rows[i][j].empty()) return false;
    return true;
  }

  friend bool operator==(const BicompMatrix&, const BicompMatrix&) = default;

 private:
  void validate() {
    if (k < 1 && ground > 0) throw Error(Errc::invalid_matrix, "empty matrix");
    for (auto& r : rows) {
      if (static_cast<int>(r.size()) != k) throw Error(Errc::invalid_matrix, "matrix is not square");
      for (auto& e : r) std::sort(e.begin(), e.end());
    }
    if (!is_ordered_set_partition(row_unions(), 1, ground) ||
        !is_ordered_set_partition(column_unions(), 1, ground))
      throw Error(Errc::invalid_matrix, "entries must partition {1.." + std::to_string(ground) +
                                            "} with no empty row or column");
  }
};

/// SqRec_n -> BiComp: M_ij = P_i intersected with (Q_j - n).
inline BicompMatrix ttm(const BipartiteConfig& u) {
  if (u.m() != u.n() || !is_minanz(u))
    throw Error(Errc::not_minanz, "ttm needs a square minanz configuration");
  const int n = u.n();
  const CanonTopTrace tr = canon_top(u);
  const OrderedSetPartition P = tr.top_blocks();
  OrderedSetPartition Q = tr.bottom_blocks();
  Q.pop_back();  // Q_{k+1} = {n}
  const int k = static_cast<int>(P.size());
  std::vector<std::vector<std::vector<int>>> M(k, std::vector<std::vector<int>>(k));
  std::vector<int> col(n, 0);
  for (int j = 0; j < k; ++j)
    for (int v : Q[j]) col[v - n] = j;
  for (int i = 0; i < k; ++i)
    for (int x : P[i]) M[i][col[x]].push_back(x);
  return BicompMatrix(n - 1, std::move(M));
}

/// Inverse of ttm. Bottom heights n-1-(p_1+...+p_{i-1}) on Q_i, top heights
/// n-(q_1+...+q_i) on P_i, and u_n = 0.
inline BipartiteConfig mu(const BicompMatrix& M) {
  const int n = M.ground + 1;
  const OrderedSetPartition P = M.row_unions();
  const OrderedSetPartition Q = M.column_unions();
  std::vector<BipartiteConfig::Height> h(2 * n - 1, 0);
  int p_sum = 0, q_sum = 0;
  for (int i = 0; i < M.k; ++i) {
    for (int x : Q[i]) h[n + x - 1] = n - 1 - p_sum;
    q_sum += static_cast<int>(Q[i].size());
    for (int x : P[i]) h[x - 1] = n - q_sum;
    p_sum += static_cast<int>(P[i].size());
  }
  return BipartiteConfig(n, n, std::move(h));
}

/// Every bicomposition matrix on {1..ground}.
template <class F>
void for_each_bicomp(int ground, F&& f) {
  for (int k = 1; k <= ground; ++k) {
    std::vector<OrderedSetPartition> parts;
    for_each_ordered_set_partition(1, ground, k, [&](const OrderedSetPartition& p) {
      parts.push_back(p);
    });
    for (const auto& P : parts) {
      for (const auto& Q : parts) {
        std::vector<int> col(ground + 1, 0);
        for (int j = 0; j < k; ++j)
          for (int x : Q[j]) col[x] = j;
        std::vector<std::vector<std::vector<int>>> M(k, std::vector<std::vector<int>>(k));
        for (int i = 0; i < k; ++i)
          for (int x : P[i]) M[i][col[x]].push_back(x);
        f(BicompMatrix(ground, std::move(M)));
      }
    }
  }
}

/// Increasing minimal configurations, one per ribbon of Para_{m,n}.
template <class F>
void for_each_minimal_star(int m, int n, F&& f) {
  for_each_para(m, n, [&](const ParaPolyomino& p) {
    if (is_ribbon(p)) f(f_inverse(p));
  });
}

/// All minanz configurations of D_{m,n}.
template <class F>
void for_each_minanz(int m, int n, F&& f) {
  for_each_minimal_star(m, n, [&](const BipartiteConfig& inc) {
    for (int v = 1; v < inc.m(); ++v)
      if (inc[v] == 0) return;
    for_each_block_rearrangement(inc, [&](const BipartiteConfig& u) {
      bool ok = true;
      for (int v = 1; v <= u.size() && ok; ++v) ok = v == u.m() || u[v] > 0;
      if (ok) f(u);
    });
  });
}

inline BigInt count_minimal(int m, int n) { return binomial(m + n - 2, m - 1); }
inline BigInt count_minanz(int m, int n) { return binomial(m + n - 4, m - 2); }

/// |SqRec_n| = |BiComp on {1..n-1}| = sum_k (k! S(n-1,k))^2.
inline BigInt count_sqrec(int n) {
  BigInt s = 0;
  for (int k = 0; k <= n - 1; ++k) {
    const BigInt c = factorial(k) * stirling2(n - 1, k);
    s += c * c;
  }
  return s;
}

/// sum_k S(n-1,k)^2, the closed form printed for |SqRec_n| (disagrees from n = 3 on).
inline BigInt sum_stirling2_squares(int n) {
  BigInt s = 0;
  for (int k = 0; k <= n - 1; ++k) {
    const BigInt c = stirling2(n - 1, k);
    s += c * c;
  }
  return s;
}

struct NonzeroReport {
  int n = 0;
  BigInt enumerated;
  BigInt formula;
  bool match = false;
};

/// (1/(n-1)) C(2n-2, n) C(2n, n-2).
inline BigInt nonzero_formula(int n) {
  return binomial(2 * n - 2, n) * binomial(2 * n, n - 2) / (n - 1);
}

/// Increasing recurrent configurations of D_{n,n} with every height positive,
/// compared against the conjectured closed form.
inline NonzeroReport count_nonzero_star(int n, const Limits& limits = Limits::from_env()) {
  if (n < 2) throw Error(Errc::invalid_argument, "n must be at least 2");
  limits.require(narayana_number(2 * n - 1, n), "count_nonzero_star");
  NonzeroReport r;
  r.n = n;
  for_each_rec_star(n, n, [&](const BipartiteConfig& u) {
    for (auto h : u.heights())
      if (h == 0) return;
    r.enumerated += 1;
  });
  r.formula = nonzero_formula(n);
  r.match = r.enumerated == r.formula;
  return r;
}

}  // namespace sandpoly
