#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sandpoly/bivar_poly.hpp"
#include "sandpoly/combinatorics.hpp"
#include "sandpoly/error.hpp"
#include "sandpoly/limits.hpp"
#include "sandpoly/polyomino.hpp"
#include "sandpoly/set_partition.hpp"

namespace sandpoly {

/// Configuration on K_n with sink v_0: heights x_1..x_{n-1}, toppling threshold n-1.
struct KnConfig {
  int n = 2;
  std::vector<int> heights;

  KnConfig() = default;
  KnConfig(int n_, std::vector<int> h) : n(n_), heights(std::move(h)) {
    if (n < 2) throw Error(Errc::invalid_argument, "K_n needs n >= 2");
    if (static_cast<int>(heights.size()) != n - 1)
      throw Error(Errc::invalid_argument, "K_n configuration needs n-1 heights");
    for (int v : heights)
      if (v < 0) throw Error(Errc::invalid_argument, "heights must be non-negative");
  }

  int operator[](int i) const { return heights.at(i - 1); }
  bool is_stable() const {
    return std::all_of(heights.begin(), heights.end(), [&](int v) { return v <= n - 2; });
  }
  bool is_sorted() const { return std::is_sorted(heights.rbegin(), heights.rend()); }
  friend bool operator==(const KnConfig&, const KnConfig&) = default;
};

inline bool is_parking_function(std::vector<int> t) {
  std::sort(t.begin(), t.end());
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] < 1 || t[i] > static_cast<int>(i) + 1) return false;
  return true;
}

inline void require_stable(const KnConfig& x) {
  if (!x.is_stable()) throw Error(Errc::invalid_argument, "K_n configuration is not stable");
}

/// Complement test: x is recurrent iff (n-1-x_i) is a parking function.
inline bool kn_is_recurrent(const KnConfig& x) {
  require_stable(x);
  std::vector<int> t;
  for (int v : x.heights) t.push_back(x.n - 1 - v);
  return is_parking_function(std::move(t));
}

namespace detail {

// Adds one grain everywhere (the sink fires) and topples in parallel rounds.
inline std::pair<std::vector<int>, std::vector<std::vector<int>>> kn_rounds(const KnConfig& x) {
  const int n = x.n;
  std::vector<int> h = x.heights;
  for (int& v : h) ++v;
  std::vector<std::vector<int>> rounds;
  for (;;) {
    std::vector<int> fire;
    for (int i = 0; i < n - 1; ++i)
      if (h[i] >= n - 1) fire.push_back(i + 1);
    if (fire.empty()) break;
    const int k = static_cast<int>(fire.size());
    for (int i = 0; i < n - 1; ++i) h[i] += k;
    for (int v : fire) h[v - 1] -= n - 1 + 1;  // a vertex does not feed itself
    rounds.push_back(std::move(fire));
  }
  return {std::move(h), std::move(rounds)};
}

}  // namespace detail

/// Burning test: after the sink fires, every vertex topples exactly once and x comes back.
inline bool kn_is_recurrent_dhar(const KnConfig& x) {
  require_stable(x);
  auto [h, rounds] = detail::kn_rounds(x);
  std::size_t fired = 0;
  for (const auto& r : rounds) fired += r.size();
  std::set<int> distinct;
  for (const auto& r : rounds) distinct.insert(r.begin(), r.end());
  return h == x.heights && fired == static_cast<std::size_t>(x.n - 1) && distinct.size() == fired;
}

inline OrderedSetPartition kn_canon_top(const KnConfig& x) {
  if (!kn_is_recurrent(x)) throw Error(Errc::not_recurrent, "K_n configuration is not recurrent");
  return detail::kn_rounds(x).second;
}

/// Weakly decreasing x with n-1-i <= x_i <= n-2, in lexicographic order.
template <class F>
void for_each_rec_dagger(int n, F&& f) {
  if (n < 2) throw Error(Errc::invalid_argument, "K_n needs n >= 2");
  std::vector<int> h(n - 1);
  auto rec = [&](auto&& self, int i, int cap) -> void {
    if (i == n) {
      f(KnConfig(n, h));
      return;
    }
    for (int v = n - 1 - i; v <= cap; ++v) {
      h[i - 1] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 1, n - 2);
}

inline std::vector<KnConfig> rec_dagger_enumerate(int n, const Limits& limits = Limits::from_env()) {
  limits.require(catalan(n - 1), "rec_dagger_enumerate");
  std::vector<KnConfig> out;
  for_each_rec_dagger(n, [&](const KnConfig& x) { out.push_back(x); });
  return out;
}

/// Row n-i of the diagram covers columns n-i .. 2+x_i.
inline ParaPolyomino diag(const KnConfig& x) {
  if (!x.is_sorted()) throw Error(Errc::not_sorted, "diag needs a weakly decreasing configuration");
  if (!kn_is_recurrent(x)) throw Error(Errc::not_recurrent, "diag needs a recurrent configuration");
  const int n = x.n;
  std::vector<Cell> cs;
  for (int i = 1; i <= n - 1; ++i)
    for (int c = n - i; c <= 2 + x[i]; ++c) cs.push_back({c, n - i});
  auto p = ParaPolyomino::from_cells(CellSet(n, n - 1, std::move(cs)));
  if (!p) throw Error(Errc::not_recurrent, "diagram is not a parallelogram polyomino");
  return *p;
}

/// Dyck path of semi-length n as a word in S and W read from (n, n) to (0, 0).
struct DyckPath {
  int n = 0;
  std::string word;

  DyckPath() = default;
  DyckPath(int n_, std::string w) : n(n_), word(std::move(w)) {
    if (static_cast<int>(word.size()) != 2 * n) throw Error(Errc::invalid_argument, "Dyck word has wrong length");
    int s = 0, w2 = 0;
    for (char c : word) {
      if (c == 'S') ++s;
      else if (c == 'W') ++w2;
      else throw Error(Errc::invalid_argument, "Dyck word letters are S and W");
      if (w2 > s) throw Error(Errc::invalid_argument, "Dyck path goes above the diagonal");
    }
  }
  friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

/// Lower boundary of P from (m, n) back to (1, 0).
inline DyckPath dyck_of(const ParaPolyomino& p) {
  if (p.m() != p.n() + 1) throw Error(Errc::invalid_argument, "dyck_of needs Para_{n,n-1}");
  std::string up;
  for (int i = 0; i < p.n(); ++i) up += "NE";
  up += 'E';
  if (p.upper() != up) throw Error(Errc::invalid_argument, "dyck_of needs the upper path (NE)^{n-1}E");
  std::string w;
  for (auto it = p.lower().rbegin(); it != p.lower().rend(); ++it) w.push_back(*it == 'N' ? 'S' : 'W');
  w.pop_back();
  return DyckPath(p.n(), std::move(w));
}

/// Inverse of dyck_of(diag(.)): the sorted recurrent configuration on K_{n+1}.
inline KnConfig rec_dagger_from_dyck(const DyckPath& d) {
  std::string lower;
  for (auto it = d.word.rbegin(); it != d.word.rend(); ++it) lower.push_back(*it == 'S' ? 'N' : 'E');
  lower.insert(lower.begin(), 'E');
  std::string up;
  for (int i = 0; i < d.n; ++i) up += "NE";
  up += 'E';
  const ParaPolyomino p = ParaPolyomino::from_paths(up, lower);
  const int n = d.n + 1;
  std::vector<int> h(n - 1);
  for (int i = 1; i <= n - 1; ++i) h[i - 1] = p.row_right(n - i) - 2;
  return KnConfig(n, std::move(h));
}

/// Full squares between D and the diagonal.
inline int dyck_area(const DyckPath& d) {
  int x = d.n, y = d.n, a = 0;
  for (char c : d.word) {
    if (c == 'S') {
      a += x - y;
      --y;
    } else {
      --x;
    }
  }
  return a;
}

/// South runs a(1), ..., a(k) of the Haglund bounce path. Going south it turns
/// only where a west step of D starts; going west it turns on the diagonal.
inline std::vector<int> hag_bounce(const DyckPath& d) {
  std::set<std::pair<int, int>> w_starts;
  int x = d.n, y = d.n;
  for (char c : d.word) {
    if (c == 'W') w_starts.insert({x, y});
    (c == 'S' ? y : x) -= 1;
  }
  std::vector<int> a;
  x = d.n;
  y = d.n;
  while (y > 0) {
    int run = 0;
    while (!w_starts.count({x, y})) {
      --y;
      ++run;
    }
    a.push_back(run);
    x = y;
  }
  return a;
}

inline std::int64_t hagbounce(const DyckPath& d) {
  const auto a = hag_bounce(d);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::int64_t>(i) * a[i];
  return s;
}

/// Dyck paths of semi-length n in lexicographic order of their words (S < W).
template <class F>
void for_each_dyck(int n, F&& f) {
  if (n < 0) throw Error(Errc::invalid_argument, "semi-length must be non-negative");
  std::string w;
  auto rec = [&](auto&& self, int s, int west) -> void {
    if (west == n) {
      f(DyckPath(n, w));
      return;
    }
    if (s < n) {
      w.push_back('S');
      self(self, s + 1, west);
      w.pop_back();
    }
    if (west < s) {
      w.push_back('W');
      self(self, s, west + 1);
      w.pop_back();
    }
  };
  rec(rec, 0, 0);
}

/// C_n(q,t): area and Haglund bounce over Dyck paths of semi-length n.
inline BivarPoly cn_poly(int n, const Limits& limits = Limits::from_env()) {
  limits.require(catalan(n), "cn_poly");
  std::map<std::pair<int, int>, BigInt> acc;
  for_each_dyck(n, [&](const DyckPath& d) { acc[{dyck_area(d), static_cast<int>(hagbounce(d))}] += 1; });
  std::vector<BivarPoly::Term> ts;
  for (auto& [k, c] : acc) ts.push_back({k.first, k.second, c});
  return BivarPoly::from_terms(std::move(ts));
}

/// S_n(q,t): area and parabounce over diag(Rec-dagger(K_n)).
inline BivarPoly sn_poly(int n, const Limits& limits = Limits::from_env()) {
  limits.require(catalan(n - 1), "sn_poly");
  std::map<std::pair<int, int>, BigInt> acc;
  for_each_rec_dagger(n, [&](const KnConfig& x) {
    const ParaPolyomino p = diag(x);
    acc[{area(p), static_cast<int>(parabounce(p))}] += 1;
  });
  std::vector<BivarPoly::Term> ts;
  for (auto& [k, c] : acc) ts.push_back({k.first, k.second, c});
  return BivarPoly::from_terms(std::move(ts));
}

struct OlsonReport {
  int n = 0;
  BivarPoly lhs;  // S_n(q,t)
  BivarPoly rhs;  // (qt)^{2(n-1)} C_{n-1}(q,t^2)
  bool holds = false;
};

inline OlsonReport olson_check(int n, const Limits& limits = Limits::from_env()) {
  if (n < 2) throw Error(Errc::invalid_argument, "n must be at least 2");
  OlsonReport r;
  r.n = n;
  r.lhs = sn_poly(n, limits);
  r.rhs = cn_poly(n - 1, limits).substitute(1, 2).shifted(2 * (n - 1), 2 * (n - 1));
  r.holds = r.lhs == r.rhs;
  return r;
}

/// area(diag(x)) - sum(x_i) for sorted recurrent x on K_n.
inline int kn_area_constant(int n) { return -(n - 1) * (n - 6) / 2; }

/// The constant area(diag(x)) - sum(x_i) if it is the same for every x in
/// Rec-dagger(K_n), computed by enumeration.
inline std::optional<int> derive_area_constant(int n, const Limits& limits = Limits::from_env()) {
  limits.require(catalan(n - 1), "derive_area_constant");
  std::optional<int> c;
  bool constant = true;
  for_each_rec_dagger(n, [&](const KnConfig& x) {
    int s = 0;
    for (int v : x.heights) s += v;
    const int d = area(diag(x)) - s;
    if (c && *c != d) constant = false;
    c = d;
  });
  return constant ? c : std::nullopt;
}

struct KnBounceReport {
  int n = 0;
  std::uint64_t checked = 0;
  bool holds = true;
  std::optional<KnConfig> first_failure;
  std::string failed_check;
};

/// For every x in Rec-dagger(K_n): Bounce(diag x) doubles the CanonTop sizes,
/// HagBounce(dyck) equals them, parabounce = 2(hagbounce + n - 1), and the
/// two area relations hold.
inline KnBounceReport parabounce_hagbounce_check(int n, const Limits& limits = Limits::from_env()) {
  limits.require(catalan(n - 1), "parabounce_hagbounce_check");
  KnBounceReport r;
  r.n = n;
  for_each_rec_dagger(n, [&](const KnConfig& x) {
    ++r.checked;
    if (!r.holds) return;
    const ParaPolyomino p = diag(x);
    const DyckPath d = dyck_of(p);
    std::vector<int> sizes, doubled;
    for (const auto& q : kn_canon_top(x)) {
      sizes.push_back(static_cast<int>(q.size()));
      doubled.insert(doubled.end(), 2, static_cast<int>(q.size()));
    }
    int s = 0;
    for (int v : x.heights) s += v;
    const char* fail = nullptr;
    if (bounce_seq(p) != doubled) fail = "bounce";
    else if (hag_bounce(d) != sizes) fail = "hagbounce-runs";
    else if (parabounce(p) != 2 * (hagbounce(d) + n - 1)) fail = "parabounce";
    else if (area(p) != dyck_area(d) + 2 * (n - 1)) fail = "area-dyck";
    else if (area(p) != s + kn_area_constant(n)) fail = "area-heights";
    if (fail) {
      r.holds = false;
      r.first_failure = x;
      r.failed_check = fail;
    }
  });
  return r;
}

}  // namespace sandpoly
