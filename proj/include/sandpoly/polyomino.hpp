#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sandpoly/combinatorics.hpp"
#include "sandpoly/error.hpp"
#include "sandpoly/limits.hpp"

namespace sandpoly {

/// Unit cell (col, row), both 1-based; cell (i, j) is the square [i-1, i] x [j-1, j].
struct Cell {
  int col = 0;
  int row = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Arbitrary set of cells inside an m x n box. Kept sorted and duplicate free.
struct CellSet {
  int m = 0;
  int n = 0;
  std::vector<Cell> cells;

  CellSet() = default;
  CellSet(int m_, int n_, std::vector<Cell> c) : m(m_), n(n_), cells(std::move(c)) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    for (const Cell& x : cells) {
      if (x.col < 1 || x.col > m || x.row < 1 || x.row > n)
        throw Error(Errc::invalid_argument, "cell outside the bounding box");
    }
  }

  bool contains(int col, int row) const {
    return std::binary_search(cells.begin(), cells.end(), Cell{col, row});
  }
  std::size_t size() const { return cells.size(); }

  friend bool operator==(const CellSet&, const CellSet&) = default;
};

using BounceSeq = std::vector<int>;

/// Two weakly increasing sequences: a_1..a_{m-1} in [0, n-1], b_1..b_n in [0, m-1].
struct HeightSeqs {
  int m = 1;
  int n = 1;
  std::vector<int> a;
  std::vector<int> b;

  void validate() const {
    if (m < 1 || n < 1) throw Error(Errc::invalid_argument, "m and n must be positive");
    if (static_cast<int>(a.size()) != m - 1 || static_cast<int>(b.size()) != n)
      throw Error(Errc::invalid_argument, "height sequences have the wrong length");
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] < 0 || a[i] > n - 1) throw Error(Errc::invalid_argument, "a out of range");
      if (i > 0 && a[i] < a[i - 1]) throw Error(Errc::not_sorted, "a is not weakly increasing");
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] < 0 || b[i] > m - 1) throw Error(Errc::invalid_argument, "b out of range");
      if (i > 0 && b[i] < b[i - 1]) throw Error(Errc::not_sorted, "b is not weakly increasing");
    }
  }

  friend bool operator==(const HeightSeqs&, const HeightSeqs&) = default;
};

/// Parallelogram polyomino given by its upper and lower N/E paths from (0,0) to (m,n).
class ParaPolyomino {
 public:
  static ParaPolyomino from_paths(std::string_view upper, std::string_view lower) {
    if (upper.size() != lower.size() || upper.empty())
      throw Error(Errc::not_monotone, "paths must be non-empty and of equal length");
    auto count = [](std::string_view w, char c) {
      return static_cast<int>(std::count(w.begin(), w.end(), c));
    };
    for (std::string_view w : {upper, lower}) {
      if (count(w, 'N') + count(w, 'E') != static_cast<int>(w.size()))
        throw Error(Errc::not_monotone, "paths may only use the letters N and E");
    }
    const int m = count(upper, 'E');
    const int n = count(upper, 'N');
    if (count(lower, 'E') != m || m < 1 || n < 1)
      throw Error(Errc::not_monotone, "paths must use the same positive numbers of N and E steps");
    // Both paths pass through exactly one vertex on each anti-diagonal, so the
    // upper path is strictly above iff its N count leads at every interior prefix.
    int nu = 0, nl = 0;
    for (std::size_t k = 0; k + 1 < upper.size(); ++k) {
      nu += upper[k] == 'N';
      nl += lower[k] == 'N';
      if (nu <= nl) throw Error(Errc::paths_cross, "paths meet before (m,n)");
    }
    return ParaPolyomino(std::string(upper), std::string(lower), m, n);
  }

  /// Recognises a parallelogram polyomino among arbitrary cell sets.
  static std::optional<ParaPolyomino> from_cells(const CellSet& s) {
    const int m = s.m, n = s.n;
    if (m < 1 || n < 1) return std::nullopt;
    std::vector<int> lo(m + 1, 0), hi(m + 1, -1);
    std::vector<int> cnt(m + 1, 0);
    for (const Cell& c : s.cells) {
      if (cnt[c.col] == 0) lo[c.col] = c.row;
      hi[c.col] = c.row;
      ++cnt[c.col];
    }
    for (int i = 1; i <= m; ++i) {
      if (cnt[i] == 0 || hi[i] - lo[i] + 1 != cnt[i]) return std::nullopt;
      if (i > 1 && (lo[i] < lo[i - 1] || hi[i] < hi[i - 1])) return std::nullopt;
    }
    if (lo[1] != 1 || hi[m] != n) return std::nullopt;
    std::string up, low;
    int yu = 0, yl = 0;
    for (int i = 1; i <= m; ++i) {
      up.append(hi[i] - yu, 'N');
      up.push_back('E');
      yu = hi[i];
      low.append(lo[i] - 1 - yl, 'N');
      low.push_back('E');
      yl = lo[i] - 1;
    }
    low.append(n - yl, 'N');
    try {
      return from_paths(up, low);
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  const std::string& upper() const noexcept { return upper_; }
  const std::string& lower() const noexcept { return lower_; }

  /// Column i (1..m) occupies rows column_bottom(i)+1 .. column_top(i).
  int column_top(int i) const { return top_.at(i); }
  int column_bottom(int i) const { return bot_.at(i); }
  /// Row j (1..n) occupies columns row_left(j) .. row_right(j).
  int row_left(int j) const { return left_.at(j); }
  int row_right(int j) const { return right_.at(j); }

  bool on_upper(int x, int y) const {
    return x >= 0 && x <= m_ && top_[x] <= y && y <= top_[x + 1];
  }
  bool on_lower(int x, int y) const {
    return x >= 0 && x <= m_ && bot_[x] <= y && y <= bot_[x + 1];
  }

  friend bool operator==(const ParaPolyomino& p, const ParaPolyomino& q) {
    return p.upper_ == q.upper_ && p.lower_ == q.lower_;
  }
  /// Canonical order: lexicographic on the upper word with N < E, then the lower word.
  friend std::strong_ordering operator<=>(const ParaPolyomino& p, const ParaPolyomino& q) {
    if (auto c = word_cmp(p.upper_, q.upper_); c != 0) return c;
    return word_cmp(p.lower_, q.lower_);
  }

  static std::strong_ordering word_cmp(const std::string& u, const std::string& v) {
    auto key = [](char c) { return c == 'N' ? 0 : 1; };
    for (std::size_t i = 0; i < std::min(u.size(), v.size()); ++i) {
      if (u[i] != v[i]) return key(u[i]) <=> key(v[i]);
    }
    return u.size() <=> v.size();
  }

 private:
  ParaPolyomino(std::string upper, std::string lower, int m, int n)
      : m_(m), n_(n), upper_(std::move(upper)), lower_(std::move(lower)) {
    top_ = e_heights(upper_);
    bot_ = e_heights(lower_);
    left_.assign(n_ + 1, 0);
    right_.assign(n_ + 1, 0);
    for (int j = 1; j <= n_; ++j) {
      int l = 1;
      while (top_[l] < j) ++l;
      int r = m_;
      while (bot_[r] >= j) --r;
      left_[j] = l;
      right_[j] = r;
    }
  }

  // y-coordinate of each E step, padded with 0 in front and n at the back.
  std::vector<int> e_heights(const std::string& w) const {
    std::vector<int> h{0};
    int y = 0;
    for (char c : w) {
      if (c == 'N') ++y;
      else h.push_back(y);
    }
    h.push_back(n_);
    return h;
  }

  int m_ = 1;
  int n_ = 1;
  std::string upper_;
  std::string lower_;
  std::vector<int> top_;
  std::vector<int> bot_;
  std::vector<int> left_;
  std::vector<int> right_;
};

inline ParaPolyomino para_from_paths(std::string_view upper, std::string_view lower) {
  return ParaPolyomino::from_paths(upper, lower);
}

inline int area(const ParaPolyomino& p) {
  int s = 0;
  for (int i = 1; i <= p.m(); ++i) s += p.column_top(i) - p.column_bottom(i);
  return s;
}

inline int upper_area(const ParaPolyomino& p) {
  int s = 0;
  for (int i = 1; i <= p.m(); ++i) s += p.n() - p.column_top(i);
  return s;
}

inline int lower_area(const ParaPolyomino& p) {
  int s = 0;
  for (int i = 1; i <= p.m(); ++i) s += p.column_bottom(i);
  return s;
}

inline bool is_ribbon(const ParaPolyomino& p) { return area(p) == p.m() + p.n() - 1; }

inline CellSet cells(const ParaPolyomino& p) {
  std::vector<Cell> c;
  for (int i = 1; i <= p.m(); ++i)
    for (int j = p.column_bottom(i) + 1; j <= p.column_top(i); ++j) c.push_back({i, j});
  return CellSet(p.m(), p.n(), std::move(c));
}

/// Intersection of the column diagram (heights 1+a_i, last column full) with the
/// row diagram (widths 1+b_j).
inline CellSet cells_from_heights(const HeightSeqs& h) {
  h.validate();
  std::vector<Cell> c;
  for (int i = 1; i <= h.m; ++i) {
    const int col_h = i < h.m ? 1 + h.a[i - 1] : h.n;
    for (int j = 1; j <= col_h; ++j) {
      if (i <= 1 + h.b[j - 1]) c.push_back({i, j});
    }
  }
  return CellSet(h.m, h.n, std::move(c));
}

inline bool is_para_sequences(const HeightSeqs& h) {
  h.validate();
  const int m = h.m, n = h.n;
  auto a = [&](int i) { return i == m ? n - 1 : h.a[i - 1]; };
  auto b = [&](int j) { return h.b[j - 1]; };
  for (int i = 1; i <= m - 1; ++i) {
    if (!(i <= b(1 + a(i)))) return false;
  }
  for (int i = 1; i <= n - 1; ++i) {
    if (!(i <= a(1 + b(i)))) return false;
  }
  return b(n) == m - 1;
}

/// lambda: m weakly decreasing entries in [0, n]; mu: n weakly decreasing entries in [0, m].
inline bool is_para_partitions(const std::vector<int>& lambda, const std::vector<int>& mu) {
  const int m = static_cast<int>(lambda.size());
  const int n = static_cast<int>(mu.size());
  if (m < 1 || n < 1) throw Error(Errc::invalid_argument, "empty partition");
  for (int i = 0; i < m; ++i) {
    if (lambda[i] < 0 || lambda[i] > n || (i > 0 && lambda[i] > lambda[i - 1]))
      throw Error(Errc::invalid_argument, "lambda must be weakly decreasing in [0, n]");
  }
  for (int j = 0; j < n; ++j) {
    if (mu[j] < 0 || mu[j] > m || (j > 0 && mu[j] > mu[j - 1]))
      throw Error(Errc::invalid_argument, "mu must be weakly decreasing in [0, m]");
  }
  if (lambda[m - 1] != 0 || mu[n - 1] != 0) return false;
  // An index of 0 refers to an entry that does not exist, so the condition fails.
  for (int i = 1; i < m; ++i) {
    const int k = n - lambda[i - 1];
    if (k < 1 || !(mu[k - 1] < m - i)) return false;
  }
  for (int i = 1; i < n; ++i) {
    const int k = m - mu[i - 1];
    if (k < 1 || !(lambda[k - 1] < n - i)) return false;
  }
  return true;
}

/// Column heights and row widths minus one; the heights read back by f_inverse.
inline HeightSeqs height_seqs(const ParaPolyomino& p) {
  HeightSeqs h;
  h.m = p.m();
  h.n = p.n();
  for (int i = 1; i < p.m(); ++i) h.a.push_back(p.column_top(i) - 1);
  for (int j = 1; j <= p.n(); ++j) h.b.push_back(p.row_right(j) - 1);
  return h;
}

/// Bounce path from (m-1, n) to (0, 0) as a word over {S, W}.
inline std::string bounce_path(const ParaPolyomino& p) {
  std::string w;
  int x = p.m() - 1, y = p.n();
  bool south = true;
  while (x > 0 || y > 0) {
    if (south) {
      --y;
      w.push_back('S');
      if (p.on_lower(x, y)) south = false;
    } else {
      --x;
      w.push_back('W');
      if (p.on_upper(x, y)) south = true;
    }
  }
  return w;
}

inline BounceSeq bounce_seq_of_word(std::string_view w) {
  BounceSeq r;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i == 0 || w[i] != w[i - 1]) r.push_back(0);
    ++r.back();
  }
  return r;
}

inline BounceSeq bounce_seq(const ParaPolyomino& p) { return bounce_seq_of_word(bounce_path(p)); }

/// Odd-indexed runs (c_1, c_3, ...): the south runs.
inline std::vector<int> obounce(const BounceSeq& c) {
  std::vector<int> r;
  for (std::size_t i = 0; i < c.size(); i += 2) r.push_back(c[i]);
  return r;
}

/// Even-indexed runs (c_2, c_4, ...): the west runs.
inline std::vector<int> ebounce(const BounceSeq& c) {
  std::vector<int> r;
  for (std::size_t i = 1; i < c.size(); i += 2) r.push_back(c[i]);
  return r;
}

inline std::int64_t parabounce(const BounceSeq& c) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += static_cast<std::int64_t>((i + 2) / 2) * c[i];
  return s;
}

inline std::int64_t parabounce(const ParaPolyomino& p) { return parabounce(bounce_seq(p)); }

struct BounceCharacterization {
  std::vector<int> x;
  std::vector<int> y;
  friend bool operator==(const BounceCharacterization&, const BounceCharacterization&) = default;
};

/// Corner sequences of the bounce path: x holds the columns where west runs end,
/// y the rows where south runs end, both increasing and padded to length k+2.
inline BounceCharacterization bounce_charact(const ParaPolyomino& p) {
  std::vector<int> xs{p.m() - 1}, ys{p.n()};
  int x = p.m() - 1, y = p.n();
  const std::string w = bounce_path(p);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 'S') --y;
    else --x;
    if (i + 1 == w.size() || w[i + 1] != w[i]) {
      if (w[i] == 'S') ys.push_back(y);
      else xs.push_back(x);
    }
  }
  std::reverse(xs.begin(), xs.end());
  std::reverse(ys.begin(), ys.end());
  xs.push_back(p.m());
  if (ys.size() < xs.size()) ys.insert(ys.begin(), 0);
  return {xs, ys};
}

/// Conditions (i)-(iv) of the bounce-path characterisation for given corner sequences.
inline bool satisfies_bounce_charact(const HeightSeqs& h, const std::vector<int>& x,
                                     const std::vector<int>& y) {
  h.validate();
  const int m = h.m, n = h.n;
  if (x.size() < 2 || x.size() != y.size()) return false;
  const int k = static_cast<int>(x.size()) - 2;
  if (x[0] != 0 || x[k] != m - 1 || x[k + 1] != m) return false;
  for (int j = 0; j < k + 1; ++j)
    if (!(x[j] < x[j + 1])) return false;
  if (y[0] != 0 || y[k + 1] != n) return false;
  if (k >= 1 && !(y[0] <= y[1])) return false;
  for (int j = 1; j < k + 1; ++j)
    if (!(y[j] < y[j + 1])) return false;
  for (int j = 0; j < k; ++j) {
    for (int i = 1 + x[j]; i <= x[j + 1]; ++i) {
      const int v = 1 + h.a[i - 1];
      if (v < 1 + y[j + 1] || v > y[j + 2]) return false;
    }
  }
  for (int j = 0; j <= k; ++j) {
    for (int i = 1 + y[j]; i <= y[j + 1]; ++i) {
      const int v = 1 + h.b[i - 1];
      if (v < 1 + x[j] || v > x[j + 1]) return false;
    }
  }
  return true;
}

/// d_k = number of cells (i, j) with i + j - 1 = k, for k = 1..m+n-1.
inline std::vector<int> diaglen(const ParaPolyomino& p) {
  std::vector<int> d(p.m() + p.n() - 1, 0);
  for (int i = 1; i <= p.m(); ++i)
    for (int j = p.column_bottom(i) + 1; j <= p.column_top(i); ++j) ++d[i + j - 2];
  return d;
}

/// Reflection in the main diagonal, Para_{m,n} -> Para_{n,m}.
inline ParaPolyomino transpose(const ParaPolyomino& p) {
  auto swap_ne = [](const std::string& w) {
    std::string r = w;
    for (char& c : r) c = c == 'N' ? 'E' : 'N';
    return r;
  };
  return ParaPolyomino::from_paths(swap_ne(p.lower()), swap_ne(p.upper()));
}

namespace detail {

template <class F>
void lower_words(const std::string& upper, std::string& cur, int n_left, int e_left, int lead,
                 F& f) {
  // lead = (#N in upper prefix) - (#N in cur); must stay >= 1 until the last step.
  const std::size_t k = cur.size();
  if (k == upper.size()) {
    f(cur);
    return;
  }
  const int up_n = upper[k] == 'N';
  if (n_left > 0) {
    const int next = lead + up_n - 1;
    if (next >= 1 || k + 1 == upper.size()) {
      cur.push_back('N');
      lower_words(upper, cur, n_left - 1, e_left, next, f);
      cur.pop_back();
    }
  }
  if (e_left > 0) {
    const int next = lead + up_n;
    if (next >= 1 || k + 1 == upper.size()) {
      cur.push_back('E');
      lower_words(upper, cur, n_left, e_left - 1, next, f);
      cur.pop_back();
    }
  }
}

template <class F>
void middle_words(std::string& cur, int n_left, int e_left, F& f) {
  if (n_left == 0 && e_left == 0) {
    f(cur);
    return;
  }
  if (n_left > 0) {
    cur.push_back('N');
    middle_words(cur, n_left - 1, e_left, f);
    cur.pop_back();
  }
  if (e_left > 0) {
    cur.push_back('E');
    middle_words(cur, n_left, e_left - 1, f);
    cur.pop_back();
  }
}

}  // namespace detail

/// Candidate upper words N w E (w any arrangement of n-1 N's and m-1 E's), in canonical order.
inline std::vector<std::string> upper_words(int m, int n) {
  std::vector<std::string> out;
  std::string cur = "N";
  auto emit = [&](const std::string& w) { out.push_back(w + "E"); };
  detail::middle_words(cur, n - 1, m - 1, emit);
  return out;
}

/// Visits every polyomino of Para_{m,n} whose upper path is `upper`, in canonical order.
template <class F>
void for_each_para_with_upper(int m, int n, const std::string& upper, F&& f) {
  std::string cur;
  auto emit = [&](const std::string& low) { f(ParaPolyomino::from_paths(upper, low)); };
  detail::lower_words(upper, cur, n, m, 0, emit);
}

/// Visits every polyomino of Para_{m,n} once, in canonical order. No cap check.
template <class F>
void for_each_para(int m, int n, F&& f) {
  if (m < 1 || n < 1) throw Error(Errc::invalid_argument, "m and n must be positive");
  for (const std::string& u : upper_words(m, n)) for_each_para_with_upper(m, n, u, f);
}

inline std::vector<ParaPolyomino> enumerate_para(int m, int n,
                                                 const Limits& limits = Limits::from_env()) {
  if (m < 1 || n < 1) throw Error(Errc::invalid_argument, "m and n must be positive");
  limits.require(narayana_number(m + n - 1, m), "enumerate_para");
  std::vector<ParaPolyomino> out;
  for_each_para(m, n, [&](const ParaPolyomino& p) { out.push_back(p); });
  return out;
}

}  // namespace sandpoly
