#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "sandpoly/bivar_poly.hpp"
#include "sandpoly/combinatorics.hpp"
#include "sandpoly/error.hpp"
#include "sandpoly/limits.hpp"
#include "sandpoly/polyomino.hpp"

namespace sandpoly {

namespace detail {

using StatCounts = std::map<std::pair<int, int>, std::uint64_t>;

inline BivarPoly poly_of_counts(const StatCounts& c) {
  std::vector<BivarPoly::Term> ts;
  ts.reserve(c.size());
  for (const auto& [k, v] : c) ts.push_back({k.first, k.second, BigInt(v)});
  return BivarPoly::from_terms(std::move(ts));
}

}  // namespace detail

/// F_{m,n}(q,t): sum of q^area t^parabounce over Para_{m,n}.
/// With threads > 1 the upper words are split into contiguous chunks.
inline BivarPoly narayana_poly(int m, int n, const Limits& limits = Limits::from_env(),
                               unsigned threads = 1) {
  if (m < 1 || n < 1) throw Error(Errc::invalid_argument, "m and n must be positive");
  limits.require(narayana_number(m + n - 1, m), "narayana_poly");
  const std::vector<std::string> uppers = upper_words(m, n);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(uppers.size())));
  std::vector<detail::StatCounts> parts(threads);
  auto work = [&](unsigned id) {
    const std::size_t lo = uppers.size() * id / threads;
    const std::size_t hi = uppers.size() * (id + 1) / threads;
    for (std::size_t i = lo; i < hi; ++i) {
      for_each_para_with_upper(m, n, uppers[i], [&](const ParaPolyomino& p) {
        ++parts[id][{area(p), static_cast<int>(parabounce(p))}];
      });
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }
  detail::StatCounts total;
  for (const auto& part : parts)
    for (const auto& [k, v] : part) total[k] += v;
  return detail::poly_of_counts(total);
}

/// Dense (area, parabounce) histogram for one height.
struct AreaBounceCounts {
  int n = 0;
  int area_lo = 0;
  int bounce_lo = 0;
  int bounce_span = 0;
  std::vector<std::uint64_t> cells;  // (area - area_lo) * bounce_span + (pb - bounce_lo)

  std::uint64_t at(int a, int b) const {
    const int i = a - area_lo, j = b - bounce_lo;
    if (i < 0 || j < 0 || j >= bounce_span) return 0;
    const std::size_t idx = static_cast<std::size_t>(i) * bounce_span + j;
    return idx < cells.size() ? cells[idx] : 0;
  }

  std::size_t nonzero() const {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](auto c) { return c != 0; }));
  }

  BivarPoly to_poly() const {
    std::vector<BivarPoly::Term> ts;
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
      if (cells[idx] == 0) continue;
      ts.push_back({area_lo + static_cast<int>(idx / bounce_span),
                    bounce_lo + static_cast<int>(idx % bounce_span), BigInt(cells[idx])});
    }
    return BivarPoly::from_terms(std::move(ts));
  }

  /// Exact comparison without materialising a BivarPoly.
  bool equals(const BivarPoly& p) const {
    if (p.size() != nonzero()) return false;
    for (const auto& x : p.terms())
      if (x.c < 0 || BigInt(at(x.q, x.t)) != x.c) return false;
    return true;
  }
};

/// F_{m,1}, ..., F_{m,n_max} by one breadth-first pass over polyominoes built
/// row by row from the top. Every polyomino is visited individually; its bounce
/// path is walked step by step through the path vertices on each row boundary.
/// f(n, counts) is called for n = 1..n_max in order.
template <class F>
void for_each_narayana_poly_by_rows(int m, int n_max, const Limits& limits, F&& f) {
  if (m < 1 || n_max < 1) throw Error(Errc::invalid_argument, "m and n must be positive");
  limits.require(narayana_number(m + n_max - 1, m), "narayana_poly");
  struct Node {
    std::int16_t l, r, x, w;  // last row [l, r]; bounce at (x, top of next row) heading south
    std::int32_t area, pb;
  };
  std::vector<Node> frontier{{static_cast<std::int16_t>(m), static_cast<std::int16_t>(m),
                              static_cast<std::int16_t>(m - 1), 1, 0, 0}};
  std::vector<Node> next;
  for (int d = 1; d <= n_max; ++d) {
    AreaBounceCounts counts;
    counts.n = d;
    counts.area_lo = d + m - 1;
    counts.bounce_lo = d + m - 1;
    counts.bounce_span = (m + 1) * (d + m) - counts.bounce_lo + 1;
    counts.cells.assign(static_cast<std::size_t>(m * d - counts.area_lo + 1) * counts.bounce_span, 0);
    next.clear();
    for (const Node& s : frontier) {
      const int L = s.l, R = s.r;
      for (int l = 1; l <= L; ++l) {
        for (int r = L; r <= R; ++r) {
          // the boundary below the old row carries lower vertices x in [r, R]
          // and upper vertices x in [l-1, L-1]
          int x = s.x, w = s.w, pb = s.pb;
          if (r <= x && x <= R) {
            while (!(l - 1 <= x && x <= L - 1)) {
              --x;
              pb += w;
            }
            ++w;
          }
          pb += w;  // south step through the new row
          const Node c{static_cast<std::int16_t>(l), static_cast<std::int16_t>(r),
                       static_cast<std::int16_t>(x), static_cast<std::int16_t>(w),
                       s.area + (r - l + 1), pb};
          if (l == 1) {
            // new row is row 1: walk west along y = 0 to the origin
            const int total = c.pb + c.w * c.x;
            ++counts.cells[static_cast<std::size_t>(c.area - counts.area_lo) * counts.bounce_span +
                           (total - counts.bounce_lo)];
          }
          if (d < n_max) next.push_back(c);
        }
      }
    }
    f(d, static_cast<const AreaBounceCounts&>(counts));
    frontier.swap(next);
  }
}

inline std::vector<BivarPoly> narayana_polys(int m, int n_max, const Limits& limits = Limits::from_env()) {
  std::vector<BivarPoly> out;
  for_each_narayana_poly_by_rows(m, n_max, limits,
                                 [&](int, const AreaBounceCounts& c) { out.push_back(c.to_poly()); });
  return out;
}

struct SymmetryReport {
  bool holds = true;
  struct Offending {
    int q = 0;
    int t = 0;
    BigInt lhs;
    BigInt rhs;
  };
  std::optional<Offending> first_offending;
};

/// Compares two polynomials; the first differing exponent pair in (q, t) order is reported.
inline SymmetryReport compare_polys(const BivarPoly& a, const BivarPoly& b) {
  SymmetryReport r;
  const BivarPoly d = a - b;
  if (!d.is_zero()) {
    const auto& x = d.terms().front();
    r.holds = false;
    r.first_offending = SymmetryReport::Offending{x.q, x.t, a.coeff(x.q, x.t), b.coeff(x.q, x.t)};
  }
  return r;
}

inline SymmetryReport check_qt_symmetry(const BivarPoly& f) { return compare_polys(f, f.swap_qt()); }

inline SymmetryReport check_qt_symmetry(int m, int n, const Limits& limits = Limits::from_env()) {
  return check_qt_symmetry(narayana_poly(m, n, limits));
}

inline SymmetryReport check_mn_symmetry(int m, int n, const Limits& limits = Limits::from_env()) {
  return compare_polys(narayana_poly(m, n, limits), narayana_poly(n, m, limits));
}

/// A_{m,n}: lower path E^m N^n, equivalently the bounce path is S^n W^{m-1}.
inline bool in_a_domain(const ParaPolyomino& p) {
  return p.lower() == std::string(p.m(), 'E') + std::string(p.n(), 'N');
}

/// The element of A_{m,n} with the given anti-diagonal lengths.
inline ParaPolyomino para_from_diaglen_a(int m, int n, const std::vector<int>& d) {
  if (static_cast<int>(d.size()) != m + n - 1) throw Error(Errc::invalid_argument, "diaglen has wrong length");
  auto at = [&](int i) { return i >= 1 && i <= m + n - 1 ? d[i - 1] : 0; };
  std::string up = "N";
  for (int i = 2; i <= m + n; ++i) {
    const bool rising = i <= m;
    const int prev = at(i - 1), cur = at(i);
    if (rising) {
      if (cur == prev + 1) up.push_back('N');
      else if (cur == prev) up.push_back('E');
      else throw Error(Errc::not_in_domain, "diaglen is not the profile of an A_{m,n} polyomino");
    } else {
      if (cur == prev) up.push_back('N');
      else if (cur == prev - 1) up.push_back('E');
      else throw Error(Errc::not_in_domain, "diaglen is not the profile of an A_{m,n} polyomino");
    }
  }
  ParaPolyomino p = [&] {
    try {
      return ParaPolyomino::from_paths(up, std::string(m, 'E') + std::string(n, 'N'));
    } catch (const Error&) {
      throw Error(Errc::not_in_domain, "diaglen is not the profile of an A_{m,n} polyomino");
    }
  }();
  if (diaglen(p) != d) throw Error(Errc::not_in_domain, "diaglen is not the profile of an A_{m,n} polyomino");
  return p;
}

/// A_{m,n} -> ribbons, swapping area and parabounce.
inline ParaPolyomino upsilon(const ParaPolyomino& p) {
  if (!in_a_domain(p)) throw Error(Errc::not_in_domain, "upsilon needs a polyomino with lower path E^m N^n");
  const int m = p.m(), n = p.n();
  const std::vector<int> d = diaglen(p);
  const int dm = d[m - 1];
  std::vector<int> x(dm + 1), y(dm + 1);
  for (int i = 0; i <= dm; ++i) {
    x[i] = 1 + static_cast<int>(std::count_if(d.begin(), d.begin() + (m - 1), [&](int v) { return v > dm - i; }));
    y[i] = static_cast<int>(std::count_if(d.begin() + (m - 1), d.end(), [&](int v) { return v > dm - i; }));
  }
  std::vector<Cell> cs;
  for (int i = 1; i <= dm; ++i) {
    for (int c = x[i - 1]; c <= x[i] - 1; ++c) cs.push_back({c, y[i - 1] + 1});
    for (int r = y[i - 1] + 1; r <= y[i]; ++r) cs.push_back({x[i], r});
  }
  auto out = ParaPolyomino::from_cells(CellSet(m, n, std::move(cs)));
  if (!out || !is_ribbon(*out)) throw Error(Errc::not_in_domain, "upsilon image is not a ribbon");
  return *out;
}

/// Ribbons -> A_{m,n}: diaglen (1^{c_2}, 2^{c_4}, ..., d^{c_{2d}}, d^{c_{2d-1}}, ..., 1^{c_1}).
inline ParaPolyomino upsilon_inv(const ParaPolyomino& p) {
  if (!is_ribbon(p)) throw Error(Errc::not_in_domain, "upsilon_inv needs a ribbon");
  const BounceSeq c = bounce_seq(p);
  const int runs_s = static_cast<int>(obounce(c).size());
  auto run = [&](int i) { return i <= static_cast<int>(c.size()) ? c[i - 1] : 0; };
  std::vector<int> d;
  for (int i = 1; i <= runs_s; ++i) d.insert(d.end(), run(2 * i), i);
  for (int i = runs_s; i >= 1; --i) d.insert(d.end(), run(2 * i - 1), i);
  return para_from_diaglen_a(p.m(), p.n(), d);
}

}  // namespace sandpoly
