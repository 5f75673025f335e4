#pragma once

#include <utility>
#include <vector>

#include "sandpoly/bivar_poly.hpp"
#include "sandpoly/error.hpp"
#include "sandpoly/qt_series.hpp"

namespace sandpoly {

/// F_{m,n} = sum matrix[i][j] q^(shift+i) t^(shift+j) as tabulated.
struct AppendixTable {
  int m = 0;
  int n = 0;
  int printed_shift = 0;  // exponent of qt as printed
  int shift = 0;          // exponent of qt; equals m+n-1, the minimum area
  std::vector<std::vector<int>> matrix;

  BivarPoly poly() const {
    std::vector<std::vector<BigInt>> big;
    for (const auto& r : matrix) big.emplace_back(r.begin(), r.end());
    return from_shifted_matrix(shift, shift, big);
  }
};

inline const std::vector<AppendixTable>& appendix_tables() {
  static const std::vector<AppendixTable> t = {
      {2, 2, 3, 3, {{1, 1}, {1, 0}}},
      {3, 3, 5, 5, {{1, 1, 2, 1, 1}, {1, 2, 2, 1, 0}, {2, 2, 1, 0, 0}, {1, 1, 0, 0, 0}, {1, 0, 0, 0, 0}}},
      {2, 3, 4, 4, {{1, 1, 1}, {1, 1, 0}, {1, 0, 0}}},
      {2, 4, 6, 5, {{1, 1, 1, 1}, {1, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}}},
      {3, 4, 6, 6, {{1, 1, 2, 2, 2, 1, 1}, {1, 2, 3, 3, 2, 1, 0}, {2, 3, 4, 2, 1, 0, 0}, {2, 3, 2, 1, 0, 0, 0}, {2, 2, 1, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0}}},
      {2, 5, 6, 6, {{1, 1, 1, 1, 1}, {1, 1, 1, 1, 0}, {1, 1, 1, 0, 0}, {1, 1, 0, 0, 0}, {1, 0, 0, 0, 0}}},
      {4, 4, 7, 7, {{1, 1, 2, 3, 3, 3, 3, 2, 1, 1}, {1, 2, 4, 5, 6, 5, 4, 2, 1, 0}, {2, 4, 7, 8, 7, 5, 2, 1, 0, 0}, {3, 5, 8, 7, 5, 2, 1, 0, 0, 0}, {3, 6, 7, 5, 2, 1, 0, 0, 0, 0}, {3, 5, 5, 2, 1, 0, 0, 0, 0, 0}, {3, 4, 2, 1, 0, 0, 0, 0, 0, 0}, {2, 2, 1, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {3, 5, 7, 7, {{1, 1, 2, 2, 3, 2, 2, 1, 1}, {1, 2, 3, 4, 4, 3, 2, 1, 0}, {2, 3, 5, 5, 4, 2, 1, 0, 0}, {2, 4, 5, 4, 2, 1, 0, 0, 0}, {3, 4, 4, 2, 1, 0, 0, 0, 0}, {2, 3, 2, 1, 0, 0, 0, 0, 0}, {2, 2, 1, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0, 0}}},
      {2, 6, 7, 7, {{1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 0}, {1, 1, 1, 1, 0, 0}, {1, 1, 1, 0, 0, 0}, {1, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}}},
  };
  return t;
}

inline const AppendixTable& appendix_table(int m, int n) {
  for (const auto& x : appendix_tables())
    if (x.m == m && x.n == n) return x;
  throw Error(Errc::invalid_argument, "no table for F_{" + std::to_string(m) + "," + std::to_string(n) + "}");
}

namespace detail {

// (1,1), (2,2) and both orientations of each listed pair

inline std::vector<std::pair<int, int>> paired_factors(std::vector<std::pair<int, int>> pairs) {
  std::vector<std::pair<int, int>> f{{1, 1}, {2, 2}};
  for (auto [i, j] : pairs) {
    f.emplace_back(i, j);
    f.emplace_back(j, i);
  }
  return f;
}

}  // namespace detail

/// sum_n F_{2,n} z^n = q^2 t^2 z / ((1-qtz)(1-q^2tz)(1-qt^2z)).
inline std::vector<RationalQt> f2_star() {
  return {RationalQt{{{2, 2, 1, 1}}, {{1, 1}, {2, 1}, {1, 2}}}};
}

/// q^3t^3z (1 + q^3tz/(1-q^3tz) + qt^3z/(1-qt^3z)), as printed.
inline std::vector<RationalQt> f3_star_printed() {
  return {RationalQt{{{3, 3, 1, 1}}, {}},
          RationalQt{{{6, 4, 2, 1}}, {{3, 1}}},
          RationalQt{{{4, 6, 2, 1}}, {{1, 3}}}};
}

/// q^3t^3z (1 - q^4t^4z^2) over the same kind of denominator as F_{4,*}.
inline std::vector<RationalQt> f3_star() {
  return {RationalQt{{{3, 3, 1, 1}, {7, 7, 3, -1}}, detail::paired_factors({{1, 2}, {1, 3}})}};
}

inline std::vector<RationalQt> f4_star() {
  return {RationalQt{{{4, 4, 1, 1}, {7, 6, 2, 1}, {6, 7, 2, 1}, {9, 8, 3, -1}, {8, 9, 3, -1}, {11, 11, 4, -1}},
                     detail::paired_factors({{1, 2}, {1, 3}, {1, 4}})}};
}

inline std::vector<RationalQt> f5_star() {
  return {RationalQt{{
      {5, 5, 1, 1}, {7, 8, 2, 1}, {8, 7, 2, 1}, {7, 9, 2, 1}, {9, 7, 2, 1}, {8, 8, 2, 1},
      {12, 14, 4, -1}, {14, 12, 4, -1}, {13, 13, 4, -1}, {13, 14, 4, -1}, {14, 13, 4, -1},
      {16, 16, 5, -1}
                     },
                     detail::paired_factors({{1, 2}, {1, 3}, {1, 4}, {1, 5}})}};
}

inline std::vector<RationalQt> f6_star() {
  return {RationalQt{{
      {6, 6, 1, 1}, {9, 9, 2, 1}, {8, 10, 2, 1}, {10, 8, 2, 1}, {8, 11, 2, 1}, {9, 10, 2, 1},
      {10, 9, 2, 1}, {11, 8, 2, 1}, {12, 12, 3, -1}, {13, 10, 3, -1}, {16, 15, 4, -2},
      {17, 15, 4, -1}, {20, 17, 5, 1}, {19, 18, 5, 1}, {23, 20, 6, 1}, {16, 16, 4, -1},
      {17, 14, 4, -1}, {21, 16, 5, 1}, {22, 20, 6, 1}, {24, 24, 7, -1}, {16, 21, 5, 1},
      {15, 16, 4, -2}, {17, 20, 5, 1}, {18, 19, 5, 1}, {23, 25, 7, -1}, {20, 23, 6, 1},
      {14, 17, 4, -1}, {15, 17, 4, -1}, {21, 22, 6, 1}, {22, 21, 6, 1}, {25, 23, 7, -1},
      {19, 19, 5, -1}, {27, 27, 8, -1}, {13, 16, 4, -1}, {11, 12, 3, -1}, {11, 13, 3, -1},
      {17, 18, 5, 2}, {15, 14, 4, -1}, {13, 17, 4, -1}, {16, 18, 5, 1}, {14, 14, 4, 1},
      {17, 13, 4, -1}, {18, 17, 5, 2}, {16, 14, 4, -1}, {18, 18, 5, 3}, {18, 16, 5, 1},
      {14, 16, 4, -1}, {17, 17, 5, 1}, {20, 22, 6, 1}, {23, 24, 7, -1}, {16, 20, 5, 1},
      {24, 23, 7, -1}, {10, 13, 3, -1}, {14, 15, 4, -1}, {16, 19, 5, 1}, {19, 16, 5, 1},
      {12, 17, 4, -1}, {17, 19, 5, 1}, {15, 15, 4, -3}, {19, 17, 5, 1}, {25, 22, 7, -1},
      {21, 21, 6, 1}, {20, 16, 5, 1}, {12, 11, 3, -1}, {16, 13, 4, -1}, {17, 12, 4, -1},
      {13, 11, 3, -1}, {22, 25, 7, -1}
                     },
                     detail::paired_factors({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}})}};
}

}  // namespace sandpoly
