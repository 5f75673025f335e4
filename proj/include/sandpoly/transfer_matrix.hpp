#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "sandpoly/bivar_poly.hpp"
#include "sandpoly/error.hpp"
#include "sandpoly/limits.hpp"

namespace sandpoly {

/// F_{m,1}, ..., F_{m,n_max} by a row transfer matrix. Rows are added from the
/// top; the state is the last row [l, r] together with where the bounce path
/// crosses the boundary below it and its current weight. Polynomials of equal
/// states are merged, so the cost is polynomial in n_max for fixed m.
inline std::vector<BivarPoly> transfer_matrix_F(int m, int n_max, const Limits& limits = Limits::from_env()) {
  if (m < 1 || n_max < 1) throw Error(Errc::invalid_argument, "m and n must be positive");
  if (m > limits.max_transfer_width)
    throw Error(Errc::resource_limit, "transfer matrix width " + std::to_string(m) + " exceeds " +
                                          std::to_string(limits.max_transfer_width));
  using State = std::array<int, 4>;  // l, r, x, w
  std::map<State, BivarPoly> cur{{{m, m, m - 1, 1}, BivarPoly::monomial(0, 0)}};
  std::vector<BivarPoly> out;
  for (int d = 1; d <= n_max; ++d) {
    std::map<State, BivarPoly> next;
    BivarPoly done;
    for (const auto& [s, poly] : cur) {
      const auto [L, R, x0, w0] = s;
      for (int l = 1; l <= L; ++l) {
        for (int r = L; r <= R; ++r) {
          int x = x0, w = w0, gain = 0;
          if (r <= x && x <= R) {
            gain += w * (x - (L - 1));
            x = L - 1;
            ++w;
          }
          gain += w;
          const BivarPoly p = poly.shifted(r - l + 1, gain);
          if (l == 1) done += p.shifted(0, w * x);
          if (d < n_max) next[{l, r, x, w}] += p;
        }
      }
    }
    out.push_back(std::move(done));
    cur.swap(next);
  }
  return out;
}

}  // namespace sandpoly
