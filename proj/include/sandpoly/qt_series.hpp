#pragma once

#include <utility>
#include <vector>

#include "sandpoly/bivar_poly.hpp"
#include "sandpoly/error.hpp"

namespace sandpoly {

/// Truncated power series in z with BivarPoly coefficients; coeffs[k] multiplies z^k.
struct QtSeries {
  int order = 0;
  std::vector<BivarPoly> coeffs;
};

struct QtzTerm {
  int q = 0;
  int t = 0;
  int z = 0;
  BigInt c;
};

/// numerator / prod (1 - q^a t^b z) over the listed (a, b).
struct RationalQt {
  std::vector<QtzTerm> numerator;
  std::vector<std::pair<int, int>> factors;
};

/// Yields the z^0, z^1, ... coefficients of one rational function, keeping only
/// the previous coefficient of each partial product in memory.
class RationalSeriesStream {
 public:
  explicit RationalSeriesStream(RationalQt r) : r_(std::move(r)), prev_(r_.factors.size()) {
    for (const QtzTerm& x : r_.numerator) {
      if (x.z < 0) throw Error(Errc::invalid_argument, "negative power of z");
      if (x.z >= static_cast<int>(num_.size())) num_.resize(x.z + 1);
      num_[x.z].push_back({x.q, x.t, x.c});
    }
  }

  BivarPoly next() {
    BivarPoly cur = k_ < static_cast<int>(num_.size()) ? BivarPoly::from_terms(num_[k_]) : BivarPoly{};
    // multiplying by 1/(1 - c z): s'_k = s_k + c s'_{k-1}
    for (std::size_t f = 0; f < r_.factors.size(); ++f) {
      if (k_ > 0) cur += prev_[f].shifted(r_.factors[f].first, r_.factors[f].second);
      prev_[f] = cur;
    }
    ++k_;
    return cur;
  }

 private:
  RationalQt r_;
  std::vector<std::vector<BivarPoly::Term>> num_;
  std::vector<BivarPoly> prev_;
  int k_ = 0;
};

/// Streams the coefficients of a sum of rational functions.
class SeriesSumStream {
 public:
  explicit SeriesSumStream(const std::vector<RationalQt>& parts) {
    for (const auto& p : parts) parts_.emplace_back(p);
  }
  BivarPoly next() {
    BivarPoly s;
    for (auto& p : parts_) s += p.next();
    return s;
  }

 private:
  std::vector<RationalSeriesStream> parts_;
};

inline QtSeries rational_qt_series(const std::vector<QtzTerm>& numerator,
                                   const std::vector<std::pair<int, int>>& factors, int order) {
  if (order < 0) throw Error(Errc::invalid_argument, "order must be non-negative");
  RationalSeriesStream s(RationalQt{numerator, factors});
  QtSeries out;
  out.order = order;
  for (int k = 0; k <= order; ++k) out.coeffs.push_back(s.next());
  return out;
}

inline QtSeries rational_qt_series(const std::vector<RationalQt>& parts, int order) {
  if (order < 0) throw Error(Errc::invalid_argument, "order must be non-negative");
  SeriesSumStream s(parts);
  QtSeries out;
  out.order = order;
  for (int k = 0; k <= order; ++k) out.coeffs.push_back(s.next());
  return out;
}

}  // namespace sandpoly
