#pragma once

#include <algorithm>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sandpoly/error.hpp"

namespace sandpoly {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// N(a,b) = (1/a) C(a,b) C(a,b-1); N(m+n-1, m) counts Para_{m,n}.
inline BigInt narayana_number(int a, int b) {
  if (a <= 0 || b <= 0 || b > a) return 0;
  return binomial(a, b) * binomial(a, b - 1) / a;
}

inline BigInt catalan(int n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

/// Stirling numbers of the second kind.
inline BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  if (n == 0 || k == 0) return (n == 0 && k == 0) ? 1 : 0;
  if (k > n) return 0;
  // row recurrence S(i,j) = j S(i-1,j) + S(i-1,j-1)
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

inline BigInt ipow(int base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace sandpoly
