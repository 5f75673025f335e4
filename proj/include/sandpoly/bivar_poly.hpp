#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sandpoly/combinatorics.hpp"
#include "sandpoly/error.hpp"

namespace sandpoly {

/// Sparse polynomial in q and t with exact integer coefficients.
/// Terms are kept sorted by (deg_q, deg_t) with no zero coefficients.
class BivarPoly {
 public:
  struct Term {
    int q = 0;
    int t = 0;
    BigInt c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  BivarPoly() = default;

  static BivarPoly monomial(int q, int t, BigInt c = 1) {
    if (q < 0 || t < 0) throw Error(Errc::invalid_argument, "negative exponent");
    BivarPoly p;
    if (c != 0) p.terms_.push_back({q, t, std::move(c)});
    return p;
  }

  /// Collects arbitrary (q, t, c) triples, merging duplicates.
  static BivarPoly from_terms(std::vector<Term> ts) {
    for (const Term& x : ts)
      if (x.q < 0 || x.t < 0) throw Error(Errc::invalid_argument, "negative exponent");
    std::sort(ts.begin(), ts.end(), key_less);
    BivarPoly p;
    for (Term& x : ts) {
      if (!p.terms_.empty() && same_key(p.terms_.back(), x)) p.terms_.back().c += x.c;
      else p.terms_.push_back(std::move(x));
    }
    p.drop_zeros();
    return p;
  }

  /// Dense counts: counts[a][b] is the coefficient of q^a t^b.
  template <class Int>
  static BivarPoly from_dense(const std::vector<std::vector<Int>>& counts) {
    BivarPoly p;
    for (std::size_t a = 0; a < counts.size(); ++a)
      for (std::size_t b = 0; b < counts[a].size(); ++b)
        if (counts[a][b] != 0)
          p.terms_.push_back({static_cast<int>(a), static_cast<int>(b), BigInt(counts[a][b])});
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  BigInt coeff(int q, int t) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{q, t, 0}, key_less);
    return it != terms_.end() && it->q == q && it->t == t ? it->c : BigInt(0);
  }

  BivarPoly operator+(const BivarPoly& o) const { return merge(o, 1); }
  BivarPoly operator-(const BivarPoly& o) const { return merge(o, -1); }
  BivarPoly& operator+=(const BivarPoly& o) { return *this = *this + o; }
  BivarPoly& operator-=(const BivarPoly& o) { return *this = *this - o; }

  BivarPoly operator*(const BivarPoly& o) const {
    std::map<std::pair<int, int>, BigInt> acc;
    for (const Term& x : terms_)
      for (const Term& y : o.terms_) acc[{x.q + y.q, x.t + y.t}] += x.c * y.c;
    BivarPoly p;
    for (auto& [k, c] : acc)
      if (c != 0) p.terms_.push_back({k.first, k.second, c});
    return p;
  }

  BivarPoly scaled(const BigInt& s) const {
    if (s == 0) return {};
    BivarPoly p = *this;
    for (Term& x : p.terms_) x.c *= s;
    return p;
  }

  /// Multiply by q^a t^b.
  BivarPoly shifted(int a, int b) const {
    BivarPoly p = *this;
    for (Term& x : p.terms_) {
      x.q += a;
      x.t += b;
      if (x.q < 0 || x.t < 0) throw Error(Errc::invalid_argument, "negative exponent");
    }
    return p;
  }

  BigInt eval_at(const BigInt& q0, const BigInt& t0) const {
    BigInt s = 0;
    for (const Term& x : terms_) s += x.c * pow(q0, x.q) * pow(t0, x.t);
    return s;
  }

  BivarPoly swap_qt() const {
    std::vector<Term> ts = terms_;
    for (Term& x : ts) std::swap(x.q, x.t);
    return from_terms(std::move(ts));
  }

  /// q -> q^kq, t -> t^kt.
  BivarPoly substitute(int kq, int kt) const {
    if (kq < 1 || kt < 1) throw Error(Errc::invalid_argument, "substitution powers must be positive");
    BivarPoly p = *this;
    for (Term& x : p.terms_) {
      x.q *= kq;
      x.t *= kt;
    }
    return p;
  }

  /// Specialise t = 1, keeping a polynomial in q (stored with t-degree 0).
  BivarPoly at_t_one() const {
    std::vector<Term> ts = terms_;
    for (Term& x : ts) x.t = 0;
    return from_terms(std::move(ts));
  }

  int min_q() const { return fold([](const Term& x) { return x.q; }, true); }
  int max_q() const { return fold([](const Term& x) { return x.q; }, false); }
  int min_t() const { return fold([](const Term& x) { return x.t; }, true); }
  int max_t() const { return fold([](const Term& x) { return x.t; }, false); }

  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BivarPoly& p) {
    if (p.terms_.empty()) return os << "0";
    bool first = true;
    for (const Term& x : p.terms_) {
      if (!first) os << (x.c < 0 ? " - " : " + ");
      else if (x.c < 0) os << "-";
      first = false;
      const BigInt a = abs(x.c);
      const bool bare = x.q == 0 && x.t == 0;
      if (a != 1 || bare) os << a;
      if (x.q > 0) os << "q" << (x.q > 1 ? "^" + std::to_string(x.q) : "");
      if (x.t > 0) os << "t" << (x.t > 1 ? "^" + std::to_string(x.t) : "");
    }
    return os;
  }

 private:
  static bool key_less(const Term& a, const Term& b) {
    return a.q != b.q ? a.q < b.q : a.t < b.t;
  }
  static bool same_key(const Term& a, const Term& b) { return a.q == b.q && a.t == b.t; }

  static BigInt pow(const BigInt& b, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  }

  template <class Get>
  int fold(Get get, bool want_min) const {
    if (terms_.empty()) throw Error(Errc::invalid_argument, "zero polynomial has no degree");
    int v = get(terms_.front());
    for (const Term& x : terms_) v = want_min ? std::min(v, get(x)) : std::max(v, get(x));
    return v;
  }

  void drop_zeros() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& x) { return x.c == 0; }),
                 terms_.end());
  }

  BivarPoly merge(const BivarPoly& o, int sign) const {
    BivarPoly p;
    p.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && key_less(terms_[i], o.terms_[j]))) {
        p.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || key_less(o.terms_[j], terms_[i])) {
        Term x = o.terms_[j++];
        if (sign < 0) x.c = -x.c;
        p.terms_.push_back(std::move(x));
      } else {
        Term x = terms_[i++];
        if (sign < 0) x.c -= o.terms_[j++].c;
        else x.c += o.terms_[j++].c;
        if (x.c != 0) p.terms_.push_back(std::move(x));
      }
    }
    return p;
  }

  std::vector<Term> terms_;
};

/// Appendix-style view F = sum m_ij q^{kq+i} t^{kt+j}.
struct ShiftedMatrix {
  int shift_q = 0;
  int shift_t = 0;
  std::vector<std::vector<BigInt>> matrix;
  friend bool operator==(const ShiftedMatrix&, const ShiftedMatrix&) = default;
};

inline ShiftedMatrix to_shifted_matrix(const BivarPoly& p) {
  ShiftedMatrix s;
  if (p.is_zero()) return s;
  s.shift_q = p.min_q();
  s.shift_t = p.min_t();
  const int rows = p.max_q() - s.shift_q + 1;
  const int cols = p.max_t() - s.shift_t + 1;
  s.matrix.assign(rows, std::vector<BigInt>(cols, 0));
  for (const auto& x : p.terms()) s.matrix[x.q - s.shift_q][x.t - s.shift_t] = x.c;
  return s;
}

inline BivarPoly from_shifted_matrix(int shift_q, int shift_t,
                                     const std::vector<std::vector<BigInt>>& m) {
  std::vector<BivarPoly::Term> ts;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != 0)
        ts.push_back({shift_q + static_cast<int>(i), shift_t + static_cast<int>(j), m[i][j]});
  return BivarPoly::from_terms(std::move(ts));
}

}  // namespace sandpoly
