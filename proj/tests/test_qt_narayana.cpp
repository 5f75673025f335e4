#include <gtest/gtest.h>

#include <functional>

#include "sandpoly/appendix_data.hpp"
#include "sandpoly/json_io.hpp"
#include "sandpoly/qt_narayana.hpp"
#include "sandpoly/transfer_matrix.hpp"

using namespace sandpoly;

namespace {

BivarPoly qt(int a, int b) { return BivarPoly::monomial(a, b); }

std::vector<BivarPoly> series_coeffs(const std::vector<RationalQt>& parts, int order) {
  return rational_qt_series(parts, order).coeffs;
}

// largest n <= n_max with Narayana(m+n-1, m) <= cap
int max_n_under(int m, const BigInt& cap, int n_max) {
  int n = 1;
  while (n < n_max && narayana_number(m + n, m) <= cap) ++n;
  return n;
}

}  // namespace

TEST(BivarPoly, Arithmetic) {
  EXPECT_EQ(qt(3, 4).swap_qt(), qt(4, 3));
  EXPECT_EQ((qt(1, 0) + qt(0, 1)).substitute(1, 2), qt(1, 0) + qt(0, 2));
  const BivarPoly f = qt(3, 3) + qt(4, 3) + qt(3, 4);
  EXPECT_EQ(f.eval_at(1, 1), 3);
  EXPECT_EQ(f.eval_at(2, 3), BigInt(8 * 27 + 16 * 27 + 8 * 81));
  EXPECT_EQ((qt(1, 0) + qt(0, 1)) * (qt(1, 0) - qt(0, 1)), qt(2, 0) - qt(0, 2));
  EXPECT_EQ(f.shifted(1, 2), qt(4, 5) + qt(5, 5) + qt(4, 6));
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(f.at_t_one(), BivarPoly::monomial(3, 0, 2) + qt(4, 0));
  EXPECT_EQ(BivarPoly::from_terms({{1, 1, 2}, {1, 1, -2}, {0, 0, 5}}), BivarPoly::monomial(0, 0, 5));
}

TEST(BivarPoly, BigCoefficients) {
  BivarPoly p = BivarPoly::monomial(0, 0, 1) + qt(1, 0);
  BivarPoly acc = BivarPoly::monomial(0, 0, 1);
  for (int i = 0; i < 80; ++i) acc = acc * p;
  EXPECT_EQ(acc.eval_at(1, 1), BigInt(1) << 80);
  EXPECT_EQ(poly_from_json(to_json(acc)), acc);
}

TEST(BivarPoly, JsonForm) {
  const BivarPoly f = qt(3, 3) + qt(4, 3) + qt(3, 4);
  const auto j = to_json(f);
  EXPECT_EQ(j["shift"], (nlohmann::json{3, 3}));
  EXPECT_EQ(j["matrix"], (nlohmann::json{{1, 1}, {1, 0}}));
  EXPECT_EQ(j["terms"][0]["c"], "1");
  EXPECT_EQ(poly_from_json(j), f);
  EXPECT_THROW(poly_from_json(json{{"terms", 3}}), Error);
  EXPECT_THROW(poly_from_json(json{{"terms", {{{"q", 1}, {"t", 1}, {"c", "x"}}}}}), Error);
  const auto sm = to_shifted_matrix(f);
  EXPECT_EQ(from_shifted_matrix(sm.shift_q, sm.shift_t, sm.matrix), f);
}

TEST(Narayana, SmallPolys) {
  EXPECT_EQ(narayana_poly(1, 1), qt(1, 1));
  EXPECT_EQ(narayana_poly(2, 1), qt(2, 2));
  EXPECT_EQ(narayana_poly(2, 2), qt(3, 3) + qt(4, 3) + qt(3, 4));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(narayana_poly(1, n), qt(n, n));
  EXPECT_THROW(narayana_poly(0, 2), Error);
  try {
    narayana_poly(6, 6, Limits{100, 12});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::resource_limit);
  }
}

TEST(Narayana, AppendixTables) {
  ASSERT_EQ(appendix_tables().size(), 9u);
  for (const auto& t : appendix_tables()) {
    EXPECT_EQ(t.shift, t.m + t.n - 1);
    EXPECT_EQ(narayana_poly(t.m, t.n), t.poly()) << t.m << "," << t.n;
  }
  // F_{2,4} is printed with prefactor (qt)^6, one more than its minimum area
  EXPECT_EQ(appendix_table(2, 4).printed_shift, 6);
  EXPECT_NE(narayana_poly(2, 4), appendix_table(2, 4).poly().shifted(1, 1));
  EXPECT_EQ(appendix_table(2, 3).matrix, (std::vector<std::vector<int>>{{1, 1, 1}, {1, 1, 0}, {1, 0, 0}}));
  EXPECT_THROW(appendix_table(5, 5), Error);
}

TEST(Narayana, AppendixFixturesStable) {
  const auto a = appendix_fixtures().dump();
  EXPECT_EQ(a, appendix_fixtures().dump());
  EXPECT_EQ(appendix_fixtures()["tables"].size(), 9u);
  EXPECT_TRUE(appendix_fixtures()["series"].contains("F6"));
}

TEST(Narayana, EvaluatesToNarayanaNumbers) {
  for (int m = 1; m <= 10; ++m)
    for (int n = 1; m + n <= 11; ++n) EXPECT_EQ(narayana_poly(m, n).eval_at(1, 1), narayana_number(m + n - 1, m));
}

TEST(Narayana, ThreadedMatchesSerial) {
  EXPECT_EQ(narayana_poly(5, 6, Limits{}, 4), narayana_poly(5, 6, Limits{}, 1));
}

TEST(Narayana, RowStreamMatchesEnumeration) {
  for (int m = 1; m <= 5; ++m) {
    std::vector<BivarPoly> rows;
    for_each_narayana_poly_by_rows(m, 7, Limits{}, [&](int n, const AreaBounceCounts& c) {
      EXPECT_EQ(n, static_cast<int>(rows.size()) + 1);
      EXPECT_TRUE(c.equals(narayana_poly(m, n)));
      rows.push_back(c.to_poly());
    });
    EXPECT_EQ(rows, narayana_polys(m, 7));
  }
}

TEST(Narayana, Symmetries) {
  for (int m = 1; m <= 11; ++m)
    for (int n = 1; m + n <= 12; ++n) {
      const BivarPoly f = narayana_poly(m, n);
      EXPECT_TRUE(check_qt_symmetry(f).holds) << m << "," << n;
      EXPECT_EQ(f, narayana_poly(n, m)) << m << "," << n;
      EXPECT_EQ(f.at_t_one(), narayana_poly(n, m).at_t_one());
    }
  EXPECT_TRUE(check_mn_symmetry(3, 5).holds);
  EXPECT_TRUE(check_qt_symmetry(4, 4).holds);
}

TEST(Narayana, SymmetryReportNamesFirstTerm) {
  const auto r = check_qt_symmetry(qt(1, 2) + BivarPoly::monomial(3, 0, 5));
  ASSERT_FALSE(r.holds);
  ASSERT_TRUE(r.first_offending.has_value());
  EXPECT_EQ(r.first_offending->q, 0);
  EXPECT_EQ(r.first_offending->t, 3);
  EXPECT_EQ(r.first_offending->lhs, 0);
  EXPECT_EQ(r.first_offending->rhs, 5);
}

TEST(TransferMatrix, MatchesEnumeration) {
  for (int m = 1; m <= 6; ++m) {
    const int n_max = max_n_under(m, 200000, 12);
    const auto tm = transfer_matrix_F(m, n_max);
    ASSERT_EQ(static_cast<int>(tm.size()), n_max);
    for (int n = 1; n <= n_max; ++n) EXPECT_EQ(tm[n - 1], narayana_poly(m, n)) << m << "," << n;
  }
}

TEST(TransferMatrix, SymmetricInQt) {
  const auto tm = transfer_matrix_F(4, 14);
  for (const auto& f : tm) EXPECT_TRUE(check_qt_symmetry(f).holds);
}

TEST(Series, F2Closed) {
  const auto c = series_coeffs(f2_star(), 10);
  EXPECT_TRUE(c[0].is_zero());
  EXPECT_EQ(c[1], qt(2, 2));
  EXPECT_EQ(c[2], appendix_table(2, 2).poly());
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(c[n], narayana_poly(2, n)) << n;
}

TEST(Series, F3PrintedFormIsWrong) {
  const auto printed = series_coeffs(f3_star_printed(), 3);
  EXPECT_EQ(printed[1], qt(3, 3));
  EXPECT_EQ(printed[2], qt(6, 4) + qt(4, 6));
  EXPECT_NE(printed[2], narayana_poly(3, 2));
  const auto c = series_coeffs(f3_star(), 8);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(c[n], narayana_poly(3, n)) << n;
}

TEST(Series, HigherClosedForms) {
  const std::vector<std::pair<int, std::function<std::vector<RationalQt>()>>> forms{
      {4, f4_star}, {5, f5_star}, {6, f6_star}};
  for (const auto& [m, f] : forms) {
    const int n_max = max_n_under(m, 100000, 10);
    const auto c = series_coeffs(f(), n_max);
    const auto tm = transfer_matrix_F(m, n_max);
    for (int n = 1; n <= n_max; ++n) EXPECT_EQ(c[n], tm[n - 1]) << m << "," << n;
  }
}

TEST(Series, StreamMatchesTruncation) {
  SeriesSumStream s(f4_star());
  const auto c = series_coeffs(f4_star(), 6);
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(s.next(), c[k]);
  EXPECT_THROW(rational_qt_series(f2_star(), -1), Error);
}

// rows of a two-column polyomino, read bottom up, as the language a*b*cd*
TEST(Series, TwoColumnWordWeights) {
  const BivarPoly wa = qt(1, 1), wb = qt(2, 1), wc = qt(2, 2), wd = qt(1, 2);
  for (int n = 1; n <= 8; ++n) {
    BivarPoly sum;
    for (int i = 0; i < n; ++i)
      for (int j = 0; i + j < n; ++j) {
        const int k = n - 1 - i - j;
        BivarPoly w = wc;
        for (int r = 0; r < i; ++r) w = w * wa;
        for (int r = 0; r < j; ++r) w = w * wb;
        for (int r = 0; r < k; ++r) w = w * wd;
        sum += w;
      }
    EXPECT_EQ(sum, narayana_poly(2, n)) << n;
  }
}

TEST(Upsilon, WorkedExample) {
  const std::vector<int> d{1, 2, 3, 3, 3, 4, 3, 3, 3, 2, 1};
  const ParaPolyomino p = para_from_diaglen_a(6, 6, d);
  ASSERT_TRUE(in_a_domain(p));
  EXPECT_EQ(diaglen(p), d);
  EXPECT_EQ(parabounce(p), 11);
  EXPECT_EQ(area(p), 28);
  const ParaPolyomino r = upsilon(p);
  EXPECT_TRUE(is_ribbon(r));
  EXPECT_EQ(parabounce(r), 28);
  const std::vector<Cell> want{{1, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 2}, {4, 3},
                               {4, 4}, {4, 5}, {5, 5}, {5, 6}, {6, 6}};
  EXPECT_EQ(cells(r).cells, want);
  EXPECT_EQ(bounce_seq(r), (BounceSeq{1, 1, 1, 1, 3, 3, 1}));
  EXPECT_EQ(upsilon_inv(r), p);
}

TEST(Upsilon, SingleCellAndErrors) {
  const auto one = para_from_paths("N" "E", "E" "N");
  EXPECT_EQ(upsilon(one), one);
  EXPECT_EQ(upsilon_inv(one), one);
  const auto sq = para_from_paths("NNEE", "EENN");
  try {
    upsilon_inv(sq);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_in_domain);
  }
  EXPECT_THROW(upsilon(para_from_paths("NNEE", "ENEN")), Error);
  EXPECT_THROW(para_from_diaglen_a(2, 2, {1, 1}), Error);
}

TEST(Upsilon, SwapsStatisticsExhaustively) {
  for (int m = 1; m <= 11; ++m)
    for (int n = 1; m + n <= 12; ++n) {
      std::size_t a_count = 0, b_count = 0;
      for_each_para(m, n, [&](const ParaPolyomino& p) {
        const bool in_a = parabounce(p) == m + n - 1;
        ASSERT_EQ(in_a, in_a_domain(p));
        if (in_a) {
          ++a_count;
          const ParaPolyomino r = upsilon(p);
          ASSERT_TRUE(is_ribbon(r));
          ASSERT_EQ(parabounce(r), area(p));
          ASSERT_EQ(upsilon_inv(r), p);
        }
        if (is_ribbon(p)) {
          ++b_count;
          const ParaPolyomino s = upsilon_inv(p);
          ASSERT_TRUE(in_a_domain(s));
          ASSERT_EQ(area(s), parabounce(p));
          ASSERT_EQ(upsilon(s), p);
        }
      });
      EXPECT_EQ(a_count, b_count) << m << "," << n;
    }
}
