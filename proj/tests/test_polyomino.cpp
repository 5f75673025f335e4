#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "sandpoly/json_io.hpp"
#include "sandpoly/polyomino.hpp"

using namespace sandpoly;

namespace {

ParaPolyomino from_heights(int m, int n, std::vector<int> a, std::vector<int> b) {
  auto p = ParaPolyomino::from_cells(cells_from_heights({m, n, std::move(a), std::move(b)}));
  if (!p) throw std::runtime_error("not a parallelogram polyomino");
  return *p;
}

// lambda_i = n - (1 + a_i), mu_j = m - (1 + b_j), with lambda_m = 0.
std::pair<std::vector<int>, std::vector<int>> complement(const HeightSeqs& h) {
  std::vector<int> lambda, mu;
  for (int v : h.a) lambda.push_back(h.n - 1 - v);
  lambda.push_back(0);
  for (int v : h.b) mu.push_back(h.m - 1 - v);
  return {lambda, mu};
}

void for_each_height_seqs(int m, int n, const std::function<void(const HeightSeqs&)>& f) {
  HeightSeqs h{m, n, std::vector<int>(m - 1, 0), std::vector<int>(n, 0)};
  std::function<void(int)> rec_b = [&](int j) {
    if (j == n) return f(h);
    for (int v = j ? h.b[j - 1] : 0; v <= m - 1; ++v) {
      h.b[j] = v;
      rec_b(j + 1);
    }
  };
  std::function<void(int)> rec_a = [&](int i) {
    if (i == m - 1) return rec_b(0);
    for (int v = i ? h.a[i - 1] : 0; v <= n - 1; ++v) {
      h.a[i] = v;
      rec_a(i + 1);
    }
  };
  rec_a(0);
}

}  // namespace

TEST(ParaFromPaths, ExampleSevenByFour) {
  const auto p = para_from_paths("NENEENEENEE", "EEENENEENEN");
  EXPECT_EQ(p.m(), 7);
  EXPECT_EQ(p.n(), 4);
}

TEST(ParaFromPaths, SingleCell) {
  const auto p = para_from_paths("NE", "EN");
  EXPECT_EQ(p.m(), 1);
  EXPECT_EQ(p.n(), 1);
  EXPECT_EQ(area(p), 1);
  EXPECT_EQ(upper_area(p), 0);
  EXPECT_EQ(lower_area(p), 0);
  EXPECT_EQ(bounce_path(p), "S");
  EXPECT_EQ(bounce_seq(p), (BounceSeq{1}));
  EXPECT_EQ(parabounce(p), 1);
  EXPECT_EQ(diaglen(p), (std::vector<int>{1}));
  EXPECT_EQ(bounce_charact(p), (BounceCharacterization{{0, 1}, {0, 1}}));
}

TEST(ParaFromPaths, Errors) {
  try {
    para_from_paths("NEEN", "EENN");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::paths_cross);
  }
  try {
    para_from_paths("NNE", "ENE");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_monotone);
  }
  EXPECT_THROW(para_from_paths("NXE", "ENN"), Error);
  EXPECT_THROW(para_from_paths("NE", "ENE"), Error);
}

TEST(CellsFromHeights, Examples) {
  const CellSet bad = cells_from_heights({7, 4, {0, 0, 1, 2, 2, 2}, {1, 1, 5, 6}});
  EXPECT_FALSE(ParaPolyomino::from_cells(bad).has_value());
  EXPECT_FALSE(is_para_sequences({7, 4, {0, 0, 1, 2, 2, 2}, {1, 1, 5, 6}}));
  // column 1 only reaches row 1, rows 1-2 only reach column 2: cell (3,1) is cut off
  EXPECT_TRUE(bad.contains(1, 1));
  EXPECT_FALSE(bad.contains(1, 2));

  EXPECT_EQ(cells_from_heights({1, 1, {}, {0}}).size(), 1u);
  EXPECT_TRUE(is_para_sequences({1, 1, {}, {0}}));

  const CellSet sq = cells_from_heights({2, 2, {1}, {1, 1}});
  EXPECT_EQ(sq.size(), 4u);
  const auto p = ParaPolyomino::from_cells(sq);
  ASSERT_TRUE(p);
  EXPECT_EQ(area(*p), 4);
  EXPECT_EQ(diaglen(*p), (std::vector<int>{1, 2, 1}));
}

TEST(CellsFromHeights, RejectsBadSequences) {
  try {
    cells_from_heights({3, 2, {1, 0}, {0, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_sorted);
  }
  EXPECT_THROW(cells_from_heights({3, 2, {0, 2}, {0, 2}}), Error);
  EXPECT_THROW(cells_from_heights({3, 2, {0}, {0, 2}}), Error);
}

TEST(BounceCharacterization, NineBySeven) {
  const HeightSeqs h{9, 7, {2, 3, 4, 4, 5, 6, 6, 6}, {0, 0, 2, 4, 4, 6, 8}};
  EXPECT_TRUE(is_para_sequences(h));
  const auto p = from_heights(9, 7, h.a, h.b);
  const auto bc = bounce_charact(p);
  EXPECT_EQ(bc.x, (std::vector<int>{0, 1, 4, 5, 8, 9}));
  EXPECT_EQ(bc.y, (std::vector<int>{0, 2, 3, 5, 6, 7}));
  EXPECT_TRUE(satisfies_bounce_charact(h, bc.x, bc.y));
  EXPECT_EQ(bounce_seq(p), (BounceSeq{1, 3, 1, 1, 2, 3, 1, 1, 2}));
  EXPECT_EQ(parabounce(p), 41);
  EXPECT_EQ(height_seqs(p), h);
}

TEST(BounceCharacterization, PTwo) {
  const auto p = from_heights(7, 3, {0, 0, 1, 2, 2, 2}, {3, 3, 6});
  EXPECT_EQ(bounce_path(p), "SWWWSSWWW");
  EXPECT_EQ(bounce_seq(p), (BounceSeq{1, 3, 2, 3}));
  const auto bc = bounce_charact(p);
  EXPECT_EQ(bc.x, (std::vector<int>{0, 3, 6, 7}));
  // The printed y has three entries; with k = 2 there are four, y_1 = 0.
  EXPECT_EQ(bc.y, (std::vector<int>{0, 0, 2, 3}));
  EXPECT_TRUE(satisfies_bounce_charact(height_seqs(p), bc.x, bc.y));
  EXPECT_EQ(parabounce(p), 1 + 3 + 2 * 2 + 2 * 3);
}

TEST(BounceSeq, ExampleP1) {
  const auto p = para_from_paths("NNNENEENEE", "ENNEEENENN");
  EXPECT_EQ(bounce_path(p), "SSWWWSWSS");
  EXPECT_EQ(bounce_seq(p), (BounceSeq{2, 3, 1, 1, 2}));
}

TEST(Parabounce, Sequences) {
  EXPECT_EQ(parabounce(BounceSeq{1, 3, 1, 1, 2, 3, 1, 1, 2}), 41);
  EXPECT_EQ(parabounce(BounceSeq{1, 4, 1, 3}), 13);
  EXPECT_EQ(parabounce(BounceSeq{1}), 1);
  EXPECT_EQ(obounce({1, 4, 1, 3}), (std::vector<int>{1, 1}));
  EXPECT_EQ(ebounce({1, 4, 1, 3}), (std::vector<int>{4, 3}));
}

TEST(ParaPartitions, Examples) {
  EXPECT_TRUE(is_para_partitions({3, 2, 2, 1, 1, 0, 0}, {4, 3, 1, 0}));
  EXPECT_TRUE(is_para_partitions({2, 2, 2, 1, 1, 1, 0}, {6, 3, 0, 0}));
  EXPECT_TRUE(is_para_partitions({0}, {0}));
  EXPECT_THROW(is_para_partitions({0, 1}, {0}), Error);
}

TEST(ParaPartitions, ShapesOfTheExample) {
  // lambda/mu -> a, b by complement; the first gives the 7x4 example, the second a ribbon.
  const auto p1 = from_heights(7, 4, {0, 1, 1, 2, 2, 3}, {2, 3, 5, 6});
  EXPECT_EQ(p1, para_from_paths("NENEENEENEE", "EEENENEENEN"));
  const auto p3 = from_heights(7, 4, {1, 1, 1, 2, 2, 2}, {0, 3, 6, 6});
  EXPECT_TRUE(is_ribbon(p3));
  EXPECT_EQ(area(p3), 10);
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_para(2, 2).size(), 3u);
  EXPECT_EQ(enumerate_para(4, 4).size(), 175u);  // sum of the F_{4,4} table
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_para(1, n).size(), 1u);
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; m + n <= 10; ++n)
      EXPECT_EQ(BigInt(enumerate_para(m, n).size()), narayana_number(m + n - 1, m)) << m << "," << n;
}

TEST(Enumerate, CanonicalOrderAndDistinct) {
  const auto all = enumerate_para(4, 4);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::set<ParaPolyomino>(all.begin(), all.end()).size(), all.size());
}

TEST(Enumerate, ResourceLimit) {
  Limits l;
  l.max_objects = 100;
  try {
    enumerate_para(4, 4, l);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::resource_limit);
  }
}

TEST(Invariants, AreasBounceDiaglenTranspose) {
  for (int m = 1; m <= 9; ++m) {
    for (int n = 1; m + n <= 10; ++n) {
      for_each_para(m, n, [&](const ParaPolyomino& p) {
        ASSERT_EQ(lower_area(p) + area(p) + upper_area(p), m * n);
        const BounceSeq c = bounce_seq(p);
        int odd = 0, even = 0;
        for (int v : obounce(c)) odd += v;
        for (int v : ebounce(c)) even += v;
        ASSERT_EQ(odd, n);
        ASSERT_EQ(even, m - 1);
        for (int v : c) ASSERT_GE(v, 1);
        int d = 0;
        for (int v : diaglen(p)) d += v;
        ASSERT_EQ(d, area(p));
        const ParaPolyomino t = transpose(p);
        ASSERT_EQ(t.m(), n);
        ASSERT_EQ(area(t), area(p));
        ASSERT_EQ(transpose(t), p);
        // corners read back into the run lengths
        const auto bc = bounce_charact(p);
        ASSERT_TRUE(satisfies_bounce_charact(height_seqs(p), bc.x, bc.y));
        const int k = static_cast<int>(bc.x.size()) - 2;
        BounceSeq back;
        for (int j = k; j >= 0; --j) {
          back.push_back(bc.y[j + 1] - bc.y[j]);
          if (j > 0) back.push_back(bc.x[j] - bc.x[j - 1]);
        }
        back.erase(std::remove(back.begin(), back.end(), 0), back.end());
        ASSERT_EQ(back, c);
        ASSERT_EQ(para_from_json(to_json(p)), p);
      });
    }
  }
}

TEST(Invariants, CharacterisationsAgree) {
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; m + n <= 9; ++n) {
      for_each_height_seqs(m, n, [&](const HeightSeqs& h) {
        const bool seq = is_para_sequences(h);
        const auto p = ParaPolyomino::from_cells(cells_from_heights(h));
        ASSERT_EQ(seq, p.has_value());
        if (p) ASSERT_EQ(height_seqs(*p), h);
        const auto [lambda, mu] = complement(h);
        ASSERT_EQ(is_para_partitions(lambda, mu), seq);
      });
    }
  }
}

TEST(CellSetJson, RoundTrip) {
  const CellSet s = cells_from_heights({7, 4, {0, 0, 1, 2, 2, 2}, {1, 1, 5, 6}});
  EXPECT_EQ(cellset_from_json(to_json(s)), s);
  EXPECT_THROW(CellSet(2, 2, {{3, 1}}), Error);
}
