// One PASS/FAIL line per acceptance criterion; exit status 1 if any line fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "sandpoly/json_io.hpp"
#include "sandpoly/sandpoly.hpp"

using namespace sandpoly;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }

  // for hot loops: the message is only built on failure
  template <class F>
  void check(bool ok, F&& what) {
    if (!ok) require(false, what());
  }
};

int run_criterion(int id, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.note << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.note.str() << "(" << secs << " s)"
            << std::endl;
  return o.pass ? 0 : 1;
}

std::string pair_str(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

const BigInt kMillion = 1000000;

void counting(Outcome& o) {
  int pairs = 0;
  for (int m = 2; m <= 7; ++m)
    for (int n = 2; m + n <= 9; ++n) {
      BigInt rec = 0, star = 0;
      for_each_stable(m, n, [&](const BipartiteConfig& u) {
        if (!is_recurrent_dhar(u)) return;
        rec += 1;
        if (is_increasing(u)) star += 1;
      });
      o.require(rec == ipow(m, n - 1) * ipow(n, m - 1), "|Rec| at " + pair_str(m, n));
      o.require(star == narayana_number(m + n - 1, m), "|Rec*| at " + pair_str(m, n));
      ++pairs;
    }
  o.note << pairs << " pairs, Dhar filter over all stable states; ";
}

void theorem3(Outcome& o) {
  std::uint64_t seen = 0;
  for (int m = 2; m <= 7; ++m)
    for (int n = 2; m + n <= 9; ++n)
      for_each_stable(m, n, [&](const BipartiteConfig& u) {
        ++seen;
        const bool rec = is_recurrent(u);
        const auto p = f_map_para(u);
        o.check(rec == p.has_value(), [&] { return "recurrence vs parallelogram at " + to_json(u).dump(); });
        if (rec && p) o.check(canon_top(u).sizes() == bounce_seq(*p), [&] { return "bounce at " + to_json(u).dump(); });
      });
  o.note << seen << " stable configurations; ";
}

void appendix(Outcome& o) {
  for (const auto& t : appendix_tables()) {
    o.require(narayana_poly(t.m, t.n) == t.poly(), "F" + pair_str(t.m, t.n));
    o.require(t.shift == t.m + t.n - 1, "shift of F" + pair_str(t.m, t.n));
    if (t.printed_shift != t.shift)
      o.note << "F" << pair_str(t.m, t.n) << " matrix matches at (qt)^" << t.shift << ", printed (qt)^"
             << t.printed_shift << "; ";
  }
  o.note << appendix_tables().size() << " tables; ";
}

void closed_forms(Outcome& o) {
  const std::vector<std::pair<std::string, std::vector<RationalQt>>> forms{
      {"F2", f2_star()}, {"F3", f3_star()}, {"F4", f4_star()}, {"F5", f5_star()}, {"F6", f6_star()}};
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const int m = static_cast<int>(i) + 2;
    int n_max = 1;
    while (narayana_number(m + n_max, m) <= kMillion) ++n_max;
    SeriesSumStream s(forms[i].second);
    s.next();
    for_each_narayana_poly_by_rows(m, n_max, Limits{}, [&](int n, const AreaBounceCounts& c) {
      o.require(c.equals(s.next()), forms[i].first + " at z^" + std::to_string(n));
    });
    o.note << forms[i].first << " n<=" << n_max << "; ";
  }
  // the F3 expression exactly as printed
  const auto printed = rational_qt_series(f3_star_printed(), 4).coeffs;
  for (int n = 1; n <= 4; ++n)
    o.require(printed[n] == narayana_poly(3, n), "printed F3 form at z^" + std::to_string(n));
  o.note << "F3 checked as printed and in corrected form; ";
}

void symmetry(Outcome& o) {
  int pairs = 0;
  for (int m = 1; m <= 11; ++m)
    for (int n = 1; m + n <= 12; ++n) {
      const BivarPoly f = narayana_poly(m, n);
      o.require(check_qt_symmetry(f).holds, "q,t-symmetry at " + pair_str(m, n));
      o.require(f == narayana_poly(n, m), "m,n-symmetry at " + pair_str(m, n));
      o.require(f.at_t_one() == narayana_poly(n, m).at_t_one(), "F(q,1) at " + pair_str(m, n));
      ++pairs;
    }
  o.note << pairs << " pairs by enumeration; ";
  std::vector<std::vector<BivarPoly>> tm(13);
  for (int m = 1; m <= 12; ++m) tm[m] = transfer_matrix_F(m, m <= 4 ? 20 : 4);
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 20; ++n) {
      const BivarPoly& f = tm[m][n - 1];
      o.require(check_qt_symmetry(f).holds, "transfer q,t-symmetry at " + pair_str(m, n));
      if (n <= 12) o.require(f == tm[n][m - 1], "transfer m,n-symmetry at " + pair_str(m, n));
      if (m + n <= 12) o.require(f == narayana_poly(m, n), "transfer vs enumeration at " + pair_str(m, n));
    }
  o.note << "transfer matrix m<=4, n<=20 (m,n-symmetry where n<=12); ";
}

void classes(Outcome& o) {
  for (int m = 2; m <= 8; ++m)
    for (int n = 2; m + n <= 10; ++n) {
      BigInt minimal = 0, minanz = 0;
      for_each_rec_star(m, n, [&](const BipartiteConfig& u) {
        if (is_minimal(u)) minimal += 1;
        if (is_minanz(u)) minanz += 1;
      });
      o.require(minimal == binomial(m + n - 2, m - 1), "minimal count at " + pair_str(m, n));
      o.require(minanz == binomial(m + n - 4, m - 2), "minanz count at " + pair_str(m, n));
    }
  std::ostringstream sq;
  for (int n = 2; n <= 6; ++n) {
    BigInt count = 0;
    std::set<std::string> matrices;
    for_each_minanz(n, n, [&](const BipartiteConfig& u) {
      count += 1;
      const BicompMatrix M = ttm(u);
      o.check(mu(M) == u, [&] { return "ttm/mu round trip at " + to_json(u).dump(); });
      matrices.insert(to_json(M).dump());
      if (M.is_upper_triangular()) {
        const IntervalOrder p = mtp(M);
        o.check(is_two_plus_two_free(p.n(), p.relation()), [&] { return std::string("mtp image not (2+2)-free"); });
        o.check(config_from_poset(p, n) == u, [&] { return "config_from_poset at " + to_json(u).dump(); });
      }
    });
    o.require(BigInt(matrices.size()) == count, "ttm not injective at n=" + std::to_string(n));
    o.require(count == count_sqrec(n), "SqRec vs ordered bicompositions at n=" + std::to_string(n));
    o.require(count == sum_stirling2_squares(n), "|SqRec_" + std::to_string(n) + "| = sum_k S(n-1,k)^2");
    sq << count << (n < 6 ? "," : "");
  }
  o.note << "|SqRec_n| n=2..6: " << sq.str() << " = sum (k! S)^2, printed sum S^2: ";
  for (int n = 2; n <= 6; ++n) o.note << sum_stirling2_squares(n) << (n < 6 ? "," : "; ");
  const BicompMatrix ex(7, {{{3}, {7, 2}, {}}, {{}, {5}, {1}}, {{}, {}, {4, 6}}});
  const auto u = config_from_poset(mtp(ex), 8);
  o.require(u.heights() == std::vector<BipartiteConfig::Height>{4, 7, 7, 1, 4, 1, 7, 0, 2, 4, 7, 2, 4, 2, 4},
            "config_from_poset example");
}

void upsilon_bijection(Outcome& o) {
  std::uint64_t checked = 0;
  for (int m = 1; m <= 11; ++m)
    for (int n = 1; m + n <= 12; ++n) {
      std::set<ParaPolyomino> image;
      std::size_t ribbons = 0;
      for_each_para(m, n, [&](const ParaPolyomino& p) {
        if (is_ribbon(p)) ++ribbons;
        if (!in_a_domain(p)) return;
        ++checked;
        const ParaPolyomino r = upsilon(p);
        o.check(is_ribbon(r), [&] { return "image not a ribbon at " + pair_str(m, n); });
        o.check(area(r) == parabounce(p) && parabounce(r) == area(p), [&] { return "statistics at " + pair_str(m, n); });
        o.check(upsilon_inv(r) == p, [&] { return "round trip at " + pair_str(m, n); });
        image.insert(r);
      });
      o.require(image.size() == ribbons, "not onto B at " + pair_str(m, n));
    }
  const ParaPolyomino p = para_from_diaglen_a(6, 6, {1, 2, 3, 3, 3, 4, 3, 3, 3, 2, 1});
  const ParaPolyomino r = upsilon(p);
  const std::vector<Cell> want{{1, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 2}, {4, 3}, {4, 4}, {4, 5}, {5, 5}, {5, 6}, {6, 6}};
  o.require(cells(r).cells == want, "m=n=6 example cells");
  o.require(parabounce(r) == 28 && area(p) == 28, "m=n=6 example statistics");
  o.note << checked << " elements of A_{m,n}; example parabounce " << parabounce(r) << "; ";
}

void complete_graph(Outcome& o) {
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> h(n - 1, 0);
    for (;;) {
      const KnConfig x(n, h);
      o.check(kn_is_recurrent(x) == kn_is_recurrent_dhar(x), [&] { return "Dhar vs parking at " + to_json(x).dump(); });
      int i = 0;
      while (i < n - 1 && h[i] == n - 2) h[i++] = 0;
      if (i == n - 1) break;
      ++h[i];
    }
  }
  for (int n = 2; n <= 10; ++n)
    o.require(BigInt(rec_dagger_enumerate(n).size()) == catalan(n - 1), "|Rec-dagger| at n=" + std::to_string(n));
  const DyckPath hbe(5, "SSWSWSWWSW");
  o.require(dyck_area(hbe) == 3 && hagbounce(hbe) == 4, "HBE example");
  for (int n = 2; n <= 8; ++n) {
    o.require(olson_check(n).holds, "Olson at n=" + std::to_string(n));
    const auto b = parabounce_hagbounce_check(n);
    o.require(b.holds, "parabounce = 2(hagbounce+n-1) at n=" + std::to_string(n) + " (" + b.failed_check + ")");
  }
  o.note << "Dhar n<=6, Rec-dagger n<=10, Olson and bounce relations n<=8; ";
}

void nonzero_conjecture(Outcome& o) {
  bool all = true;
  for (int n = 2; n <= 5; ++n) {
    const NonzeroReport r = count_nonzero_star(n);
    all = all && r.match;
    o.note << "n=" << n << ": " << r.enumerated << " vs " << r.formula << "; ";
  }
  o.note << (all ? "conjecture agrees" : "conjecture falsified, reported only") << "; ";
}

void area_fixture(Outcome& o) {
  const std::string path = std::string(SANDPOLY_FIXTURES) + "/complete_graph_area.json";
  std::ifstream in(path);
  o.require(in.good(), "fixture missing: " + path);
  if (!in) return;
  const json j = json::parse(in);
  o.require(j.contains("command") && j.contains("closed_form"), "fixture lacks derivation command");
  std::set<int> covered;
  for (const auto& v : j["values"]) {
    const int n = v["n"].get<int>();
    const int c = v["c"].get<int>();
    covered.insert(n);
    o.require(derive_area_constant(n) == c, "brute force disagrees at n=" + std::to_string(n));
    o.require(kn_area_constant(n) == c, "closed form disagrees at n=" + std::to_string(n));
  }
  for (int n = 2; n <= 8; ++n) o.require(covered.count(n) == 1, "fixture lacks n=" + std::to_string(n));
  o.note << j["closed_form"].get<std::string>() << " for n=2..8; ";
}

}  // namespace

int main() {
  int failures = 0;
  failures += run_criterion(1, counting);
  failures += run_criterion(2, theorem3);
  failures += run_criterion(3, appendix);
  failures += run_criterion(4, closed_forms);
  failures += run_criterion(5, symmetry);
  failures += run_criterion(6, classes);
  failures += run_criterion(7, upsilon_bijection);
  failures += run_criterion(8, complete_graph);
  failures += run_criterion(9, nonzero_conjecture);
  failures += run_criterion(10, area_fixture);
  return failures == 0 ? 0 : 1;
}
