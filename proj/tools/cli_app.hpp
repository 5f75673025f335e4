#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sandpoly/json_io.hpp"
#include "sandpoly/sandpoly.hpp"

namespace sandpoly::cli {

enum Exit : int { ok = 0, mismatch = 1, input_error = 2, resource = 3 };

struct RunConfig {
  std::uint64_t cap = 0;  // 0: environment / default
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::string format = "json";

  Limits limits() const {
    Limits l = Limits::from_env();
    if (cap > 0) l.max_objects = cap;
    return l;
  }
};

namespace detail {

inline std::vector<BipartiteConfig::Height> to_heights(const std::vector<long long>& v) {
  std::vector<BipartiteConfig::Height> h;
  for (long long x : v) {
    if (x < 0) throw Error(Errc::invalid_argument, "heights must be non-negative");
    h.push_back(static_cast<BipartiteConfig::Height>(x));
  }
  return h;
}

inline json read_json(const std::string& text, const std::string& file) {
  std::string src = text;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw Error(Errc::invalid_argument, "cannot read " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    src = ss.str();
  }
  if (src.empty()) throw Error(Errc::invalid_argument, "no input given (use --json or --file)");
  try {
    return json::parse(src);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_argument, std::string("bad JSON: ") + e.what());
  }
}

inline void print_matrix(std::ostream& out, const BivarPoly& p) {
  const ShiftedMatrix s = to_shifted_matrix(p);
  out << "shift " << s.shift_q << ' ' << s.shift_t << '\n';
  for (const auto& row : s.matrix) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
}

inline void print_poly(std::ostream& out, const BivarPoly& p, const std::string& format, json meta) {
  if (format == "matrix") {
    print_matrix(out, p);
  } else if (format == "csv") {
    out << "q,t,c\n";
    for (const auto& x : p.terms()) out << x.q << ',' << x.t << ',' << x.c << '\n';
  } else {
    const json body = to_json(p);
    for (auto& [k, v] : body.items()) meta[k] = v;
    out << meta.dump() << '\n';
  }
}

inline json report_failure(const SymmetryReport& r) {
  if (!r.first_offending) return nullptr;
  const auto& o = *r.first_offending;
  return {{"q", o.q}, {"t", o.t}, {"lhs", o.lhs.str()}, {"rhs", o.rhs.str()}};
}

inline std::vector<RationalQt> series_by_name(const std::string& name) {
  if (name == "F2") return f2_star();
  if (name == "F3") return f3_star();
  if (name == "F3-printed") return f3_star_printed();
  if (name == "F4") return f4_star();
  if (name == "F5") return f5_star();
  if (name == "F6") return f6_star();
  throw Error(Errc::invalid_argument, "unknown series " + name);
}

}  // namespace detail

struct VerifyOptions {
  int max_sum = 10;
  int counts_max = 6;
  int olson_max = 8;
  int conj_max = 5;
  int area_max = 8;
};

/// q,t- and m,n-symmetry plus F_{m,n}(q,1) = F_{n,m}(q,1) for m+n <= max_sum.
inline json verify_symmetry(int max_sum, const Limits& limits, unsigned threads, bool& pass) {
  json checks = json::array();
  for (int s = 2; s <= max_sum; ++s) {
    for (int m = 1; m < s; ++m) {
      const int n = s - m;
      const BivarPoly f = narayana_poly(m, n, limits, threads);
      const BivarPoly g = m == n ? f : narayana_poly(n, m, limits, threads);
      const SymmetryReport qt = check_qt_symmetry(f);
      const SymmetryReport mn = compare_polys(f, g);
      const bool t1 = f.at_t_one() == g.at_t_one();
      const bool sum = f.eval_at(1, 1) == narayana_number(m + n - 1, m);
      const bool good = qt.holds && mn.holds && t1 && sum;
      pass = pass && good;
      if (!good || m <= n) {
        checks.push_back({{"m", m}, {"n", n}, {"qt", qt.holds}, {"mn", mn.holds}, {"t_one", t1},
                          {"narayana", sum}, {"pass", good}});
        if (!qt.holds) checks.back()["qt_counterexample"] = detail::report_failure(qt);
        if (!mn.holds) checks.back()["mn_counterexample"] = detail::report_failure(mn);
      }
    }
  }
  return checks;
}

/// Section-4 class counts against exhaustive enumeration.
inline json verify_counts(int max, const Limits& limits, bool& pass) {
  json checks = json::array();
  auto add = [&](const std::string& what, json where, const BigInt& got, const BigInt& want) {
    const bool good = got == want;
    pass = pass && good;
    json c = {{"check", what}};
    for (auto& [k, v] : where.items()) c[k] = v;
    c["enumerated"] = got.str();
    c["formula"] = want.str();
    c["pass"] = good;
    checks.push_back(c);
  };
  for (int m = 2; m <= max; ++m) {
    for (int n = 2; n <= max; ++n) {
      limits.require(narayana_number(m + n - 1, m), "verify counts");
      BigInt minimal = 0, minanz_inc = 0;
      for_each_rec_star(m, n, [&](const BipartiteConfig& u) {
        if (level(u) != 0) return;
        minimal += 1;
        if (is_minanz(u)) minanz_inc += 1;
      });
      add("minimal", {{"m", m}, {"n", n}}, minimal, count_minimal(m, n));
      add("minanz", {{"m", m}, {"n", n}}, minanz_inc, count_minanz(m, n));
    }
  }
  for (int n = 2; n <= max; ++n) {
    limits.require(count_sqrec(n), "verify counts");
    BigInt sq = 0;
    for_each_minanz(n, n, [&](const BipartiteConfig&) { sq += 1; });
    add("sqrec_sum_stirling_squared", {{"n", n}}, sq, sum_stirling2_squares(n));
    add("sqrec_bicomp", {{"n", n}}, sq, count_sqrec(n));
  }
  return checks;
}

inline json verify_olson(int max, const Limits& limits, bool& pass) {
  json checks = json::array();
  for (int n = 2; n <= max; ++n) {
    const OlsonReport o = olson_check(n, limits);
    const KnBounceReport b = parabounce_hagbounce_check(n, limits);
    pass = pass && o.holds && b.holds;
    json c = {{"n", n}, {"olson", o.holds}, {"bounce_equivalences", b.holds}, {"checked", b.checked}};
    if (b.first_failure) {
      c["first_failure"] = to_json(*b.first_failure);
      c["failed_check"] = b.failed_check;
    }
    checks.push_back(c);
  }
  return checks;
}

inline json verify_conjecture(int max, const Limits& limits, bool& all_match) {
  json rows = json::array();
  for (int n = 2; n <= max; ++n) {
    const NonzeroReport r = count_nonzero_star(n, limits);
    all_match = all_match && r.match;
    rows.push_back({{"n", n}, {"enumerated", r.enumerated.str()}, {"formula", r.formula.str()}, {"match", r.match}});
  }
  return rows;
}

inline json verify_area_constant(int max, const Limits& limits, bool& pass) {
  json rows = json::array();
  for (int n = 2; n <= max; ++n) {
    const auto c = derive_area_constant(n, limits);
    const bool good = c && *c == kn_area_constant(n);
    pass = pass && good;
    rows.push_back({{"n", n}, {"derived", c ? json(*c) : json(nullptr)}, {"formula", kn_area_constant(n)}, {"pass", good}});
  }
  return rows;
}

/// Random stable configurations: the recurrence tests and the parallelogram
/// criterion agree, and recurrent ones survive rtosp_inv(rtosp(.)) up to level.
inline json verify_random(int samples, std::uint64_t seed, bool& pass) {
  std::mt19937_64 rng(seed);
  std::uint64_t recurrent = 0, bad = 0;
  json first = nullptr;
  for (int s = 0; s < samples; ++s) {
    const int m = std::uniform_int_distribution<int>(1, 6)(rng);
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<BipartiteConfig::Height> h;
    for (int v = 1; v <= m + n - 1; ++v)
      h.push_back(std::uniform_int_distribution<BipartiteConfig::Height>(0, v < m ? n - 1 : m - 1)(rng));
    const BipartiteConfig u(m, n, h);
    const bool rec = is_recurrent(u);
    bool good = rec == is_recurrent_dhar(u) && rec == f_map_para(u).has_value();
    if (rec) {
      ++recurrent;
      const DecoratedPolyomino d = rtosp(u);
      good = good && rtosp(rtosp_inv(d)) == d && level(rtosp_inv(d)) == level(u);
    }
    if (!good) {
      ++bad;
      if (first.is_null()) first = to_json(u);
    }
  }
  pass = pass && bad == 0;
  return {{"samples", samples}, {"seed", seed}, {"recurrent", recurrent}, {"failures", bad}, {"first_failure", first}};
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig rc;
  CLI::App app{"Sandpiles on complete bipartite graphs and parallelogram polyominoes"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cap", rc.cap, "maximum number of enumerated objects (default: SANDPILE_MAX_OBJECTS or 1e8)")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", rc.threads, "worker threads for enumeration")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", rc.seed, "seed for randomised checks");

  int m = 0, n = 0;
  std::vector<long long> heights;
  bool verbose = false, inverse = false;
  std::string json_text, json_file;

  auto add_config_opts = [&](CLI::App* c) {
    c->add_option("--m", m, "top vertices + 1 (columns)");
    c->add_option("--n", n, "bottom vertices (rows)");
    c->add_option("--heights", heights, "comma separated heights u_1,...,u_{m+n-1}")->delimiter(',');
  };

  CLI::App* stab = app.add_subcommand("stabilize", "stabilise a configuration on D_{m,n}");
  add_config_opts(stab);
  stab->get_option("--m")->required();
  stab->get_option("--n")->required();
  stab->get_option("--heights")->required();

  CLI::App* check = app.add_subcommand("check", "class membership tests");
  check->require_subcommand(1);
  std::vector<CLI::App*> checks;
  for (const char* name : {"recurrent", "minanz", "top-heavy"}) {
    CLI::App* c = check->add_subcommand(name);
    add_config_opts(c);
    c->get_option("--m")->required();
    c->get_option("--n")->required();
    c->get_option("--heights")->required();
    c->add_flag("--verbose", verbose, "print the canonical toppling waves");
    checks.push_back(c);
  }

  CLI::App* map = app.add_subcommand("map", "apply a bijection");
  map->require_subcommand(1);
  for (const char* name : {"to-polyomino", "to-matrix", "to-poset", "upsilon", "to-dyck"}) {
    CLI::App* c = map->add_subcommand(name);
    add_config_opts(c);
    c->add_option("--json", json_text, "input object as JSON text");
    c->add_option("--file", json_file, "input object as a JSON file");
    c->add_flag("--inverse", inverse, "apply the inverse map");
  }

  CLI::App* poly = app.add_subcommand("poly", "q,t-polynomials and series");
  std::string method = "enum", series;
  int order = 6, catalan_n = -1, lower_n = -1;
  poly->add_option("--m", m);
  poly->add_option("--n", n);
  poly->add_option("--method", method)->check(CLI::IsMember({"enum", "transfer"}));
  poly->add_option("--series", series)->check(CLI::IsMember({"F2", "F3", "F3-printed", "F4", "F5", "F6"}));
  poly->add_option("--order", order)->check(CLI::NonNegativeNumber);
  poly->add_option("--catalan", catalan_n, "C_n(q,t) over Dyck paths")->check(CLI::NonNegativeNumber);
  poly->add_option("--lower-para", lower_n, "S_n(q,t) over diag(Rec-dagger(K_n))")->check(CLI::Range(2, 1000));
  poly->add_option("--format", rc.format)->check(CLI::IsMember({"json", "csv", "matrix"}));

  CLI::App* verify = app.add_subcommand("verify", "exhaustive checks; exit 1 on any mismatch");
  verify->require_subcommand(1);
  VerifyOptions vo;
  int samples = 1000;
  CLI::App* v_sym = verify->add_subcommand("symmetry");
  v_sym->add_option("--max-sum", vo.max_sum)->check(CLI::Range(2, 40));
  CLI::App* v_counts = verify->add_subcommand("counts");
  v_counts->add_option("--max", vo.counts_max)->check(CLI::Range(2, 20));
  CLI::App* v_olson = verify->add_subcommand("olson");
  v_olson->add_option("--max", vo.olson_max)->check(CLI::Range(2, 30));
  CLI::App* v_conj = verify->add_subcommand("conjecture-a145600", "reported only; never fails");
  v_conj->add_option("--max", vo.conj_max)->check(CLI::Range(2, 12));
  CLI::App* v_area = verify->add_subcommand("area-constant");
  v_area->add_option("--max", vo.area_max)->check(CLI::Range(2, 30));
  CLI::App* v_rand = verify->add_subcommand("random");
  v_rand->add_option("--samples", samples)->check(CLI::PositiveNumber);
  CLI::App* v_all = verify->add_subcommand("all");

  CLI::App* fix = app.add_subcommand("fixtures", "appendix tables and closed forms as JSON");
  std::string fix_out;
  fix->add_option("--out", fix_out, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "InvalidArgument"}, {"message", e.what()}}.dump() << '\n';
    return input_error;
  }

  const Limits limits = rc.limits();
  auto config = [&] { return BipartiteConfig(m, n, detail::to_heights(heights)); };

  try {
    if (stab->parsed()) {
      const StabilizeResult r = stabilize(config());
      out << json{{"config", to_json(r.config)}, {"topples", r.topples}}.dump() << '\n';
      return ok;
    }

    if (check->parsed()) {
      const BipartiteConfig u = config();
      require_stable(u);
      json j;
      if (checks[0]->parsed()) {
        j = {{"check", "recurrent"}, {"result", is_recurrent(u)}};
      } else if (checks[1]->parsed()) {
        j = {{"check", "minanz"}, {"result", is_minanz(u)}};
      } else {
        j = {{"check", "top-heavy"}, {"result", is_top_heavy(u)}};
      }
      if (verbose) j["trace"] = to_json(canon_top(u));
      out << j.dump() << '\n';
      return ok;
    }

    if (map->parsed()) {
      CLI::App* sub = map->get_subcommands().front();
      const std::string name = sub->get_name();
      auto input = [&] { return detail::read_json(json_text, json_file); };
      auto config_input = [&] { return heights.empty() ? config_from_json(input()) : config(); };
      json res;
      if (name == "to-polyomino") {
        if (!inverse) {
          const BipartiteConfig u = config_input();
          require_stable(u);
          if (is_recurrent(u)) {
            res = to_json(rtosp(u));
          } else {
            res = to_json(f_map(u));
            res["parallelogram"] = false;
          }
        } else {
          const json j = input();
          res = j.contains("A") ? to_json(rtosp_inv(decorated_from_json(j))) : to_json(f_inverse(para_from_json(j)));
        }
      } else if (name == "to-matrix") {
        res = inverse ? to_json(mu(bicomp_from_json(input()))) : to_json(ttm(config_input()));
      } else if (name == "to-poset") {
        if (!inverse) {
          res = to_json(mtp(ttm(config_input())));
        } else {
          const IntervalOrder p = poset_from_json(input());
          res = to_json(config_from_poset(p, p.n() + 1));
        }
      } else if (name == "upsilon") {
        const ParaPolyomino p = para_from_json(input());
        res = to_json(inverse ? upsilon_inv(p) : upsilon(p));
      } else {
        if (!inverse) {
          const KnConfig x = heights.empty() ? kn_from_json(input())
                                             : KnConfig(n, std::vector<int>(heights.begin(), heights.end()));
          res = to_json(dyck_of(diag(x)));
        } else {
          res = to_json(rec_dagger_from_dyck(dyck_from_json(input())));
        }
      }
      out << res.dump() << '\n';
      return ok;
    }

    if (poly->parsed()) {
      if (!series.empty()) {
        const QtSeries s = rational_qt_series(detail::series_by_name(series), order);
        if (rc.format == "json") {
          json cs = json::array();
          for (const auto& c : s.coeffs) cs.push_back(to_json(c));
          out << json{{"series", series}, {"order", order}, {"coeffs", cs}}.dump() << '\n';
        } else if (rc.format == "csv") {
          out << "z,q,t,c\n";
          for (int k = 0; k <= order; ++k)
            for (const auto& x : s.coeffs[k].terms()) out << k << ',' << x.q << ',' << x.t << ',' << x.c << '\n';
        } else {
          for (int k = 1; k <= order; ++k) {
            out << "z^" << k << '\n';
            detail::print_matrix(out, s.coeffs[k]);
          }
        }
        return ok;
      }
      if (catalan_n >= 0) {
        detail::print_poly(out, cn_poly(catalan_n, limits), rc.format, {{"catalan", catalan_n}});
        return ok;
      }
      if (lower_n >= 0) {
        detail::print_poly(out, sn_poly(lower_n, limits), rc.format, {{"lower_para", lower_n}});
        return ok;
      }
      if (m < 1 || n < 1) throw Error(Errc::invalid_argument, "poly needs --m and --n (or --series/--catalan/--lower-para)");
      const BivarPoly f = method == "transfer" ? transfer_matrix_F(m, n, limits).back()
                                               : narayana_poly(m, n, limits, rc.threads);
      detail::print_poly(out, f, rc.format, {{"m", m}, {"n", n}});
      return ok;
    }

    if (verify->parsed()) {
      const bool all = v_all->parsed();
      bool pass = true;
      json res = json::object();
      if (all || v_sym->parsed()) res["symmetry"] = verify_symmetry(vo.max_sum, limits, rc.threads, pass);
      if (all || v_counts->parsed()) res["counts"] = verify_counts(vo.counts_max, limits, pass);
      if (all || v_olson->parsed()) res["olson"] = verify_olson(vo.olson_max, limits, pass);
      if (all || v_area->parsed()) {
        res["area_constant"] = verify_area_constant(vo.area_max, limits, pass);
        res["area_constant_command"] = "sandpoly verify area-constant --max " + std::to_string(vo.area_max);
      }
      if (all || v_rand->parsed()) res["random"] = verify_random(samples, rc.seed, pass);
      if (all || v_conj->parsed()) {
        bool match = true;
        res["conjecture_a145600"] = {{"rows", verify_conjecture(vo.conj_max, limits, match)},
                                     {"conjecture_matches", match}};
      }
      res["pass"] = pass;
      out << res.dump() << '\n';
      return pass ? ok : mismatch;
    }

    if (fix->parsed()) {
      const std::string text = appendix_fixtures().dump(2) + "\n";
      if (fix_out.empty()) {
        out << text;
      } else {
        std::ofstream f(fix_out);
        if (!f) throw Error(Errc::invalid_argument, "cannot write " + fix_out);
        f << text;
      }
      return ok;
    }
  } catch (const Error& e) {
    err << json{{"error", std::string(errc_name(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return e.code() == Errc::resource_limit ? resource : input_error;
  } catch (const nlohmann::json::exception& e) {
    err << json{{"error", "InvalidArgument"}, {"message", e.what()}}.dump() << '\n';
    return input_error;
  } catch (const std::out_of_range& e) {
    err << json{{"error", "InvalidArgument"}, {"message", e.what()}}.dump() << '\n';
    return input_error;
  }
  return input_error;
}

}  // namespace sandpoly::cli
