#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "sandpoly/appendix_data.hpp"
#include "sandpoly/bivar_poly.hpp"
#include "sandpoly/complete_graph.hpp"
#include "sandpoly/error.hpp"
#include "sandpoly/interval_order.hpp"
#include "sandpoly/polyomino.hpp"
#include "sandpoly/qt_series.hpp"
#include "sandpoly/sandpile_bipartite.hpp"
#include "sandpoly/special_classes.hpp"

namespace sandpoly {

using json = nlohmann::ordered_json;

namespace detail {

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(Errc::invalid_argument, std::string("missing JSON field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(Errc::invalid_argument, std::string("bad JSON field \"") + key + "\"");
  }
}

}  // namespace detail

inline json to_json(const ParaPolyomino& p) {
  return {{"m", p.m()}, {"n", p.n()}, {"upper", p.upper()}, {"lower", p.lower()}};
}

inline ParaPolyomino para_from_json(const json& j) {
  const auto p = ParaPolyomino::from_paths(detail::get_field<std::string>(j, "upper"),
                                           detail::get_field<std::string>(j, "lower"));
  if ((j.contains("m") && j["m"] != p.m()) || (j.contains("n") && j["n"] != p.n()))
    throw Error(Errc::invalid_argument, "m, n do not match the paths");
  return p;
}

inline json to_json(const CellSet& s) {
  json cs = json::array();
  for (const Cell& c : s.cells) cs.push_back({c.col, c.row});
  return {{"m", s.m}, {"n", s.n}, {"cells", cs}};
}

inline CellSet cellset_from_json(const json& j) {
  std::vector<Cell> cs;
  for (const auto& c : detail::get_field<std::vector<std::vector<int>>>(j, "cells")) {
    if (c.size() != 2) throw Error(Errc::invalid_argument, "cells are [col,row] pairs");
    cs.push_back({c[0], c[1]});
  }
  return CellSet(detail::get_field<int>(j, "m"), detail::get_field<int>(j, "n"), std::move(cs));
}

inline json to_json(const BipartiteConfig& u) {
  return {{"m", u.m()}, {"n", u.n()}, {"heights", u.heights()}};
}

inline BipartiteConfig config_from_json(const json& j) {
  return BipartiteConfig(detail::get_field<int>(j, "m"), detail::get_field<int>(j, "n"),
                         detail::get_field<std::vector<BipartiteConfig::Height>>(j, "heights"));
}

inline json to_json(const CanonTopTrace& tr) {
  json ws = json::array();
  for (const Wave& w : tr.waves)
    ws.push_back({{"side", w.side == Wave::Side::bottom ? "bottom" : "top"}, {"vertices", w.vertices}});
  return {{"waves", ws}};
}

inline json to_json(const DecoratedPolyomino& d) {
  json j = to_json(d.poly);
  j["A"] = d.A;
  j["B"] = d.B;
  return j;
}

inline DecoratedPolyomino decorated_from_json(const json& j) {
  DecoratedPolyomino d{para_from_json(j), detail::get_field<OrderedSetPartition>(j, "A"),
                       detail::get_field<OrderedSetPartition>(j, "B")};
  d.validate();
  return d;
}

inline json to_json(const BicompMatrix& M) { return {{"k", M.k}, {"rows", M.rows}}; }

inline BicompMatrix bicomp_from_json(const json& j) {
  auto rows = detail::get_field<std::vector<std::vector<std::vector<int>>>>(j, "rows");
  int ground = 0;
  for (const auto& r : rows)
    for (const auto& e : r) ground += static_cast<int>(e.size());
  BicompMatrix M(ground, std::move(rows));
  if (j.contains("k") && j["k"] != M.k) throw Error(Errc::invalid_matrix, "k does not match the rows");
  return M;
}

inline json to_json(const IntervalOrder& p) {
  return {{"n", p.n()}, {"downsets", p.downsets()}, {"levels", p.levels()}};
}

/// Accepts the chain form {"n","downsets","levels"} or {"n","relation":[[x,y],...]}.
inline IntervalOrder poset_from_json(const json& j) {
  const int n = detail::get_field<int>(j, "n");
  if (j.contains("relation")) {
    Relation rel;
    for (const auto& e : detail::get_field<std::vector<std::vector<int>>>(j, "relation")) {
      if (e.size() != 2) throw Error(Errc::invalid_argument, "relation entries are [x,y] pairs");
      rel.emplace_back(e[0], e[1]);
    }
    return IntervalOrder::from_relation(n, rel);
  }
  return IntervalOrder::from_chains(n, detail::get_field<std::vector<std::vector<int>>>(j, "downsets"),
                                    detail::get_field<std::vector<std::vector<int>>>(j, "levels"));
}

inline json to_json(const BivarPoly& p) {
  const ShiftedMatrix s = to_shifted_matrix(p);
  json mat = json::array();
  for (const auto& row : s.matrix) {
    json r = json::array();
    for (const auto& c : row) {
      if (c <= std::numeric_limits<std::int64_t>::max() && c >= std::numeric_limits<std::int64_t>::min())
        r.push_back(c.convert_to<std::int64_t>());
      else r.push_back(c.str());
    }
    mat.push_back(r);
  }
  json terms = json::array();
  for (const auto& x : p.terms()) terms.push_back({{"q", x.q}, {"t", x.t}, {"c", x.c.str()}});
  return {{"shift", {s.shift_q, s.shift_t}}, {"matrix", mat}, {"terms", terms}};
}

inline BivarPoly poly_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::invalid_argument, "polynomial must be a JSON object");
  auto big = [](const json& c) { return c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<std::int64_t>()); };
  try {
  std::vector<BivarPoly::Term> ts;
  if (j.contains("terms")) {
    for (const auto& x : j["terms"]) {
      ts.push_back({x.at("q").get<int>(), x.at("t").get<int>(), big(x.at("c"))});
    }
    return BivarPoly::from_terms(std::move(ts));
  }
  const auto shift = detail::get_field<std::vector<int>>(j, "shift");
  if (shift.size() != 2) throw Error(Errc::invalid_argument, "shift is [k_q,k_t]");
  std::vector<std::vector<BigInt>> m;
  for (const auto& row : j.at("matrix")) {
    m.emplace_back();
    for (const auto& c : row) m.back().push_back(big(c));
  }
  return from_shifted_matrix(shift[0], shift[1], m);
  } catch (const Error&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_argument, std::string("bad polynomial JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw Error(Errc::invalid_argument, std::string("bad polynomial coefficient: ") + e.what());
  }
}

inline json to_json(const DyckPath& d) { return {{"n", d.n}, {"word", d.word}}; }

inline DyckPath dyck_from_json(const json& j) {
  return DyckPath(detail::get_field<int>(j, "n"), detail::get_field<std::string>(j, "word"));
}

inline json to_json(const KnConfig& x) { return {{"n", x.n}, {"heights", x.heights}}; }

inline KnConfig kn_from_json(const json& j) {
  return KnConfig(detail::get_field<int>(j, "n"), detail::get_field<std::vector<int>>(j, "heights"));
}

inline json to_json(const RationalQt& r) {
  json num = json::array();
  for (const auto& x : r.numerator) num.push_back({{"q", x.q}, {"t", x.t}, {"z", x.z}, {"c", x.c.str()}});
  json fac = json::array();
  for (auto [a, b] : r.factors) fac.push_back({a, b});
  return {{"numerator", num}, {"factors", fac}};
}

/// Every appendix table and closed form, in a fixed order.
inline json appendix_fixtures() {
  json tables = json::array();
  for (const auto& t : appendix_tables())
    tables.push_back({{"m", t.m}, {"n", t.n}, {"printed_shift", t.printed_shift}, {"shift", t.shift}, {"matrix", t.matrix}});
  auto parts = [](const std::vector<RationalQt>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(to_json(r));
    return a;
  };
  json forms = json::object();
  forms["F2"] = parts(f2_star());
  forms["F3"] = parts(f3_star());
  forms["F3-printed"] = parts(f3_star_printed());
  forms["F4"] = parts(f4_star());
  forms["F5"] = parts(f5_star());
  forms["F6"] = parts(f6_star());
  return {{"tables", tables}, {"series", forms}};
}

}  // namespace sandpoly
