// Copyright 2026 The hyperell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERELL_REPORT_HPP_
#define HYPERELL_REPORT_HPP_

// Output records for the command-line front end. Every command builds one
// self-describing JSON record; the human-readable form is rendered from
// that record, so both views always carry the same numbers.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperell/betti.hpp"
#include "hyperell/integer.hpp"
#include "hyperell/linear_series.hpp"
#include "hyperell/resolution_high.hpp"
#include "hyperell/resolution_low.hpp"
#include "hyperell/scroll.hpp"

namespace hyperell::report {

using Record = nlohmann::ordered_json;

/// Counts within int64 become JSON integers; larger ones become decimal
/// strings so that parse/serialize round-trips exactly.
inline Record count_json(const Count& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return Record(static_cast<std::int64_t>(c));
  return Record(c.str());
}

inline Record entry_json(const BettiEntry& e) {
  switch (e.kind()) {
    case BettiEntry::Kind::Known: return count_json(e.value());
    case BettiEntry::Kind::Positive: return "+";
    case BettiEntry::Kind::Unknown: return "?";
  }
  return nullptr;
}

/// (i, j, entry) triples sorted by (j, i).
inline Record diagram_json(const BettiDiagram& diagram) {
  Record entries = Record::array();
  for (const auto& [idx, e] : diagram.entries()) entries.push_back(Record::array({idx.i, idx.j, entry_json(e)}));
  return Record{{"r", diagram.r()}, {"entries", std::move(entries)}};
}

inline Record divisor_json(DivisorClass d) { return Record{{"a", d.a}, {"c", d.c}}; }

inline Record scroll_json(const ScrollModel& s) {
  return Record{{"e", s.e},
                {"curve_class", divisor_json(s.curve_class)},
                {"hyperplane_class", divisor_json(s.hyperplane_class)},
                {"g", s.g},
                {"b", s.b}};
}

inline Record morphism_json(const MorphismProfile& profile) {
  Record out{{"tag", std::string(morphism_name(profile))}};
  if (auto* v = std::get_if<DoubleCoverOfRNC>(&profile)) out["degree"] = v->degree;
  if (auto* v = std::get_if<BirationalCollapsingB>(&profile)) {
    out["points_collapsed"] = v->points_collapsed;
    out["target_dim"] = v->target_dim;
  }
  if (auto* v = std::get_if<MultiCover>(&profile)) out["fold"] = v->fold;
  out["birational"] = is_birational(profile);
  return out;
}

inline Record type_query(const FactorizationType& ft) {
  return Record{{"g", ft.g()}, {"m", ft.m()}, {"b", ft.b()}};
}

/// Diagnostic used when a command needs a very ample bundle.
inline std::string not_very_ample_reason(const FactorizationType& ft) {
  const AmplenessClass cls = ampleness_class(ft);
  if (cls.tag() == AmplenessClass::Tag::NotBasePointFree) return "not base point free";
  return std::string(to_string(*cls.failure_case())) + ": base point free, not very ample";
}

inline Record classify(const FactorizationType& ft) {
  const CohomologyPair h = riemann_roch(ft);
  const AmplenessClass cls = ampleness_class(ft);
  Record ample{{"tag", std::string(to_string(cls.tag()))}};
  if (cls.failure_case()) ample["case"] = std::string(to_string(*cls.failure_case()));
  Record morphism = nullptr;
  if (is_base_point_free(ft) && ft.degree() > 0) morphism = morphism_json(morphism_profile(ft));

  Record result{{"d", ft.degree()},
                {"riemann_roch", {{"h0", count_json(h.h0)}, {"h1", count_json(h.h1)}}},
                {"nonspecial", is_nonspecial(ft)},
                {"canonical", ft == canonical_type(ft.g())},
                {"ampleness_class", std::move(ample)},
                {"morphism_profile", std::move(morphism)},
                {"scroll_model", scroll_json(scroll_model(ft.g(), ft.m(), ft.b()))}};
  return Record{{"command", "classify"}, {"query", type_query(ft)}, {"result", std::move(result)}};
}

inline Record betti(const FactorizationType& ft) {
  require(is_very_ample(ft), "betti: " + not_very_ample_reason(ft));
  const Int g = ft.g(), d = ft.degree();
  Record result{{"d", d}, {"r", ft.r()}};
  if (d >= 2 * g + 1) {
    const BettiDiagram diagram = betti_high(g, d);
    const NpReport np = np_report_high(g, d);
    result["regime"] = "high";
    result["diagram"] = diagram_json(diagram);
    result["np_report"] = {{"p_holds", np.p_holds}, {"p_fails", np.p_fails}};
    result["hilbert_numerator_check"] = hilbert_numerator_check(diagram, g, np.p_holds);
  } else {
    const LowDegreeInvariants inv = low_invariants(ft);
    const NnuPReport rep = n_nu_p_report(ft);
    result["regime"] = "low";
    result["diagram"] = diagram_json(betti_low(ft));
    result["invariants"] = {{"nu", inv.nu}, {"tau", inv.tau}, {"p", inv.p}};
    result["n_nu_p_report"] = {{"nu", rep.nu},
                               {"p_holds", rep.p_holds ? Record(*rep.p_holds) : Record(nullptr)},
                               {"p_fails", rep.p_fails}};
  }
  return Record{{"command", "betti"}, {"query", type_query(ft)}, {"result", std::move(result)}};
}

inline Record rao(const FactorizationType& ft, Int j_max) {
  require(is_very_ample(ft), "rao: " + not_very_ample_reason(ft));
  require(ft.degree() <= 2 * ft.g(), "rao: requires d <= 2g (higher degree curves are projectively normal)");
  const LowDegreeInvariants inv = low_invariants(ft);
  const RaoProfile profile = rao_profile(ft, j_max);
  Record gamma = Record::array();
  bool agrees = true;
  for (const RaoValue& v : profile.gamma) {
    gamma.push_back(Record{{"j", v.j}, {"value", count_json(v.value)}});
    if (v.j >= 2 && oracle_rao(ft, v.j) != v.value) agrees = false;
  }
  Record query = type_query(ft);
  query["j_max"] = j_max;
  Record result{{"d", ft.degree()},
                {"nu", inv.nu},
                {"tau", inv.tau},
                {"p", inv.p},
                {"reg", inv.nu + 1},
                {"gamma", std::move(gamma)},
                {"oracle_agrees", agrees}};
  return Record{{"command", "rao"}, {"query", std::move(query)}, {"result", std::move(result)}};
}

inline Record enumerate(Int g, Int d) {
  Record types = Record::array();
  const bool low = d >= g + 3 && d <= 2 * g;
  const std::vector<FactorizationType> list = enumerate_types(g, d);
  for (const FactorizationType& ft : list) {
    Record t{{"m", ft.m()}, {"b", ft.b()}};
    if (low) {
      const LowDegreeInvariants inv = low_invariants(ft);
      t["nu"] = inv.nu;
      t["tau"] = inv.tau;
      t["p"] = inv.p;
    }
    types.push_back(std::move(t));
  }
  Record result{{"types", std::move(types)},
                {"count", list.size()},
                {"count_distinct_betti", low ? Record(count_distinct_betti(g, d)) : Record(nullptr)}};
  return Record{{"command", "enumerate"}, {"query", {{"g", g}, {"d", d}}}, {"result", std::move(result)}};
}

inline Record table(Int g, Int d_min, Int d_max, Int j_max) {
  require(g >= 2, "table: genus must be at least 2");
  require(g + 3 <= d_min && d_min <= d_max && d_max <= 2 * g, "table: requires g+3 <= d_min <= d_max <= 2g");
  require(j_max >= 2, "table: j_max must be at least 2");
  Record rows = Record::array();
  for (Int d = d_min; d <= d_max; ++d) {
    for (const FactorizationType& ft : enumerate_types(g, d)) {
      const LowDegreeInvariants inv = low_invariants(ft);
      Record gamma = Record::array();
      for (Int j = 2; j <= j_max; ++j) gamma.push_back(count_json(rao_dimension(ft, j)));
      rows.push_back(Record{{"d", d},
                            {"m", ft.m()},
                            {"b", ft.b()},
                            {"nu", inv.nu},
                            {"p", inv.p},
                            {"tau", inv.tau},
                            {"gamma", std::move(gamma)}});
    }
  }
  return Record{{"command", "table"},
                {"query", {{"g", g}, {"d_min", d_min}, {"d_max", d_max}, {"j_max", j_max}}},
                {"result", {{"rows", std::move(rows)}}}};
}

inline Record invert(Int g, Int d, Int nu, Int p) {
  const FactorizationType ft = invert_from_resolution(g, d, nu, p);
  const LowDegreeInvariants inv = low_invariants(ft);
  Record result{{"m", ft.m()}, {"b", ft.b()}, {"nu", inv.nu}, {"tau", inv.tau}, {"p", inv.p}};
  return Record{{"command", "invert"},
                {"query", {{"g", g}, {"d", d}, {"nu", nu}, {"p", p}}},
                {"result", std::move(result)}};
}

inline std::string secant_description(Int secancy, Int plane_dim) {
  std::string s = std::to_string(secancy) + "-secant " + std::to_string(plane_dim) + "-plane";
  if (secancy == 3 && plane_dim == 1) s += " (trisecant line)";
  return s;
}

inline Record obstruction(const FactorizationType& ft) {
  const SecantObstruction ob = secant_obstruction(ft);
  const std::optional<Count> cert = obstruction_certificate(ft);
  Record result{{"d", ft.degree()},
                {"p", ft.degree() - 2 * ft.g() - 1},
                {"kind", std::string(to_string(ob.kind))},
                {"secancy", ob.secancy},
                {"plane_dim", ob.plane_dim},
                {"gamma_length", ob.gamma_length ? Record(*ob.gamma_length) : Record(nullptr)},
                {"description", secant_description(ob.secancy, ob.plane_dim)},
                {"certificate", cert ? count_json(*cert) : Record(nullptr)},
                {"note", ob.note}};
  return Record{{"command", "obstruction"}, {"query", type_query(ft)}, {"result", std::move(result)}};
}

namespace detail {

inline std::string text(const Record& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

inline std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

/// Right-aligned grid; columns separated by two spaces, no trailing blanks.
inline std::string grid(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> widths;
  for (const auto& row : cells) {
    if (row.size() > widths.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += pad_left(row[c], widths[c]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

/// Betti table with column i, row j; "." marks zero.
inline std::string betti_grid(const Record& diagram) {
  const Int r = diagram["r"].get<Int>();
  Int rows = 0;
  for (const auto& t : diagram["entries"]) rows = std::max(rows, t[1].get<Int>());
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(rows) + 1,
                                              std::vector<std::string>(static_cast<std::size_t>(r) + 1, "."));
  cells[0][0] = "";
  for (Int i = 1; i <= r; ++i) cells[0][static_cast<std::size_t>(i)] = std::to_string(i);
  for (Int j = 1; j <= rows; ++j) cells[static_cast<std::size_t>(j)][0] = std::to_string(j) + ":";
  for (const auto& t : diagram["entries"])
    cells[t[1].get<std::size_t>()][t[0].get<std::size_t>()] = text(t[2]);
  return grid(cells);
}

inline std::string type_label(const Record& q) {
  return "(" + text(q["m"]) + "," + text(q["b"]) + ")";
}

}  // namespace detail

/// Human-readable rendering of a record produced above.
inline std::string render_text(const Record& rec) {
  using detail::text;
  const std::string cmd = rec["command"].get<std::string>();
  const Record& q = rec["query"];
  const Record& res = rec["result"];
  std::ostringstream os;

  if (cmd == "classify") {
    os << "g = " << text(q["g"]) << ", (m,b) = " << detail::type_label(q) << ", d = " << text(res["d"]) << "\n";
    os << "h0 = " << text(res["riemann_roch"]["h0"]) << ", h1 = " << text(res["riemann_roch"]["h1"])
       << (res["nonspecial"].get<bool>() ? " (nonspecial)" : " (special)")
       << (res["canonical"].get<bool>() ? " canonical bundle" : "") << "\n";
    const Record& a = res["ampleness_class"];
    os << "ampleness: " << text(a["tag"]);
    if (a.contains("case")) os << "(" << text(a["case"]) << ")";
    os << "\n";
    const Record& mp = res["morphism_profile"];
    if (mp.is_null()) {
      os << "morphism: none\n";
    } else {
      os << "morphism: " << text(mp["tag"]);
      std::vector<std::string> args;
      for (const char* key : {"degree", "points_collapsed", "target_dim", "fold"})
        if (mp.contains(key)) args.push_back(std::string(key) + " = " + text(mp[key]));
      if (!args.empty()) {
        os << "(";
        for (std::size_t k = 0; k < args.size(); ++k) os << (k ? ", " : "") << args[k];
        os << ")";
      }
      os << (mp["birational"].get<bool>() ? ", birational" : ", not birational") << "\n";
    }
    const Record& s = res["scroll_model"];
    os << "scroll: F_" << text(s["e"]) << ", C ~ " << text(s["curve_class"]["a"]) << "C0 + "
       << text(s["curve_class"]["c"]) << "f, H ~ " << text(s["hyperplane_class"]["a"]) << "C0 + "
       << text(s["hyperplane_class"]["c"]) << "f\n";
  } else if (cmd == "betti") {
    os << "g = " << text(q["g"]) << ", (m,b) = " << detail::type_label(q) << ", d = " << text(res["d"])
       << ", r = " << text(res["r"]) << "\n";
    os << detail::betti_grid(res["diagram"]);
    if (res["regime"] == "high") {
      const Record& np = res["np_report"];
      os << "N_" << text(np["p_holds"]) << " holds, N_" << text(np["p_fails"]) << " fails\n";
      os << "hilbert_numerator_check: " << text(res["hilbert_numerator_check"]) << "\n";
    } else {
      const Record& inv = res["invariants"];
      os << "nu = " << text(inv["nu"]) << ", tau = " << text(inv["tau"]) << ", p = " << text(inv["p"]) << "\n";
      const Record& rep = res["n_nu_p_report"];
      const std::string nu = text(rep["nu"]);
      if (rep["p_holds"].is_null()) {
        os << "N_{" << nu << ",1} fails\n";
      } else {
        os << "N_{" << nu << "," << text(rep["p_holds"]) << "} holds, N_{" << nu << "," << text(rep["p_fails"])
           << "} fails\n";
      }
    }
  } else if (cmd == "rao") {
    os << "g = " << text(q["g"]) << ", (m,b) = " << detail::type_label(q) << ", d = " << text(res["d"]) << "\n";
    os << "nu = " << text(res["nu"]) << ", tau = " << text(res["tau"]) << ", p = " << text(res["p"])
       << ", reg = " << text(res["reg"]) << "\n";
    os << "gamma_1..gamma_" << text(q["j_max"]) << ": ";
    bool first = true;
    for (const auto& v : res["gamma"]) {
      os << (first ? "" : ",") << text(v["value"]);
      first = false;
    }
    os << "\noracle agreement: " << text(res["oracle_agrees"]) << "\n";
  } else if (cmd == "enumerate") {
    os << "g = " << text(q["g"]) << ", d = " << text(q["d"]) << ": " << text(res["count"]) << " very ample types\n";
    for (const auto& t : res["types"]) {
      os << detail::type_label(t);
      if (t.contains("nu"))
        os << "  nu = " << text(t["nu"]) << ", tau = " << text(t["tau"]) << ", p = " << text(t["p"]);
      os << "\n";
    }
    if (!res["count_distinct_betti"].is_null())
      os << "distinct Betti diagrams: " << text(res["count_distinct_betti"]) << "\n";
  } else if (cmd == "table") {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"d", "(m,b)", "nu", "p", "tau"};
    for (Int j = 2; j <= q["j_max"].get<Int>(); ++j) header.push_back("gamma_" + std::to_string(j));
    cells.push_back(header);
    Int last_d = -1;
    for (const auto& row : res["rows"]) {
      const Int d = row["d"].get<Int>();
      std::vector<std::string> line{d == last_d ? "" : std::to_string(d), detail::type_label(row),
                                    text(row["nu"]), text(row["p"]), text(row["tau"])};
      for (const auto& v : row["gamma"]) line.push_back(text(v));
      cells.push_back(std::move(line));
      last_d = d;
    }
    os << "g = " << text(q["g"]) << "\n" << detail::grid(cells);
  } else if (cmd == "invert") {
    os << "(m,b) = " << detail::type_label(res) << "  [nu = " << text(res["nu"]) << ", tau = " << text(res["tau"])
       << ", p = " << text(res["p"]) << "]\n";
  } else if (cmd == "obstruction") {
    os << "g = " << text(q["g"]) << ", (m,b) = " << detail::type_label(q) << ", d = " << text(res["d"])
       << ", p = " << text(res["p"]) << "\n";
    os << text(res["kind"]) << ": " << text(res["description"]) << "\n";
    if (!res["gamma_length"].is_null()) os << "length(Gamma) = " << text(res["gamma_length"]) << "\n";
    if (!res["certificate"].is_null()) os << "certificate h1 = " << text(res["certificate"]) << "\n";
    os << text(res["note"]) << "\n";
  }
  return os.str();
}

}  // namespace hyperell::report

#endif  // HYPERELL_REPORT_HPP_
