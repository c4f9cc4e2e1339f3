/*
   Copyright 2026 The plarr authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PLARR_IO_HPP
#define PLARR_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "plarr/arrangement.hpp"
#include "plarr/monodromy.hpp"
#include "plarr/pencil.hpp"
#include "plarr/sha256.hpp"

namespace plarr::io {

using Json = nlohmann::ordered_json;

// Integers that fit in int64 are written as JSON numbers; anything bigger
// becomes a decimal string.  Readers accept both.
inline Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<int64_t>(z.get_si()));
  return Json(z.get_str());
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw ParseError("expected integer or decimal string, got " + j.dump());
}

inline Json rational_to_json(const Rational& q) {
  return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

inline Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("rational must be a [numerator, denominator] pair");
  Rational q(integer_from_json(j[0]), integer_from_json(j[1]));
  if (sign(Integer(q.get_den())) == 0) throw ParseError("zero denominator");
  q.canonicalize();
  return q;
}

inline Json field_to_json(const NumberField& f) {
  Json minpoly = Json::array();
  for (const auto& c : f.minpoly()) minpoly.push_back(rational_to_json(c));
  return Json{{"label", f.label()}, {"minpoly", minpoly}};
}

inline FieldPtr field_from_json(const Json& j) {
  if (!j.contains("label") || !j.contains("minpoly"))
    throw ParseError("field needs label and minpoly");
  std::string label = j["label"].get<std::string>();
  std::vector<Rational> minpoly;
  for (const auto& c : j["minpoly"]) minpoly.push_back(rational_from_json(c));
  // reuse a built-in instance when the polynomial matches, so elements from
  // different files interoperate without copies
  if (FieldPtr builtin = fields::by_label(label)) {
    if (compare_vectors(builtin->minpoly(), minpoly) == 0) return builtin;
  }
  return std::make_shared<NumberField>(label, std::move(minpoly));
}

inline Json element_to_json(const FieldElement& e) {
  Json out = Json::array();
  for (const auto& c : e.coeffs()) out.push_back(rational_to_json(c));
  return out;
}

inline FieldElement element_from_json(const Json& j, const FieldPtr& F) {
  if (!j.is_array()) throw ParseError("field element must be an array of rationals");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  if (static_cast<int>(coeffs.size()) > F->degree())
    throw ParseError("field element has more coefficients than the field degree");
  coeffs.resize(F->degree());
  return FieldElement(F, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Arrangement files: {field, metadata, lines, [conics]}.

struct ArrangementFile {
  FieldPtr field;
  std::string label;
  std::string source;
  std::vector<std::array<FieldElement, 3>> lines;
  std::vector<std::array<FieldElement, 6>> conics;

  bool has_conics() const { return !conics.empty(); }

  Arrangement to_arrangement(std::vector<std::string>* warnings = nullptr) const {
    std::vector<ProjLine> ls;
    for (const auto& l : lines) ls.emplace_back(l[0], l[1], l[2]);
    auto built = build_arrangement(field, ls, label);
    if (warnings)
      warnings->insert(warnings->end(), built.warnings.begin(), built.warnings.end());
    return built.arrangement;
  }

  std::vector<Component> to_components() const {
    std::vector<Component> comps;
    for (const auto& l : lines)
      comps.push_back({MultiPoly::linear_form(l), true});
    for (const auto& c : conics) comps.push_back({MultiPoly::conic_form(c), false});
    return comps;
  }
};

inline Json arrangement_file_to_json(const ArrangementFile& a) {
  Json out;
  out["field"] = field_to_json(*a.field);
  out["metadata"] = Json{{"label", a.label}, {"source", a.source}};
  Json lines = Json::array();
  for (const auto& l : a.lines)
    lines.push_back(Json::array({element_to_json(l[0]), element_to_json(l[1]),
                                 element_to_json(l[2])}));
  out["lines"] = lines;
  if (!a.conics.empty()) {
    Json conics = Json::array();
    for (const auto& c : a.conics) {
      Json cc = Json::array();
      for (const auto& e : c) cc.push_back(element_to_json(e));
      conics.push_back(cc);
    }
    out["conics"] = conics;
  }
  return out;
}

inline ArrangementFile arrangement_file_from_json(const Json& j) {
  ArrangementFile out;
  if (!j.contains("field")) throw ParseError("arrangement file needs a field");
  out.field = field_from_json(j["field"]);
  if (j.contains("metadata")) {
    const auto& m = j["metadata"];
    if (m.contains("label")) out.label = m["label"].get<std::string>();
    if (m.contains("source")) out.source = m["source"].get<std::string>();
  }
  if (j.contains("lines"))
    for (const auto& l : j["lines"]) {
      if (!l.is_array() || l.size() != 3)
        throw ParseError("line must have exactly 3 coefficients");
      out.lines.push_back({element_from_json(l[0], out.field),
                           element_from_json(l[1], out.field),
                           element_from_json(l[2], out.field)});
    }
  if (j.contains("conics"))
    for (const auto& c : j["conics"]) {
      if (!c.is_array() || c.size() != 6)
        throw ParseError("conic must have exactly 6 coefficients (x2,xy,xz,y2,yz,z2)");
      std::array<FieldElement, 6> cf{
          element_from_json(c[0], out.field), element_from_json(c[1], out.field),
          element_from_json(c[2], out.field), element_from_json(c[3], out.field),
          element_from_json(c[4], out.field), element_from_json(c[5], out.field)};
      out.conics.push_back(cf);
    }
  if (out.lines.empty() && out.conics.empty())
    throw ParseError("arrangement file has no lines or conics");
  return out;
}

inline ArrangementFile arrangement_to_file(const Arrangement& arr, std::string source) {
  ArrangementFile f;
  f.field = arr.field();
  f.label = arr.label();
  f.source = std::move(source);
  for (const auto& l : arr.lines()) f.lines.push_back(l.coeffs());
  return f;
}

// ---------------------------------------------------------------------------
// Point list files: {field, metadata, points}.

struct PointsFile {
  FieldPtr field;
  std::string label;
  std::vector<ProjPoint> points;
};

inline PointsFile points_file_from_json(const Json& j) {
  PointsFile out;
  out.field = field_from_json(j.at("field"));
  if (j.contains("metadata") && j["metadata"].contains("label"))
    out.label = j["metadata"]["label"].get<std::string>();
  for (const auto& p : j.at("points")) {
    if (!p.is_array() || p.size() != 3) throw ParseError("point needs 3 coordinates");
    out.points.emplace_back(element_from_json(p[0], out.field),
                            element_from_json(p[1], out.field),
                            element_from_json(p[2], out.field));
  }
  return out;
}

inline Json points_file_to_json(const PointsFile& f) {
  Json out;
  out["field"] = field_to_json(*f.field);
  out["metadata"] = Json{{"label", f.label}};
  Json pts = Json::array();
  for (const auto& p : f.points)
    pts.push_back(Json::array({element_to_json(p.coords()[0]), element_to_json(p.coords()[1]),
                               element_to_json(p.coords()[2])}));
  out["points"] = pts;
  return out;
}

// ---------------------------------------------------------------------------
// Rational map files: {field, metadata, degree, components: [[ [i,j,k], fe ]...]}.

inline RationalMap map_from_json(const Json& j) {
  FieldPtr F = field_from_json(j.at("field"));
  RationalMap map;
  const auto& comps = j.at("components");
  if (!comps.is_array() || comps.size() != 3)
    throw ParseError("rational map needs exactly 3 components");
  for (int c = 0; c < 3; ++c) {
    MultiPoly p(F);
    for (const auto& term : comps[c]) {
      const auto& e = term.at(0);
      Exponents ex{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()};
      p.add_term(ex, element_from_json(term.at(1), F));
    }
    map.components[c] = p;
  }
  return map;
}

// ---------------------------------------------------------------------------
// Monodromy tables: two-column CSV "q,n2", optional header line.

inline MonodromyTable monodromy_table_from_csv(std::istream& in) {
  MonodromyTable t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::string stripped;
    for (char ch : line)
      if (!isspace(static_cast<unsigned char>(ch))) stripped += ch;
    if (stripped.empty() || stripped[0] == '#') continue;
    auto comma = stripped.find(',');
    if (comma == std::string::npos) throw ParseError("CSV row without comma: " + line);
    std::string qs = stripped.substr(0, comma);
    std::string vs = stripped.substr(comma + 1);
    if (qs == "q") continue;  // header
    try {
      int q = std::stoi(qs);
      long v = std::stol(vs);
      t.rows[q] = v;
    } catch (const std::exception&) {
      throw ParseError("bad CSV row: " + line);
    }
  }
  return t;
}

// ---------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

inline Json load_json(const std::string& path) {
  return Json::parse(read_file(path));
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

inline std::string file_sha256(const std::string& path) {
  return Sha256::of(read_file(path));
}

}  // namespace plarr::io

#endif  // PLARR_IO_HPP
