#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spheretile/errors.hpp"
#include "spheretile/quad_solver.hpp"
#include "spheretile/tiling.hpp"

namespace spheretile {

inline constexpr const char* kSchemaVersion = "1";

struct FamilyDescriptor {
  std::string name;
  std::vector<std::pair<std::string, double>> params;
};

namespace detail {

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline void json_escape(std::ostringstream& os, const std::string& s) {
  os << '"';
  for (char ch : s) {
    switch (ch) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      default: os << ch;
    }
  }
  os << '"';
}

}  // namespace detail

/// Serializes a verified tiling to the schema-version-1 document: fixed key
/// order, numbers with 17 significant digits, census in T(...) notation.
/// Refuses to serialize a tiling that fails verification.
inline std::string to_json(const Tiling& t, const FamilyDescriptor& family,
                           const QuadGeometry* geometry = nullptr) {
  const VerificationReport report = verify(t);
  if (!report.passed()) {
    std::string failing;
    for (const auto& c : report.checks)
      if (!c.pass) failing += (failing.empty() ? "" : ", ") + c.name;
    throw serialization_error("refusing to serialize unverified tiling (failed: " + failing + ")");
  }

  std::ostringstream os;
  os << "{\n";
  os << "  \"schema_version\": \"" << kSchemaVersion << "\",\n";
  os << "  \"family\": {\"name\": ";
  detail::json_escape(os, family.name);
  os << ", \"params\": {";
  for (size_t i = 0; i < family.params.size(); ++i) {
    if (i) os << ", ";
    detail::json_escape(os, family.params[i].first);
    os << ": " << detail::fmt17(family.params[i].second);
  }
  os << "}},\n";
  os << "  \"f\": " << t.tile_count() << ",\n";
  if (geometry) {
    const auto& a = geometry->angles;
    os << "  \"angles\": {\"alpha\": " << detail::fmt17(a.alpha) << ", \"beta\": "
       << detail::fmt17(a.beta) << ", \"gamma\": " << detail::fmt17(a.gamma)
       << ", \"delta\": " << detail::fmt17(a.delta) << "},\n";
    os << "  \"angles_over_pi\": {\"alpha\": " << detail::fmt17(a.alpha / kPi)
       << ", \"beta\": " << detail::fmt17(a.beta / kPi) << ", \"gamma\": "
       << detail::fmt17(a.gamma / kPi) << ", \"delta\": " << detail::fmt17(a.delta / kPi)
       << "},\n";
  }
  if (geometry || t.has_edge_lengths()) {
    const EdgeTriple e = t.has_edge_lengths() ? t.edge_lengths() : geometry->edges;
    os << "  \"edges\": {\"a\": " << detail::fmt17(e.a) << ", \"b\": " << detail::fmt17(e.b)
       << ", \"c\": " << detail::fmt17(e.c) << "},\n";
    os << "  \"edges_over_pi\": {\"a\": " << detail::fmt17(e.a / kPi) << ", \"b\": "
       << detail::fmt17(e.b / kPi) << ", \"c\": " << detail::fmt17(e.c / kPi) << "},\n";
  }
  const VertexCensus cen = census(t);
  os << "  \"census\": [";
  {
    bool first = true;
    for (const auto& [vt, mult] : cen.counts()) {
      if (!first) os << ", ";
      first = false;
      os << "{\"type\": \"" << vt.to_string() << "\", \"multiplicity\": " << mult << "}";
    }
  }
  os << "],\n";
  os << "  \"census_string\": \"" << cen.to_string() << "\",\n";
  os << "  \"vertex_count\": " << t.vertex_count() << ",\n";
  os << "  \"tiles\": [\n";
  for (int i = 0; i < t.tile_count(); ++i) {
    const auto& td = t.tiles()[i];
    os << "    {\"corners\": [";
    for (int cidx = 0; cidx < 4; ++cidx) {
      if (cidx) os << ", ";
      os << td.corners[cidx].vertex;
    }
    os << "], \"angles\": [";
    for (int cidx = 0; cidx < 4; ++cidx) {
      if (cidx) os << ", ";
      os << '"' << to_string(td.corners[cidx].angle) << '"';
    }
    os << "], \"edges\": [";
    for (int s = 0; s < 4; ++s) {
      if (s) os << ", ";
      os << '"' << to_string(td.edges[s]) << '"';
    }
    os << "]}" << (i + 1 < t.tile_count() ? "," : "") << "\n";
  }
  os << "  ],\n";
  if (t.has_embedding()) {
    os << "  \"vertices\": [\n";
    for (int v = 0; v < t.vertex_count(); ++v) {
      const Vec3& p = t.embedding()[v];
      os << "    [" << detail::fmt17(p.x) << ", " << detail::fmt17(p.y) << ", "
         << detail::fmt17(p.z) << "]" << (v + 1 < t.vertex_count() ? "," : "") << "\n";
    }
    os << "  ],\n";
  }
  os << "  \"verification\": {\"combinatorial\": true, \"embedded\": "
     << (report.embedded_checked ? "true" : "false") << ", \"notes\": \""
     << (report.embedded_checked ? "combinatorial and metric checks passed"
                                 : "combinatorial only")
     << "\", \"checks\": [";
  for (size_t i = 0; i < report.checks.size(); ++i) {
    if (i) os << ", ";
    os << "{\"name\": \"" << report.checks[i].name << "\", \"pass\": "
       << (report.checks[i].pass ? "true" : "false") << "}";
  }
  os << "]},\n";
  os << "  \"warnings\": [";
  for (size_t i = 0; i < t.warnings().size(); ++i) {
    if (i) os << ", ";
    detail::json_escape(os, t.warnings()[i]);
  }
  os << "]\n";
  os << "}\n";
  return os.str();
}

struct ParsedDocument {
  Tiling tiling;
  std::string family_name;
  std::vector<std::pair<std::string, double>> family_params;
  std::string census_string;
};

inline ParsedDocument parse_tiling(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw serialization_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
    throw serialization_error("unsupported or missing schema_version");

  auto angle_from = [](const std::string& s) {
    if (s == "alpha") return AngleLabel::Alpha;
    if (s == "beta") return AngleLabel::Beta;
    if (s == "gamma") return AngleLabel::Gamma;
    if (s == "delta") return AngleLabel::Delta;
    throw serialization_error("bad angle label: " + s);
  };
  auto edge_from = [](const std::string& s) {
    if (s == "a") return EdgeLabel::A;
    if (s == "b") return EdgeLabel::B;
    if (s == "c") return EdgeLabel::C;
    throw serialization_error("bad edge label: " + s);
  };

  std::vector<TileData> tiles;
  for (const auto& jt : j.at("tiles")) {
    TileData td;
    for (int cidx = 0; cidx < 4; ++cidx) {
      td.corners[cidx].vertex = jt.at("corners").at(cidx).get<int>();
      td.corners[cidx].angle = angle_from(jt.at("angles").at(cidx).get<std::string>());
      td.edges[cidx] = edge_from(jt.at("edges").at(cidx).get<std::string>());
    }
    tiles.push_back(td);
  }
  Tiling t(std::move(tiles), j.at("vertex_count").get<int>());
  if (j.contains("vertices")) {
    std::vector<Vec3> pts;
    for (const auto& jv : j["vertices"])
      pts.push_back({jv.at(0).get<double>(), jv.at(1).get<double>(), jv.at(2).get<double>()});
    if (static_cast<int>(pts.size()) != t.vertex_count())
      throw serialization_error("vertices array length does not match vertex_count");
    t.set_embedding(std::move(pts));
  }
  if (j.contains("edges"))
    t.set_edge_lengths(EdgeTriple{j["edges"].at("a").get<double>(),
                                  j["edges"].at("b").get<double>(),
                                  j["edges"].at("c").get<double>()});
  if (j.contains("warnings"))
    for (const auto& w : j["warnings"]) t.add_warning(w.get<std::string>());

  ParsedDocument doc{std::move(t), "", {}, ""};
  if (j.contains("family")) {
    doc.family_name = j["family"].value("name", "");
    if (j["family"].contains("params"))
      for (auto it = j["family"]["params"].begin(); it != j["family"]["params"].end(); ++it)
        doc.family_params.emplace_back(it.key(), it.value().get<double>());
  }
  doc.census_string = j.value("census_string", "");
  return doc;
}

}  // namespace spheretile
