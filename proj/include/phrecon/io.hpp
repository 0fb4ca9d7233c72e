#pragma once

// JSON file formats. Writers are hand-rolled so that every number uses the
// shortest decimal form that round-trips (std::to_chars) and the byte layout
// is fixed; readers go through nlohmann/json.
//
//   graph:   {"vertices": [[x,y],...], "edges": [[i,j],...]}
//   diagram: {"direction":[sx,sy],"dim0":[[b,d],...],"dim1":[[b,null],...]}
//
// In diagrams `null` stands for an infinite death.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "phrecon/errors.hpp"
#include "phrecon/geometry.hpp"
#include "phrecon/persistence.hpp"
#include "phrecon/plane_graph.hpp"

namespace phrecon {

class ParseError : public Error {
 public:
  using Error::Error;
};

inline std::string format_number(double value) {
  if (!std::isfinite(value)) throw Error("cannot serialize a non-finite number");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  if (res.ec != std::errc{}) throw Error("number formatting failed");
  return std::string(buf, res.ptr);
}

inline std::string format_death(double value) {
  return value == kInfinity ? std::string("null") : format_number(value);
}

inline std::string graph_to_json(const PlaneGraph& g) {
  std::string out = "{\"vertices\": [";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (i != 0) out += ',';
    out += '[' + format_number(g.vertices[i].x) + ',' + format_number(g.vertices[i].y) + ']';
  }
  out += "], \"edges\": [";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i != 0) out += ',';
    out += '[' + std::to_string(g.edges[i].first) + ',' + std::to_string(g.edges[i].second) + ']';
  }
  out += "]}\n";
  return out;
}

inline std::string diagram_to_json(const Diagram& d) {
  std::vector<PersistencePair> dim0 = d.dim0;
  std::vector<PersistencePair> dim1 = d.dim1;
  std::sort(dim0.begin(), dim0.end());
  std::sort(dim1.begin(), dim1.end());
  std::string out = "{\"direction\":[" + format_number(d.direction.dx) + ',' + format_number(d.direction.dy) +
                    "],\"dim0\":[";
  for (std::size_t i = 0; i < dim0.size(); ++i) {
    if (i != 0) out += ',';
    out += '[' + format_number(dim0[i].birth) + ',' + format_death(dim0[i].death) + ']';
  }
  out += "],\"dim1\":[";
  for (std::size_t i = 0; i < dim1.size(); ++i) {
    if (i != 0) out += ',';
    out += '[' + format_number(dim1[i].birth) + ',' + format_death(dim1[i].death) + ']';
  }
  out += "]}\n";
  return out;
}

namespace detail {

inline double number_at(const nlohmann::json& j, std::string_view what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
  return j.get<double>();
}

inline const nlohmann::json& pair_at(const nlohmann::json& j, std::string_view what) {
  if (!j.is_array() || j.size() != 2) throw ParseError(std::string(what) + ": expected a pair");
  return j;
}

inline nlohmann::json parse_text(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace detail

inline PlaneGraph graph_from_json(std::string_view text) {
  const nlohmann::json j = detail::parse_text(text);
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") || !j["vertices"].is_array() ||
      !j["edges"].is_array())
    throw ParseError("graph: expected an object with \"vertices\" and \"edges\" arrays");
  PlaneGraph g;
  for (const auto& v : j["vertices"]) {
    const auto& p = detail::pair_at(v, "vertex");
    g.vertices.push_back({detail::number_at(p[0], "vertex"), detail::number_at(p[1], "vertex")});
  }
  for (const auto& e : j["edges"]) {
    const auto& p = detail::pair_at(e, "edge");
    if (!p[0].is_number_unsigned() || !p[1].is_number_unsigned())
      throw ParseError("edge: expected non-negative integer indices");
    g.edges.push_back(make_edge(p[0].get<std::size_t>(), p[1].get<std::size_t>()));
  }
  return g;
}

inline Diagram diagram_from_json(std::string_view text) {
  const nlohmann::json j = detail::parse_text(text);
  if (!j.is_object() || !j.contains("direction") || !j.contains("dim0") || !j.contains("dim1"))
    throw ParseError("diagram: expected \"direction\", \"dim0\" and \"dim1\"");
  Diagram d;
  const auto& s = detail::pair_at(j["direction"], "direction");
  d.direction = {detail::number_at(s[0], "direction"), detail::number_at(s[1], "direction")};
  const auto read = [](const nlohmann::json& arr, std::vector<PersistencePair>& out) {
    if (!arr.is_array()) throw ParseError("diagram: expected an array of pairs");
    for (const auto& item : arr) {
      const auto& p = detail::pair_at(item, "pair");
      const double birth = detail::number_at(p[0], "birth");
      const double death = p[1].is_null() ? kInfinity : detail::number_at(p[1], "death");
      out.push_back({birth, death});
    }
  };
  read(j["dim0"], d.dim0);
  read(j["dim1"], d.dim1);
  return d;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

}  // namespace phrecon
