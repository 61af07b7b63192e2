#pragma once

// Body files:
//   {"format":"symbisect-body/1","name":..., "vertices":[[x,y],...]}
// with optional "discretization" (int) and "arc_edges" (indices of edges that
// are chords of a sampled smooth arc). Generator specs:
//   {"format":"symbisect-gen/1","generator":..., "params":{...}, "n":int}

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "symbisect/body.hpp"
#include "symbisect/error.hpp"
#include "symbisect/generators.hpp"

namespace symbisect {

inline constexpr const char* kBodyFormat = "symbisect-body/1";
inline constexpr const char* kGenFormat = "symbisect-gen/1";

inline nlohmann::ordered_json body_to_json(const ConvexBody& body) {
  nlohmann::ordered_json j;
  j["format"] = kBodyFormat;
  j["name"] = body.name();
  auto verts = nlohmann::ordered_json::array();
  for (const Point& p : body.vertices()) verts.push_back({p.x, p.y});
  j["vertices"] = std::move(verts);
  if (body.discretization()) j["discretization"] = *body.discretization();
  if (body.has_arcs()) {
    auto arcs = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body.is_arc_edge(i)) arcs.push_back(i);
    }
    j["arc_edges"] = std::move(arcs);
  }
  return j;
}

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

inline ConvexBody validated(const std::vector<Point>& pts, BodyMeta meta, double tol_scale) {
  try {
    return make_body(pts, std::move(meta), tol_scale);
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationError, e.what());
  }
}

}  // namespace detail

/// Parses a body document or a generator spec.
inline ConvexBody body_from_json(const nlohmann::json& j, double tol_scale = 1.0) {
  if (!j.is_object() || !j.contains("format") || !j["format"].is_string()) {
    detail::parse_fail("missing \"format\" field");
  }
  const std::string format = j["format"].get<std::string>();

  if (format == kGenFormat) {
    if (!j.contains("generator") || !j["generator"].is_string()) detail::parse_fail("missing \"generator\"");
    Params params;
    if (j.contains("params")) {
      if (!j["params"].is_object()) detail::parse_fail("\"params\" must be an object");
      for (const auto& [key, value] : j["params"].items()) {
        if (!value.is_number()) detail::parse_fail("parameter '" + key + "' must be a number");
        params[key] = value.get<double>();
      }
    }
    std::optional<int> n;
    if (j.contains("n")) {
      if (!j["n"].is_number_integer()) detail::parse_fail("\"n\" must be an integer");
      n = j["n"].get<int>();
    }
    ConvexBody body = [&] {
      try {
        return gen::generate(j["generator"].get<std::string>(), params, n);
      } catch (const Error& e) {
        throw Error(ErrorKind::ValidationError, e.what());
      }
    }();
    return tol_scale == 1.0 ? body : with_tolerance_scale(body, tol_scale);
  }

  if (format != kBodyFormat) detail::parse_fail("unsupported format '" + format + "'");
  if (!j.contains("vertices") || !j["vertices"].is_array()) detail::parse_fail("missing \"vertices\" array");
  std::vector<Point> pts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      detail::parse_fail("each vertex must be a [x, y] pair of numbers");
    }
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  BodyMeta meta;
  if (j.contains("name")) {
    if (!j["name"].is_string()) detail::parse_fail("\"name\" must be a string");
    meta.name = j["name"].get<std::string>();
  }
  if (j.contains("discretization") && !j["discretization"].is_null()) {
    if (!j["discretization"].is_number_integer()) detail::parse_fail("\"discretization\" must be an integer");
    meta.discretization = j["discretization"].get<int>();
  }
  if (j.contains("arc_edges")) {
    if (!j["arc_edges"].is_array()) detail::parse_fail("\"arc_edges\" must be an array");
    meta.arc_edges.assign(pts.size(), false);
    for (const auto& idx : j["arc_edges"]) {
      if (!idx.is_number_unsigned() || idx.get<std::size_t>() >= pts.size()) {
        detail::parse_fail("arc edge index out of range");
      }
      meta.arc_edges[idx.get<std::size_t>()] = true;
    }
  }
  if (pts.size() % 2 != 0) {
    throw Error(ErrorKind::ValidationError, "odd vertex count " + std::to_string(pts.size()));
  }
  return detail::validated(pts, std::move(meta), tol_scale);
}

inline ConvexBody body_from_string(const std::string& text, double tol_scale = 1.0) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  try {
    return body_from_json(j, tol_scale);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline ConvexBody load_body(const std::string& path, double tol_scale = 1.0) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return body_from_string(ss.str(), tol_scale);
}

inline void save_body(const ConvexBody& body, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << body_to_json(body).dump(2) << '\n';
}

}  // namespace symbisect
