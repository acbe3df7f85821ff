#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ollp/instance.hpp"
#include "ollp/layout.hpp"

// Instance and layout files are JSON documents written one cell, flow row or
// placement per line:
//
//   {
//     "name": "demo",
//     "n": 2,
//     "cells": [
//       {"id": 0, "s": 2, "t": 4},
//       {"id": 1, "s": 3, "t": 3}
//     ],
//     "flows": [
//       [0, 5],
//       [1, 0]
//     ],
//     "placements": [                      <- layout files only
//       {"id": 0, "x": 0, "y": 0, "door_side": "Below"},
//       ...
//     ],
//     "algo": "sga", "seed": 1, "objective": 12.5   <- optional provenance
//   }

namespace ollp::io {

/// Malformed file: message names the line (for syntax errors) or the field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed file whose contents break an instance or layout invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LayoutFile {
  Instance instance;
  std::vector<Placement> placements;
  std::optional<std::string> algo;
  std::optional<std::uint64_t> seed;
  std::optional<double> objective;

  Layout layout() const { return Layout{instance.specs, placements}; }
};

namespace detail {

using nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

inline json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t i = 0; i + 1 < upto; ++i) line += text[i] == '\n' ? 1 : 0;
    throw FormatError("line " + std::to_string(line) + ": " + e.what());
  }
}

inline const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw FormatError("missing field '" + where + key + "'");
  return obj.at(key);
}

inline double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw FormatError("field '" + where + "' must be a number");
  return v.get<double>();
}

inline std::uint64_t count(const json& v, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw FormatError("field '" + where + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

inline Instance instance_from_json(const json& doc) {
  if (!doc.is_object()) throw FormatError("top-level value must be an object");
  Instance inst;
  const json& name = field(doc, "name", "");
  if (!name.is_string()) throw FormatError("field 'name' must be a string");
  inst.name = name.get<std::string>();
  const std::size_t n = count(field(doc, "n", ""), "n");

  const json& cells = field(doc, "cells", "");
  if (!cells.is_array()) throw FormatError("field 'cells' must be an array");
  if (cells.size() != n) {
    throw ValidationError("'cells' has " + std::to_string(cells.size()) + " entries but n = " + std::to_string(n));
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string where = "cells[" + std::to_string(i) + "].";
    RectangleSpec spec;
    spec.id = count(field(cells[i], "id", where), where + "id");
    spec.s = number(field(cells[i], "s", where), where + "s");
    spec.t = number(field(cells[i], "t", where), where + "t");
    inst.specs.push_back(spec);
  }

  const json& flows = field(doc, "flows", "");
  if (!flows.is_array()) throw FormatError("field 'flows' must be an array");
  if (flows.size() != n) {
    throw ValidationError("'flows' has " + std::to_string(flows.size()) + " rows but n = " + std::to_string(n));
  }
  inst.flows = FlowMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "flows[" + std::to_string(i) + "]";
    if (!flows[i].is_array()) throw FormatError("field '" + where + "' must be an array");
    if (flows[i].size() != n) {
      throw ValidationError("'" + where + "' has " + std::to_string(flows[i].size()) + " columns but n = " +
                            std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) inst.flows(i, j) = number(flows[i][j], where + "[" + std::to_string(j) + "]");
  }

  try {
    validate(inst);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  return inst;
}

inline std::string num(double v) { return json(v).dump(); }

inline std::string instance_body(const Instance& inst) {
  std::ostringstream os;
  os << "  \"name\": " << json(inst.name).dump() << ",\n";
  os << "  \"n\": " << inst.size() << ",\n";
  os << "  \"cells\": [\n";
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const RectangleSpec& c = inst.specs[i];
    os << "    {\"id\": " << c.id << ", \"s\": " << num(c.s) << ", \"t\": " << num(c.t) << "}"
       << (i + 1 < inst.size() ? "," : "") << "\n";
  }
  os << "  ],\n  \"flows\": [\n";
  for (std::size_t i = 0; i < inst.size(); ++i) {
    os << "    [";
    for (std::size_t j = 0; j < inst.size(); ++j) os << (j ? ", " : "") << num(inst.flows(i, j));
    os << "]" << (i + 1 < inst.size() ? "," : "") << "\n";
  }
  os << "  ]";
  return os.str();
}

}  // namespace detail

inline Instance parse_instance(const std::string& text) {
  return detail::instance_from_json(detail::parse_document(text));
}

inline Instance load_instance(const std::string& path) { return parse_instance(detail::read_file(path)); }

inline std::string format_instance(const Instance& inst) { return "{\n" + detail::instance_body(inst) + "\n}\n"; }

inline void save_instance(const Instance& inst, const std::string& path) {
  detail::write_file(path, format_instance(inst));
}

inline LayoutFile parse_layout(const std::string& text) {
  const detail::json doc = detail::parse_document(text);
  LayoutFile lf;
  lf.instance = detail::instance_from_json(doc);
  const detail::json& pl = detail::field(doc, "placements", "");
  if (!pl.is_array()) throw FormatError("field 'placements' must be an array");
  const std::size_t n = lf.instance.size();
  if (pl.size() != n) {
    throw ValidationError("'placements' has " + std::to_string(pl.size()) + " entries but n = " + std::to_string(n));
  }
  lf.placements.resize(n);
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const std::string where = "placements[" + std::to_string(k) + "].";
    const std::size_t id = detail::count(detail::field(pl[k], "id", where), where + "id");
    if (id >= n || seen[id]) throw ValidationError("'" + where + "id' is out of range or repeated");
    seen[id] = true;
    Placement p;
    p.center.x = detail::number(detail::field(pl[k], "x", where), where + "x");
    p.center.y = detail::number(detail::field(pl[k], "y", where), where + "y");
    const detail::json& side = detail::field(pl[k], "door_side", where);
    const auto parsed = side.is_string() ? door_side_from_string(side.get<std::string>()) : std::nullopt;
    if (!parsed) throw FormatError("field '" + where + "door_side' must be one of Below, Right, Above, Left");
    p.door_side = *parsed;
    lf.placements[id] = p;
  }
  if (doc.contains("algo") && doc["algo"].is_string()) lf.algo = doc["algo"].get<std::string>();
  if (doc.contains("seed")) lf.seed = detail::count(doc["seed"], "seed");
  if (doc.contains("objective")) lf.objective = detail::number(doc["objective"], "objective");
  return lf;
}

inline LayoutFile load_layout(const std::string& path) { return parse_layout(detail::read_file(path)); }

inline std::string format_layout(const LayoutFile& lf) {
  std::ostringstream os;
  os << "{\n" << detail::instance_body(lf.instance) << ",\n  \"placements\": [\n";
  for (std::size_t i = 0; i < lf.placements.size(); ++i) {
    const Placement& p = lf.placements[i];
    os << "    {\"id\": " << i << ", \"x\": " << detail::num(p.center.x) << ", \"y\": " << detail::num(p.center.y)
       << ", \"door_side\": \"" << to_string(p.door_side) << "\"}" << (i + 1 < lf.placements.size() ? "," : "")
       << "\n";
  }
  os << "  ]";
  if (lf.algo) os << ",\n  \"algo\": " << detail::json(*lf.algo).dump();
  if (lf.seed) os << ",\n  \"seed\": " << *lf.seed;
  if (lf.objective) os << ",\n  \"objective\": " << detail::num(*lf.objective);
  os << "\n}\n";
  return os.str();
}

inline void save_layout(const LayoutFile& lf, const std::string& path) { detail::write_file(path, format_layout(lf)); }

}  // namespace ollp::io
