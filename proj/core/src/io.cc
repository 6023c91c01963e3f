#include "circpack/io.h"

#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>

namespace circpack {

namespace {

using nlohmann::json;
// Insertion order keeps emitted keys in the documented order.
using ojson = nlohmann::ordered_json;

Rational rational_field(const json& node, const std::string& what) {
  if (node.is_string()) {
    try {
      return parse_rational(node.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(what + ": " + e.what());
    }
  }
  if (node.is_number_integer()) {
    if (node.is_number_unsigned()) return Rational(std::to_string(node.get<std::uint64_t>()));
    return Rational(static_cast<long>(node.get<std::int64_t>()));
  }
  if (node.is_number_float()) throw ParseError(what + ": floating point numbers are not exact; use \"p/q\"");
  throw ParseError(what + ": expected a rational string");
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  InstanceFile out;
  try {
    const json& bin = field(doc, "bin", "instance");
    out.instance.w = rational_field(field(bin, "w", "bin"), "bin.w");
    out.instance.h = rational_field(field(bin, "h", "bin"), "bin.h");
    const json& circles = field(doc, "circles", "instance");
    if (!circles.is_array()) throw ParseError("circles: expected an array");
    int id = 0;
    for (const auto& c : circles) {
      out.instance.circles.push_back({id, rational_field(c, "circles[" + std::to_string(id) + "]")});
      ++id;
    }
    if (doc.contains("gamma")) out.gamma = rational_field(doc["gamma"], "gamma");
    if (doc.contains("r")) {
      const json& r = doc["r"];
      if (!r.is_number_integer()) throw ParseError("r: expected an integer");
      const auto v = r.get<std::int64_t>();
      if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) throw ParseError("r: out of range");
      out.r = static_cast<int>(v);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  try {
    out.instance.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
  if (out.gamma && *out.gamma <= 0) throw ParseError("gamma must be positive");
  return out;
}

std::string serialize_instance(const InstanceFile& file) {
  ojson doc;
  doc["bin"]["w"] = to_string(file.instance.w);
  doc["bin"]["h"] = to_string(file.instance.h);
  doc["circles"] = ojson::array();
  for (const auto& c : file.instance.circles) doc["circles"].push_back(to_string(c.radius));
  if (file.gamma) doc["gamma"] = to_string(*file.gamma);
  if (file.r) doc["r"] = *file.r;
  return dump(doc);
}

PackingFile parse_packing(std::string_view text) {
  const json doc = parse_json(text);
  PackingFile out;
  try {
    out.packing.bin_width = rational_field(field(doc, "bin_width", "packing"), "bin_width");
    out.packing.bin_height = rational_field(field(doc, "bin_height", "packing"), "bin_height");
    const json& bins = field(doc, "bins", "packing");
    if (!bins.is_array()) throw ParseError("bins: expected an array");
    for (const auto& b : bins) {
      BinContent content;
      const json& ps = field(b, "placements", "bin");
      if (!ps.is_array()) throw ParseError("placements: expected an array");
      for (const auto& p : ps) {
        const json& id = field(p, "id", "placement");
        if (!id.is_number_integer()) throw ParseError("placement id: expected an integer");
        content.placements.push_back(
            {id.get<int>(), Point2{rational_field(field(p, "x", "placement"), "x"),
                                   rational_field(field(p, "y", "placement"), "y")}});
      }
      out.packing.bins.push_back(std::move(content));
    }
    if (doc.contains("meta")) {
      const json& meta = doc["meta"];
      if (!meta.is_object()) throw ParseError("meta: expected an object");
      if (meta.contains("seed")) out.meta.seed = meta["seed"].get<std::uint64_t>();
      if (meta.contains("backend")) out.meta.backend = meta["backend"].get<std::string>();
      if (meta.contains("parameters")) {
        for (const auto& [k, v] : meta["parameters"].items()) out.meta.parameters[k] = v.get<std::string>();
      }
      if (meta.contains("achieved_height")) {
        out.meta.achieved_height = rational_field(meta["achieved_height"], "achieved_height");
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("packing: ") + e.what());
  }
  if (out.packing.bin_width <= 0 || out.packing.bin_height < 0) throw ParseError("bin dimensions must be positive");
  return out;
}

std::string serialize_packing(const PackingFile& file) {
  ojson doc;
  doc["bin_width"] = to_string(file.packing.bin_width);
  doc["bin_height"] = to_string(file.packing.bin_height);
  doc["bins"] = ojson::array();
  for (const auto& b : file.packing.bins) {
    ojson bin;
    bin["placements"] = ojson::array();
    for (const auto& p : b.placements) {
      ojson q;
      q["id"] = p.id;
      q["x"] = to_string(p.center.x);
      q["y"] = to_string(p.center.y);
      bin["placements"].push_back(std::move(q));
    }
    doc["bins"].push_back(std::move(bin));
  }
  ojson meta = ojson::object();
  if (file.meta.seed) meta["seed"] = *file.meta.seed;
  if (!file.meta.backend.empty()) meta["backend"] = file.meta.backend;
  if (!file.meta.parameters.empty()) {
    ojson params = ojson::object();
    for (const auto& [k, v] : file.meta.parameters) params[k] = v;
    meta["parameters"] = std::move(params);
  }
  if (file.meta.achieved_height) meta["achieved_height"] = to_string(*file.meta.achieved_height);
  doc["meta"] = std::move(meta);
  return dump(doc);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace circpack
