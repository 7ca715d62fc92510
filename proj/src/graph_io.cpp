#include "gjs/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gjs {

namespace {

using nlohmann::json;

void check_fields(const json& obj, const std::set<std::string>& allowed, const char* what) {
  if (!obj.is_object()) throw InputError(std::string(what) + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw InputError(std::string("unknown field '") + it.key() + "' in " + what);
}

std::string require_string(const json& obj, const char* key, const char* what) {
  if (!obj.contains(key) || !obj[key].is_string())
    throw InputError(std::string(what) + " needs string field '" + key + "'");
  return obj[key].get<std::string>();
}

}  // namespace

GraphSpec parse_graph_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("graph file is not valid JSON: ") + e.what());
  }
  check_fields(doc, {"vertices", "edges"}, "graph");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw InputError("graph needs a 'vertices' array");
  GraphSpec spec;
  for (const auto& v : doc["vertices"]) {
    check_fields(v, {"id", "parity", "weight2"}, "vertex");
    VertexSpec vs;
    vs.id = require_string(v, "id", "vertex");
    std::string par = require_string(v, "parity", "vertex");
    if (par == "even")
      vs.parity = Parity::Even;
    else if (par == "odd")
      vs.parity = Parity::Odd;
    else
      throw InputError("parity must be 'even' or 'odd', got '" + par + "'");
    if (v.contains("weight2")) {
      if (!v["weight2"].is_number()) throw InputError("weight2 must be a number");
      vs.weight2 = v["weight2"].get<double>();
    }
    spec.vertices.push_back(std::move(vs));
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InputError("'edges' must be an array");
    for (const auto& e : doc["edges"]) {
      check_fields(e, {"u", "v", "mult"}, "edge");
      EdgeSpec es;
      es.u = require_string(e, "u", "edge");
      es.v = require_string(e, "v", "edge");
      if (e.contains("mult")) {
        if (!e["mult"].is_number_integer()) throw InputError("mult must be an integer");
        es.mult = e["mult"].get<int>();
      }
      spec.edges.push_back(std::move(es));
    }
  }
  return spec;
}

GraphSpec load_graph_spec(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open graph file '" + file + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph_spec(ss.str());
}

std::string dump_graph_spec(const GraphSpec& spec) {
  json doc;
  doc["vertices"] = json::array();
  for (const auto& v : spec.vertices) {
    json jv{{"id", v.id}, {"parity", v.parity == Parity::Even ? "even" : "odd"}};
    if (v.weight2) jv["weight2"] = *v.weight2;
    doc["vertices"].push_back(jv);
  }
  doc["edges"] = json::array();
  for (const auto& e : spec.edges) doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"mult", e.mult}});
  return doc.dump(2);
}

}  // namespace gjs
