#include "gprod/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gprod::cli {

using json = nlohmann::ordered_json;

bool operator==(const CocycleSpec& a, const CocycleSpec& b) {
  if (a.kind != b.kind || a.scale != b.scale) return false;
  if (!a.base || !b.base) return !a.base && !b.base;
  return *a.base == *b.base;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> as_strings(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_string(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Rational as_rational(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(j.dump());
    if (j.is_number_float()) return parse_rational(j.dump());
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "expected a rational (string or number)");
}

GroupSpec parse_group(const json& j, const std::string& where) {
  GroupSpec g;
  std::string kind = as_string(field(j, "kind", where), where + ".kind");
  if (kind == "integers") {
    g.kind = GroupKind::integers;
  } else if (kind == "cyclic") {
    g.kind = GroupKind::cyclic;
    const json& order = field(j, "order", where);
    if (!order.is_number_integer()) fail(where + ".order", "expected an integer");
    g.order = order.get<std::int64_t>();
  } else if (kind == "table") {
    g.kind = GroupKind::table;
    g.elements = as_strings(field(j, "elements", where), where + ".elements");
    const json& rows = field(j, "table", where);
    if (!rows.is_array()) fail(where + ".table", "expected an array of rows");
    for (std::size_t i = 0; i < rows.size(); ++i)
      g.table.push_back(as_strings(rows[i], where + ".table[" + std::to_string(i) + "]"));
    g.generators = as_strings(field(j, "generators", where), where + ".generators");
  } else {
    fail(where + ".kind", "unknown group kind '" + kind + "'");
  }
  return g;
}

CocycleSpec parse_cocycle(const json& j, const std::string& where) {
  CocycleSpec c;
  std::string kind = as_string(field(j, "kind", where), where + ".kind");
  if (kind == "translation") {
    c.kind = CocycleSpec::Kind::translation;
  } else if (kind == "regular") {
    c.kind = CocycleSpec::Kind::regular;
    if (j.contains("C")) c.scale = as_rational(j["C"], where + ".C");
  } else if (kind == "padded") {
    c.kind = CocycleSpec::Kind::padded;
    c.scale = as_rational(field(j, "C", where), where + ".C");
    c.base = std::make_shared<const CocycleSpec>(
        parse_cocycle(field(j, "base", where), where + ".base"));
  } else {
    fail(where + ".kind", "unknown cocycle kind '" + kind + "'");
  }
  return c;
}

json group_json(const GroupSpec& g) {
  json j;
  switch (g.kind) {
    case GroupKind::integers: j["kind"] = "integers"; break;
    case GroupKind::cyclic:
      j["kind"] = "cyclic";
      j["order"] = g.order;
      break;
    case GroupKind::table:
      j["kind"] = "table";
      j["elements"] = g.elements;
      j["table"] = g.table;
      j["generators"] = g.generators;
      break;
  }
  return j;
}

json cocycle_json(const CocycleSpec& c) {
  json j;
  switch (c.kind) {
    case CocycleSpec::Kind::translation: j["kind"] = "translation"; break;
    case CocycleSpec::Kind::regular:
      j["kind"] = "regular";
      j["C"] = format_rational(c.scale);
      break;
    case CocycleSpec::Kind::padded:
      j["kind"] = "padded";
      j["base"] = cocycle_json(*c.base);
      j["C"] = format_rational(c.scale);
      break;
  }
  return j;
}

VertexGroup make_group(const GroupSpec& g) {
  switch (g.kind) {
    case GroupKind::integers: return VertexGroup::integers();
    case GroupKind::cyclic: return VertexGroup::cyclic(g.order);
    case GroupKind::table: return VertexGroup::table(g.elements, g.table, g.generators);
  }
  throw Error("unknown group kind");
}

VertexCocycle make_cocycle(const CocycleSpec& c, const VertexGroup& group, Exponent p) {
  switch (c.kind) {
    case CocycleSpec::Kind::translation: return VertexCocycle::translation(group, p);
    case CocycleSpec::Kind::regular: return VertexCocycle::regular(group, p, c.scale);
    case CocycleSpec::Kind::padded:
      return VertexCocycle::padded(make_cocycle(*c.base, group, p), c.scale);
  }
  throw Error("unknown cocycle kind");
}

CocycleSpec default_cocycle(const GroupSpec& g) {
  CocycleSpec c;
  c.kind = g.kind == GroupKind::integers ? CocycleSpec::Kind::translation
                                         : CocycleSpec::Kind::regular;
  return c;
}

}  // namespace

ProductConfig parse_config(const std::string& text, const std::string& source) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(source + ": " + e.what());
  }
  ProductConfig config;
  const std::string top = source;
  if (!root.is_object()) fail(top, "expected a JSON object");

  const json& p = field(root, "p", top);
  if (!p.is_number()) fail(top + ".p", "expected a number");
  config.p = p.get<double>();

  const json& vertices = field(root, "vertices", top);
  if (!vertices.is_array()) fail(top + ".vertices", "expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = top + ".vertices[" + std::to_string(i) + "]";
    const json& v = vertices[i];
    VertexSpec spec;
    spec.name = as_string(field(v, "name", where), where + ".name");
    spec.group = parse_group(field(v, "group", where), where + ".group");
    if (v.contains("cocycle")) spec.cocycle = parse_cocycle(v["cocycle"], where + ".cocycle");
    if (v.contains("adim")) {
      if (!v["adim"].is_number_unsigned()) fail(where + ".adim", "expected a non-negative integer");
      spec.adim = v["adim"].get<std::uint64_t>();
    }
    if (v.contains("alpha")) {
      if (!v["alpha"].is_number()) fail(where + ".alpha", "expected a number");
      spec.alpha = v["alpha"].get<double>();
    }
    config.vertices.push_back(std::move(spec));
  }

  if (root.contains("edges")) {
    const json& edges = root["edges"];
    if (!edges.is_array()) fail(top + ".edges", "expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string where = top + ".edges[" + std::to_string(i) + "]";
      std::vector<std::string> pair = as_strings(edges[i], where);
      if (pair.size() != 2) fail(where, "expected a pair of vertex names");
      config.edges.emplace_back(pair[0], pair[1]);
    }
  }

  // Semantic validation, with the offending field in the message.
  try {
    build(config);
  } catch (const Error& e) {
    throw ConfigError(source + ": " + e.what());
  }
  return config;
}

ProductConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

std::string serialize_config(const ProductConfig& config) {
  json root;
  root["p"] = config.p;
  json vertices = json::array();
  for (const VertexSpec& v : config.vertices) {
    json j;
    j["name"] = v.name;
    j["group"] = group_json(v.group);
    if (v.cocycle) j["cocycle"] = cocycle_json(*v.cocycle);
    if (v.adim) j["adim"] = *v.adim;
    if (v.alpha) j["alpha"] = *v.alpha;
    vertices.push_back(std::move(j));
  }
  root["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const auto& [a, b] : config.edges) edges.push_back(json::array({a, b}));
  root["edges"] = std::move(edges);
  return root.dump(2) + "\n";
}

Loaded build(const ProductConfig& config) {
  std::vector<std::string> names;
  for (const VertexSpec& v : config.vertices) names.push_back(v.name);

  SimplicialGraph graph;
  try {
    graph = SimplicialGraph(names, config.edges);
  } catch (const Error& e) {
    throw ConfigError(std::string("graph: ") + e.what());
  }

  std::optional<Exponent> p;
  try {
    p = Exponent(config.p);
  } catch (const Error& e) {
    throw ConfigError(std::string("p: ") + e.what());
  }

  std::vector<VertexGroup> groups;
  std::vector<VertexCocycle> cocycles;
  for (std::size_t i = 0; i < config.vertices.size(); ++i) {
    const VertexSpec& v = config.vertices[i];
    const std::string where = "vertices[" + std::to_string(i) + "] (" + v.name + ")";
    try {
      groups.push_back(make_group(v.group));
    } catch (const Error& e) {
      throw ConfigError(where + ".group: " + e.what());
    }
    try {
      cocycles.push_back(
          make_cocycle(v.cocycle ? *v.cocycle : default_cocycle(v.group), groups.back(), *p));
    } catch (const Error& e) {
      throw ConfigError(where + ".cocycle: " + e.what());
    }
    if (v.alpha && !(*v.alpha >= 0.0 && *v.alpha <= 1.0))
      throw ConfigError(where + ".alpha: expected a value in [0, 1]");
  }

  GraphProduct product(graph, groups);
  ProductAction action(std::move(product), std::move(cocycles));
  return Loaded{config, std::move(graph), std::move(groups), std::move(action)};
}

std::vector<GroupOrder> Loaded::orders() const {
  std::vector<GroupOrder> out;
  for (const VertexGroup& g : groups) out.push_back(g.order());
  return out;
}

std::vector<std::uint64_t> Loaded::adims() const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& declared = config.vertices[i].adim;
    out.push_back(declared ? *declared : (groups[i].is_finite() ? 0 : 1));
  }
  return out;
}

std::vector<double> Loaded::alphas() const {
  std::vector<double> out;
  for (const VertexSpec& v : config.vertices) out.push_back(v.alpha ? *v.alpha : 1.0);
  return out;
}

}  // namespace gprod::cli
