#include "gprod/graph.hpp"

#include <algorithm>
#include <sstream>

#include "gprod/rational.hpp"

namespace gprod {

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<Vertex>(std::countr_zero(b)));
  }
  return out;
}

SimplicialGraph::SimplicialGraph(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(names)), adjacency_(names_.size()) {
  if (names_.size() > VertexSet::kMaxVertices) {
    throw Error("graphs are limited to " + std::to_string(VertexSet::kMaxVertices) +
                " vertices");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error("vertex names must be non-empty");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw Error("duplicate vertex '" + names_[i] + "'");
    }
  }
  for (const auto& [a, b] : edges) {
    if (!has_vertex(a)) throw Error("edge endpoint '" + a + "' is not a vertex");
    if (!has_vertex(b)) throw Error("edge endpoint '" + b + "' is not a vertex");
    if (a == b) throw Error("no loops: edge {" + a + "," + a + "}");
    Vertex u = index(a);
    Vertex v = index(b);
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
  }
}

const std::string& SimplicialGraph::name(Vertex v) const {
  check_vertex(v);
  return names_[v];
}

bool SimplicialGraph::has_vertex(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

Vertex SimplicialGraph::index(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error("unknown vertex '" + std::string(name) + "'");
  return static_cast<Vertex>(it - names_.begin());
}

void SimplicialGraph::check_vertex(Vertex v) const {
  if (v >= names_.size()) throw Error("unknown vertex index " + std::to_string(v));
}

void SimplicialGraph::check_subset(VertexSet set) const {
  if (!set.is_subset_of(vertices())) throw Error("vertex set is not a subset of the graph");
}

VertexSet SimplicialGraph::link(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

VertexSet SimplicialGraph::star(Vertex v) const {
  VertexSet s = link(v);
  s.insert(v);
  return s;
}

std::vector<std::pair<Vertex, Vertex>> SimplicialGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adjacency_[u].members()) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

SimplicialGraph SimplicialGraph::full_subgraph(VertexSet subset) const {
  check_subset(subset);
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (Vertex v : subset.members()) names.push_back(names_[v]);
  for (auto [u, v] : this->edges()) {
    if (subset.contains(u) && subset.contains(v)) edges.emplace_back(names_[u], names_[v]);
  }
  return SimplicialGraph(std::move(names), edges);
}

namespace {

// Bron–Kerbosch with Tomita pivoting.
void bron_kerbosch(const std::vector<VertexSet>& adj, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  Vertex pivot = 0;
  std::size_t best = 0;
  bool have = false;
  for (Vertex u : (p | x).members()) {
    std::size_t n = (p & adj[u]).size();
    if (!have || n > best) {
      pivot = u;
      best = n;
      have = true;
    }
  }
  for (Vertex v : p.minus(adj[pivot]).members()) {
    VertexSet rv = r;
    rv.insert(v);
    bron_kerbosch(adj, rv, p & adj[v], x & adj[v], out);
    p.erase(v);
    x.insert(v);
  }
}

bool lex_less(VertexSet a, VertexSet b) {
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace

std::vector<VertexSet> SimplicialGraph::maximal_cliques() const {
  std::vector<VertexSet> out;
  if (size() == 0) return out;
  bron_kerbosch(adjacency_, VertexSet{}, vertices(), VertexSet{}, out);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<VertexSet> SimplicialGraph::join_factors() const {
  std::vector<VertexSet> parts;
  VertexSet unseen = vertices();
  while (!unseen.empty()) {
    Vertex start = unseen.members().front();
    VertexSet component = VertexSet::of({start});
    VertexSet frontier = component;
    unseen.erase(start);
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex u : frontier.members()) {
        // complement neighbours of u among unseen vertices
        next = next | unseen.minus(adjacency_[u]);
      }
      next = next & unseen;
      unseen = unseen.minus(next);
      component = component | next;
      frontier = next;
    }
    parts.push_back(component);
  }
  return parts;
}

bool SimplicialGraph::is_reducible(VertexSet subset) const {
  check_subset(subset);
  if (subset.size() < 2) return false;
  return full_subgraph(subset).join_factors().size() > 1;
}

bool SimplicialGraph::is_clique(VertexSet subset) const {
  for (Vertex v : subset.members()) {
    if (!subset.minus(VertexSet::of({v})).is_subset_of(adjacency_[v])) return false;
  }
  return true;
}

VertexSet SimplicialGraph::parse_set(std::string_view comma_separated) const {
  VertexSet out;
  std::string item;
  std::istringstream in{std::string(comma_separated)};
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    auto e = item.find_last_not_of(" \t");
    out.insert(index(item.substr(b, e - b + 1)));
  }
  return out;
}

std::string SimplicialGraph::format_set(VertexSet set) const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : set.members()) {
    if (!first) out += ",";
    out += names_.at(v);
    first = false;
  }
  return out + "}";
}

}  // namespace gprod
