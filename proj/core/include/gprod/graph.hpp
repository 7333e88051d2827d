#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gprod {

using Vertex = std::uint32_t;

/// A subset of the vertices of a graph with at most kMaxVertices vertices.
class VertexSet {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  constexpr VertexSet() = default;
  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr VertexSet first_n(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  constexpr bool contains(Vertex v) const { return v < 64 && ((bits_ >> v) & 1U); }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr VertexSet operator|(VertexSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr VertexSet minus(VertexSet o) const { return from_bits(bits_ & ~o.bits_); }

  /// Members in increasing index order.
  std::vector<Vertex> members() const;

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Finite simplicial graph on named vertices. Vertex order is declaration
/// order; every canonical choice downstream breaks ties by that order.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  /// Throws gprod::Error on duplicate names, loops, unknown endpoints or
  /// more than VertexSet::kMaxVertices vertices. Repeated edges are merged.
  SimplicialGraph(std::vector<std::string> names,
                  const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Vertex v) const;

  /// Index of a named vertex; throws on unknown names.
  Vertex index(std::string_view name) const;
  bool has_vertex(std::string_view name) const;
  void check_vertex(Vertex v) const;
  void check_subset(VertexSet set) const;

  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }

  VertexSet vertices() const { return VertexSet::first_n(size()); }
  VertexSet link(Vertex v) const;
  VertexSet star(Vertex v) const;

  /// Edges as (u, v) with u < v, lexicographic.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// The induced graph on `subset`, keeping the relative vertex order.
  SimplicialGraph full_subgraph(VertexSet subset) const;

  /// Inclusion-maximal cliques, lexicographic by sorted vertex indices.
  std::vector<VertexSet> maximal_cliques() const;

  /// Finest partition into mutually joined parts: the connected components of
  /// the complement graph, ordered by their smallest vertex.
  std::vector<VertexSet> join_factors() const;

  /// Whether the full subgraph on `subset` splits as a nontrivial join.
  bool is_reducible(VertexSet subset) const;
  bool is_reducible() const { return is_reducible(vertices()); }

  /// Whether every pair of distinct members is an edge.
  bool is_clique(VertexSet subset) const;

  VertexSet parse_set(std::string_view comma_separated) const;
  std::string format_set(VertexSet set) const;

  friend bool operator==(const SimplicialGraph& a, const SimplicialGraph& b) {
    return a.names_ == b.names_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> adjacency_;
};

}  // namespace gprod
