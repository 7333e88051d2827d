#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gprod/graph.hpp"
#include "gprod/vertex_group.hpp"

namespace gprod {

struct Syllable {
  Vertex vertex = 0;
  Element element = 0;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// A group element as its canonical reduced syllable sequence. Equal group
/// elements have identical sequences, so comparison is the word problem.
class NormalForm {
 public:
  NormalForm() = default;

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  std::size_t size() const { return syllables_.size(); }
  const Syllable& operator[](std::size_t i) const { return syllables_[i]; }
  auto begin() const { return syllables_.begin(); }
  auto end() const { return syllables_.end(); }

  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  friend class GraphProduct;
  explicit NormalForm(std::vector<Syllable> s) : syllables_(std::move(s)) {}
  std::vector<Syllable> syllables_;
};

struct NormalFormHash {
  std::size_t operator()(const NormalForm& g) const noexcept;
};

/// The graph product ΓG of a family of vertex groups over a simplicial graph.
class GraphProduct {
 public:
  GraphProduct(SimplicialGraph graph, std::vector<VertexGroup> groups);

  const SimplicialGraph& graph() const { return graph_; }
  const VertexGroup& group(Vertex v) const;
  std::size_t vertex_count() const { return groups_.size(); }

  /// Canonical form of the product of `word`. Identity syllables are dropped,
  /// same-vertex syllables separated only by link syllables are merged, and
  /// the result is put in left-greedy order (smallest movable vertex first).
  NormalForm reduce(std::span<const Syllable> word) const;

  /// Left-greedy canonical ordering of an already reduced word.
  NormalForm canonicalize(std::vector<Syllable> reduced) const;

  NormalForm identity() const { return {}; }
  NormalForm letter(Vertex v, Element g) const;

  NormalForm multiply(const NormalForm& x, const NormalForm& y) const;
  NormalForm invert(const NormalForm& x) const;
  /// x·s for a single syllable, cheaper than multiply().
  NormalForm multiply_syllable(const NormalForm& x, const Syllable& s) const;

  bool equals(const NormalForm& x, const NormalForm& y) const { return x == y; }

  /// |g|_Γ
  std::size_t syllable_length(const NormalForm& x) const { return x.size(); }
  /// l_X(g) = Σ |g_i|_{X_{v_i}}
  std::size_t word_length(const NormalForm& x) const;

  /// X = ∪ X_v as single-syllable letters, in vertex order.
  std::vector<Syllable> generators() const;

  /// Breadth-first spheres S(0), …, S(radius) of the Cayley graph over X.
  /// Throws ResourceError when more than `limit` elements would be produced.
  std::vector<std::vector<NormalForm>> spheres(std::size_t radius,
                                               std::size_t limit = kDefaultBallLimit) const;
  /// Every element with l_X ≤ radius, sphere by sphere.
  std::vector<NormalForm> enumerate_ball(std::size_t radius,
                                         std::size_t limit = kDefaultBallLimit) const;

  /// Parses whitespace-separated `vertex:k` tokens (k a nonzero integer, or an
  /// element name for table groups) without reducing.
  std::vector<Syllable> parse_syllables(std::string_view text) const;
  NormalForm parse(std::string_view text) const { return reduce(parse_syllables(text)); }
  /// `a:2 b:-1`, or `(empty)` for the identity.
  std::string format(const NormalForm& x) const;
  std::string format(std::span<const Syllable> word) const;

  /// Throws unless the syllable names a vertex and a valid element of its group.
  void check_syllable(const Syllable& s) const;

  static constexpr std::size_t kDefaultBallLimit = 2'000'000;

 private:
  // Appends s to a reduced word, keeping it reduced.
  void append_reduced(std::vector<Syllable>& word, const Syllable& s) const;

  SimplicialGraph graph_;
  std::vector<VertexGroup> groups_;
};

}  // namespace gprod
