#include "gprod/special_subgroups.hpp"

namespace gprod {

NormalForm retract(const GraphProduct& product, const NormalForm& g, VertexSet a) {
  product.graph().check_subset(a);
  std::vector<Syllable> kept;
  for (const Syllable& s : g) {
    if (a.contains(s.vertex)) kept.push_back(s);
  }
  // Deleting syllables can bring equal vertices together, so reduce again.
  return product.reduce(kept);
}

bool is_member(const NormalForm& g, VertexSet a) {
  for (const Syllable& s : g) {
    if (!a.contains(s.vertex)) return false;
  }
  return true;
}

NormalForm coset_rep(const GraphProduct& product, const NormalForm& g, VertexSet s) {
  product.graph().check_subset(s);
  const SimplicialGraph& graph = product.graph();
  std::vector<Syllable> word = g.syllables();
  for (;;) {
    VertexSet after;
    std::size_t strip = word.size();
    for (std::size_t i = word.size(); i-- > 0;) {
      const Vertex v = word[i].vertex;
      if (s.contains(v) && after.is_subset_of(graph.link(v))) {
        strip = i;
        break;
      }
      after.insert(v);
    }
    if (strip == word.size()) break;
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(strip));
  }
  return product.canonicalize(std::move(word));
}

CosetId coset_of(const GraphProduct& product, const NormalForm& g, Vertex v) {
  return {v, coset_rep(product, g, product.graph().star(v))};
}

CosetId coset_translate(const GraphProduct& product, const NormalForm& h, const CosetId& c) {
  return coset_of(product, product.multiply(h, c.rep), c.vertex);
}

bool is_reduced_word(const GraphProduct& product, std::span<const Syllable> word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = i + 1; j < word.size(); ++j) {
      if (word[i].vertex != word[j].vertex) continue;
      NormalForm between = product.reduce(word.subspan(i + 1, j - i - 1));
      if (is_member(between, product.graph().star(word[i].vertex))) return false;
    }
  }
  // Identity syllables are never part of a reduced word.
  for (const Syllable& s : word) {
    if (product.group(s.vertex).is_identity(s.element)) return false;
  }
  return true;
}

}  // namespace gprod
