#include "gprod/splitting.hpp"

#include <algorithm>
#include <cmath>

#include "gprod/special_subgroups.hpp"

namespace gprod {

KernelDecomposition decompose(const GraphProduct& product, const NormalForm& z, Vertex v) {
  const SimplicialGraph& graph = product.graph();
  graph.check_vertex(v);
  const VertexSet link = graph.link(v);
  KernelDecomposition out;
  out.vertex = v;
  std::vector<Syllable> outside;
  for (const Syllable& s : z) {
    if (s.vertex == v) {
      NormalForm prefix = product.reduce(outside);
      out.factors.push_back({coset_rep(product, prefix, link), s.element});
    } else {
      outside.push_back(s);
    }
  }
  out.quotient = product.reduce(outside);
  return out;
}

std::size_t kernel_length(const GraphProduct& product, const KernelDecomposition& d) {
  std::size_t total = 0;
  for (const KernelFactor& f : d.factors) total += product.group(d.vertex).word_length(f.element);
  return total;
}

NormalForm kernel_element(const GraphProduct& product, const KernelDecomposition& d) {
  NormalForm w;
  for (const KernelFactor& f : d.factors) {
    NormalForm conj = product.multiply(
        product.multiply_syllable(f.tag, {d.vertex, f.element}), product.invert(f.tag));
    w = product.multiply(w, conj);
  }
  return w;
}

NormalForm reassemble(const GraphProduct& product, const KernelDecomposition& d) {
  return product.multiply(kernel_element(product, d), d.quotient);
}

LengthAdditivity verify_length_additivity(const GraphProduct& product, const NormalForm& z) {
  LengthAdditivity out;
  for (Vertex u = 0; u < product.vertex_count(); ++u) {
    out.per_vertex.push_back(kernel_length(product, decompose(product, z, u)));
    out.kernel_total += out.per_vertex.back();
  }
  out.word_length = product.word_length(z);
  out.passed = out.kernel_total == out.word_length;
  return out;
}

AmalgamSplit amalgam_split(const SimplicialGraph& graph, Vertex v) {
  graph.check_vertex(v);
  AmalgamSplit out;
  out.a = graph.vertices().minus(VertexSet::of({v}));
  out.b = graph.star(v);
  out.c = graph.link(v);
  return out;
}

EmbeddingAssembly assemble_embedding(const GraphProduct& product,
                                     const std::vector<KernelTable>& tables,
                                     const std::vector<NormalForm>& sample, const Exponent& p,
                                     const DeclaredBounds& bounds) {
  const std::size_t n = product.vertex_count();
  if (tables.size() != n) throw Error("assemble_embedding needs one table per vertex");
  EmbeddingAssembly out;
  for (const NormalForm& g : sample) {
    EmbeddingVector value;
    for (Vertex v = 0; v < n; ++v) {
      const NormalForm w = kernel_element(product, decompose(product, g, v));
      auto it = tables[v].find(w);
      if (it == tables[v].end()) {
        throw Error("table for vertex '" + product.graph().name(v) +
                    "' is missing kernel element " + product.format(w));
      }
      for (const auto& [k, c] : it->second.entries()) value.add({v, k}, c);
    }
    out.phi.emplace(g, std::move(value));
  }

  const double copies = static_cast<double>(n);
  bool first = true;
  for (auto x = out.phi.begin(); x != out.phi.end(); ++x) {
    for (auto y = std::next(x); y != out.phi.end(); ++y) {
      const auto d = product.word_length(product.multiply(product.invert(x->first), y->first));
      const double dist = (x->second - y->second).norm_pow(p).root(p);
      const double ratio = dist / static_cast<double>(d);
      const double floor = bounds.rho(d) / copies;
      ++out.pairs;
      if (first || ratio > out.empirical_lipschitz) out.empirical_lipschitz = ratio;
      if (first || dist - floor < out.lower_margin) out.lower_margin = dist - floor;
      first = false;
      const double ceiling = copies * bounds.lipschitz * static_cast<double>(d);
      if (dist > ceiling + kTolerance * std::max(1.0, ceiling) && out.upper_holds) {
        out.upper_holds = false;
        out.upper_witness = {x->first, y->first};
      }
      if (dist < floor - kTolerance * std::max(1.0, floor) && out.lower_holds) {
        out.lower_holds = false;
        out.lower_witness = {x->first, y->first};
      }
    }
  }
  return out;
}

}  // namespace gprod
