#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gprod/growth.hpp"
#include "gprod/normal_form.hpp"
#include "gprod/rational.hpp"
#include "gprod/sparse_vector.hpp"

namespace gprod {

/// One free factor t·h·t⁻¹ of the kernel W_v = ker ρ_{V∖{v}}. The tag t is
/// the canonical representative of its coset in G_{V∖{v}} / G_{link(v)}.
struct KernelFactor {
  NormalForm tag;
  Element element = 0;
  friend bool operator==(const KernelFactor&, const KernelFactor&) = default;
};

/// z = (Π_j t_j h_j t_j⁻¹) · quotient with quotient = ρ_{V∖{v}}(z).
struct KernelDecomposition {
  Vertex vertex = 0;
  std::vector<KernelFactor> factors;
  NormalForm quotient;
};

KernelDecomposition decompose(const GraphProduct& product, const NormalForm& z, Vertex v);

/// l_{W_v}: total X_v-length of the factor elements.
std::size_t kernel_length(const GraphProduct& product, const KernelDecomposition& d);

/// w_z^v = Π_j t_j h_j t_j⁻¹ as an element of G.
NormalForm kernel_element(const GraphProduct& product, const KernelDecomposition& d);

/// kernel_element(d) · d.quotient; equals the decomposed element.
NormalForm reassemble(const GraphProduct& product, const KernelDecomposition& d);

struct LengthAdditivity {
  bool passed = true;
  std::vector<std::size_t> per_vertex;  // l_{W_u}(w_z^u), by vertex index
  std::size_t kernel_total = 0;
  std::size_t word_length = 0;
};

/// Σ_u l_{W_u}(w_z^u) = l_X(z).
LengthAdditivity verify_length_additivity(const GraphProduct& product, const NormalForm& z);

/// G = G_A *_{G_C} G_B with A = V∖{v}, B = st(v), C = link(v).
struct AmalgamSplit {
  VertexSet a;
  VertexSet b;
  VertexSet c;
};

AmalgamSplit amalgam_split(const SimplicialGraph& graph, Vertex v);

using RealVector = SparseVector<std::size_t, double>;
using EmbeddingVector = SparseVector<std::pair<Vertex, std::size_t>, double>;

/// Per-vertex finite embedding φ'_v : W_v → ℓp, keyed by w_g^v ∈ G.
using KernelTable = std::map<NormalForm, RealVector>;

/// What the caller guarantees for every table: ‖φ'_v(x) − φ'_v(y)‖ ≤ C·d_{W_v}(x, y)
/// and ≥ ρ(d_{W_v}(x, y)) with ρ concave.
struct DeclaredBounds {
  double lipschitz = 1.0;
  GrowthFunction rho = GrowthFunction({0.0});
};

struct EmbeddingAssembly {
  std::map<NormalForm, EmbeddingVector> phi;
  std::size_t pairs = 0;
  /// max ‖φ(x) − φ(y)‖ / d(x, y) over distinct sample pairs.
  double empirical_lipschitz = 0.0;
  /// min ‖φ(x) − φ(y)‖ − ρ(d(x, y))/n over distinct pairs.
  double lower_margin = 0.0;
  bool upper_holds = true;  // ‖φ(x) − φ(y)‖ ≤ n·C·d(x, y)
  bool lower_holds = true;  // ‖φ(x) − φ(y)‖ ≥ ρ(d(x, y))/n
  std::optional<std::pair<NormalForm, NormalForm>> upper_witness;
  std::optional<std::pair<NormalForm, NormalForm>> lower_witness;
};

/// φ = ⊕^p_v φ'_v(w_g^v) over the sample, checked against the Lipschitz
/// upper bound n·C·d and the compression lower bound ρ(d)/n.
/// Throws gprod::Error when a table lacks a required kernel element.
EmbeddingAssembly assemble_embedding(const GraphProduct& product,
                                     const std::vector<KernelTable>& tables,
                                     const std::vector<NormalForm>& sample, const Exponent& p,
                                     const DeclaredBounds& bounds);

}  // namespace gprod
