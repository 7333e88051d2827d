#pragma once

#include <compare>
#include <span>

#include "gprod/graph.hpp"
#include "gprod/normal_form.hpp"

namespace gprod {

/// Canonical retraction ρ_A : G → G_A, killing every vertex group outside A.
NormalForm retract(const GraphProduct& product, const NormalForm& g, VertexSet a);

/// g ∈ G_A, i.e. every syllable of the canonical form has its vertex in A.
bool is_member(const NormalForm& g, VertexSet a);

/// Canonical representative of the left coset g·G_S. Right-movable syllables
/// with vertex in S are stripped, latest first, and the rest canonicalized.
NormalForm coset_rep(const GraphProduct& product, const NormalForm& g, VertexSet s);

/// A left coset g·G_{st(v)}, stored through its canonical representative.
struct CosetId {
  Vertex vertex = 0;
  NormalForm rep;
  friend auto operator<=>(const CosetId&, const CosetId&) = default;
  friend bool operator==(const CosetId&, const CosetId&) = default;
};

/// The coset g·G_{st(v)}.
CosetId coset_of(const GraphProduct& product, const NormalForm& g, Vertex v);

/// h·c, the left action of G on ⊔_v G/G_{st(v)}.
CosetId coset_translate(const GraphProduct& product, const NormalForm& h, const CosetId& c);

/// Reducedness predicate on a raw word: whenever v_i = v_j (i < j), the
/// product g_{i+1}⋯g_{j-1} is not in G_{st(v_i)}.
bool is_reduced_word(const GraphProduct& product, std::span<const Syllable> word);

}  // namespace gprod
