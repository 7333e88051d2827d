#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gprod/normal_form.hpp"
#include "gprod/special_subgroups.hpp"
#include "gprod/sparse_vector.hpp"
#include "gprod/vertex_cocycle.hpp"

namespace gprod {

/// Basis index of A = ⊕^p_v A_v.
struct BlockKey {
  Vertex block = 0;
  BasisKey basis;
  friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

/// Basis index of 𝒜 = ⊕^p_{t∈T} A, T = ⊔_v G/G_{st(v)}.
struct IndexKey {
  CosetId coset;
  Vertex block = 0;
  BasisKey basis;
  friend auto operator<=>(const IndexKey&, const IndexKey&) = default;
  friend bool operator==(const IndexKey&, const IndexKey&) = default;
};

using AVector = SparseVector<BlockKey>;
using LpVector = SparseVector<IndexKey>;

/// The affine isometric action (τ, β) of a graph product on 𝒜 assembled from
/// one vertex cocycle per vertex.
class ProductAction {
 public:
  /// Throws unless there is one cocycle per vertex, each over that vertex's
  /// group and all with the same exponent p.
  ProductAction(GraphProduct product, std::vector<VertexCocycle> cocycles);

  const GraphProduct& product() const { return product_; }
  const Exponent& p() const { return p_; }
  const VertexCocycle& cocycle(Vertex v) const;
  const std::vector<VertexCocycle>& cocycles() const { return cocycles_; }

  /// π(g): each syllable acts on its own block, other blocks are fixed.
  AVector apply_pi(const NormalForm& g, const AVector& x) const;
  /// (τ(g)f)(t) = π(g) f(g⁻¹t).
  LpVector apply_tau(const NormalForm& g, const LpVector& f) const;

  /// β(g_1⋯g_n) = Σ_i π(g_1⋯g_{i-1}) b_{v_i}(g_i) χ_{(g_1⋯g_{i-1})G_{st(v_i)}}
  /// evaluated on the canonical form.
  LpVector beta(const NormalForm& g) const;
  /// The n cosets carrying the summands of beta(g), in syllable order.
  std::vector<CosetId> beta_supports(const NormalForm& g) const;

  NormPower norm_pow(const LpVector& f) const { return f.norm_pow(p_); }
  NormPower norm_pow(const AVector& a) const { return a.norm_pow(p_); }
  NormPower beta_norm_pow(const NormalForm& g) const { return norm_pow(beta(g)); }

  /// Replaces the cocycle of the i-th vertex (1-based, declaration order) by
  /// its padding with the least positive integer C_i that lifts the floor
  /// min_{g≠1} ‖b(g)‖ to at least i.
  ProductAction pad_for_properness() const;
  /// The constants C_i chosen by pad_for_properness().
  std::vector<Rational> properness_padding() const;

  /// One line per entry, sorted, then the norm line.
  std::string serialize(const LpVector& f) const;

 private:
  GraphProduct product_;
  std::vector<VertexCocycle> cocycles_;
  Exponent p_;
};

struct CheckOutcome {
  bool passed = true;
  std::string detail;
};

/// β(gh) = τ(g)β(h) + β(g), exactly.
CheckOutcome verify_cocycle_identity(const ProductAction& action, const NormalForm& g,
                                     const NormalForm& h);

struct NormIdentity {
  bool passed = true;
  NormPower lhs;  // ‖β(g)‖^p
  NormPower rhs;  // Σ ‖b_{v_i}(g_i)‖^p
};

NormIdentity verify_norm_identity(const ProductAction& action, const NormalForm& g);

struct ProfileRow {
  std::size_t length = 0;        // n = l_X(g)
  std::size_t sphere_size = 0;
  NormPower min_pow;             // m(n)^p
  double min_norm = 0.0;         // m(n)
  NormalForm witness;
};

/// m(n) = min{‖β(g)‖ : l_X(g) = n} for n ≤ radius. Throws ResourceError when
/// the ball exceeds `limit` elements.
std::vector<ProfileRow> properness_profile(const ProductAction& action, std::size_t radius,
                                           std::size_t limit = GraphProduct::kDefaultBallLimit);

}  // namespace gprod
