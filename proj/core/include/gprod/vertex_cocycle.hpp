#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gprod/rational.hpp"
#include "gprod/sparse_vector.hpp"
#include "gprod/vertex_group.hpp"

namespace gprod {

/// Basis index inside a vertex block A_v. A block is a padded sum of leaves;
/// `leaf` selects the summand and `element` the basis vector inside it
/// (always 0 for a line, a group element for a regular block).
struct BasisKey {
  std::uint32_t leaf = 0;
  Element element = 0;
  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

using BlockVector = SparseVector<BasisKey>;

/// An affine isometric action (π_v, b_v) of a vertex group on an ℓp block.
///
/// Leaves are either a line with trivial π and b(k) = k (ℤ only), or a
/// regular block ℓp(G_v) with left translation and b(g) = Cχ_g − Cχ_1.
class VertexCocycle {
 public:
  enum class LeafKind { line, regular };
  struct Leaf {
    LeafKind kind;
    Rational scale;
  };

  /// b(k) = k on the line ℝ; requires the integers.
  static VertexCocycle translation(const VertexGroup& group, Exponent p);
  /// b(g) = Cχ_g − Cχ_1 on ℓp(G); requires a finite group and C > 0.
  static VertexCocycle regular(const VertexGroup& group, Exponent p, const Rational& c);
  /// (π ⊕ π_1, b ⊕ b_1) with the regular summand of scale C > 0. For ℤ the
  /// regular summand stays sparse and exact.
  static VertexCocycle padded(const VertexCocycle& base, const Rational& c);

  const VertexGroup& group() const { return group_; }
  const Exponent& p() const { return p_; }
  const std::vector<Leaf>& leaves() const { return leaves_; }

  BlockVector b(Element g) const;
  /// π(g)x.
  BlockVector pi(Element g, const BlockVector& x) const;
  NormPower norm_pow(Element g) const { return b(g).norm_pow(p_); }

  /// min over g ≠ 1 of ‖b(g)‖^p: closed form for ℤ, exhaustive for finite groups.
  NormPower floor_pow() const;

  /// A copy whose b(g) is replaced by `value`; used to build negative controls.
  VertexCocycle with_override(Element g, BlockVector value) const;

  std::string basis_name(const BasisKey& key) const;

 private:
  VertexCocycle(VertexGroup group, Exponent p) : group_(std::move(group)), p_(p) {}

  VertexGroup group_;
  Exponent p_;
  std::vector<Leaf> leaves_;
  std::map<Element, BlockVector> overrides_;
};

struct CocycleCheck {
  bool passed = true;
  std::size_t checks = 0;
  /// First failing pair (g, h) and what failed.
  std::optional<std::pair<Element, Element>> witness;
  std::string detail;
};

/// Exhaustively checks b(gh) = π(g)b(h) + b(g) and ‖π(g)b(h)‖ = ‖b(h)‖ over
/// all pairs in the radius-`window` ball (the whole group when finite).
CocycleCheck check_vertex_cocycle(const VertexCocycle& cocycle, std::size_t window);

}  // namespace gprod
