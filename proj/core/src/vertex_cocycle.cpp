#include "gprod/vertex_cocycle.hpp"

#include <algorithm>
#include <cmath>

namespace gprod {

VertexCocycle VertexCocycle::translation(const VertexGroup& group, Exponent p) {
  if (group.kind() != GroupKind::integers) {
    throw Error("translation cocycle requires the integers");
  }
  VertexCocycle c(group, p);
  c.leaves_.push_back({LeafKind::line, Rational(1)});
  return c;
}

VertexCocycle VertexCocycle::regular(const VertexGroup& group, Exponent p, const Rational& scale) {
  if (!group.is_finite()) throw Error("regular cocycle requires a finite group");
  if (scale <= 0) throw Error("regular cocycle scale C must be positive");
  VertexCocycle c(group, p);
  c.leaves_.push_back({LeafKind::regular, scale});
  return c;
}

VertexCocycle VertexCocycle::padded(const VertexCocycle& base, const Rational& scale) {
  if (scale <= 0) throw Error("padding constant C must be positive");
  VertexCocycle c = base;
  c.leaves_.push_back({LeafKind::regular, scale});
  return c;
}

BlockVector VertexCocycle::b(Element g) const {
  if (auto it = overrides_.find(g); it != overrides_.end()) return it->second;
  BlockVector out;
  const Element one = group_.identity();
  for (std::uint32_t i = 0; i < leaves_.size(); ++i) {
    const Leaf& leaf = leaves_[i];
    switch (leaf.kind) {
      case LeafKind::line:
        out.add({i, 0}, leaf.scale * Rational(g));
        break;
      case LeafKind::regular:
        if (g != one) {
          out.add({i, g}, leaf.scale);
          out.add({i, one}, Rational(-leaf.scale));
        }
        break;
    }
  }
  return out;
}

BlockVector VertexCocycle::pi(Element g, const BlockVector& x) const {
  return x.map_keys([&](const BasisKey& key) {
    if (key.leaf >= leaves_.size()) throw Error("basis index outside the vertex block");
    if (leaves_[key.leaf].kind == LeafKind::line) return key;
    return BasisKey{key.leaf, group_.multiply(g, key.element)};
  });
}

NormPower VertexCocycle::floor_pow() const {
  if (group_.is_finite()) {
    std::optional<NormPower> best;
    for (Element g : group_.elements()) {
      if (group_.is_identity(g)) continue;
      NormPower n = norm_pow(g);
      if (!best || compare(n, *best) < 0) best = n;
    }
    return *best;
  }
  if (!overrides_.empty()) {
    throw Error("floor_pow is only available in closed form for unmodified cocycles on the integers");
  }
  // On ℤ the line leaf is minimal at k = ±1 and the regular leaves are constant.
  NormPower total = p_.exact() ? NormPower::exact(Rational(0)) : NormPower::approximate(0.0);
  for (const Leaf& leaf : leaves_) {
    NormPower term = NormPower::of_coefficient(leaf.scale, p_);
    total += term;
    if (leaf.kind == LeafKind::regular) total += term;
  }
  return total;
}

VertexCocycle VertexCocycle::with_override(Element g, BlockVector value) const {
  VertexCocycle c = *this;
  c.overrides_[g] = std::move(value);
  return c;
}

std::string VertexCocycle::basis_name(const BasisKey& key) const {
  std::string prefix = std::to_string(key.leaf) + "/";
  if (key.leaf < leaves_.size() && leaves_[key.leaf].kind == LeafKind::line) return prefix + "x";
  return prefix + group_.format_element(key.element);
}

CocycleCheck check_vertex_cocycle(const VertexCocycle& cocycle, std::size_t window) {
  CocycleCheck report;
  const VertexGroup& group = cocycle.group();
  std::vector<Element> ball = group.is_finite() ? group.elements() : group.ball(window);
  for (Element g : ball) {
    const BlockVector bg = cocycle.b(g);
    for (Element h : ball) {
      ++report.checks;
      BlockVector bh = cocycle.b(h);
      BlockVector moved = cocycle.pi(g, bh);
      if (!same_value(moved.norm_pow(cocycle.p()), bh.norm_pow(cocycle.p()))) {
        report.passed = false;
        report.witness = {g, h};
        report.detail = "pi(" + group.format_element(g) + ") is not isometric on b(" +
                        group.format_element(h) + ")";
        return report;
      }
      if (cocycle.b(group.multiply(g, h)) != moved + bg) {
        report.passed = false;
        report.witness = {g, h};
        report.detail = "b(gh) != pi(g)b(h) + b(g) at g=" + group.format_element(g) +
                        ", h=" + group.format_element(h);
        return report;
      }
    }
  }
  return report;
}

}  // namespace gprod
