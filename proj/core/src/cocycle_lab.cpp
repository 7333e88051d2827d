#include "gprod/cocycle_lab.hpp"

#include <algorithm>
#include <map>

namespace gprod {

ProductAction::ProductAction(GraphProduct product, std::vector<VertexCocycle> cocycles)
    : product_(std::move(product)),
      cocycles_(std::move(cocycles)),
      p_(cocycles_.empty() ? Exponent(1.0) : cocycles_.front().p()) {
  if (cocycles_.size() != product_.vertex_count()) {
    throw Error("product action needs exactly one cocycle per vertex");
  }
  for (Vertex v = 0; v < cocycles_.size(); ++v) {
    if (!(cocycles_[v].group() == product_.group(v))) {
      throw Error("cocycle of vertex '" + product_.graph().name(v) +
                  "' is defined over a different group");
    }
    if (!(cocycles_[v].p() == p_)) throw Error("all vertex cocycles must share the exponent p");
  }
}

const VertexCocycle& ProductAction::cocycle(Vertex v) const {
  product_.graph().check_vertex(v);
  return cocycles_[v];
}

namespace {

// Per-block product of the syllables of g, in order: π(g) acts on block w
// through π_w of this element.
std::vector<Element> block_elements(const GraphProduct& product, const NormalForm& g) {
  std::vector<Element> out(product.vertex_count());
  for (Vertex v = 0; v < out.size(); ++v) out[v] = product.group(v).identity();
  for (const Syllable& s : g) {
    out[s.vertex] = product.group(s.vertex).multiply(out[s.vertex], s.element);
  }
  return out;
}

}  // namespace

AVector ProductAction::apply_pi(const NormalForm& g, const AVector& x) const {
  const std::vector<Element> acting = block_elements(product_, g);
  std::map<Vertex, BlockVector> blocks;
  for (const auto& [key, c] : x.entries()) {
    product_.graph().check_vertex(key.block);
    blocks[key.block].add(key.basis, c);
  }
  AVector out;
  for (const auto& [w, block] : blocks) {
    BlockVector moved = cocycles_[w].pi(acting[w], block);
    for (const auto& [basis, c] : moved.entries()) out.add({w, basis}, c);
  }
  return out;
}

LpVector ProductAction::apply_tau(const NormalForm& g, const LpVector& f) const {
  // Entries are ordered by coset first, so each coset is a contiguous run.
  LpVector out;
  auto it = f.entries().begin();
  while (it != f.entries().end()) {
    const CosetId& t = it->first.coset;
    AVector value;
    auto run = it;
    for (; run != f.entries().end() && run->first.coset == t; ++run) {
      value.add({run->first.block, run->first.basis}, run->second);
    }
    const CosetId moved = coset_translate(product_, g, t);
    const AVector image = apply_pi(g, value);
    for (const auto& [key, c] : image.entries()) {
      out.add({moved, key.block, key.basis}, c);
    }
    it = run;
  }
  return out;
}

std::vector<CosetId> ProductAction::beta_supports(const NormalForm& g) const {
  std::vector<CosetId> out;
  std::vector<Syllable> prefix;
  for (const Syllable& s : g) {
    out.push_back(coset_of(product_, product_.canonicalize(prefix), s.vertex));
    prefix.push_back(s);
  }
  return out;
}

LpVector ProductAction::beta(const NormalForm& g) const {
  LpVector out;
  const std::vector<CosetId> supports = beta_supports(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Syllable& s = g[i];
    const VertexGroup& group = product_.group(s.vertex);
    // Only the prefix syllables on block v_i act on b_{v_i}(g_i).
    Element acting = group.identity();
    for (std::size_t j = 0; j < i; ++j) {
      if (g[j].vertex == s.vertex) acting = group.multiply(acting, g[j].element);
    }
    const VertexCocycle& c = cocycles_[s.vertex];
    const BlockVector image = c.pi(acting, c.b(s.element));
    for (const auto& [basis, coeff] : image.entries()) {
      out.add({supports[i], s.vertex, basis}, coeff);
    }
  }
  return out;
}

std::vector<Rational> ProductAction::properness_padding() const {
  std::vector<Rational> out;
  for (Vertex v = 0; v < cocycles_.size(); ++v) {
    const NormPower floor = cocycles_[v].floor_pow();
    const NormPower target = NormPower::of_coefficient(Rational(v + 1), p_);
    unsigned long k = 1;
    for (;; ++k) {
      NormPower padded = floor + NormPower::of_coefficient(Rational(k), p_) +
                         NormPower::of_coefficient(Rational(k), p_);
      if (compare(padded, target) >= 0) break;
    }
    out.emplace_back(k);
  }
  return out;
}

ProductAction ProductAction::pad_for_properness() const {
  const std::vector<Rational> constants = properness_padding();
  std::vector<VertexCocycle> padded;
  for (Vertex v = 0; v < cocycles_.size(); ++v) {
    padded.push_back(VertexCocycle::padded(cocycles_[v], constants[v]));
  }
  return ProductAction(product_, std::move(padded));
}

std::string ProductAction::serialize(const LpVector& f) const {
  std::vector<std::string> lines;
  for (const auto& [key, c] : f.entries()) {
    lines.push_back("v=" + product_.graph().name(key.coset.vertex) + " rep=\"" +
                    (key.coset.rep.empty() ? std::string() : product_.format(key.coset.rep)) +
                    "\" block=" + product_.graph().name(key.block) +
                    " basis=" + cocycles_[key.block].basis_name(key.basis) +
                    " coeff=" + format_rational(c));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) out += line + "\n";
  const NormPower n = norm_pow(f);
  out += "norm^p=" + n.str() + " norm=" + format_decimal(n.root(p_)) + "\n";
  return out;
}

CheckOutcome verify_cocycle_identity(const ProductAction& action, const NormalForm& g,
                                     const NormalForm& h) {
  const GraphProduct& product = action.product();
  LpVector lhs = action.beta(product.multiply(g, h));
  LpVector rhs = action.apply_tau(g, action.beta(h)) + action.beta(g);
  if (lhs == rhs) return {};
  return {false, "beta(gh) != tau(g)beta(h) + beta(g) for g=" + product.format(g) +
                     ", h=" + product.format(h)};
}

NormIdentity verify_norm_identity(const ProductAction& action, const NormalForm& g) {
  NormIdentity out;
  out.lhs = action.beta_norm_pow(g);
  out.rhs = action.p().exact() ? NormPower::exact(Rational(0)) : NormPower::approximate(0.0);
  for (const Syllable& s : g) out.rhs += action.cocycle(s.vertex).norm_pow(s.element);
  out.passed = same_value(out.lhs, out.rhs);
  return out;
}

std::vector<ProfileRow> properness_profile(const ProductAction& action, std::size_t radius,
                                           std::size_t limit) {
  std::vector<ProfileRow> rows;
  const auto spheres = action.product().spheres(radius, limit);
  for (std::size_t n = 0; n < spheres.size(); ++n) {
    ProfileRow row;
    row.length = n;
    row.sphere_size = spheres[n].size();
    bool first = true;
    for (const NormalForm& g : spheres[n]) {
      NormPower value = action.beta_norm_pow(g);
      if (first || compare(value, row.min_pow) < 0) {
        row.min_pow = value;
        row.witness = g;
        first = false;
      }
    }
    row.min_norm = row.min_pow.root(action.p());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gprod
