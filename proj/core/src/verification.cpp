#include "gprod/verification.hpp"

#include <unordered_map>

#include "gprod/special_subgroups.hpp"
#include "gprod/splitting.hpp"

namespace gprod {

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "cocycle") return Suite::cocycle;
  if (name == "norm") return Suite::norm;
  if (name == "lengths") return Suite::lengths;
  if (name == "cosets") return Suite::cosets;
  return std::nullopt;
}

SuiteResult run_suite(const ProductAction& action, Suite suite, std::size_t radius,
                      std::size_t limit) {
  switch (suite) {
    case Suite::cocycle: return verify_cocycle_suite(action, radius, limit);
    case Suite::norm: return verify_norm_suite(action, radius, limit);
    case Suite::lengths: return verify_lengths_suite(action.product(), radius, limit);
    case Suite::cosets: return verify_cosets_suite(action.product(), radius, limit);
  }
  return {};
}

SuiteResult verify_cocycle_suite(const ProductAction& action, std::size_t radius,
                                 std::size_t limit) {
  SuiteResult out;
  const GraphProduct& product = action.product();
  const std::vector<NormalForm> ball = product.enumerate_ball(radius, limit);
  std::vector<LpVector> betas;
  betas.reserve(ball.size());
  for (const NormalForm& g : ball) betas.push_back(action.beta(g));
  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (std::size_t j = 0; j < ball.size(); ++j) {
      ++out.checks;
      LpVector lhs = action.beta(product.multiply(ball[i], ball[j]));
      LpVector rhs = action.apply_tau(ball[i], betas[j]) + betas[i];
      if (lhs != rhs) {
        out.passed = false;
        out.failure = "cocycle identity fails for g=" + product.format(ball[i]) +
                      ", h=" + product.format(ball[j]);
        return out;
      }
    }
  }
  // β(gh) = β(hg) for g ∈ G_v, h ∈ G_u on every edge {u, v}.
  for (const Syllable& s : product.generators()) {
    for (const Syllable& t : product.generators()) {
      if (!product.graph().adjacent(s.vertex, t.vertex)) continue;
      ++out.checks;
      NormalForm g = product.letter(s.vertex, s.element);
      NormalForm h = product.letter(t.vertex, t.element);
      if (action.beta(product.multiply(g, h)) != action.beta(product.multiply(h, g))) {
        out.passed = false;
        out.failure = "beta(gh) != beta(hg) for g=" + product.format(g) + ", h=" + product.format(h);
        return out;
      }
    }
  }
  return out;
}

SuiteResult verify_norm_suite(const ProductAction& action, std::size_t radius, std::size_t limit) {
  SuiteResult out;
  const GraphProduct& product = action.product();
  for (const NormalForm& g : product.enumerate_ball(radius, limit)) {
    ++out.checks;
    NormIdentity id = verify_norm_identity(action, g);
    if (!id.passed) {
      out.passed = false;
      out.failure = "norm identity fails for " + product.format(g) + ": " + id.lhs.str() +
                    " != " + id.rhs.str();
      return out;
    }
    ++out.checks;
    std::vector<CosetId> supports = action.beta_supports(g);
    for (std::size_t i = 0; i < supports.size(); ++i) {
      for (std::size_t j = i + 1; j < supports.size(); ++j) {
        if (supports[i] == supports[j]) {
          out.passed = false;
          out.failure = "beta supports coincide for " + product.format(g) + " at syllables " +
                        std::to_string(i) + " and " + std::to_string(j);
          return out;
        }
      }
    }
  }
  return out;
}

SuiteResult verify_lengths_suite(const GraphProduct& product, std::size_t radius,
                                 std::size_t limit) {
  SuiteResult out;
  const VertexSet all = product.graph().vertices();
  for (const NormalForm& z : product.enumerate_ball(radius, limit)) {
    ++out.checks;
    LengthAdditivity sum = verify_length_additivity(product, z);
    if (!sum.passed) {
      out.passed = false;
      out.failure = "length additivity fails for " + product.format(z) + ": " +
                    std::to_string(sum.kernel_total) + " != " + std::to_string(sum.word_length);
      return out;
    }
    for (Vertex v = 0; v < product.vertex_count(); ++v) {
      ++out.checks;
      KernelDecomposition d = decompose(product, z, v);
      if (reassemble(product, d) != z) {
        out.passed = false;
        out.failure = "reassembly fails for " + product.format(z) + " at vertex " +
                      product.graph().name(v);
        return out;
      }
      if (d.quotient != retract(product, z, all.minus(VertexSet::of({v})))) {
        out.passed = false;
        out.failure = "quotient is not the retraction for " + product.format(z);
        return out;
      }
      for (std::size_t j = 1; j < d.factors.size(); ++j) {
        if (d.factors[j].tag == d.factors[j - 1].tag) {
          out.passed = false;
          out.failure = "consecutive kernel factors share a coset for " + product.format(z);
          return out;
        }
      }
    }
  }
  return out;
}

SuiteResult verify_cosets_suite(const GraphProduct& product, std::size_t radius,
                                std::size_t limit) {
  SuiteResult out;
  const std::vector<NormalForm> ball = product.enumerate_ball(radius, limit);
  std::vector<NormalForm> inverses;
  inverses.reserve(ball.size());
  for (const NormalForm& g : ball) inverses.push_back(product.invert(g));
  for (Vertex v = 0; v < product.vertex_count(); ++v) {
    const VertexSet star = product.graph().star(v);
    std::vector<NormalForm> reps;
    reps.reserve(ball.size());
    for (const NormalForm& g : ball) reps.push_back(coset_rep(product, g, star));
    for (std::size_t i = 0; i < ball.size(); ++i) {
      for (std::size_t j = 0; j < ball.size(); ++j) {
        ++out.checks;
        bool same_rep = reps[i] == reps[j];
        bool member = is_member(product.multiply(inverses[i], ball[j]), star);
        if (same_rep != member) {
          out.passed = false;
          out.failure = "coset representative disagrees with membership for g=" +
                        product.format(ball[i]) + ", h=" + product.format(ball[j]) +
                        ", v=" + product.graph().name(v);
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace gprod
