#include "gprod/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace gprod {

namespace {

bool exceeds(double lhs, double rhs) {
  return lhs > rhs + kTolerance * std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
}

}  // namespace

CompressionInterval alpha_eq_bounds(const SimplicialGraph& graph,
                                    const std::vector<double>& vertex_alphas,
                                    const std::vector<GroupOrder>& vertex_orders, double p) {
  if (graph.size() == 0) throw Error("compression bounds need at least one vertex");
  if (vertex_alphas.size() != graph.size() || vertex_orders.size() != graph.size()) {
    throw Error("need one alpha and one group order per vertex");
  }
  if (!(p >= 1.0)) throw Error("exponent p must be >= 1");
  for (std::size_t v = 0; v < vertex_alphas.size(); ++v) {
    double a = vertex_alphas[v];
    if (!(a >= 0.0 && a <= 1.0)) {
      throw Error("alpha of vertex '" + graph.name(static_cast<Vertex>(v)) +
                  "' must lie in [0,1]");
    }
    if (vertex_orders[v] && *vertex_orders[v] < 2) {
      throw Error("vertex groups are non-trivial");
    }
  }

  CompressionInterval total{1.0, 1.0};
  for (VertexSet factor : graph.join_factors()) {
    const std::vector<Vertex> members = factor.members();
    CompressionInterval part;
    if (members.size() == 1) {
      part = {vertex_alphas[members[0]], vertex_alphas[members[0]]};
    } else if (members.size() == 2 && vertex_orders[members[0]] == 2U &&
               vertex_orders[members[1]] == 2U) {
      // two unjoined order-2 vertices: infinite dihedral
      part = {1.0, 1.0};
    } else {
      double alpha = 1.0;
      for (Vertex v : members) alpha = std::min(alpha, vertex_alphas[v]);
      part = {std::min(1.0 / p, alpha), std::min(alpha, std::max(0.5, 1.0 / p))};
    }
    total.lower = std::min(total.lower, part.lower);
    total.upper = std::min(total.upper, part.upper);
  }
  return total;
}

double alpha_noneq(const std::vector<double>& vertex_alphas) {
  if (vertex_alphas.empty()) throw Error("compression needs at least one vertex");
  for (double a : vertex_alphas) {
    if (!(a >= 0.0 && a <= 1.0)) throw Error("vertex alphas must lie in [0,1]");
  }
  return *std::min_element(vertex_alphas.begin(), vertex_alphas.end());
}

std::optional<FreeSubgroupWitness> has_free_subgroup(const SimplicialGraph& graph,
                                                     const std::vector<GroupOrder>& vertex_orders) {
  if (graph.size() < 2) throw Error("free subgroup detection needs at least two vertices");
  if (vertex_orders.size() != graph.size()) throw Error("need one group order per vertex");
  for (const auto& order : vertex_orders) {
    if (order && *order < 2) throw Error("vertex groups are non-trivial");
  }
  if (graph.is_reducible()) throw Error("free subgroup detection needs an irreducible graph");

  if (graph.size() == 2) {
    if (vertex_orders[0] == 2U && vertex_orders[1] == 2U) return std::nullopt;
    return FreeProductWitness{0, 1};
  }
  for (Vertex v = 0; v < graph.size(); ++v) {
    const VertexSet link = graph.link(v);
    if (link.empty()) return SplittingWitness{v};
    for (Vertex u : graph.vertices().minus(link).members()) {
      for (Vertex w : link.members()) {
        if (!graph.adjacent(w, u)) return TripleWitness{v, w, u};
      }
    }
  }
  // unreachable for irreducible graphs
  throw Error("irreducible graph without a free subgroup witness");
}

std::string describe(const SimplicialGraph& graph, const FreeSubgroupWitness& witness) {
  struct Visitor {
    const SimplicialGraph& g;
    std::string operator()(const FreeProductWitness& w) const {
      return "free product G_" + g.name(w.u) + " * G_" + g.name(w.v);
    }
    std::string operator()(const SplittingWitness& w) const {
      return "splitting G_" + g.name(w.v) + " * G_(V\\{" + g.name(w.v) + "})";
    }
    std::string operator()(const TripleWitness& w) const {
      return "(G_" + g.name(w.v) + " x G_" + g.name(w.w) + ") * G_" + g.name(w.u);
    }
  };
  return std::visit(Visitor{graph}, witness);
}

SubadditivityCheck check_subadditive_power(const GrowthFunction& rho, double p) {
  SubadditivityCheck out;
  const std::size_t n = rho.max_n();
  out.floor = n >= 1 ? rho(1) : 0.0;
  for (std::size_t x = 1; x <= n; ++x) out.floor = std::min(out.floor, rho(x));
  for (std::size_t x = 1; x <= n && out.passed; ++x) {
    for (std::size_t y = 1; x + y <= n; ++y) {
      double lhs = std::pow(rho(x + y), p);
      double rhs = std::pow(rho(x), p) + std::pow(rho(y), p);
      if (exceeds(lhs, rhs)) {
        out.passed = false;
        out.violation = {x, y};
        break;
      }
    }
  }
  return out;
}

ConcavityCheck check_concave_superadditive(const GrowthFunction& f) {
  ConcavityCheck out;
  const std::size_t big_n = f.max_n();
  for (std::size_t n = 1; n <= big_n && out.concave; ++n) {
    for (std::size_t m = 1; m <= n && n + m <= big_n; ++m) {
      if (exceeds(f(n + m) - f(n), f(n) - f(n - m))) {
        out.concave = false;
        out.concavity_violation = {n, m};
        break;
      }
    }
  }
  for (std::size_t a = 1; a <= big_n && out.superadditive; ++a) {
    for (std::size_t b = a; a + b <= big_n; ++b) {
      if (exceeds(f(a + b), f(a) + f(b))) {
        out.superadditive = false;
        out.superadditivity_violation = {a, b};
        break;
      }
    }
  }
  return out;
}

CpcReport check_Cpc(const GrowthFunction& f, double p, std::size_t n) {
  if (n < 4) throw Error("check_Cpc needs N >= 4");
  if (n > f.max_n()) throw Error("growth function is not sampled up to N");
  if (!(p >= 1.0)) throw Error("exponent p must be >= 1");
  CpcReport out;
  auto term = [&](std::size_t k) {
    double kk = static_cast<double>(k);
    return std::pow(f(k) / kk, p) / kk;
  };
  for (std::size_t k = 1; k <= n; ++k) out.partial_sum += term(k);

  const std::size_t half = n / 2;
  const double t_half = term(half);
  const double t_end = term(n);
  if (t_end == 0.0) {
    out.decay_exponent = std::numeric_limits<double>::infinity();
    out.tail_bound = 0.0;
  } else {
    out.decay_exponent = std::log(t_half / t_end) /
                         std::log(static_cast<double>(n) / static_cast<double>(half));
    if (out.decay_exponent > 1.0 + 1e-6) {
      // ∫_N^∞ t(N)(x/N)^{-s} dx
      out.tail_bound = t_end * static_cast<double>(n) / (out.decay_exponent - 1.0);
    }
  }
  for (std::size_t k = half; k < n; ++k) {
    double here = std::pow(f(k), p) / static_cast<double>(k);
    double next = std::pow(f(k + 1), p) / static_cast<double>(k + 1);
    if (exceeds(here, next)) {
      out.tail_monotone = false;
      break;
    }
  }
  const ConcavityCheck concavity = check_concave_superadditive(f);
  if (!concavity.concave) {
    out.verdict = CpcVerdict::violated;
    out.reason = "f is not concave";
  } else if (!out.tail_bound) {
    out.verdict = CpcVerdict::violated;
    out.reason = "terms decay no faster than 1/n";
  } else if (!out.tail_monotone) {
    out.verdict = CpcVerdict::violated;
    out.reason = "f(n)^p/n decreases on the tail window";
  } else {
    out.verdict = CpcVerdict::consistent;
    out.reason = "consistent on the sampled window (not a proof)";
  }
  return out;
}

std::uint64_t adim_bound(const SimplicialGraph& graph,
                         const std::vector<std::uint64_t>& vertex_adims) {
  if (vertex_adims.size() != graph.size()) throw Error("need one adim per vertex");
  std::uint64_t best = 0;
  for (VertexSet clique : graph.maximal_cliques()) {
    std::uint64_t sum = 0;
    for (Vertex v : clique.members()) sum += std::max<std::uint64_t>(1, vertex_adims[v]);
    best = std::max(best, sum);
  }
  return best;
}

namespace {

CompressionScan finish_scan(const ProductAction& action, std::vector<ScanRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) {
    if (a.word_length != b.word_length) return a.word_length < b.word_length;
    return a.element < b.element;
  });
  CompressionScan scan;
  for (const ScanRow& row : rows) {
    auto [it, inserted] = scan.sphere_minima.try_emplace(row.word_length, row.beta_norm);
    if (!inserted) it->second = std::min(it->second, row.beta_norm);
  }
  scan.degenerate = true;
  for (const auto& [n, m] : scan.sphere_minima) {
    if (n < 2) continue;
    double e = m > 0.0 ? std::log(m) / std::log(static_cast<double>(n)) : 0.0;
    if (scan.degenerate || e < scan.exponent) scan.exponent = e;
    scan.degenerate = false;
  }
  if (scan.degenerate) scan.exponent = 1.0;
  scan.rows = std::move(rows);
  (void)action;
  return scan;
}

ScanRow scan_row(const ProductAction& action, const NormalForm& g) {
  const GraphProduct& product = action.product();
  return {g, product.word_length(g), product.syllable_length(g),
          action.beta_norm_pow(g).root(action.p())};
}

}  // namespace

CompressionScan compression_scan(const ProductAction& action, std::size_t radius,
                                 std::size_t limit) {
  std::vector<ScanRow> rows;
  for (const NormalForm& g : action.product().enumerate_ball(radius, limit)) {
    rows.push_back(scan_row(action, g));
  }
  return finish_scan(action, std::move(rows));
}

CompressionScan compression_scan(const ProductAction& action,
                                 const std::vector<NormalForm>& family) {
  std::vector<ScanRow> rows;
  for (const NormalForm& g : family) rows.push_back(scan_row(action, g));
  return finish_scan(action, std::move(rows));
}

void write_scan_csv(std::ostream& out, const GraphProduct& product, const CompressionScan& scan) {
  out << "word,word_length,syllable_length,beta_norm\n";
  for (const ScanRow& row : scan.rows) {
    out << product.format(row.element) << ',' << row.word_length << ',' << row.syllable_length
        << ',' << format_decimal(row.beta_norm) << '\n';
  }
}

GuaranteeReport compression_guarantee(const ProductAction& action, const GrowthFunction& rho,
                                      std::size_t radius, std::size_t limit) {
  GuaranteeReport out;
  if (rho.max_n() < radius) throw Error("rho must be sampled up to the scan radius");
  const GraphProduct& product = action.product();
  const SubadditivityCheck sub = check_subadditive_power(rho, action.p().value());
  if (!sub.passed) {
    out.status = GuaranteeStatus::hypothesis_failed;
    out.detail = "rho^p is not subadditive at (" + std::to_string(sub.violation->first) + "," +
                 std::to_string(sub.violation->second) + ")";
    return out;
  }
  if (!(sub.floor > 0.0)) {
    out.status = GuaranteeStatus::hypothesis_failed;
    out.detail = "rho has no positive floor on x >= 1";
    return out;
  }
  for (Vertex v = 0; v < product.vertex_count(); ++v) {
    const VertexGroup& group = product.group(v);
    for (Element g : group.ball(radius)) {
      if (group.is_identity(g)) continue;
      ++out.checked;
      double norm = action.cocycle(v).norm_pow(g).root(action.p());
      if (exceeds(rho(group.word_length(g)), norm)) {
        out.status = GuaranteeStatus::hypothesis_failed;
        out.detail = "vertex '" + product.graph().name(v) + "': ||b(" + group.format_element(g) +
                     ")|| < rho(|g|)";
        return out;
      }
    }
  }
  for (const NormalForm& g : product.enumerate_ball(radius, limit)) {
    ++out.checked;
    double norm = action.beta_norm_pow(g).root(action.p());
    if (exceeds(rho(product.word_length(g)), norm)) {
      out.status = GuaranteeStatus::conclusion_failed;
      out.detail = "||beta(" + product.format(g) + ")|| < rho(l_X)";
      return out;
    }
  }
  return out;
}

}  // namespace gprod
