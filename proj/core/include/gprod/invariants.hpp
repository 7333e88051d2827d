#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gprod/cocycle_lab.hpp"
#include "gprod/graph.hpp"
#include "gprod/growth.hpp"

namespace gprod {

/// Bounds lower ≤ α ≤ upper on a compression exponent; exact when they meet.
struct CompressionInterval {
  double lower = 0.0;
  double upper = 0.0;
  bool exact() const { return lower == upper; }
  friend bool operator==(const CompressionInterval&, const CompressionInterval&) = default;
};

/// Order of a vertex group; nullopt means infinite.
using GroupOrder = std::optional<std::uint64_t>;

/// Equivariant ℓp-compression of the graph product from the vertex data.
/// Splits Γ into join factors, then per factor: a single vertex keeps its own
/// α; two unjoined order-2 vertices (D∞) give 1; any other factor gets
/// [min(1/p, α_i), min(α_i, max(1/2, 1/p))] with α_i the factor minimum.
/// The product is the interval-wise minimum over factors.
CompressionInterval alpha_eq_bounds(const SimplicialGraph& graph,
                                    const std::vector<double>& vertex_alphas,
                                    const std::vector<GroupOrder>& vertex_orders, double p);

/// Non-equivariant compression: min over vertices.
double alpha_noneq(const std::vector<double>& vertex_alphas);

/// Quasi-isometrically embedded free subgroup witnesses.
struct FreeProductWitness {  // |V| = 2, G = G_u * G_v
  Vertex u;
  Vertex v;
};
struct SplittingWitness {  // link(v) = ∅, G = G_v * G_{V∖{v}}
  Vertex v;
};
struct TripleWitness {  // G_{u,v,w} = (G_v × G_w) * G_u
  Vertex v;
  Vertex w;
  Vertex u;
};
using FreeSubgroupWitness = std::variant<FreeProductWitness, SplittingWitness, TripleWitness>;

/// Requires an irreducible graph with at least two vertices; returns nullopt
/// exactly for ℤ/2 * ℤ/2.
std::optional<FreeSubgroupWitness> has_free_subgroup(const SimplicialGraph& graph,
                                                     const std::vector<GroupOrder>& vertex_orders);

std::string describe(const SimplicialGraph& graph, const FreeSubgroupWitness& witness);

struct SubadditivityCheck {
  bool passed = true;
  std::optional<std::pair<std::size_t, std::size_t>> violation;  // first (x, y)
  double floor = 0.0;                                             // min_{x≥1} ρ(x)
};

/// ρ(x+y)^p ≤ ρ(x)^p + ρ(y)^p for all x, y ≥ 1 with x+y sampled.
SubadditivityCheck check_subadditive_power(const GrowthFunction& rho, double p);

struct ConcavityCheck {
  bool concave = true;
  std::optional<std::pair<std::size_t, std::size_t>> concavity_violation;  // (n, m)
  bool superadditive = true;  // f(a) + f(b) ≥ f(a+b)
  std::optional<std::pair<std::size_t, std::size_t>> superadditivity_violation;  // (a, b)
};

/// f(n+m) − f(n) ≤ f(n) − f(n−m) for n ≥ m ≥ 1, then f(a)+f(b) ≥ f(a+b).
ConcavityCheck check_concave_superadditive(const GrowthFunction& f);

enum class CpcVerdict { consistent, violated };

struct CpcReport {
  CpcVerdict verdict = CpcVerdict::consistent;
  double partial_sum = 0.0;       // Σ_{n=1}^N (1/n)(f(n)/n)^p
  double decay_exponent = 0.0;    // fitted s with term(n) ~ n^{-s} on [N/2, N]
  std::optional<double> tail_bound;  // crude bound on Σ_{n>N}, when s > 1
  bool tail_monotone = true;      // f(n)^p/n non-decreasing on [N/2, N]
  std::string reason;
};

/// Finite evidence for Tessera's summability condition; never a proof.
CpcReport check_Cpc(const GrowthFunction& f, double p, std::size_t n);

/// max over maximal cliques of Σ max(1, adim G_v).
std::uint64_t adim_bound(const SimplicialGraph& graph,
                         const std::vector<std::uint64_t>& vertex_adims);

struct ScanRow {
  NormalForm element;
  std::size_t word_length = 0;
  std::size_t syllable_length = 0;
  double beta_norm = 0.0;
};

struct CompressionScan {
  std::vector<ScanRow> rows;      // by word length, then canonical word
  std::map<std::size_t, double> sphere_minima;  // m(n)
  double exponent = 1.0;          // min_{n≥2} log m(n) / log n
  bool degenerate = false;        // no sphere with n ≥ 2
};

/// Scans the radius-R ball.
CompressionScan compression_scan(const ProductAction& action, std::size_t radius,
                                 std::size_t limit = GraphProduct::kDefaultBallLimit);
/// Scans an explicit family of elements instead of a ball.
CompressionScan compression_scan(const ProductAction& action,
                                 const std::vector<NormalForm>& family);

/// CSV with header `word,word_length,syllable_length,beta_norm`, LF endings.
void write_scan_csv(std::ostream& out, const GraphProduct& product, const CompressionScan& scan);

enum class GuaranteeStatus { pass, hypothesis_failed, conclusion_failed };

struct GuaranteeReport {
  GuaranteeStatus status = GuaranteeStatus::pass;
  std::string detail;
  std::size_t checked = 0;
};

/// If ρ^p is subadditive with a positive floor and ‖b_v(g)‖ ≥ ρ(|g|_{X_v}) on
/// every vertex ball of the given radius, asserts ‖β(g)‖ ≥ ρ(l_X(g)) on the
/// radius-R ball of the product.
GuaranteeReport compression_guarantee(const ProductAction& action, const GrowthFunction& rho,
                                      std::size_t radius,
                                      std::size_t limit = GraphProduct::kDefaultBallLimit);

}  // namespace gprod
