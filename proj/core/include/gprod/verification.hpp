#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "gprod/cocycle_lab.hpp"

namespace gprod {

enum class Suite { cocycle, norm, lengths, cosets };

std::optional<Suite> parse_suite(std::string_view name);

struct SuiteResult {
  bool passed = true;
  std::size_t checks = 0;
  std::string failure;  // first failure, empty on success
};

/// Exhaustive property checks over the radius-R ball:
///  cocycle  β(gh) = τ(g)β(h) + β(g) for all pairs, plus β(gh) = β(hg) for
///           generators of adjacent vertices;
///  norm     ‖β(g)‖^p = Σ‖b_{v_i}(g_i)‖^p and pairwise distinct supports;
///  lengths  Σ_u l_{W_u}(w_z^u) = l_X(z), reassembly, quotient = ρ_{V∖{u}}(z);
///  cosets   coset_rep(g, st v) = coset_rep(h, st v) ⟺ g⁻¹h ∈ G_{st v}.
SuiteResult run_suite(const ProductAction& action, Suite suite, std::size_t radius,
                      std::size_t limit = GraphProduct::kDefaultBallLimit);

SuiteResult verify_cocycle_suite(const ProductAction& action, std::size_t radius,
                                 std::size_t limit = GraphProduct::kDefaultBallLimit);
SuiteResult verify_norm_suite(const ProductAction& action, std::size_t radius,
                              std::size_t limit = GraphProduct::kDefaultBallLimit);
SuiteResult verify_lengths_suite(const GraphProduct& product, std::size_t radius,
                                 std::size_t limit = GraphProduct::kDefaultBallLimit);
SuiteResult verify_cosets_suite(const GraphProduct& product, std::size_t radius,
                                std::size_t limit = GraphProduct::kDefaultBallLimit);

}  // namespace gprod
