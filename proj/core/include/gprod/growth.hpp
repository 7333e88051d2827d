#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace gprod {

/// Samples f(0), …, f(N) of a non-decreasing function ℕ → ℝ≥0 with f(0) = 0.
class GrowthFunction {
 public:
  /// Throws gprod::Error if the samples are empty, negative, have f(0) ≠ 0 or
  /// decrease anywhere.
  explicit GrowthFunction(std::vector<double> samples);

  /// Samples n ↦ f(n) for n = 0..max_n.
  static GrowthFunction sample(const std::function<double(std::size_t)>& f, std::size_t max_n);

  double operator()(std::size_t n) const;
  std::size_t max_n() const { return samples_.size() - 1; }
  const std::vector<double>& samples() const { return samples_; }

 private:
  std::vector<double> samples_;
};

}  // namespace gprod
