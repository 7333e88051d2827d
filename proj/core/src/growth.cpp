#include "gprod/growth.hpp"

#include <cmath>
#include <string>

#include "gprod/rational.hpp"

namespace gprod {

GrowthFunction::GrowthFunction(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) throw Error("growth function needs at least f(0)");
  if (samples_.front() != 0.0) throw Error("growth function must satisfy f(0) = 0");
  for (std::size_t n = 0; n < samples_.size(); ++n) {
    if (!std::isfinite(samples_[n]) || samples_[n] < 0.0) {
      throw Error("growth function sample f(" + std::to_string(n) + ") must be finite and >= 0");
    }
    if (n > 0 && samples_[n] < samples_[n - 1]) {
      throw Error("growth function must be non-decreasing (fails at n=" + std::to_string(n) + ")");
    }
  }
}

GrowthFunction GrowthFunction::sample(const std::function<double(std::size_t)>& f,
                                      std::size_t max_n) {
  std::vector<double> out(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) out[n] = f(n);
  return GrowthFunction(std::move(out));
}

double GrowthFunction::operator()(std::size_t n) const {
  if (n >= samples_.size()) {
    throw Error("growth function sampled only up to n=" + std::to_string(max_n()));
  }
  return samples_[n];
}

}  // namespace gprod
