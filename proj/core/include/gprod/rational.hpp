#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gprod {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed its configured element budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

using Rational = mpq_class;

/// Parses "7", "-3/4" or a finite decimal such as "1.25".
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is one.
std::string format_rational(const Rational& value);

Rational pow_int(const Rational& base, unsigned exponent);

double to_double(const Rational& value);

/// Decimal rendering with nine fractional digits.
std::string format_decimal(double value);

inline constexpr double kTolerance = 1e-9;

/// The ℓp exponent p ≥ 1. Integral exponents enable exact norm arithmetic.
class Exponent {
 public:
  explicit Exponent(double p);

  double value() const { return value_; }
  std::optional<unsigned> integral() const { return integral_; }
  bool exact() const { return integral_.has_value(); }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.value_ == b.value_;
  }

 private:
  double value_;
  std::optional<unsigned> integral_;
};

/// A p-th power of an ℓp norm: exact when p is integral, floating otherwise.
class NormPower {
 public:
  NormPower() : exact_(Rational(0)), approx_(0.0) {}

  static NormPower exact(Rational value);
  static NormPower approximate(double value);

  /// |c|^p, exact for integral p.
  static NormPower of_coefficient(const Rational& c, const Exponent& p);
  static NormPower of_coefficient(double c, const Exponent& p);

  bool is_exact() const { return exact_.has_value(); }
  const Rational& exact_value() const;
  double value() const { return approx_; }

  /// The norm itself, i.e. the p-th root.
  double root(const Exponent& p) const;

  NormPower& operator+=(const NormPower& other);
  friend NormPower operator+(NormPower a, const NormPower& b) { return a += b; }

  /// "num/den" when exact, nine-digit decimal otherwise.
  std::string str() const;

 private:
  std::optional<Rational> exact_;
  double approx_;
};

/// Equality: exact when both sides are exact, otherwise within kTolerance
/// (relative to magnitude once it exceeds one).
bool same_value(const NormPower& a, const NormPower& b);

/// Three-way comparison with the same exactness rules; 0 means same_value.
int compare(const NormPower& a, const NormPower& b);

}  // namespace gprod
