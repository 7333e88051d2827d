#include "gprod/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace gprod {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&]() -> Rational {
    throw Error("invalid rational number '" + s + "'");
  };
  if (s.empty()) return fail();
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) {
      return c >= '0' && c <= '9';
    });
  };
  Rational out;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return fail();
    if (num.front() == '+') num.erase(0, 1);
    if (den.front() == '+') den.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw Error("zero denominator in '" + s + "'");
    out = Rational(n, d);
    out.canonicalize();
    return out;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || !is_int(whole) ||
        !std::all_of(frac.begin(), frac.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return fail();
    }
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    mpz_class num = mpz_class(whole) * den + mpz_class(frac);
    if (negative) num = -num;
    out = Rational(num, den);
    out.canonicalize();
    return out;
  }
  if (!is_int(s)) return fail();
  if (s.front() == '+') s.erase(0, 1);
  return Rational(mpz_class(s));
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow_int(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

double to_double(const Rational& value) { return value.get_d(); }

std::string format_decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", value);
  return buf;
}

Exponent::Exponent(double p) : value_(p) {
  if (!std::isfinite(p) || p < 1.0) {
    throw Error("exponent p must be a finite real >= 1");
  }
  if (p == std::floor(p) && p <= 64.0) integral_ = static_cast<unsigned>(p);
}

NormPower NormPower::exact(Rational value) {
  NormPower out;
  out.approx_ = to_double(value);
  out.exact_ = std::move(value);
  return out;
}

NormPower NormPower::approximate(double value) {
  NormPower out;
  out.exact_.reset();
  out.approx_ = value;
  return out;
}

NormPower NormPower::of_coefficient(const Rational& c, const Exponent& p) {
  if (auto k = p.integral()) return exact(pow_int(abs(c), *k));
  return approximate(std::pow(std::fabs(to_double(c)), p.value()));
}

NormPower NormPower::of_coefficient(double c, const Exponent& p) {
  return approximate(std::pow(std::fabs(c), p.value()));
}

const Rational& NormPower::exact_value() const {
  if (!exact_) throw Error("norm power is not exact");
  return *exact_;
}

double NormPower::root(const Exponent& p) const {
  return std::pow(approx_, 1.0 / p.value());
}

NormPower& NormPower::operator+=(const NormPower& other) {
  if (exact_ && other.exact_) {
    *exact_ += *other.exact_;
    approx_ = to_double(*exact_);
  } else {
    exact_.reset();
    approx_ += other.approx_;
  }
  return *this;
}

std::string NormPower::str() const {
  return exact_ ? format_rational(*exact_) : format_decimal(approx_);
}

bool same_value(const NormPower& a, const NormPower& b) { return compare(a, b) == 0; }

int compare(const NormPower& a, const NormPower& b) {
  if (a.is_exact() && b.is_exact()) {
    int c = cmp(a.exact_value(), b.exact_value());
    return (c > 0) - (c < 0);
  }
  double scale = std::max({1.0, std::fabs(a.value()), std::fabs(b.value())});
  double diff = a.value() - b.value();
  if (std::fabs(diff) <= kTolerance * scale) return 0;
  return diff < 0 ? -1 : 1;
}

}  // namespace gprod
