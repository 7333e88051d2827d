#pragma once

#include <map>
#include <type_traits>
#include <utility>

#include "gprod/rational.hpp"

namespace gprod {

/// Finitely supported vector in an ℓp direct sum, keyed by basis index.
/// Zero coefficients are never stored.
template <class Key, class Coeff = Rational>
class SparseVector {
 public:
  using Map = std::map<Key, Coeff>;

  SparseVector() = default;

  static SparseVector unit(const Key& key, Coeff c) {
    SparseVector v;
    v.add(key, std::move(c));
    return v;
  }

  void add(const Key& key, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = entries_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) entries_.erase(it);
    }
  }

  SparseVector& operator+=(const SparseVector& other) {
    for (const auto& [k, c] : other.entries_) add(k, c);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& other) {
    for (const auto& [k, c] : other.entries_) add(k, Coeff(-c));
    return *this;
  }
  SparseVector& operator*=(const Coeff& s) {
    if (s == 0) {
      entries_.clear();
      return *this;
    }
    for (auto& [k, c] : entries_) c *= s;
    return *this;
  }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  Coeff at(const Key& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? Coeff(0) : it->second;
  }

  /// Σ |c|^p over the entries.
  NormPower norm_pow(const Exponent& p) const {
    NormPower total = p.exact() && std::is_same_v<Coeff, Rational>
                          ? NormPower::exact(Rational(0))
                          : NormPower::approximate(0.0);
    for (const auto& [k, c] : entries_) total += NormPower::of_coefficient(c, p);
    return total;
  }

  /// Relabels every key through `f`; coefficients landing on the same key add up.
  template <class F>
  auto map_keys(F&& f) const {
    using NewKey = std::decay_t<std::invoke_result_t<F, const Key&>>;
    SparseVector<NewKey, Coeff> out;
    for (const auto& [k, c] : entries_) out.add(f(k), c);
    return out;
  }

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Map entries_;
};

}  // namespace gprod
