#pragma once

#include "tropigeo/error.hpp"
#include "tropigeo/rational.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace tropigeo {

// Element of the max-plus semifield: an exact rational or the bottom element
// -inf. Addition is max, multiplication is classical +, -inf is the additive
// neutral and multiplicative absorber.
class TropScalar {
 public:
  TropScalar() = default;  // -inf
  TropScalar(Rat value) : finite_(true), value_(std::move(value)) {}
  TropScalar(int value) : finite_(true), value_(value) {}

  static TropScalar neg_infinity() { return TropScalar(); }

  bool is_finite() const { return finite_; }

  const Rat& rational() const {
    if (!finite_) throw DomainError("-inf has no rational value");
    return value_;
  }

  // Classical shift; -inf stays put.
  TropScalar shifted(const Rat& delta) const {
    return finite_ ? TropScalar(value_ + delta) : neg_infinity();
  }

  TropScalar negated() const {
    if (!finite_) throw DomainError("cannot negate -inf");
    return TropScalar(-value_);
  }

  std::string str() const { return finite_ ? format_rational(value_) : "-inf"; }

  friend bool operator==(const TropScalar& x, const TropScalar& y) {
    if (x.finite_ != y.finite_) return false;
    return !x.finite_ || x.value_ == y.value_;
  }

  // Total order: -inf below every rational.
  friend std::strong_ordering operator<=>(const TropScalar& x, const TropScalar& y) {
    if (!x.finite_ && !y.finite_) return std::strong_ordering::equal;
    if (!x.finite_) return std::strong_ordering::less;
    if (!y.finite_) return std::strong_ordering::greater;
    if (x.value_ < y.value_) return std::strong_ordering::less;
    if (x.value_ > y.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  bool finite_ = false;
  Rat value_;
};

inline TropScalar trop_add(const TropScalar& x, const TropScalar& y) {
  return (x < y) ? y : x;
}

inline TropScalar trop_mul(const TropScalar& x, const TropScalar& y) {
  if (!x.is_finite() || !y.is_finite()) return TropScalar::neg_infinity();
  return TropScalar(x.rational() + y.rational());
}

// "-inf" (case-insensitive) or any rational literal.
TropScalar parse_trop_scalar(std::string_view text);

}  // namespace tropigeo
