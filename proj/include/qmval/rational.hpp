#ifndef QMVAL_RATIONAL_HPP
#define QMVAL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

#include "qmval/errors.hpp"

namespace qmval {

// Arbitrary-precision integer and rational. Rat is always reduced with a
// positive denominator; every operation is exact.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// num/den with sign normalization; throws invalid_input on den == 0.
Rat make_rat(Int num, Int den);

// Accepts "p", "p/q", optional leading '-'. Throws invalid_input otherwise.
Rat rat_from_string(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise. Bit-exact round trip
// with rat_from_string.
std::string rat_to_string(const Rat& value);

// A rational extended with +infinity: the value set of curve valuations
// and of skewness. +inf dominates every rational under <, absorbs +, and
// is the neutral element of min.
class ExtRat {
 public:
  ExtRat() = default;
  ExtRat(Rat value) : finite_(true), value_(std::move(value)) {}
  ExtRat(int value) : finite_(true), value_(value) {}

  static ExtRat infinity() {
    ExtRat r;
    r.finite_ = false;
    return r;
  }

  bool is_infinite() const { return !finite_; }
  bool is_finite() const { return finite_; }

  const Rat& finite_value() const {
    if (!finite_) throw invalid_input("expected a finite value, got +inf");
    return value_;
  }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator==(const ExtRat& a, const Rat& b) {
    return a.finite_ && a.value_ == b;
  }
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
    if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
    if (!a.finite_) return std::strong_ordering::greater;
    if (!b.finite_) return std::strong_ordering::less;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return ExtRat(Rat(a.value_ + b.value_));
  }

  // Scale by a positive rational; keeps +inf at +inf.
  friend ExtRat operator*(const Rat& c, const ExtRat& a) {
    if (c <= 0) throw invalid_input("ExtRat scaling requires a positive factor");
    if (!a.finite_) return infinity();
    return ExtRat(Rat(c * a.value_));
  }

  friend ExtRat min(const ExtRat& a, const ExtRat& b) { return b < a ? b : a; }

 private:
  bool finite_ = true;
  Rat value_{};
};

// "p/q" for finite values, "inf" otherwise.
std::string extrat_to_string(const ExtRat& value);

// Accepts what rat_to_string/extrat_to_string emit plus "+inf".
ExtRat extrat_from_string(std::string_view text);

}  // namespace qmval

#endif
