#pragma once

// Exact probabilities of the form m / 2^k in [0, 1].

#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "probsat/errors.hpp"

namespace probsat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical form: odd numerator, or 0/2^0, or 1/2^0.
class DyadicProb {
 public:
  DyadicProb() = default;

  static DyadicProb zero() { return {}; }
  static DyadicProb one() { return DyadicProb(BigInt(1), 0); }
  /// 1 / 2^k
  static DyadicProb from_power(std::uint64_t k) { return DyadicProb(BigInt(1), k); }
  /// count / 2^k; throws OutOfRange if the ratio exceeds one.
  static DyadicProb from_count(BigInt count, std::uint64_t k) { return DyadicProb(std::move(count), k); }

  const BigInt& numerator() const noexcept { return num_; }
  std::uint64_t exponent() const noexcept { return exp_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return exp_ == 0 && num_ == 1; }

  friend DyadicProb add(const DyadicProb& a, const DyadicProb& b) {
    auto e = std::max(a.exp_, b.exp_);
    return DyadicProb(a.scaled_to(e) + b.scaled_to(e), e);
  }
  friend DyadicProb sub(const DyadicProb& a, const DyadicProb& b) {
    auto e = std::max(a.exp_, b.exp_);
    BigInt x = a.scaled_to(e);
    BigInt y = b.scaled_to(e);
    if (x < y) throw NegativeResult();
    return DyadicProb(x - y, e);
  }
  friend DyadicProb mul(const DyadicProb& a, const DyadicProb& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return DyadicProb(a.num_ * b.num_, a.exp_ + b.exp_);
  }
  friend DyadicProb complement(const DyadicProb& a) { return sub(one(), a); }

  friend bool operator==(const DyadicProb&, const DyadicProb&) = default;
  friend std::strong_ordering operator<=>(const DyadicProb& a, const DyadicProb& b) {
    auto e = std::max(a.exp_, b.exp_);
    BigInt x = a.scaled_to(e);
    BigInt y = b.scaled_to(e);
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Canonical text "m/2^k".
  std::string to_string() const { return num_.str() + "/2^" + std::to_string(exp_); }

  /// Approximate value for display only.
  double approx() const {
    if (is_zero()) return 0.0;
    // keep the top 64 bits so huge exponents do not overflow the conversion
    auto bits = boost::multiprecision::msb(num_) + 1;
    std::uint64_t shift = bits > 64 ? bits - 64 : 0;
    BigInt top = num_ >> shift;
    return std::ldexp(top.convert_to<double>(),
                      static_cast<int>(static_cast<std::int64_t>(shift) - static_cast<std::int64_t>(exp_)));
  }
  /// Six significant digits, e.g. "0.4375".
  std::string approx_string() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", approx());
    return buf;
  }

  Rational to_rational() const { return Rational(num_, BigInt(1) << exp_); }

 private:
  DyadicProb(BigInt num, std::uint64_t exp) : num_(std::move(num)), exp_(exp) {
    if (num_ < 0) throw NegativeResult();
    canonicalize();
    if (exp_ == 0 ? num_ > 1 : boost::multiprecision::msb(num_) >= exp_) throw OutOfRange();
  }

  void canonicalize() {
    if (num_.is_zero()) {
      exp_ = 0;
      return;
    }
    std::uint64_t tz = boost::multiprecision::lsb(num_);
    std::uint64_t shift = std::min(tz, exp_);
    num_ >>= shift;
    exp_ -= shift;
  }

  BigInt scaled_to(std::uint64_t e) const { return num_ << (e - exp_); }

  BigInt num_ = 0;
  std::uint64_t exp_ = 0;
};

}  // namespace probsat
