#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

#include "equivote/errors.hpp"

namespace equivote {

// Exact nonnegative rational used for ballot weights and tallies.
// All arithmetic is exact, so sums are independent of evaluation order and
// parallel tallies reproduce bit-identically.
class Weight {
 public:
  using Rational = boost::multiprecision::cpp_rational;
  using Integer = boost::multiprecision::cpp_int;

  Weight() : v_(0) {}
  Weight(std::int64_t value) : v_(value) { check_nonnegative(); }
  Weight(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw InternalError("Weight: denominator must be positive");
    v_ = Rational(num, den);
    check_nonnegative();
  }
  explicit Weight(Rational v) : v_(std::move(v)) { check_nonnegative(); }

  static Weight parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Weight(Rational(Integer(text)));
      Integer num(text.substr(0, slash));
      Integer den(text.substr(slash + 1));
      if (den <= 0) throw DataError("Weight: nonpositive denominator: " + text);
      return Weight(Rational(num, den));
    } catch (const std::runtime_error&) {
      throw DataError("Weight: cannot parse '" + text + "'");
    }
  }

  bool is_zero() const { return v_.is_zero(); }

  Weight& operator+=(const Weight& o) {
    v_ += o.v_;
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    v_ -= o.v_;
    check_nonnegative();
    return *this;
  }
  Weight& operator*=(const Weight& o) {
    v_ *= o.v_;
    return *this;
  }
  Weight& operator/=(const Weight& o) {
    if (o.is_zero()) throw InternalError("Weight: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Weight a, const Weight& b) { return a *= b; }
  friend Weight operator/(Weight a, const Weight& b) { return a /= b; }

  friend bool operator==(const Weight& a, const Weight& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Weight& a, const Weight& b) { return a.v_ != b.v_; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Weight& a, const Weight& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Weight& a, const Weight& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Weight& a, const Weight& b) { return a.v_ >= b.v_; }

  Integer numerator() const { return boost::multiprecision::numerator(v_); }
  Integer denominator() const { return boost::multiprecision::denominator(v_); }

  // "p" for integers, "p/q" otherwise.
  std::string str() const {
    if (denominator() == 1) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  double to_double() const { return v_.convert_to<double>(); }

  const Rational& value() const { return v_; }

 private:
  void check_nonnegative() const {
    if (v_ < 0) throw InternalError("Weight: negative value " + v_.str());
  }

  Rational v_;
};

}  // namespace equivote
