#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "wpcl/errors.hpp"

namespace wpcl {

using Rational = boost::multiprecision::cpp_rational;

/// Exact extended rational: a rational number, +infinity, or -infinity.
///
/// Rationals are kept in lowest terms with a positive denominator (the
/// backing type maintains that invariant), so operator== is mathematical
/// equality. The order is total with NegInf below every rational and PosInf
/// above. Addition of opposite infinities throws ArithmeticError; nothing in
/// the shipped monoids can reach that case, the guard is for custom ones.
class Value {
 public:
  enum class Kind : std::uint8_t { NegInf = 0, Finite = 1, PosInf = 2 };

  Value() : kind_(Kind::Finite), q_(0) {}
  Value(long long n) : kind_(Kind::Finite), q_(n) {}  // NOLINT: implicit
  Value(long long num, long long den);

  static Value finite(Rational q);
  static Value pos_inf();
  static Value neg_inf();

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  /// Finite payload; calling this on an infinity is a bug, guarded anyway.
  const Rational& rational() const;

  /// Extended addition. inf + x = inf for finite x; opposite infinities throw.
  Value add(const Value& other) const;

  bool operator==(const Value& other) const;
  bool operator!=(const Value& other) const { return !(*this == other); }
  bool operator<(const Value& other) const;
  bool operator<=(const Value& other) const { return !(other < *this); }
  bool operator>(const Value& other) const { return other < *this; }
  bool operator>=(const Value& other) const { return !(*this < other); }

  /// Accepts "4", "-4", "3/2", "-5/3", "inf", "-inf". Denominator must be a
  /// positive integer literal.
  static Value parse(std::string_view text);

  /// Inverse of parse: lowest-terms "num" or "num/den", or "inf"/"-inf".
  std::string to_string() const;

 private:
  Kind kind_;
  Rational q_;
};

}  // namespace wpcl
