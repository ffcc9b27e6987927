#include "wpcl/value.hpp"

#include <cctype>

namespace wpcl {

Value::Value(long long num, long long den) : kind_(Kind::Finite) {
  if (den == 0) throw DomainError("value: zero denominator");
  q_ = Rational(num);
  q_ /= den;
}

Value Value::finite(Rational q) {
  Value v;
  v.kind_ = Kind::Finite;
  v.q_ = std::move(q);
  return v;
}

Value Value::pos_inf() {
  Value v;
  v.kind_ = Kind::PosInf;
  return v;
}

Value Value::neg_inf() {
  Value v;
  v.kind_ = Kind::NegInf;
  return v;
}

const Rational& Value::rational() const {
  if (kind_ != Kind::Finite)
    throw DomainError("value: rational() called on an infinity");
  return q_;
}

Value Value::add(const Value& other) const {
  if (is_finite() && other.is_finite()) return finite(q_ + other.q_);
  if (is_finite()) return other;
  if (other.is_finite()) return *this;
  if (kind_ == other.kind_) return *this;
  throw ArithmeticError("value: inf + -inf has no defined result");
}

bool Value::operator==(const Value& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ != Kind::Finite) return true;
  return q_ == other.q_;
}

bool Value::operator<(const Value& other) const {
  if (kind_ != other.kind_)
    return static_cast<int>(kind_) < static_cast<int>(other.kind_);
  if (kind_ != Kind::Finite) return false;
  return q_ < other.q_;
}

Value Value::parse(std::string_view text) {
  if (text == "inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto read_digits = [&](std::string& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      out.push_back(text[i++]);
    return i > start;
  };
  std::string num_digits;
  if (!read_digits(num_digits))
    throw DomainError("value: expected a number, got '" + std::string(text) +
                      "'");
  Rational q{boost::multiprecision::cpp_int(num_digits)};
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::string den_digits;
    if (!read_digits(den_digits))
      throw DomainError("value: expected a denominator in '" +
                        std::string(text) + "'");
    boost::multiprecision::cpp_int den(den_digits);
    if (den == 0) throw DomainError("value: zero denominator");
    q /= Rational(den);
  }
  if (i != text.size())
    throw DomainError("value: trailing characters in '" + std::string(text) +
                      "'");
  if (negative) q = -q;
  return finite(std::move(q));
}

std::string Value::to_string() const {
  switch (kind_) {
    case Kind::PosInf:
      return "inf";
    case Kind::NegInf:
      return "-inf";
    case Kind::Finite:
      break;
  }
  std::string out = numerator(q_).str();
  if (denominator(q_) != 1) {
    out += '/';
    out += denominator(q_).str();
  }
  return out;
}

}  // namespace wpcl
