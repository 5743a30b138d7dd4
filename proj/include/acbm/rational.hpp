#ifndef ACBM_RATIONAL_HPP
#define ACBM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace acbm {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Always stored normalized: gcd(num, den) = 1,
// den > 0, zero is 0/1.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long long n) : v_(static_cast<long>(n)) {}
  explicit Rational(const BigInt& n) : v_(n) {}

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    BigInt n = num, d = den;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    v_.assign(boost::multiprecision::cpp_rational(n, d));
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return denominator() == 1; }
  // -1, 0, or +1.
  int sign() const { return v_.sign(); }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // Exponent is a machine integer; negative exponents require a nonzero base.
  Rational pow(long e) const {
    if (e < 0) {
      if (is_zero()) throw std::domain_error("Rational: zero to a negative power");
      return (Rational(1) / *this).pow(-e);
    }
    Rational acc(1), base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  double to_double() const { return v_.convert_to<double>(); }

  // "p" or "p/q".
  std::string str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
  }

  // Accepts optional sign, then digits, optionally "/" digits.
  static Rational parse(std::string_view text);

private:
  boost::multiprecision::cpp_rational v_;
};

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  };
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  skip_ws();
  auto digits = [&]() -> std::string {
    size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    return std::string(text.substr(start, i - start));
  };
  std::string num = digits();
  if (num.empty()) return fail();
  skip_ws();
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    skip_ws();
    den = digits();
    if (den.empty()) return fail();
    skip_ws();
  }
  if (i != text.size()) return fail();
  Rational r{BigInt(num), BigInt(den)};
  return neg ? -r : r;
}

inline Rational abs(const Rational& r) { return r.abs(); }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::lcm(a, b);
}

}  // namespace acbm

#endif
