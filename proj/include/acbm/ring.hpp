#ifndef ACBM_RING_HPP
#define ACBM_RING_HPP

#include <string>

#include "acbm/polynomial.hpp"
#include "acbm/rational.hpp"

namespace acbm {

// Uniform view of the two coefficient rings the geometry code is instantiated
// at: exact rationals (numeric runs) and multivariate polynomials (symbolic
// runs). Both support +, -, *, unary -, ==, and default-construct to zero.
template <class Ring>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_rational(const Rational& c) { return c; }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static bool is_constant(const Rational&) { return true; }
  static Rational to_rational(const Rational& x) { return x; }
  static Polynomial to_polynomial(const Rational& x) { return Polynomial(x); }
  static Rational scale(const Rational& x, const Rational& c) { return x * c; }
  static std::string str(const Rational& x) { return x.str(); }
};

template <>
struct ring_traits<Polynomial> {
  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(Rational(1)); }
  static Polynomial from_rational(const Rational& c) { return Polynomial(c); }
  static bool is_zero(const Polynomial& x) { return x.is_zero(); }
  static bool is_constant(const Polynomial& x) { return x.is_constant(); }
  // Throws std::domain_error when x is not constant.
  static Rational to_rational(const Polynomial& x) { return x.constant_value(); }
  static Polynomial to_polynomial(const Polynomial& x) { return x; }
  static Polynomial scale(const Polynomial& x, const Rational& c) { return x * c; }
  static std::string str(const Polynomial& x) { return x.str(); }
};

}  // namespace acbm

#endif
