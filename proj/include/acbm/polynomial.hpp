#ifndef ACBM_POLYNOMIAL_HPP
#define ACBM_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "acbm/rational.hpp"

namespace acbm {

// Exponent vector, one entry per declared parameter.
using Exponents = std::vector<unsigned>;

// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Multivariate polynomial with Rational coefficients over an ordered list of
// named parameters. Canonical form: term map holds no zero coefficients and
// every exponent vector has exactly params().size() entries.
//
// Binary operations require identical parameter lists, except that a
// constant operand (no parameter occurs) is promoted to the other operand's
// list; anything else throws std::invalid_argument.
class Polynomial {
public:
  using Terms = std::map<Exponents, Rational, GrlexLess>;

  Polynomial() = default;  // zero, no parameters
  explicit Polynomial(const Rational& c) { set_term(Exponents{}, c); }
  explicit Polynomial(long c) : Polynomial(Rational(c)) {}

  static Polynomial constant(const Rational& c, std::vector<std::string> params);
  static Polynomial variable(const std::string& name, std::vector<std::string> params);

  const std::vector<std::string>& parameters() const { return params_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // True when no parameter actually occurs (includes zero).
  bool is_constant() const;
  // Value of a constant polynomial; throws std::domain_error otherwise.
  Rational constant_value() const;

  unsigned total_degree() const;  // 0 for zero
  size_t term_count() const { return terms_.size(); }

  // Greatest term in graded-lex order; polynomial must be nonzero.
  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& c);
  friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // point must assign every declared parameter; extra names are ignored.
  Rational eval(const std::map<std::string, Rational>& point) const;

  // Replaces one parameter by a rational value; the parameter list is kept.
  Polynomial substitute(const std::string& name, const Rational& value) const;

  // Canonical text form: graded-lex descending terms, explicit * and ^.
  std::string str() const;

  // Grammar: integers, rationals p/q, declared parameter names, + - * ^ with
  // nonnegative integer exponents, parentheses; whitespace ignored.
  static Polynomial parse(std::string_view text, std::vector<std::string> params);

private:
  void set_term(Exponents e, const Rational& c);
  // Rekeys a constant polynomial into another parameter list.
  Polynomial promoted(const std::vector<std::string>& params) const;
  static void align(Polynomial& a, Polynomial& b);

  std::vector<std::string> params_;
  Terms terms_;
};

inline Polynomial scale(const Polynomial& p, const Rational& c) { return p * c; }
inline Rational scale(const Rational& x, const Rational& c) { return x * c; }

// Whether p divides q exactly in the polynomial ring.
bool divides(const Polynomial& p, const Polynomial& q);

// Total order on polynomials used for deterministic set output: compares the
// term sequences from the graded-lex top down. Returns <0, 0, >0.
int compare(const Polynomial& a, const Polynomial& b);

}  // namespace acbm

#endif
