#ifndef ACBM_CONDITION_SET_HPP
#define ACBM_CONDITION_SET_HPP

#include <map>
#include <string>
#include <vector>

#include "acbm/polynomial.hpp"

namespace acbm {

// A finite set of polynomial conditions {p_1 = 0, ..., p_k = 0}, kept in a
// canonical normal form so sets can be compared structurally:
//   - each member is integer-primitive with positive graded-lex leading
//     coefficient;
//   - single-term members have exponents capped at 1;
//   - a member whose terms all have even exponents and positive coefficients
//     is split into its halved monomials (its real zero set);
//   - members reduce the others: bare-variable members substitute to zero in
//     the rest, and any member divisible by another is dropped;
//   - a nonzero constant member collapses the set to the unsatisfiable {1};
//   - members are sorted descending and deduplicated.
// Every move preserves the real zero locus exactly.
class ConditionSet {
public:
  ConditionSet() = default;  // empty set: holds identically

  static ConditionSet from_residuals(std::vector<Polynomial> polys);

  // True when there are no conditions: the property holds identically.
  bool holds_identically() const { return polys_.empty(); }
  // True when the set normalized to {1}: the property can never hold.
  bool unsatisfiable() const;

  const std::vector<Polynomial>& polynomials() const { return polys_; }
  size_t size() const { return polys_.size(); }

  // All conditions vanish at the given parameter values.
  bool vanishes_at(const std::map<std::string, Rational>& point) const;

  // Substitutes one parameter and renormalizes (restriction to a locus).
  ConditionSet restricted(const std::string& name, const Rational& value) const;

  // Structural subset/equality on the normal forms.
  bool contains(const ConditionSet& other) const;
  friend bool operator==(const ConditionSet& a, const ConditionSet& b);
  friend bool operator!=(const ConditionSet& a, const ConditionSet& b) { return !(a == b); }

  // "{}" / "{a, b}".
  std::string str() const;
  // "always" / "never" / "a = 0, b = 0".
  std::string describe() const;

private:
  std::vector<Polynomial> polys_;
};

}  // namespace acbm

#endif
