#include "acbm/condition_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace acbm {

namespace {

// Integer-primitive scaling with positive graded-lex leading coefficient.
// Nonzero constants collapse to the bare unsatisfiable marker 1.
Polynomial normalize_poly(const Polynomial& p) {
  if (p.is_zero()) return Polynomial();
  if (p.is_constant()) return Polynomial(Rational(1));
  BigInt den_lcm(1), num_gcd(0);
  for (const auto& [e, c] : p.terms()) den_lcm = lcm(den_lcm, c.denominator());
  for (const auto& [e, c] : p.terms())
    num_gcd = gcd(num_gcd, c.numerator() * (den_lcm / c.denominator()));
  Rational scale(den_lcm, num_gcd);
  Polynomial q = p * scale.abs();
  if (q.leading_coefficient().sign() < 0) q = -q;
  return q;
}

Polynomial monomial_of(const std::vector<std::string>& params, const Exponents& e,
                       bool halve) {
  Polynomial m = Polynomial::constant(Rational(1), params);
  for (size_t i = 0; i < e.size(); ++i) {
    unsigned k = halve ? e[i] / 2 : e[i];
    if (k > 0) m = m * Polynomial::variable(params[i], params);
  }
  return m;
}

bool is_bare_variable(const Polynomial& p) {
  if (p.term_count() != 1 || p.total_degree() != 1) return false;
  return p.leading_coefficient().is_one();
}

bool poly_less_desc(const Polynomial& a, const Polynomial& b) {
  return compare(a, b) > 0;
}

}  // namespace

ConditionSet ConditionSet::from_residuals(std::vector<Polynomial> polys) {
  std::vector<Polynomial> cur;
  for (const auto& p : polys)
    if (!p.is_zero()) cur.push_back(normalize_poly(p));

  for (int round = 0; round < 100; ++round) {
    std::vector<Polynomial> next;

    for (const auto& p : cur) {
      // Squarefree monomials: x^j vanishes where x does, so cap exponents at 1.
      if (p.term_count() == 1) {
        Exponents capped = p.leading_exponents();
        for (auto& x : capped) x = x > 0 ? 1 : 0;
        Polynomial m = monomial_of(p.parameters(), capped, false);
        next.push_back(m.is_constant() ? Polynomial(Rational(1)) : normalize_poly(m));
        continue;
      }
      // Positive diagonal form: all exponents even, all coefficients positive.
      // Over the reals such a sum vanishes iff every halved monomial does.
      bool diagonal = true;
      for (const auto& [e, c] : p.terms()) {
        if (c.sign() <= 0) diagonal = false;
        for (unsigned x : e)
          if (x % 2 != 0) diagonal = false;
        if (!diagonal) break;
      }
      if (diagonal) {
        for (const auto& [e, c] : p.terms()) {
          Polynomial m = monomial_of(p.parameters(), e, true);
          next.push_back(m.is_constant() ? Polynomial(Rational(1)) : normalize_poly(m));
        }
        continue;
      }
      next.push_back(p);
    }

    // Bare-variable members substitute to zero in the rest.
    std::vector<std::string> zeroed;
    for (const auto& p : next)
      if (is_bare_variable(p))
        for (size_t i = 0; i < p.parameters().size(); ++i)
          if (p.leading_exponents()[i] == 1) zeroed.push_back(p.parameters()[i]);
    if (!zeroed.empty()) {
      std::vector<Polynomial> reduced;
      for (const auto& p : next) {
        Polynomial q = p;
        if (!is_bare_variable(q))
          for (const auto& v : zeroed) {
            const auto& ps = q.parameters();
            if (std::find(ps.begin(), ps.end(), v) != ps.end())
              q = q.substitute(v, Rational(0));
          }
        if (!q.is_zero()) reduced.push_back(normalize_poly(q));
      }
      next = std::move(reduced);
    }

    // Sort, deduplicate, then drop members divisible by another member.
    std::sort(next.begin(), next.end(), poly_less_desc);
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Polynomial& a, const Polynomial& b) {
                             return compare(a, b) == 0;
                           }),
               next.end());
    std::vector<Polynomial> pruned;
    for (size_t i = 0; i < next.size(); ++i) {
      bool drop = false;
      for (size_t j = 0; j < next.size() && !drop; ++j) {
        if (i == j) continue;
        const Polynomial& pi = next[i];
        const Polynomial& pj = next[j];
        bool comparable = pi.is_constant() || pj.is_constant() ||
                          pi.parameters() == pj.parameters();
        if (comparable && divides(pj, pi)) {
          // Ties (mutual divisibility) keep the sort-first copy.
          drop = compare(pj, pi) != 0 || j < i;
        }
      }
      if (!drop) pruned.push_back(next[i]);
    }
    next = std::move(pruned);

    bool stable = next.size() == cur.size();
    for (size_t i = 0; stable && i < next.size(); ++i)
      stable = compare(next[i], cur[i]) == 0;
    cur = std::move(next);
    if (stable) break;
  }

  ConditionSet s;
  s.polys_ = std::move(cur);
  return s;
}

bool ConditionSet::unsatisfiable() const {
  for (const auto& p : polys_)
    if (p.is_constant() && !p.is_zero()) return true;
  return false;
}

bool ConditionSet::vanishes_at(const std::map<std::string, Rational>& point) const {
  for (const auto& p : polys_) {
    if (p.is_constant()) {
      if (!p.is_zero()) return false;
      continue;
    }
    if (!p.eval(point).is_zero()) return false;
  }
  return true;
}

ConditionSet ConditionSet::restricted(const std::string& name, const Rational& value) const {
  std::vector<Polynomial> out;
  for (const auto& p : polys_) {
    const auto& ps = p.parameters();
    if (std::find(ps.begin(), ps.end(), name) != ps.end())
      out.push_back(p.substitute(name, value));
    else
      out.push_back(p);
  }
  return from_residuals(std::move(out));
}

bool ConditionSet::contains(const ConditionSet& other) const {
  for (const auto& q : other.polys_) {
    bool found = false;
    for (const auto& p : polys_)
      if (compare(p, q) == 0) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool operator==(const ConditionSet& a, const ConditionSet& b) {
  if (a.polys_.size() != b.polys_.size()) return false;
  for (size_t i = 0; i < a.polys_.size(); ++i)
    if (compare(a.polys_[i], b.polys_[i]) != 0) return false;
  return true;
}

std::string ConditionSet::str() const {
  std::string out = "{";
  for (size_t i = 0; i < polys_.size(); ++i) {
    if (i) out += ", ";
    out += polys_[i].str();
  }
  return out + "}";
}

std::string ConditionSet::describe() const {
  if (polys_.empty()) return "always";
  if (unsatisfiable()) return "never";
  std::string out;
  for (size_t i = 0; i < polys_.size(); ++i) {
    if (i) out += ", ";
    out += polys_[i].str() + " = 0";
  }
  return out;
}

}  // namespace acbm
