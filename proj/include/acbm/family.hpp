#ifndef ACBM_FAMILY_HPP
#define ACBM_FAMILY_HPP

#include <string>
#include <vector>

#include "acbm/structure.hpp"

namespace acbm {

// Parameters of the built-in two-parameter family. Scalars may be symbolic
// (the generators "a", "b") or rational specializations.
template <class Ring>
struct FamilySpec {
  Ring a;
  Ring b;
};

// The two-parameter solvable Lie group family with its almost contact
// B-metric structure, in its adapted frame (e_0, e_1, e_2):
//   phi e_0 = 0, phi e_1 = e_2, phi e_2 = -e_1,  xi = e_0,  eta = (1,0,0),
//   g = diag(1, 1, -1),
//   [e_0,e_1] = -b e_1 - a e_2,  [e_0,e_2] = a e_1 - b e_2,  [e_1,e_2] = 0.
// The construction validates the structure axioms and the Jacobi identity and
// throws std::logic_error if either fails (they hold identically).
template <class Ring>
AcbmManifold<Ring> build_family(const FamilySpec<Ring>& spec) {
  using RT = ring_traits<Ring>;
  const Ring one = RT::one();

  Tensor<Ring> c(3, {IndexKind::Upper, IndexKind::Lower, IndexKind::Lower});
  c(1, 0, 1) = -spec.b;
  c(2, 0, 1) = -spec.a;
  c(1, 0, 2) = spec.a;
  c(2, 0, 2) = -spec.b;
  c(1, 1, 0) = spec.b;
  c(2, 1, 0) = spec.a;
  c(1, 2, 0) = -spec.a;
  c(2, 2, 0) = spec.b;
  LieAlgebra<Ring> algebra(3, std::move(c));

  Tensor<Ring> phi(3, {IndexKind::Upper, IndexKind::Lower});
  phi(2, 1) = one;
  phi(1, 2) = -one;

  Tensor<Ring> xi(3, {IndexKind::Upper});
  xi(0) = one;

  Tensor<Ring> eta(3, {IndexKind::Lower});
  eta(0) = one;

  Tensor<Ring> g(3, {IndexKind::Lower, IndexKind::Lower});
  g(0, 0) = one;
  g(1, 1) = one;
  g(2, 2) = -one;

  AcbmManifold<Ring> M(std::move(algebra), std::move(phi), std::move(xi), std::move(eta),
                       MetricPair<Ring>::from_metric(g));
  if (!validate_structure(M).empty())
    throw std::logic_error("build_family: structure axioms fail");
  for (const Ring& r : jacobi_residuals(M.algebra))
    if (!RT::is_zero(r)) throw std::logic_error("build_family: Jacobi identity fails");
  return M;
}

inline AcbmManifold<Rational> build_family(const Rational& a, const Rational& b) {
  return build_family(FamilySpec<Rational>{a, b});
}

// The family with both parameters left symbolic, over Q[a, b].
inline AcbmManifold<Polynomial> build_family_symbolic() {
  const std::vector<std::string> params{"a", "b"};
  return build_family(FamilySpec<Polynomial>{Polynomial::variable("a", params),
                                             Polynomial::variable("b", params)});
}

// Outcome of one verifier check. Flagged marks a claim that did not match
// verbatim but was mechanically reconciled (the note records how); it does
// not count as a failure.
enum class CheckStatus { Pass, Fail, Flagged };

const char* status_name(CheckStatus s);

// One verifier entry: `name` says what was computed, `claim` carries the
// anchor label of the published claim being reproduced (report data),
// `expected`/`computed` are canonical renderings of both sides, and `note`
// holds witnesses or breakdowns where useful.
struct CheckEntry {
  std::string name;
  std::string claim;
  CheckStatus status = CheckStatus::Pass;
  std::string expected;
  std::string computed;
  std::string note;
};

// Deterministic result battery for the built-in family: every check entry in
// a fixed order, plus the Bianchi tally over the sample grid.
struct VerificationReport {
  std::vector<CheckEntry> checks;
  int grid_radius = 2;
  std::vector<std::pair<std::string, int>> bianchi_counts;  // tally, dominant type first

  // True when no check failed (flagged entries are allowed).
  bool all_passed() const;
  // Claim-group summary, e.g.
  // "Theorem 2.1: PASS; Prop 2.2: 6/6 PASS; Prop 2.3: 4/5 identical, 1 locus-flagged".
  std::string trailer() const;
};

// Runs the complete battery against a (normally fully symbolic) parameter
// choice. Checks never throw: mismatches become Fail entries. The grid radius
// controls the Bianchi sample grid {-r..r}^2 over the parameter plane.
VerificationReport verify_family(const FamilySpec<Polynomial>& spec, int grid_radius = 2);

// The battery at full strength: both parameters symbolic.
VerificationReport verify_family(int grid_radius = 2);

}  // namespace acbm

#endif
