#ifndef ACBM_CLASSIFY_HPP
#define ACBM_CLASSIFY_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "acbm/connection.hpp"

namespace acbm {

// Component tensor of the first vertical basic class, for an adapted frame:
//   F4(x,y,z) = 1/2 theta0 { x^1 (y^0 z^1 + y^1 z^0) - x^2 (y^0 z^2 + y^2 z^0) }.
template <class Ring>
Tensor<Ring> f4_component(const AcbmManifold<Ring>& M, const Ring& theta0) {
  if (!is_adapted_frame(M)) throw std::invalid_argument("f4_component: frame is not adapted");
  Ring half = ring_traits<Ring>::scale(theta0, Rational(1, 2));
  Tensor<Ring> F(3, {IndexKind::Lower, IndexKind::Lower, IndexKind::Lower});
  F(1, 0, 1) = half;
  F(1, 1, 0) = half;
  F(2, 0, 2) = -half;
  F(2, 2, 0) = -half;
  return F;
}

// Component tensor of the second vertical basic class, for an adapted frame:
//   F5(x,y,z) = 1/2 theta0* { x^1 (y^0 z^2 + y^2 z^0) + x^2 (y^0 z^1 + y^1 z^0) }.
template <class Ring>
Tensor<Ring> f5_component(const AcbmManifold<Ring>& M, const Ring& theta_star0) {
  if (!is_adapted_frame(M)) throw std::invalid_argument("f5_component: frame is not adapted");
  Ring half = ring_traits<Ring>::scale(theta_star0, Rational(1, 2));
  Tensor<Ring> F(3, {IndexKind::Lower, IndexKind::Lower, IndexKind::Lower});
  F(1, 0, 2) = half;
  F(1, 2, 0) = half;
  F(2, 0, 1) = half;
  F(2, 1, 0) = half;
  return F;
}

// Class membership data relative to the two vertical basic classes and their
// direct sum. Membership is carried as ConditionSets on the parameters: the
// empty set means the membership holds identically.
template <class Ring>
struct ClassReport {
  Ring theta0;
  Ring theta_star0;
  Tensor<Ring> f;         // fundamental tensor of the structure
  Tensor<Ring> f4;        // its first vertical component
  Tensor<Ring> f5;        // its second vertical component
  Tensor<Ring> residual;  // f - f4 - f5
  ConditionSet in_f45;    // conditions for membership in the direct sum
  ConditionSet in_f4;
  ConditionSet in_f5;
  ConditionSet in_f0;
  std::string note;

  std::string verdict() const {
    if (in_f0.holds_identically()) return "F0";
    if (in_f4.holds_identically()) return "F4 (proper)";
    if (in_f5.holds_identically()) return "F5 (proper)";
    if (in_f45.holds_identically()) return "F4+F5 (proper)";
    return "outside F4+F5";
  }
};

template <class Ring>
ClassReport<Ring> classify(const AcbmManifold<Ring>& M) {
  if (!is_adapted_frame(M)) throw std::invalid_argument("classify: frame is not adapted");
  Connection<Ring> conn = levi_civita(M);
  Tensor<Ring> F = fundamental_tensor(M, conn);
  LeeForms<Ring> lf = lee_forms(M, F);
  Tensor<Ring> F4 = f4_component(M, lf.theta0);
  Tensor<Ring> F5 = f5_component(M, lf.theta_star0);
  Tensor<Ring> residual = F - F4 - F5;

  std::vector<Polynomial> res;
  for (size_t c = 0; c < residual.size(); ++c)
    res.push_back(ring_traits<Ring>::to_polynomial(residual.component(c)));
  std::vector<Polynomial> with_theta_star = res;
  with_theta_star.push_back(ring_traits<Ring>::to_polynomial(lf.theta_star0));
  std::vector<Polynomial> with_theta = res;
  with_theta.push_back(ring_traits<Ring>::to_polynomial(lf.theta0));
  std::vector<Polynomial> all_f;
  for (size_t c = 0; c < F.size(); ++c)
    all_f.push_back(ring_traits<Ring>::to_polynomial(F.component(c)));

  ClassReport<Ring> report{lf.theta0,
                           lf.theta_star0,
                           std::move(F),
                           std::move(F4),
                           std::move(F5),
                           std::move(residual),
                           ConditionSet::from_residuals(std::move(res)),
                           ConditionSet::from_residuals(std::move(with_theta_star)),
                           ConditionSet::from_residuals(std::move(with_theta)),
                           ConditionSet::from_residuals(std::move(all_f)),
                           "F0 is read as the identical vanishing of F; its locus equals the "
                           "residual conditions joined with theta_0 = theta_0* = 0."};
  return report;
}

}  // namespace acbm

#endif
