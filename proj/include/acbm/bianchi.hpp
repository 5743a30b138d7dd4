#ifndef ACBM_BIANCHI_HPP
#define ACBM_BIANCHI_HPP

#include <map>
#include <optional>
#include <string>

#include "acbm/lie.hpp"

namespace acbm {

// Classification result for a 3-dimensional real Lie algebra. The one-parameter
// solvable families carry h; the mixed-signature family VI_h uses an exact
// rational h <= 0 (0 = the unimodular member, -1 excluded as type III), while
// VII_h uses h = |tr A| / sqrt(det A) in (0, 2), where A is the adjoint action
// of the first frame vector outside the invariant 2-plane, restricted to it.
// The exact trace and determinant of A are carried whenever that plane exists.
struct BianchiType {
  enum class Tag { I, II, III, IV, V, VI_h, VII_0, VII_h, VIII, IX };

  Tag tag;
  std::optional<double> h;           // VI_h / VII_h only
  std::optional<Rational> h_exact;   // VI_h only (rational by construction)
  std::optional<Rational> trace_a;   // tr of the restricted adjoint map A
  std::optional<Rational> det_a;     // det of the restricted adjoint map A

  std::string tag_name() const;
  // Human-readable one-liner, e.g. "type VII_h (h = 1.414214, tr = -2, det = 2)".
  std::string to_string() const;
};

// Classifies a numeric 3-dimensional Lie algebra into its Bianchi type using
// the decomposition C^k_{ij} = eps_{ijl} n^{lk} + a_i d^k_j - a_j d^k_i
// (n symmetric, a a covector) followed by rank/inertia analysis of n and, for
// the rank-2 solvable families, eigenvalue analysis of the restricted adjoint
// map. Throws std::invalid_argument if the input is not 3-dimensional or does
// not satisfy the Jacobi identity.
BianchiType bianchi_classify(const LieAlgebra<Rational>& L);

// Specializes a parametric algebra at `point`, then classifies. The point must
// assign every declared parameter.
BianchiType bianchi_classify(const LieAlgebra<Polynomial>& L,
                             const std::map<std::string, Rational>& point);

}  // namespace acbm

#endif
