#ifndef ACBM_STRUCTURE_HPP
#define ACBM_STRUCTURE_HPP

#include <string>
#include <utility>
#include <vector>

#include "acbm/lie.hpp"
#include "acbm/tensor.hpp"

namespace acbm {

// A Lie algebra carrying an almost contact structure (phi, xi, eta) and a
// compatible B-metric g, all given by exact frame components. The axioms
//   phi(xi) = 0,   phi^2 = -Id + eta (x) xi,   eta o phi = 0,   eta(xi) = 1,
//   g(phi x, phi y) = -g(x, y) + eta(x) eta(y)
// are not assumed by the constructor (shapes are); validate_structure reports
// where they fail.
template <class Ring>
struct AcbmManifold {
  LieAlgebra<Ring> algebra;
  Tensor<Ring> phi;  // (1,1): phi(k, j) = e_k-component of phi(e_j)
  Tensor<Ring> xi;   // (1,0)
  Tensor<Ring> eta;  // (0,1)
  MetricPair<Ring> metric;

  AcbmManifold(LieAlgebra<Ring> algebra_in, Tensor<Ring> phi_in, Tensor<Ring> xi_in,
               Tensor<Ring> eta_in, MetricPair<Ring> metric_in)
      : algebra(std::move(algebra_in)),
        phi(std::move(phi_in)),
        xi(std::move(xi_in)),
        eta(std::move(eta_in)),
        metric(std::move(metric_in)) {
    int d = algebra.dimension();
    if (phi.dimension() != d || phi.variance() != Variance{IndexKind::Upper, IndexKind::Lower})
      throw std::invalid_argument("AcbmManifold: phi must be a (1,1) tensor of the frame dimension");
    if (xi.dimension() != d || xi.variance() != Variance{IndexKind::Upper})
      throw std::invalid_argument("AcbmManifold: xi must be a vector of the frame dimension");
    if (eta.dimension() != d || eta.variance() != Variance{IndexKind::Lower})
      throw std::invalid_argument("AcbmManifold: eta must be a covector of the frame dimension");
    if (metric.g.dimension() != d)
      throw std::invalid_argument("AcbmManifold: metric dimension mismatch");
  }

  int dimension() const { return algebra.dimension(); }
};

// One failed axiom instance: which axiom, at which frame indices.
struct StructureViolation {
  std::string axiom;
  std::vector<int> indices;

  std::string str() const {
    std::string s = axiom;
    if (!indices.empty()) {
      s += " at (";
      for (size_t i = 0; i < indices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(indices[i]);
      }
      s += ")";
    }
    return s;
  }
};

inline bool operator==(const StructureViolation& a, const StructureViolation& b) {
  return a.axiom == b.axiom && a.indices == b.indices;
}

// Checks the five axiom families componentwise; the returned list is empty
// exactly when the structure is an almost contact B-metric structure.
template <class Ring>
std::vector<StructureViolation> validate_structure(const AcbmManifold<Ring>& M) {
  using RT = ring_traits<Ring>;
  int d = M.dimension();
  std::vector<StructureViolation> out;

  for (int k = 0; k < d; ++k) {
    Ring acc{};
    for (int m = 0; m < d; ++m) acc = acc + M.phi(k, m) * M.xi(m);
    if (!RT::is_zero(acc)) out.push_back({"phi_xi", {k}});
  }

  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j) {
      Ring acc{};
      for (int m = 0; m < d; ++m) acc = acc + M.phi(k, m) * M.phi(m, j);
      if (k == j) acc = acc + RT::one();
      acc = acc - M.eta(j) * M.xi(k);
      if (!RT::is_zero(acc)) out.push_back({"phi_squared", {k, j}});
    }

  for (int j = 0; j < d; ++j) {
    Ring acc{};
    for (int k = 0; k < d; ++k) acc = acc + M.eta(k) * M.phi(k, j);
    if (!RT::is_zero(acc)) out.push_back({"eta_phi", {j}});
  }

  {
    Ring acc{};
    for (int k = 0; k < d; ++k) acc = acc + M.eta(k) * M.xi(k);
    acc = acc - RT::one();
    if (!RT::is_zero(acc)) out.push_back({"eta_xi", {}});
  }

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Ring acc{};
      for (int k = 0; k < d; ++k)
        for (int m = 0; m < d; ++m) acc = acc + M.metric.g(k, m) * M.phi(k, i) * M.phi(m, j);
      acc = acc + M.metric.g(i, j) - M.eta(i) * M.eta(j);
      if (!RT::is_zero(acc)) out.push_back({"b_metric", {i, j}});
    }

  return out;
}

// The associated metric g~(x,y) = g(x, phi y) + eta(x) eta(y), returned with
// its exact inverse. It is itself a B-metric for the same (phi, xi, eta);
// that is re-validated here.
template <class Ring>
MetricPair<Ring> associated_metric(const AcbmManifold<Ring>& M) {
  if (!validate_structure(M).empty())
    throw std::invalid_argument("associated_metric: structure axioms fail on the input");
  int d = M.dimension();
  Tensor<Ring> gt(d, {IndexKind::Lower, IndexKind::Lower});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Ring acc{};
      for (int m = 0; m < d; ++m) acc = acc + M.metric.g(i, m) * M.phi(m, j);
      gt(i, j) = acc + M.eta(i) * M.eta(j);
    }
  MetricPair<Ring> pair = MetricPair<Ring>::from_metric(gt);  // throws if degenerate
  AcbmManifold<Ring> candidate(M.algebra, M.phi, M.xi, M.eta, pair);
  if (!validate_structure(candidate).empty())
    throw std::logic_error("associated_metric: result is not a B-metric");
  return pair;
}

// Sylvester signature (positive count, negative count) of an exact metric.
template <class Ring>
std::pair<int, int> signature(const MetricPair<Ring>& m) {
  int d = m.dimension();
  QMatrix q(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) q.at(i, j) = ring_traits<Ring>::to_rational(m.g(i, j));
  return inertia(q);
}

// Whether the frame is the canonical adapted one in dimension 3:
// phi e_0 = 0, phi e_1 = e_2, phi e_2 = -e_1, xi = e_0, eta = (1,0,0),
// g = diag(1, 1, -1). The component formulas for the vertical-component
// projections are only valid in this frame.
template <class Ring>
bool is_adapted_frame(const AcbmManifold<Ring>& M) {
  using RT = ring_traits<Ring>;
  if (M.dimension() != 3) return false;
  auto is = [&](const Ring& x, int v) {
    return RT::is_zero(x - RT::from_rational(Rational(v)));
  };
  for (int k = 0; k < 3; ++k) {
    if (!is(M.phi(k, 0), 0)) return false;
    if (!is(M.phi(k, 1), k == 2 ? 1 : 0)) return false;
    if (!is(M.phi(k, 2), k == 1 ? -1 : 0)) return false;
    if (!is(M.xi(k), k == 0 ? 1 : 0)) return false;
    if (!is(M.eta(k), k == 0 ? 1 : 0)) return false;
    for (int j = 0; j < 3; ++j) {
      int want = (k != j) ? 0 : (k == 2 ? -1 : 1);
      if (!is(M.metric.g(k, j), want)) return false;
    }
  }
  return true;
}

// Evaluates a parametric structure at a rational parameter point.
inline AcbmManifold<Rational> specialize(const AcbmManifold<Polynomial>& M,
                                         const std::map<std::string, Rational>& point) {
  auto eval_tensor = [&](const Tensor<Polynomial>& t) {
    Tensor<Rational> out(t.dimension(), t.variance());
    for (size_t f = 0; f < t.size(); ++f) out.component(f) = t.component(f).eval(point);
    return out;
  };
  return AcbmManifold<Rational>(
      specialize(M.algebra, point), eval_tensor(M.phi), eval_tensor(M.xi), eval_tensor(M.eta),
      MetricPair<Rational>::from_metric(eval_tensor(M.metric.g)));
}

// Transports the whole structure to the frame f_i = P^m_i e_m.
inline AcbmManifold<Rational> change_frame(const AcbmManifold<Rational>& M, const QMatrix& P) {
  int d = M.dimension();
  if (P.rows() != d || P.cols() != d)
    throw std::invalid_argument("change_frame: matrix size mismatch");
  auto Pinv = inverse(P);
  if (!Pinv) throw std::invalid_argument("change_frame: frame matrix is singular");

  Tensor<Rational> phi(d, {IndexKind::Upper, IndexKind::Lower});
  Tensor<Rational> xi(d, {IndexKind::Upper});
  Tensor<Rational> eta(d, {IndexKind::Lower});
  Tensor<Rational> g(d, {IndexKind::Lower, IndexKind::Lower});
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j) {
      Rational acc_phi, acc_g;
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
          acc_phi += Pinv->at(k, m) * M.phi(m, n) * P.at(n, j);
          acc_g += P.at(m, k) * M.metric.g(m, n) * P.at(n, j);
        }
      phi(k, j) = acc_phi;
      g(k, j) = acc_g;
    }
  for (int k = 0; k < d; ++k) {
    Rational acc_xi, acc_eta;
    for (int m = 0; m < d; ++m) {
      acc_xi += Pinv->at(k, m) * M.xi(m);
      acc_eta += M.eta(m) * P.at(m, k);
    }
    xi(k) = acc_xi;
    eta(k) = acc_eta;
  }
  return AcbmManifold<Rational>(change_frame(M.algebra, P), std::move(phi), std::move(xi),
                                std::move(eta), MetricPair<Rational>::from_metric(std::move(g)));
}

}  // namespace acbm

#endif
