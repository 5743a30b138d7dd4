#ifndef ACBM_CURVATURE_HPP
#define ACBM_CURVATURE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "acbm/connection.hpp"

namespace acbm {

// Curvature of a connection over a left-invariant frame, with the Ricci-type
// traces of the structure:
//   R(x,y)z = D_x D_y z - D_y D_x z - D_{[x,y]} z,
//   R(x,y,z,w) = g(R(x,y)z, w),
//   rho(x,y) = g^{iw} R(e_i, x, y, e_w),      tau = g^{jk} rho(e_j, e_k),
//   rho*(x,y) = g^{iw} R(e_i, x, y, phi e_w), tau* = g^{jk} rho*(e_j, e_k).
template <class Ring>
struct CurvatureData {
  Tensor<Ring> riemann;     // (0,4), slots (i, j, k, l)
  Tensor<Ring> ricci;       // (0,2)
  Ring tau;
  Tensor<Ring> ricci_star;  // (0,2)
  Ring tau_star;
};

template <class Ring>
CurvatureData<Ring> curvature(const AcbmManifold<Ring>& M, const Connection<Ring>& conn) {
  int d = M.dimension();
  if (conn.dimension() != d) throw std::invalid_argument("curvature: dimension mismatch");
  const LieAlgebra<Ring>& L = M.algebra;
  const Tensor<Ring>& gi = M.metric.g_inv;
  const Tensor<Ring>& phi = M.phi;

  // R^l_{ijk} e_l = R(e_i, e_j) e_k on frame-constant fields.
  Tensor<Ring> up(d, {IndexKind::Upper, IndexKind::Lower, IndexKind::Lower, IndexKind::Lower});
  for (int l = 0; l < d; ++l)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          Ring acc{};
          for (int m = 0; m < d; ++m)
            acc = acc + conn.coef(m, j, k) * conn.coef(l, i, m) -
                  conn.coef(m, i, k) * conn.coef(l, j, m) - L.c(m, i, j) * conn.coef(l, m, k);
          up(l, i, j, k) = acc;
        }

  CurvatureData<Ring> out{permute(lower_index(up, 0, M.metric), {1, 2, 3, 0}),
                          Tensor<Ring>(d, {IndexKind::Lower, IndexKind::Lower}), Ring{},
                          Tensor<Ring>(d, {IndexKind::Lower, IndexKind::Lower}), Ring{}};
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      Ring r{}, rs{};
      for (int i = 0; i < d; ++i)
        for (int w = 0; w < d; ++w) {
          r = r + gi(i, w) * out.riemann(i, j, k, w);
          for (int m = 0; m < d; ++m) rs = rs + gi(i, w) * out.riemann(i, j, k, m) * phi(m, w);
        }
      out.ricci(j, k) = r;
      out.ricci_star(j, k) = rs;
      out.tau = out.tau + gi(j, k) * r;
      out.tau_star = out.tau_star + gi(j, k) * rs;
    }
  return out;
}

namespace detail {
// Frame components of a constant-coefficient vector as exact rationals.
template <class Ring>
std::vector<Rational> constant_vector(const Tensor<Ring>& x, int d, const char* where) {
  if (x.dimension() != d || x.variance() != Variance{IndexKind::Upper})
    throw std::invalid_argument(std::string(where) + ": expected a vector of the frame dimension");
  std::vector<Rational> out(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    if (!ring_traits<Ring>::is_constant(x(i)))
      throw std::invalid_argument(std::string(where) + ": vector coefficients must be constant");
    out[size_t(i)] = ring_traits<Ring>::to_rational(x(i));
  }
  return out;
}

template <class Ring>
Rational metric_pairing(const Tensor<Ring>& g, const std::vector<Rational>& u,
                        const std::vector<Rational>& v) {
  Rational acc;
  int d = g.dimension();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      acc += u[size_t(i)] * ring_traits<Ring>::to_rational(g(i, j)) * v[size_t(j)];
  return acc;
}
}  // namespace detail

// Sectional curvature of the plane spanned by constant-coefficient vectors:
//   k = R(x,y,y,x) / (g(x,x) g(y,y) - g(x,y)^2).
template <class Ring>
Ring sectional_curvature(const AcbmManifold<Ring>& M, const CurvatureData<Ring>& CD,
                         const Tensor<Ring>& x, const Tensor<Ring>& y) {
  int d = M.dimension();
  auto xv = detail::constant_vector(x, d, "sectional_curvature");
  auto yv = detail::constant_vector(y, d, "sectional_curvature");
  Rational gxx = detail::metric_pairing(M.metric.g, xv, xv);
  Rational gyy = detail::metric_pairing(M.metric.g, yv, yv);
  Rational gxy = detail::metric_pairing(M.metric.g, xv, yv);
  Rational den = gxx * gyy - gxy * gxy;
  if (den.is_zero()) throw std::domain_error("sectional_curvature: degenerate plane");
  Ring num{};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          Rational weight = xv[size_t(i)] * yv[size_t(j)] * yv[size_t(k)] * xv[size_t(l)];
          if (!weight.is_zero())
            num = num + ring_traits<Ring>::scale(CD.riemann(i, j, k, l), weight);
        }
  return ring_traits<Ring>::scale(num, Rational(1) / den);
}

// Special 2-plane types relative to the structure: a xi-section contains xi,
// a phi-holomorphic section equals its phi-image, a totally real section is
// g-orthogonal to its phi-image and to xi. `degenerate` marks planes on
// which the induced metric is singular (no sectional curvature).
struct SectionType {
  enum class Tag { XiSection, PhiHolomorphic, TotallyReal, Generic };
  Tag tag = Tag::Generic;
  bool degenerate = false;

  const char* name() const {
    switch (tag) {
      case Tag::XiSection: return "xi-section";
      case Tag::PhiHolomorphic: return "phi-holomorphic";
      case Tag::TotallyReal: return "totally-real";
      default: return "generic";
    }
  }
};

template <class Ring>
SectionType section_type(const AcbmManifold<Ring>& M, const Tensor<Ring>& x,
                         const Tensor<Ring>& y) {
  int d = M.dimension();
  auto xv = detail::constant_vector(x, d, "section_type");
  auto yv = detail::constant_vector(y, d, "section_type");

  auto columns = [&](const std::vector<std::vector<Rational>>& cols) {
    QMatrix m(d, int(cols.size()));
    for (int i = 0; i < d; ++i)
      for (int c = 0; c < int(cols.size()); ++c) m.at(i, c) = cols[size_t(c)][size_t(i)];
    return m;
  };
  if (rank(columns({xv, yv})) != 2)
    throw std::invalid_argument("section_type: spanning vectors are linearly dependent");

  auto apply_phi = [&](const std::vector<Rational>& v) {
    std::vector<Rational> out(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j)
        out[size_t(k)] += ring_traits<Ring>::to_rational(M.phi(k, j)) * v[size_t(j)];
    return out;
  };
  std::vector<Rational> xiv(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) xiv[size_t(i)] = ring_traits<Ring>::to_rational(M.xi(i));
  auto phix = apply_phi(xv);
  auto phiy = apply_phi(yv);

  SectionType out;
  Rational gxx = detail::metric_pairing(M.metric.g, xv, xv);
  Rational gyy = detail::metric_pairing(M.metric.g, yv, yv);
  Rational gxy = detail::metric_pairing(M.metric.g, xv, yv);
  out.degenerate = (gxx * gyy - gxy * gxy).is_zero();

  if (rank(columns({xv, yv, xiv})) == 2) {
    out.tag = SectionType::Tag::XiSection;
  } else if (rank(columns({phix, phiy})) == 2 && rank(columns({xv, yv, phix, phiy})) == 2) {
    out.tag = SectionType::Tag::PhiHolomorphic;
  } else {
    bool orthogonal = detail::metric_pairing(M.metric.g, xv, xiv).is_zero() &&
                      detail::metric_pairing(M.metric.g, yv, xiv).is_zero();
    for (const auto& u : {xv, yv})
      for (const auto& v : {phix, phiy})
        orthogonal = orthogonal && detail::metric_pairing(M.metric.g, u, v).is_zero();
    out.tag = orthogonal ? SectionType::Tag::TotallyReal : SectionType::Tag::Generic;
  }
  return out;
}

// The geometric predicates as parameter conditions, plus the candidate
// Einstein factor lambda = tau/d and space-form constant k = tau/(d(d-1)),
// which are the unique possibilities whenever their predicates hold.
template <class Ring>
struct GeometricPredicates {
  std::map<std::string, ConditionSet> conditions;
  Ring einstein_lambda;
  Ring space_form_constant;
};

template <class Ring>
GeometricPredicates<Ring> predicates(const AcbmManifold<Ring>& M, const CurvatureData<Ring>& CD,
                                     const SquareNorms<Ring>& norms,
                                     const LeeForms<Ring>& /*lee: reserved for report context*/) {
  int d = M.dimension();
  const Tensor<Ring>& g = M.metric.g;

  auto set_of = [](const Tensor<Ring>& t) {
    std::vector<Polynomial> polys;
    for (size_t c = 0; c < t.size(); ++c)
      polys.push_back(ring_traits<Ring>::to_polynomial(t.component(c)));
    return ConditionSet::from_residuals(std::move(polys));
  };

  GeometricPredicates<Ring> out{{},
                                ring_traits<Ring>::scale(CD.tau, Rational(1, d)),
                                ring_traits<Ring>::scale(CD.tau, Rational(1, d * (d - 1)))};
  out.conditions.emplace("flat", set_of(CD.riemann));
  out.conditions.emplace("ricci-flat", set_of(CD.ricci));
  out.conditions.emplace("star-ricci-flat", set_of(CD.ricci_star));
  out.conditions.emplace("scalar-flat", ConditionSet::from_residuals(
                                            {ring_traits<Ring>::to_polynomial(CD.tau)}));
  out.conditions.emplace("star-scalar-flat", ConditionSet::from_residuals({
                                                 ring_traits<Ring>::to_polynomial(CD.tau_star)}));
  out.conditions.emplace("isotropic-F0", ConditionSet::from_residuals({
                                             ring_traits<Ring>::to_polynomial(norms.nabla_phi)}));

  std::vector<Polynomial> einstein;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          einstein.push_back(ring_traits<Ring>::to_polynomial(
              CD.ricci(i, j) * g(k, l) - CD.ricci(k, l) * g(i, j)));
  out.conditions.emplace("einstein", ConditionSet::from_residuals(std::move(einstein)));

  std::vector<Polynomial> space_form;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          space_form.push_back(ring_traits<Ring>::to_polynomial(
              CD.riemann(i, j, k, l) -
              out.space_form_constant * (g(j, k) * g(i, l) - g(i, k) * g(j, l))));
  out.conditions.emplace("constant-curvature", ConditionSet::from_residuals(std::move(space_form)));
  return out;
}

}  // namespace acbm

#endif
