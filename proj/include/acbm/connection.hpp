#ifndef ACBM_CONNECTION_HPP
#define ACBM_CONNECTION_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "acbm/condition_set.hpp"
#include "acbm/structure.hpp"

namespace acbm {

// Linear connection on a left-invariant frame, stored through its coefficient
// table: nabla_{e_i} e_j = coef(k, i, j) e_k, with i the direction index.
template <class Ring>
class Connection {
public:
  explicit Connection(Tensor<Ring> coefficients) : gamma_(std::move(coefficients)) {
    Variance want{IndexKind::Upper, IndexKind::Lower, IndexKind::Lower};
    if (gamma_.variance() != want)
      throw std::invalid_argument("Connection: coefficients must form a (1,2) tensor");
  }

  static Connection zero(int dimension) {
    return Connection(
        Tensor<Ring>(dimension, {IndexKind::Upper, IndexKind::Lower, IndexKind::Lower}));
  }

  int dimension() const { return gamma_.dimension(); }
  const Tensor<Ring>& coefficients() const { return gamma_; }
  const Ring& coef(int k, int i, int j) const { return gamma_(k, i, j); }
  Ring& coef(int k, int i, int j) { return gamma_(k, i, j); }

private:
  Tensor<Ring> gamma_;
};

template <class Ring>
bool operator==(const Connection<Ring>& a, const Connection<Ring>& b) {
  return a.coefficients() == b.coefficients();
}

template <class Ring>
bool is_zero(const Connection<Ring>& conn) {
  return is_zero(conn.coefficients());
}

// Covariant derivative of a frame-constant tensor field. The derivative slot
// is prepended as a new lower index, so (Dt)(i, ...) = (D_{e_i} t)(...);
// each upper slot contributes +Gamma and each lower slot -Gamma. Components
// are constant in the frame, so no directional-derivative term appears.
template <class Ring>
Tensor<Ring> covariant_derivative(const Tensor<Ring>& t, const Connection<Ring>& conn) {
  int d = conn.dimension();
  int r = t.rank();
  if (r > 0 && t.dimension() != d)
    throw std::invalid_argument("covariant_derivative: dimension mismatch");
  Variance v;
  v.reserve(static_cast<size_t>(r) + 1);
  v.push_back(IndexKind::Lower);
  v.insert(v.end(), t.variance().begin(), t.variance().end());
  Tensor<Ring> out(d, v);
  for (size_t f = 0; f < out.size(); ++f) {
    std::vector<int> idx = out.unflat(f);
    int i = idx[0];
    std::vector<int> probe(idx.begin() + 1, idx.end());
    Ring acc{};
    for (int s = 0; s < r; ++s) {
      int a = probe[size_t(s)];
      for (int m = 0; m < d; ++m) {
        probe[size_t(s)] = m;
        if (t.variance()[size_t(s)] == IndexKind::Upper)
          acc = acc + conn.coef(a, i, m) * t.at(probe);
        else
          acc = acc - conn.coef(m, i, a) * t.at(probe);
      }
      probe[size_t(s)] = a;
    }
    out.component(f) = acc;
  }
  return out;
}

// Levi-Civita connection of the metric, via the Koszul formula specialized
// to a frame in which the metric components are constant:
//   2 g(nabla_{e_i} e_j, e_k)
//     = g([e_i,e_j], e_k) + g([e_k,e_i], e_j) + g([e_k,e_j], e_i).
template <class Ring>
Connection<Ring> levi_civita(const AcbmManifold<Ring>& M) {
  int d = M.dimension();
  const LieAlgebra<Ring>& L = M.algebra;
  const Tensor<Ring>& g = M.metric.g;
  const Tensor<Ring>& gi = M.metric.g_inv;
  Tensor<Ring> koszul(d, {IndexKind::Lower, IndexKind::Lower, IndexKind::Lower});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Ring acc{};
        for (int m = 0; m < d; ++m)
          acc = acc + L.c(m, i, j) * g(m, k) + L.c(m, k, i) * g(m, j) + L.c(m, k, j) * g(m, i);
        koszul(i, j, k) = acc;
      }
  Tensor<Ring> gamma(d, {IndexKind::Upper, IndexKind::Lower, IndexKind::Lower});
  for (int l = 0; l < d; ++l)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Ring acc{};
        for (int k = 0; k < d; ++k) acc = acc + gi(l, k) * koszul(i, j, k);
        gamma(l, i, j) = ring_traits<Ring>::scale(acc, Rational(1, 2));
      }
  return Connection<Ring>(std::move(gamma));
}

// F along its covariant-derivative definition:
//   F_{ijk} = g((nabla_{e_i} phi) e_j, e_k),  slots (i, j, k).
template <class Ring>
Tensor<Ring> fundamental_tensor_direct(const AcbmManifold<Ring>& M,
                                       const Connection<Ring>& conn) {
  Tensor<Ring> dphi = covariant_derivative(M.phi, conn);  // slots (i, m^, j)
  return permute(lower_index(dphi, 1, M.metric), {0, 2, 1});
}

// F re-derived from the structure brackets alone (valid for the Levi-Civita
// connection of a frame-constant metric):
//   2 F_{ijk} = g([e_i, phi e_j] - phi [e_i, e_j], e_k)
//             + g(phi [e_k, e_i] - [phi e_k, e_i], e_j)
//             + g([e_k, phi e_j] - [phi e_k, e_j], e_i).
template <class Ring>
Tensor<Ring> fundamental_tensor_bracket(const AcbmManifold<Ring>& M) {
  int d = M.dimension();
  const LieAlgebra<Ring>& L = M.algebra;
  const Tensor<Ring>& phi = M.phi;
  const Tensor<Ring>& g = M.metric.g;

  // Component w of [e_p, phi e_q], of phi [e_p, e_q], and of [phi e_p, e_q].
  auto bracket_right_phi = [&](int p, int q, int w) {
    Ring acc{};
    for (int m = 0; m < d; ++m) acc = acc + L.c(w, p, m) * phi(m, q);
    return acc;
  };
  auto phi_of_bracket = [&](int p, int q, int w) {
    Ring acc{};
    for (int m = 0; m < d; ++m) acc = acc + phi(w, m) * L.c(m, p, q);
    return acc;
  };
  auto bracket_left_phi = [&](int p, int q, int w) {
    Ring acc{};
    for (int m = 0; m < d; ++m) acc = acc + phi(m, p) * L.c(w, m, q);
    return acc;
  };

  Tensor<Ring> F(d, {IndexKind::Lower, IndexKind::Lower, IndexKind::Lower});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Ring acc{};
        for (int w = 0; w < d; ++w) {
          acc = acc + (bracket_right_phi(i, j, w) - phi_of_bracket(i, j, w)) * g(w, k);
          acc = acc + (phi_of_bracket(k, i, w) - bracket_left_phi(k, i, w)) * g(w, j);
          acc = acc + (bracket_right_phi(k, j, w) - bracket_left_phi(k, j, w)) * g(w, i);
        }
        F(i, j, k) = ring_traits<Ring>::scale(acc, Rational(1, 2));
      }
  return F;
}

// Fundamental (0,3) tensor of the structure. Computed along both routes,
// which must agree exactly when conn is the Levi-Civita connection.
template <class Ring>
Tensor<Ring> fundamental_tensor(const AcbmManifold<Ring>& M, const Connection<Ring>& conn) {
  Tensor<Ring> direct = fundamental_tensor_direct(M, conn);
  Tensor<Ring> bracket = fundamental_tensor_bracket(M);
  if (direct != bracket)
    throw std::logic_error("fundamental_tensor: derivative and bracket routes disagree");
  return direct;
}

// Lee forms of F: theta(z) = g^{ij} F(e_i, e_j, z),
// theta*(z) = g^{ij} F(e_i, phi e_j, z), omega(z) = F(xi, xi, z).
// theta0 and theta_star0 are the evaluations of theta and theta* on xi.
template <class Ring>
struct LeeForms {
  Tensor<Ring> theta;
  Tensor<Ring> theta_star;
  Tensor<Ring> omega;
  Ring theta0;
  Ring theta_star0;
};

template <class Ring>
LeeForms<Ring> lee_forms(const AcbmManifold<Ring>& M, const Tensor<Ring>& F) {
  int d = M.dimension();
  if (F.dimension() != d ||
      F.variance() != Variance{IndexKind::Lower, IndexKind::Lower, IndexKind::Lower})
    throw std::invalid_argument("lee_forms: F must be a (0,3) tensor of the frame dimension");
  const Tensor<Ring>& gi = M.metric.g_inv;
  const Tensor<Ring>& phi = M.phi;
  const Tensor<Ring>& xi = M.xi;
  LeeForms<Ring> out{Tensor<Ring>(d, {IndexKind::Lower}), Tensor<Ring>(d, {IndexKind::Lower}),
                     Tensor<Ring>(d, {IndexKind::Lower}), Ring{}, Ring{}};
  for (int z = 0; z < d; ++z) {
    Ring th{}, ts{}, om{};
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        th = th + gi(i, j) * F(i, j, z);
        for (int m = 0; m < d; ++m) ts = ts + gi(i, j) * phi(m, j) * F(i, m, z);
        om = om + xi(i) * xi(j) * F(i, j, z);
      }
    out.theta(z) = th;
    out.theta_star(z) = ts;
    out.omega(z) = om;
    out.theta0 = out.theta0 + th * xi(z);
    out.theta_star0 = out.theta_star0 + ts * xi(z);
  }
  return out;
}

// Square norms of the covariant derivatives of phi, eta and xi:
//   ||D phi|| = g^{ij} g^{ks} g((D_{e_i} phi) e_k, (D_{e_j} phi) e_s),
//   ||D eta|| = g^{ij} g^{ks} (D_{e_i} eta) e_k (D_{e_j} eta) e_s,
//   ||D xi||  = g^{ij} g(D_{e_i} xi, D_{e_j} xi).
template <class Ring>
struct SquareNorms {
  Ring nabla_phi;
  Ring nabla_eta;
  Ring nabla_xi;
};

template <class Ring>
SquareNorms<Ring> square_norms(const AcbmManifold<Ring>& M, const Connection<Ring>& conn) {
  int d = M.dimension();
  const Tensor<Ring>& g = M.metric.g;
  const Tensor<Ring>& gi = M.metric.g_inv;
  Tensor<Ring> dphi = covariant_derivative(M.phi, conn);  // (i, m^, k)
  Tensor<Ring> deta = covariant_derivative(M.eta, conn);  // (i, k)
  Tensor<Ring> dxi = covariant_derivative(M.xi, conn);    // (i, m^)
  SquareNorms<Ring> out{Ring{}, Ring{}, Ring{}};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k)
        for (int s = 0; s < d; ++s) {
          out.nabla_eta = out.nabla_eta + gi(i, j) * gi(k, s) * deta(i, k) * deta(j, s);
          for (int m = 0; m < d; ++m)
            for (int n = 0; n < d; ++n)
              out.nabla_phi =
                  out.nabla_phi + gi(i, j) * gi(k, s) * g(m, n) * dphi(i, m, k) * dphi(j, n, s);
        }
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n)
          out.nabla_xi = out.nabla_xi + gi(i, j) * g(m, n) * dxi(i, m) * dxi(j, n);
    }
  return out;
}

// The phiB-connection associated with the structure:
//   D'_x y = nabla_x y + 1/2 {(nabla_x phi) phi y + ((nabla_x eta) y) xi}
//          - eta(y) nabla_x xi.
// (nabla_x eta) y is taken from the covariant derivative of eta and
// cross-checked against g(nabla_x xi, y), its metricity rewrite.
template <class Ring>
Connection<Ring> phi_b_connection(const AcbmManifold<Ring>& M, const Connection<Ring>& conn) {
  int d = M.dimension();
  const Tensor<Ring>& g = M.metric.g;
  Tensor<Ring> dphi = covariant_derivative(M.phi, conn);  // (i, k^, j)
  Tensor<Ring> deta = covariant_derivative(M.eta, conn);  // (i, j)
  Tensor<Ring> dxi = covariant_derivative(M.xi, conn);    // (i, k^)
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Ring other{};
      for (int m = 0; m < d; ++m) other = other + g(m, j) * dxi(i, m);
      if (!ring_traits<Ring>::is_zero(deta(i, j) - other))
        throw std::logic_error("phi_b_connection: derivative of eta disagrees with its metric rewrite");
    }
  Tensor<Ring> coef(d, {IndexKind::Upper, IndexKind::Lower, IndexKind::Lower});
  const Rational half(1, 2);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Ring acc = conn.coef(k, i, j);
        Ring corr{};
        for (int m = 0; m < d; ++m) corr = corr + dphi(i, k, m) * M.phi(m, j);
        corr = corr + deta(i, j) * M.xi(k);
        acc = acc + ring_traits<Ring>::scale(corr, half);
        acc = acc - M.eta(j) * dxi(i, k);
        coef(k, i, j) = acc;
      }
  return Connection<Ring>(std::move(coef));
}

// Torsion of a connection over the algebra's brackets:
//   T(x,y) = D_x y - D_y x - [x,y],  stored (1,2) with slots (k, i, j).
template <class Ring>
Tensor<Ring> torsion(const Connection<Ring>& conn, const LieAlgebra<Ring>& L) {
  int d = conn.dimension();
  if (L.dimension() != d) throw std::invalid_argument("torsion: dimension mismatch");
  Tensor<Ring> T(d, {IndexKind::Upper, IndexKind::Lower, IndexKind::Lower});
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        T(k, i, j) = conn.coef(k, i, j) - conn.coef(k, j, i) - L.c(k, i, j);
  return T;
}

// Lowered torsion with natural argument order: result(i, j, k) = g(T(e_i, e_j), e_k).
template <class Ring>
Tensor<Ring> lowered_torsion(const Tensor<Ring>& T, const MetricPair<Ring>& metric) {
  if (T.variance() != Variance{IndexKind::Upper, IndexKind::Lower, IndexKind::Lower})
    throw std::invalid_argument("lowered_torsion: torsion must be a (1,2) tensor");
  return permute(lower_index(T, 0, metric), {1, 2, 0});
}

// Naturality of a connection for the structure: natural iff D phi = 0 and
// D g = 0; those two force D xi = D eta = 0 and parallelism of the
// associated metric, which is re-checked. The violation list names every
// failing parallelism condition.
struct NaturalityResult {
  bool natural = false;
  std::vector<std::string> violations;
};

template <class Ring>
NaturalityResult is_natural(const AcbmManifold<Ring>& M, const Connection<Ring>& conn) {
  NaturalityResult out;
  bool phi_par = is_zero(covariant_derivative(M.phi, conn));
  bool g_par = is_zero(covariant_derivative(M.metric.g, conn));
  bool xi_par = is_zero(covariant_derivative(M.xi, conn));
  bool eta_par = is_zero(covariant_derivative(M.eta, conn));
  if (!phi_par) out.violations.push_back("phi not parallel");
  if (!g_par) out.violations.push_back("metric not parallel");
  if (!xi_par) out.violations.push_back("xi not parallel");
  if (!eta_par) out.violations.push_back("eta not parallel");
  if (validate_structure(M).empty()) {
    bool assoc_par = is_zero(covariant_derivative(associated_metric(M).g, conn));
    if (!assoc_par) out.violations.push_back("associated metric not parallel");
    if (phi_par && g_par && (!xi_par || !eta_par || !assoc_par))
      throw std::logic_error(
          "is_natural: parallel phi and metric must force the remaining parallelisms");
  }
  out.natural = phi_par && g_par;
  return out;
}

// Obstructions to the four-term torsion identity that characterizes the
// phi-canonical connection. With t(x,y,z) = g(T(x,y), z) the identity reads
//   t(x,y,z) - t(x,z,y) - t(x,phi y,phi z) + t(x,phi z,phi y)
//     = eta(x) { t(xi,y,z) - t(xi,z,y) - t(xi,phi y,phi z) + t(xi,phi z,phi y) }
//     + eta(y) { t(x,xi,z) - t(x,z,xi) - eta(x) t(z,xi,xi) }
//     - eta(z) { t(x,xi,y) - t(x,y,xi) - eta(x) t(y,xi,xi) },
// and the returned set is empty iff it holds identically on the frame.
template <class Ring>
ConditionSet phi_canonical_identity_holds(const AcbmManifold<Ring>& M,
                                          const Connection<Ring>& conn) {
  int d = M.dimension();
  Tensor<Ring> t = lowered_torsion(torsion(conn, M.algebra), M.metric);
  const Tensor<Ring>& phi = M.phi;
  const Tensor<Ring>& xi = M.xi;
  const Tensor<Ring>& eta = M.eta;

  auto phi_pair = [&](int x, int y, int z) {  // t(x, phi e_y, phi e_z)
    Ring acc{};
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) acc = acc + phi(m, y) * phi(n, z) * t(x, m, n);
    return acc;
  };
  auto lhs = [&](int x, int y, int z) {
    return t(x, y, z) - t(x, z, y) - phi_pair(x, y, z) + phi_pair(x, z, y);
  };
  auto lhs_on_xi = [&](int y, int z) {  // lhs with xi in the first argument
    Ring acc{};
    for (int i = 0; i < d; ++i) acc = acc + xi(i) * lhs(i, y, z);
    return acc;
  };
  auto t_xi_second = [&](int x, int z) {  // t(x, xi, z)
    Ring acc{};
    for (int m = 0; m < d; ++m) acc = acc + xi(m) * t(x, m, z);
    return acc;
  };
  auto t_xi_third = [&](int x, int y) {  // t(x, y, xi)
    Ring acc{};
    for (int m = 0; m < d; ++m) acc = acc + xi(m) * t(x, y, m);
    return acc;
  };
  auto t_xi_xi = [&](int x) {  // t(x, xi, xi)
    Ring acc{};
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) acc = acc + xi(m) * xi(n) * t(x, m, n);
    return acc;
  };

  std::vector<Polynomial> residuals;
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        Ring rhs = eta(x) * lhs_on_xi(y, z);
        rhs = rhs + eta(y) * (t_xi_second(x, z) - t_xi_third(x, z) - eta(x) * t_xi_xi(z));
        rhs = rhs - eta(z) * (t_xi_second(x, y) - t_xi_third(x, y) - eta(x) * t_xi_xi(y));
        residuals.push_back(ring_traits<Ring>::to_polynomial(lhs(x, y, z) - rhs));
      }
  return ConditionSet::from_residuals(std::move(residuals));
}

}  // namespace acbm

#endif
