#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "acbm/connection.hpp"
#include "acbm/family.hpp"

using acbm::AcbmManifold;
using acbm::Connection;
using acbm::IndexKind;
using acbm::Polynomial;
using acbm::QMatrix;
using acbm::Rational;
using acbm::Tensor;

namespace {
constexpr IndexKind U = IndexKind::Upper;
constexpr IndexKind L = IndexKind::Lower;

const std::vector<std::string> AB{"a", "b"};

Polynomial P(const std::string& t) { return Polynomial::parse(t, AB); }

// The frame change used for covariance checks: mixes the vertical direction
// into the horizontal plane and back, with determinant 1.
QMatrix mixing_frame() {
  QMatrix P(3, 3);
  P.at(0, 0) = Rational(2);
  P.at(0, 1) = Rational(1);
  P.at(1, 0) = Rational(1);
  P.at(1, 1) = Rational(1);
  P.at(2, 2) = Rational(1);
  return P;
}

AcbmManifold<Rational> moved_family(const Rational& a, const Rational& b) {
  return change_frame(build_family(a, b), mixing_frame());
}
}  // namespace

TEST_CASE("levi_civita reproduces the family coefficient table") {
  auto M = acbm::build_family_symbolic();
  auto conn = levi_civita(M);

  Tensor<Polynomial> want(3, {U, L, L});
  want(1, 1, 0) = P("b");
  want(2, 1, 0) = P("a");
  want(0, 1, 1) = P("-b");
  want(0, 1, 2) = P("a");
  want(1, 2, 0) = P("-a");
  want(2, 2, 0) = P("b");
  want(0, 2, 1) = P("a");
  want(0, 2, 2) = P("b");
  CHECK(conn.coefficients() == want);

  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) CHECK(conn.coef(k, 0, j).is_zero());
}

TEST_CASE("levi_civita is torsion-free and metric") {
  auto M = acbm::build_family_symbolic();
  auto conn = levi_civita(M);
  CHECK(acbm::is_zero(torsion(conn, M.algebra)));
  CHECK(acbm::is_zero(covariant_derivative(M.metric.g, conn)));

  // The same holds in a frame where the metric is not diagonal.
  auto moved = moved_family(Rational(3, 2), Rational(-2));
  auto moved_conn = levi_civita(moved);
  CHECK(acbm::is_zero(torsion(moved_conn, moved.algebra)));
  CHECK(acbm::is_zero(covariant_derivative(moved.metric.g, moved_conn)));
  CHECK(!acbm::is_zero(moved_conn.coefficients()));
}

TEST_CASE("vanishing brackets give a vanishing connection") {
  auto flat = acbm::build_family(Rational(0), Rational(0));
  CHECK(acbm::is_zero(levi_civita(flat)));
}

TEST_CASE("connection coefficients must form a (1,2) tensor") {
  CHECK_THROWS_AS(Connection<Rational>(Tensor<Rational>(3, {L, L, L})), std::invalid_argument);
  CHECK(acbm::is_zero(Connection<Rational>::zero(3)));
  CHECK(Connection<Rational>::zero(3).dimension() == 3);
}

TEST_CASE("covariant_derivative satisfies the product rule") {
  auto M = acbm::build_family(Rational(1), Rational(2));
  auto conn = levi_civita(M);

  Tensor<Rational> Y(3, {U});
  Y(0) = Rational(2);
  Y(1) = Rational(-1);
  Y(2) = Rational(1, 3);
  Tensor<Rational> w(3, {L});
  w(0) = Rational(1, 2);
  w(1) = Rational(5);
  w(2) = Rational(-3);

  auto dY = covariant_derivative(Y, conn);
  auto dw = covariant_derivative(w, conn);
  auto dwY = covariant_derivative(outer(w, Y), conn);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(dwY(i, j, k) == dw(i, j) * Y(k) + w(j) * dY(i, k));

  // Contraction of the derivative recovers the derivative of the scalar
  // w(Y), which vanishes because frame components are constant.
  CHECK(acbm::is_zero(contract(dwY, 1, 2)));

  CHECK_THROWS_AS(covariant_derivative(Tensor<Rational>(2, {U}), conn), std::invalid_argument);
}

TEST_CASE("fundamental tensor of the family has the eight known components") {
  auto M = acbm::build_family_symbolic();
  auto F = fundamental_tensor(M, levi_civita(M));

  Tensor<Polynomial> want(3, {L, L, L});
  want(1, 0, 1) = P("a");
  want(1, 1, 0) = P("a");
  want(2, 0, 2) = P("-a");
  want(2, 2, 0) = P("-a");
  want(1, 0, 2) = P("b");
  want(1, 2, 0) = P("b");
  want(2, 0, 1) = P("b");
  want(2, 1, 0) = P("b");
  CHECK(F == want);

  auto flat = acbm::build_family(Rational(0), Rational(0));
  CHECK(acbm::is_zero(fundamental_tensor(flat, levi_civita(flat))));
}

TEST_CASE("fundamental tensor routes agree off the adapted frame") {
  auto moved = moved_family(Rational(1, 3), Rational(-5, 2));
  auto F = fundamental_tensor(moved, levi_civita(moved));
  CHECK(!acbm::is_zero(F));

  // Covariance: the moved F is the pullback of the adapted-frame F along the
  // frame change (all slots lower, so every index contracts with P).
  auto M = acbm::build_family(Rational(1, 3), Rational(-5, 2));
  auto F0 = fundamental_tensor(M, levi_civita(M));
  QMatrix P = mixing_frame();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Rational want;
        for (int m = 0; m < 3; ++m)
          for (int n = 0; n < 3; ++n)
            for (int p = 0; p < 3; ++p)
              want += F0(m, n, p) * P.at(m, i) * P.at(n, j) * P.at(p, k);
        CHECK(F(i, j, k) == want);
      }
}

TEST_CASE("fundamental tensor symmetries hold componentwise") {
  auto check_symmetries = [](const auto& M, const auto& F) {
    const auto& phi = M.phi;
    const auto& xi = M.xi;
    const auto& eta = M.eta;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          CHECK(F(i, j, k) == F(i, k, j));
          // F(x,y,z) = F(x,phi y,phi z) + eta(y) F(x,xi,z) + eta(z) F(x,y,xi)
          std::decay_t<decltype(F(0, 0, 0))> rhs{};
          for (int m = 0; m < 3; ++m) {
            for (int n = 0; n < 3; ++n) rhs = rhs + phi(m, j) * phi(n, k) * F(i, m, n);
            rhs = rhs + eta(j) * xi(m) * F(i, m, k) + eta(k) * xi(m) * F(i, j, m);
          }
          CHECK(F(i, j, k) == rhs);
        }
  };

  auto M = acbm::build_family_symbolic();
  check_symmetries(M, fundamental_tensor(M, levi_civita(M)));

  auto moved = moved_family(Rational(2), Rational(7, 3));
  check_symmetries(moved, fundamental_tensor(moved, levi_civita(moved)));
}

TEST_CASE("lee forms of the family") {
  auto M = acbm::build_family_symbolic();
  auto F = fundamental_tensor(M, levi_civita(M));
  auto lf = lee_forms(M, F);

  CHECK(lf.theta(0) == P("2*a"));
  CHECK(lf.theta(1).is_zero());
  CHECK(lf.theta(2).is_zero());
  CHECK(lf.theta_star(0) == P("2*b"));
  CHECK(lf.theta_star(1).is_zero());
  CHECK(lf.theta_star(2).is_zero());
  CHECK(acbm::is_zero(lf.omega));
  CHECK(lf.theta0 == P("2*a"));
  CHECK(lf.theta_star0 == P("2*b"));

  auto flat = acbm::build_family(Rational(0), Rational(0));
  auto quiet = lee_forms(flat, fundamental_tensor(flat, levi_civita(flat)));
  CHECK(acbm::is_zero(quiet.theta));
  CHECK(acbm::is_zero(quiet.theta_star));
  CHECK(acbm::is_zero(quiet.omega));
  CHECK(quiet.theta0.is_zero());

  CHECK_THROWS_AS(lee_forms(M, Tensor<Polynomial>(3, {L, L})), std::invalid_argument);
}

TEST_CASE("square norms of the family") {
  auto M = acbm::build_family_symbolic();
  auto sn = square_norms(M, levi_civita(M));
  CHECK(sn.nabla_phi == P("4*a^2 - 4*b^2"));
  CHECK(sn.nabla_eta == P("2*b^2 - 2*a^2"));
  CHECK(sn.nabla_xi == P("2*b^2 - 2*a^2"));
  CHECK(sn.nabla_phi == acbm::scale(sn.nabla_eta, Rational(-2)));

  const std::vector<std::pair<Rational, Rational>> isotropic{
      {Rational(1), Rational(1)}, {Rational(-3), Rational(3)}, {Rational(0), Rational(0)}};
  for (const auto& [a, b] : isotropic) {
    auto N = acbm::build_family(a, b);
    auto at = square_norms(N, levi_civita(N));
    CHECK(at.nabla_phi.is_zero());
    CHECK(at.nabla_eta.is_zero());
    CHECK(at.nabla_xi.is_zero());
  }
}

TEST_CASE("phiB-connection vanishes on the family and is natural") {
  auto M = acbm::build_family_symbolic();
  auto lc = levi_civita(M);
  auto D = phi_b_connection(M, lc);
  CHECK(acbm::is_zero(D));

  auto nat = is_natural(M, D);
  CHECK(nat.natural);
  CHECK(nat.violations.empty());

  // The Levi-Civita connection itself fails naturality away from a = b = 0.
  auto lc_nat = is_natural(M, lc);
  CHECK(!lc_nat.natural);
  CHECK(std::count(lc_nat.violations.begin(), lc_nat.violations.end(), "phi not parallel") == 1);
  CHECK(std::count(lc_nat.violations.begin(), lc_nat.violations.end(), "metric not parallel") ==
        0);

  auto flat = acbm::build_family(Rational(0), Rational(0));
  auto flat_lc = levi_civita(flat);
  CHECK(phi_b_connection(flat, flat_lc) == flat_lc);
  CHECK(is_natural(flat, flat_lc).natural);

  auto one = acbm::build_family(Rational(1), Rational(0));
  CHECK(!is_natural(one, levi_civita(one)).natural);
}

TEST_CASE("phiB-connection vanishes in every constant frame") {
  // A constant frame change has no inhomogeneous term, so the zero
  // connection stays zero while its inputs look very different.
  auto moved = moved_family(Rational(4, 5), Rational(-1, 2));
  auto D = phi_b_connection(moved, levi_civita(moved));
  CHECK(acbm::is_zero(D));
  CHECK(is_natural(moved, D).natural);
}

TEST_CASE("naturality report names the broken parallelisms") {
  auto M = acbm::build_family(Rational(1), Rational(2));
  auto bad = Connection<Rational>::zero(3);
  bad.coef(1, 0, 0) = Rational(1);
  auto nat = is_natural(M, bad);
  CHECK(!nat.natural);
  CHECK(std::count(nat.violations.begin(), nat.violations.end(), "phi not parallel") == 1);
  CHECK(std::count(nat.violations.begin(), nat.violations.end(), "metric not parallel") == 1);
  CHECK(std::count(nat.violations.begin(), nat.violations.end(), "xi not parallel") == 1);
  CHECK(std::count(nat.violations.begin(), nat.violations.end(), "eta not parallel") == 0);
}

TEST_CASE("torsion of the phiB-connection is the negated bracket") {
  auto M = acbm::build_family_symbolic();
  auto D = phi_b_connection(M, levi_civita(M));
  auto T = torsion(D, M.algebra);

  Tensor<Polynomial> want(3, {U, L, L});
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) want(k, i, j) = -M.algebra.c(k, i, j);
  CHECK(T == want);
  CHECK(T(1, 0, 1) == P("b"));
  CHECK(T(2, 0, 1) == P("a"));

  auto t = lowered_torsion(T, M.metric);
  CHECK(t(0, 1, 0).is_zero());
  CHECK(t(0, 1, 1) == P("b"));
  CHECK(t(0, 1, 2) == P("-a"));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(t(i, j, k) == -t(j, i, k));

  CHECK_THROWS_AS(torsion(Connection<Polynomial>::zero(2), M.algebra), std::invalid_argument);
  CHECK_THROWS_AS(lowered_torsion(Tensor<Polynomial>(3, {L, L, L}), M.metric),
                  std::invalid_argument);
}

TEST_CASE("phi-canonical torsion identity holds for the phiB-connection") {
  auto M = acbm::build_family_symbolic();
  auto lc = levi_civita(M);
  CHECK(phi_canonical_identity_holds(M, phi_b_connection(M, lc)).holds_identically());
  // Zero torsion satisfies the identity trivially.
  CHECK(phi_canonical_identity_holds(M, lc).holds_identically());

  auto flat = acbm::build_family(Rational(0), Rational(0));
  CHECK(phi_canonical_identity_holds(flat, levi_civita(flat)).holds_identically());
}

TEST_CASE("phi-canonical torsion identity carries no content in dimension 3") {
  // On a 3-dimensional structure the horizontal plane has one complex
  // dimension, where the phi-phi antisymmetrization cancels term by term,
  // and the xi-slot cases reduce to the torsion's own antisymmetry. The
  // identity therefore holds for EVERY connection, however twisted its
  // torsion; this pins that fact down so a future change in the identity's
  // evaluation is caught.
  auto M = acbm::build_family(Rational(1), Rational(2));
  auto twisted = Connection<Rational>::zero(3);
  twisted.coef(0, 0, 1) = Rational(3);
  twisted.coef(0, 1, 0) = Rational(-3);
  twisted.coef(1, 0, 2) = Rational(-1, 2);
  twisted.coef(1, 2, 0) = Rational(1, 2);
  twisted.coef(2, 1, 2) = Rational(5);
  twisted.coef(2, 2, 1) = Rational(-5);
  twisted.coef(0, 1, 2) = Rational(7);
  twisted.coef(0, 2, 1) = Rational(-7);
  CHECK(!acbm::is_zero(torsion(twisted, M.algebra)));
  CHECK(phi_canonical_identity_holds(M, twisted).holds_identically());

  // Symbolic variant with parameter-dependent injected torsion.
  auto S = acbm::build_family_symbolic();
  auto sym = Connection<Polynomial>::zero(3);
  sym.coef(2, 0, 1) = P("a^2 + 1");
  sym.coef(2, 1, 0) = P("-a^2 - 1");
  sym.coef(1, 1, 2) = P("b");
  sym.coef(1, 2, 1) = P("-b");
  CHECK(phi_canonical_identity_holds(S, sym).holds_identically());
}
