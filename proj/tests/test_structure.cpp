#include <doctest.h>

#include <stdexcept>

#include "acbm/family.hpp"
#include "acbm/structure.hpp"

using acbm::AcbmManifold;
using acbm::IndexKind;
using acbm::MetricPair;
using acbm::Polynomial;
using acbm::Rational;
using acbm::Tensor;

namespace {
const IndexKind U = IndexKind::Upper;
const IndexKind L = IndexKind::Lower;
}  // namespace

TEST_CASE("the family satisfies every structure axiom") {
  auto M = acbm::build_family_symbolic();
  CHECK(acbm::validate_structure(M).empty());
  CHECK(acbm::is_adapted_frame(M));
  auto N = acbm::build_family(Rational(1), Rational(2));
  CHECK(acbm::validate_structure(N).empty());
  CHECK(acbm::is_adapted_frame(N));
}

TEST_CASE("flipping one metric entry breaks exactly the B-metric axiom") {
  auto M = acbm::build_family(Rational(1), Rational(2));
  Tensor<Rational> g = M.metric.g;
  g(2, 2) = Rational(1);  // was -1
  AcbmManifold<Rational> bad(M.algebra, M.phi, M.xi, M.eta,
                             MetricPair<Rational>::from_metric(g));
  auto violations = acbm::validate_structure(bad);
  REQUIRE(!violations.empty());
  for (const auto& v : violations) CHECK(v.axiom == "b_metric");
  bool hits_22 = false, hits_11 = false;
  for (const auto& v : violations) {
    if (v.indices == std::vector<int>{2, 2}) hits_22 = true;
    if (v.indices == std::vector<int>{1, 1}) hits_11 = true;
  }
  CHECK(hits_22);
  CHECK(hits_11);  // g(phi e_1, phi e_1) = g(e_2, e_2) is also wrong now
  CHECK(violations[0].str() == "b_metric at (1,1)");
}

TEST_CASE("negating phi preserves all axioms") {
  auto M = acbm::build_family(Rational(1), Rational(2));
  AcbmManifold<Rational> flipped(M.algebra, -M.phi, M.xi, M.eta, M.metric);
  CHECK(acbm::validate_structure(flipped).empty());
  CHECK(!acbm::is_adapted_frame(flipped));
}

TEST_CASE("breaking eta(xi)=1 is reported without indices") {
  auto M = acbm::build_family(Rational(0), Rational(1));
  Tensor<Rational> xi = M.xi;
  xi(0) = Rational(2);
  AcbmManifold<Rational> bad(M.algebra, M.phi, xi, M.eta, M.metric);
  auto violations = acbm::validate_structure(bad);
  bool found = false;
  for (const auto& v : violations)
    if (v.axiom == "eta_xi") {
      CHECK(v.indices.empty());
      CHECK(v.str() == "eta_xi");
      found = true;
    }
  CHECK(found);
}

TEST_CASE("associated metric of the family") {
  auto M = acbm::build_family_symbolic();
  MetricPair<Polynomial> gt = acbm::associated_metric(M);
  // g~(x,y) = g(x, phi y) + eta(x) eta(y): diag block becomes off-diagonal.
  CHECK(gt.g(0, 0) == Polynomial(1));
  CHECK(gt.g(1, 2) == Polynomial(-1));
  CHECK(gt.g(2, 1) == Polynomial(-1));
  CHECK(gt.g(1, 1) == Polynomial(0));
  CHECK(gt.g(2, 2) == Polynomial(0));
  CHECK(gt.g(0, 1) == Polynomial(0));
  CHECK(gt.g(0, 2) == Polynomial(0));
  // Exact inverse comes along.
  CHECK(gt.g_inv(1, 2) == Polynomial(-1));
  CHECK(gt.g_inv(0, 0) == Polynomial(1));
}

TEST_CASE("applying the associated-metric construction twice") {
  auto M = acbm::build_family(Rational(2), Rational(-1));
  MetricPair<Rational> gt = acbm::associated_metric(M);
  AcbmManifold<Rational> Mt(M.algebra, M.phi, M.xi, M.eta, gt);
  MetricPair<Rational> gtt = acbm::associated_metric(Mt);
  // g~~(x,y) = g(x, phi^2 y) + ... = -g + 2 eta (x) eta on the frame:
  // diag(1, -1, 1).
  CHECK(gtt.g(0, 0) == Rational(1));
  CHECK(gtt.g(1, 1) == Rational(-1));
  CHECK(gtt.g(2, 2) == Rational(1));
  CHECK(gtt.g(1, 2) == Rational(0));
}

TEST_CASE("signatures of g and the associated metric are both (2,1)") {
  auto M = acbm::build_family(Rational(1), Rational(1));
  CHECK(acbm::signature(M.metric) == std::pair<int, int>{2, 1});
  CHECK(acbm::signature(acbm::associated_metric(M)) == std::pair<int, int>{2, 1});
}

TEST_CASE("associated metric refuses invalid structures") {
  auto M = acbm::build_family(Rational(1), Rational(0));
  Tensor<Rational> g = M.metric.g;
  g(2, 2) = Rational(1);
  AcbmManifold<Rational> bad(M.algebra, M.phi, M.xi, M.eta,
                             MetricPair<Rational>::from_metric(g));
  CHECK_THROWS_AS(acbm::associated_metric(bad), std::invalid_argument);
}

TEST_CASE("phi restricted to ker(eta) squares to minus the identity") {
  auto M = acbm::build_family(Rational(3), Rational(5));
  // eta = (1,0,0), so e_1 and e_2 span ker(eta).
  for (int j : {1, 2})
    for (int k = 0; k < 3; ++k) {
      Rational acc;
      for (int m = 0; m < 3; ++m) acc += M.phi(k, m) * M.phi(m, j);
      CHECK(acc == Rational(k == j ? -1 : 0));
    }
}

TEST_CASE("manifold construction rejects malformed shapes") {
  auto M = acbm::build_family(Rational(1), Rational(1));
  Tensor<Rational> bad_xi(3, {L});
  CHECK_THROWS_AS(AcbmManifold<Rational>(M.algebra, M.phi, bad_xi, M.eta, M.metric),
                  std::invalid_argument);
  Tensor<Rational> bad_phi(3, {U, U});
  CHECK_THROWS_AS(AcbmManifold<Rational>(M.algebra, bad_phi, M.xi, M.eta, M.metric),
                  std::invalid_argument);
  Tensor<Rational> small_eta(2, {L});
  CHECK_THROWS_AS(AcbmManifold<Rational>(M.algebra, M.phi, M.xi, small_eta, M.metric),
                  std::invalid_argument);
}

TEST_CASE("specialization evaluates every component") {
  auto M = acbm::build_family_symbolic();
  auto N = acbm::specialize(M, {{"a", Rational(1)}, {"b", Rational(2)}});
  CHECK(N.algebra.c(1, 0, 1) == Rational(-2));
  CHECK(N.algebra.c(2, 0, 1) == Rational(-1));
  CHECK(N.phi(2, 1) == Rational(1));
  CHECK(N.metric.g(2, 2) == Rational(-1));
  CHECK(acbm::validate_structure(N).empty());
}

TEST_CASE("frame changes preserve validity and signature") {
  auto M = acbm::build_family(Rational(1), Rational(2));
  acbm::QMatrix P(3, 3);
  // A shear mixed with a permutation.
  P.at(0, 1) = Rational(1);
  P.at(1, 0) = Rational(1);
  P.at(1, 2) = Rational(1, 2);
  P.at(2, 2) = Rational(1);
  REQUIRE(!acbm::determinant(P).is_zero());
  auto moved = acbm::change_frame(M, P);
  CHECK(acbm::validate_structure(moved).empty());
  CHECK(acbm::signature(moved.metric) == std::pair<int, int>{2, 1});
  CHECK(!acbm::is_adapted_frame(moved));
  CHECK(acbm::check_jacobi(moved.algebra).holds_identically());
}

TEST_CASE("hyperbolic-plane style metric has mixed signature") {
  Tensor<Rational> g(2, {L, L});
  g(0, 1) = Rational(1);
  g(1, 0) = Rational(1);
  auto pair = MetricPair<Rational>::from_metric(g);
  CHECK(acbm::signature(pair) == std::pair<int, int>{1, 1});
}
