#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "acbm/classify.hpp"
#include "acbm/family.hpp"

using acbm::AcbmManifold;
using acbm::ConditionSet;
using acbm::IndexKind;
using acbm::Polynomial;
using acbm::QMatrix;
using acbm::Rational;
using acbm::Tensor;

namespace {
constexpr IndexKind L = IndexKind::Lower;

const std::vector<std::string> AB{"a", "b"};

Polynomial P(const std::string& t) { return Polynomial::parse(t, AB); }

ConditionSet CS(const std::vector<std::string>& texts) {
  std::vector<Polynomial> polys;
  for (const auto& t : texts) polys.push_back(P(t));
  return ConditionSet::from_residuals(std::move(polys));
}

AcbmManifold<Rational> off_frame(const Rational& a, const Rational& b) {
  QMatrix P(3, 3);
  P.at(0, 0) = Rational(2);
  P.at(0, 1) = Rational(1);
  P.at(1, 0) = Rational(1);
  P.at(1, 1) = Rational(1);
  P.at(2, 2) = Rational(1);
  return change_frame(acbm::build_family(a, b), P);
}
}  // namespace

TEST_CASE("vertical component tensors carry the four-slot patterns") {
  auto M = acbm::build_family_symbolic();

  auto F4 = f4_component(M, P("2*a"));
  Tensor<Polynomial> want4(3, {L, L, L});
  want4(1, 0, 1) = P("a");
  want4(1, 1, 0) = P("a");
  want4(2, 0, 2) = P("-a");
  want4(2, 2, 0) = P("-a");
  CHECK(F4 == want4);

  auto F5 = f5_component(M, P("2*b"));
  Tensor<Polynomial> want5(3, {L, L, L});
  want5(1, 0, 2) = P("b");
  want5(1, 2, 0) = P("b");
  want5(2, 0, 1) = P("b");
  want5(2, 1, 0) = P("b");
  CHECK(F5 == want5);

  CHECK(acbm::is_zero(f4_component(M, Polynomial())));
  CHECK(acbm::is_zero(f5_component(M, Polynomial())));
}

TEST_CASE("component tensors demand an adapted frame") {
  auto moved = off_frame(Rational(1), Rational(2));
  CHECK_THROWS_AS(f4_component(moved, Rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(f5_component(moved, Rational(4)), std::invalid_argument);
  CHECK_THROWS_AS(classify(moved), std::invalid_argument);
}

TEST_CASE("symbolic family classifies into the vertical direct sum") {
  auto M = acbm::build_family_symbolic();
  auto rep = classify(M);

  CHECK(rep.theta0 == P("2*a"));
  CHECK(rep.theta_star0 == P("2*b"));
  CHECK(acbm::is_zero(rep.residual));
  CHECK(rep.f == rep.f4 + rep.f5);
  CHECK(rep.in_f45.holds_identically());
  CHECK(rep.in_f4 == CS({"b"}));
  CHECK(rep.in_f5 == CS({"a"}));
  CHECK(rep.in_f0 == CS({"a", "b"}));
  CHECK(rep.verdict() == "F4+F5 (proper)");
  CHECK(!rep.note.empty());

  // The special class sits inside each vertical class.
  CHECK(rep.in_f0.contains(rep.in_f4));
  CHECK(rep.in_f0.contains(rep.in_f5));
  CHECK(rep.in_f4.contains(rep.in_f45));
  CHECK(rep.in_f5.contains(rep.in_f45));
}

TEST_CASE("specialized points pick out single classes") {
  auto only_f4 = classify(acbm::build_family(Rational(1), Rational(0)));
  CHECK(only_f4.theta0 == Rational(2));
  CHECK(only_f4.theta_star0 == Rational(0));
  CHECK(only_f4.in_f4.holds_identically());
  CHECK(only_f4.in_f5.unsatisfiable());
  CHECK(only_f4.in_f0.unsatisfiable());
  CHECK(only_f4.verdict() == "F4 (proper)");

  auto only_f5 = classify(acbm::build_family(Rational(0), Rational(2)));
  CHECK(only_f5.in_f5.holds_identically());
  CHECK(only_f5.in_f4.unsatisfiable());
  CHECK(only_f5.verdict() == "F5 (proper)");

  auto special = classify(acbm::build_family(Rational(0), Rational(0)));
  CHECK(special.in_f0.holds_identically());
  CHECK(special.verdict() == "F0");

  auto both = classify(acbm::build_family(Rational(1), Rational(2)));
  CHECK(both.in_f45.holds_identically());
  CHECK(both.in_f4.unsatisfiable());
  CHECK(both.in_f5.unsatisfiable());
  CHECK(both.verdict() == "F4+F5 (proper)");
}

TEST_CASE("component tensors reproduce their own Lee data") {
  auto M = acbm::build_family_symbolic();
  auto rep = classify(M);

  auto lf4 = lee_forms(M, rep.f4);
  CHECK(lf4.theta(0) == P("2*a"));
  CHECK(lf4.theta(1).is_zero());
  CHECK(lf4.theta(2).is_zero());
  CHECK(acbm::is_zero(lf4.theta_star));
  CHECK(acbm::is_zero(lf4.omega));

  auto lf5 = lee_forms(M, rep.f5);
  CHECK(acbm::is_zero(lf5.theta));
  CHECK(lf5.theta_star(0) == P("2*b"));
  CHECK(lf5.theta_star(1).is_zero());
  CHECK(lf5.theta_star(2).is_zero());
  CHECK(acbm::is_zero(lf5.omega));
}

TEST_CASE("Lee data rebuilds the structure constants") {
  auto M = acbm::build_family_symbolic();
  auto rep = classify(M);
  acbm::FamilySpec<Polynomial> spec{acbm::scale(rep.theta0, Rational(1, 2)),
                                    acbm::scale(rep.theta_star0, Rational(1, 2))};
  auto rebuilt = acbm::build_family(spec);
  CHECK(rebuilt.algebra.structure() == M.algebra.structure());

  auto N = acbm::build_family(Rational(3), Rational(-2));
  auto nrep = classify(N);
  acbm::FamilySpec<Rational> nspec{nrep.theta0 / Rational(2), nrep.theta_star0 / Rational(2)};
  CHECK(acbm::build_family(nspec).algebra.structure() == N.algebra.structure());
}
