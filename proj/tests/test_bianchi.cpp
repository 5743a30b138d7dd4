#include <doctest.h>

#include <cmath>
#include <map>
#include <stdexcept>

#include "acbm/bianchi.hpp"
#include "bianchi_oracle.hpp"

using acbm::BianchiType;
using acbm::LieAlgebra;
using acbm::Polynomial;
using acbm::QMatrix;
using acbm::Rational;
using Tag = acbm::BianchiType::Tag;

namespace {
const std::vector<std::string> AB{"a", "b"};

Polynomial P(const std::string& t) { return Polynomial::parse(t, AB); }

LieAlgebra<Polynomial> family_algebra() {
  return LieAlgebra<Polynomial>::from_brackets(
      3, {{0, 1, 1, P("-b")}, {0, 1, 2, P("-a")}, {0, 2, 1, P("a")}, {0, 2, 2, P("-b")}});
}

LieAlgebra<Rational> family_at(int a, int b) {
  return acbm::specialize(family_algebra(), {{"a", Rational(a)}, {"b", Rational(b)}});
}

using Entry = std::tuple<int, int, int, Rational>;
LieAlgebra<Rational> algebra(const std::vector<Entry>& entries) {
  return LieAlgebra<Rational>::from_brackets(3, entries);
}

// Deterministic pseudo-random rationals for invariance tests.
struct Lcg {
  unsigned long long state;
  int next(int lo, int hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + int((state >> 33) % (unsigned long long)(hi - lo + 1));
  }
};

QMatrix random_invertible(Lcg& rng) {
  for (;;) {
    QMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = Rational(rng.next(-3, 3), rng.next(1, 3));
    if (!acbm::determinant(m).is_zero()) return m;
  }
}
}  // namespace

TEST_CASE("family specializations hit the expected types") {
  BianchiType t = acbm::bianchi_classify(family_at(1, 1));
  CHECK(t.tag == Tag::VII_h);
  REQUIRE(t.h.has_value());
  CHECK(std::abs(*t.h - std::sqrt(2.0)) < 1e-12);
  REQUIRE(t.trace_a.has_value());
  REQUIRE(t.det_a.has_value());
  CHECK(*t.trace_a == Rational(-2));
  CHECK(*t.det_a == Rational(2));

  CHECK(acbm::bianchi_classify(family_at(1, 0)).tag == Tag::VII_0);
  CHECK(acbm::bianchi_classify(family_at(0, 1)).tag == Tag::V);
  CHECK(acbm::bianchi_classify(family_at(0, 0)).tag == Tag::I);
  CHECK(acbm::bianchi_classify(family_at(0, -2)).tag == Tag::V);
  CHECK(acbm::bianchi_classify(family_at(-3, 0)).tag == Tag::VII_0);
}

TEST_CASE("parametric overload specializes at the point") {
  BianchiType t = acbm::bianchi_classify(family_algebra(),
                                         {{"a", Rational(1)}, {"b", Rational(1)}});
  CHECK(t.tag == Tag::VII_h);
  CHECK_THROWS_AS(acbm::bianchi_classify(family_algebra(), {{"a", Rational(1)}}),
                  std::invalid_argument);
}

TEST_CASE("canonical algebras of every type are recognized") {
  // II: Heisenberg.
  CHECK(acbm::bianchi_classify(algebra({{1, 2, 0, Rational(1)}})).tag == Tag::II);
  // III: decomposable solvable, derived algebra 1-dimensional but not central.
  CHECK(acbm::bianchi_classify(algebra({{0, 1, 1, Rational(1)}})).tag == Tag::III);
  // IV: Jordan-block action on the derived algebra.
  BianchiType t4 = acbm::bianchi_classify(
      algebra({{0, 1, 1, Rational(1)}, {0, 2, 1, Rational(1)}, {0, 2, 2, Rational(1)}}));
  CHECK(t4.tag == Tag::IV);
  // V: scalar action.
  CHECK(acbm::bianchi_classify(algebra({{0, 1, 1, Rational(1)}, {0, 2, 2, Rational(1)}})).tag ==
        Tag::V);
  // VI_h: real distinct eigenvalues 1 and 3.
  BianchiType t6 = acbm::bianchi_classify(
      algebra({{0, 1, 1, Rational(1)}, {0, 2, 2, Rational(3)}}));
  CHECK(t6.tag == Tag::VI_h);
  REQUIRE(t6.h_exact.has_value());
  CHECK(*t6.h_exact == Rational(-4));
  // VI_0: traceless with real eigenvalues.
  BianchiType t60 = acbm::bianchi_classify(
      algebra({{0, 1, 2, Rational(1)}, {0, 2, 1, Rational(1)}}));
  CHECK(t60.tag == Tag::VI_h);
  CHECK(*t60.h_exact == Rational(0));
  // VII_0: rotation.
  CHECK(acbm::bianchi_classify(
            algebra({{0, 1, 2, Rational(1)}, {0, 2, 1, Rational(-1)}}))
            .tag == Tag::VII_0);
  // VIII: sl(2,R).
  CHECK(acbm::bianchi_classify(algebra({{0, 1, 1, Rational(2)},
                                        {0, 2, 2, Rational(-2)},
                                        {1, 2, 0, Rational(1)}}))
            .tag == Tag::VIII);
  // IX: so(3).
  CHECK(acbm::bianchi_classify(algebra({{0, 1, 2, Rational(1)},
                                        {1, 2, 0, Rational(1)},
                                        {0, 2, 1, Rational(-1)}}))
            .tag == Tag::IX);
}

TEST_CASE("classifier agrees with the independent oracle on the family grid") {
  int checked = 0;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      LieAlgebra<Rational> L = family_at(a, b);
      BianchiType got = acbm::bianchi_classify(L);
      bianchi_oracle::Result want = bianchi_oracle::classify(L);
      CHECK(got.tag_name() == want.tag);
      if (got.h && want.h) CHECK(std::abs(*got.h - *want.h) < 1e-9);
      CHECK(got.h.has_value() == want.h.has_value());
      ++checked;
    }
  CHECK(checked == 25);
}

TEST_CASE("classifier agrees with the oracle on canonical non-family algebras") {
  std::vector<LieAlgebra<Rational>> samples = {
      algebra({}),
      algebra({{1, 2, 0, Rational(1)}}),
      algebra({{0, 1, 1, Rational(1)}}),
      algebra({{0, 1, 1, Rational(1)}, {0, 2, 1, Rational(1)}, {0, 2, 2, Rational(1)}}),
      algebra({{0, 1, 1, Rational(1)}, {0, 2, 2, Rational(1)}}),
      algebra({{0, 1, 1, Rational(1)}, {0, 2, 2, Rational(3)}}),
      algebra({{0, 1, 1, Rational(2)}, {0, 2, 2, Rational(-2)}, {1, 2, 0, Rational(1)}}),
      algebra({{0, 1, 2, Rational(1)}, {1, 2, 0, Rational(1)}, {0, 2, 1, Rational(-1)}}),
      algebra({{0, 1, 1, Rational(2)}, {0, 1, 2, Rational(-1)}, {0, 2, 1, Rational(1)},
               {0, 2, 2, Rational(2)}}),
  };
  for (const auto& L : samples) {
    BianchiType got = acbm::bianchi_classify(L);
    bianchi_oracle::Result want = bianchi_oracle::classify(L);
    CHECK(got.tag_name() == want.tag);
    if (got.h && want.h) CHECK(*got.h == doctest::Approx(*want.h).epsilon(1e-9));
  }
}

TEST_CASE("classification is invariant under frame changes") {
  Lcg rng{20240817ULL};
  for (int trial = 0; trial < 8; ++trial) {
    LieAlgebra<Rational> L = family_at(trial % 2 ? 1 : 2, trial % 3 - 1);
    BianchiType base = acbm::bianchi_classify(L);
    QMatrix P = random_invertible(rng);
    BianchiType moved = acbm::bianchi_classify(acbm::change_frame(L, P));
    CHECK(base.tag == moved.tag);
    if (base.h || moved.h) {
      REQUIRE(base.h.has_value());
      REQUIRE(moved.h.has_value());
      CHECK(std::abs(*base.h - *moved.h) < 1e-9);
    }
  }
}

TEST_CASE("classification is invariant under rescaling the first frame vector") {
  for (Rational c : {Rational(2), Rational(-3), Rational(1, 2)}) {
    QMatrix S = QMatrix::identity(3);
    S.at(0, 0) = c;
    LieAlgebra<Rational> L = family_at(1, 1);
    BianchiType base = acbm::bianchi_classify(L);
    BianchiType moved = acbm::bianchi_classify(acbm::change_frame(L, S));
    CHECK(base.tag == moved.tag);
    CHECK(std::abs(*base.h - *moved.h) < 1e-12);
  }
}

TEST_CASE("invalid inputs are rejected") {
  // Not a Lie algebra: the Jacobi identity fails.
  auto bad = algebra({{0, 1, 2, Rational(1)}, {1, 2, 1, Rational(1)}});
  CHECK_THROWS_AS(acbm::bianchi_classify(bad), std::invalid_argument);

  LieAlgebra<Rational> two(2, acbm::Tensor<Rational>(2, {acbm::IndexKind::Upper,
                                                         acbm::IndexKind::Lower,
                                                         acbm::IndexKind::Lower}));
  CHECK_THROWS_AS(acbm::bianchi_classify(two), std::invalid_argument);
}

TEST_CASE("type strings are formatted for reports") {
  CHECK(acbm::bianchi_classify(family_at(0, 0)).to_string() == "type I (abelian)");
  CHECK(acbm::bianchi_classify(family_at(1, 1)).to_string() ==
        "type VII_h (h = 1.414214, tr = -2, det = 2)");
  CHECK(acbm::bianchi_classify(family_at(0, 1)).to_string() == "type V (tr = -2, det = 1)");
}
