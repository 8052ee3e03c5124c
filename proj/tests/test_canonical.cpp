#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcanon/canonical.hpp"
#include "qcanon/tropical.hpp"

using namespace qcanon;

TEST_CASE("bar matrices") {
  auto a2 = build_cartan("A2");
  Algebra alg(a2);
  PBWBasis h(alg, ReducedWord(a2, {0, 1, 0}));

  BarMatrix zero = bar_matrix(h, {0, 0});
  CHECK(zero.a.size() == 1);
  CHECK(zero.a[0][0] == LaurentPoly(1));

  BarMatrix m = bar_matrix(h, {1, 1});
  REQUIRE(m.labels == std::vector<PBWIndex>{{0, 1, 0}, {1, 0, 1}});
  CHECK_FALSE(m.a[1][0].is_zero());
  CHECK(m.a[0][1].is_zero());
  CHECK(m.unitriangular());
  CHECK(m.involutive());

  // f_{i_1}^(n) is bar invariant: its column is a unit vector
  BarMatrix p = bar_matrix(h, {3, 0});
  auto col = std::find(p.labels.begin(), p.labels.end(), PBWIndex{3, 0, 0}) - p.labels.begin();
  for (std::size_t r = 0; r < p.labels.size(); ++r)
    CHECK(p.a[r][col] == LaurentPoly(static_cast<long>(r) == col ? 1 : 0));
}

TEST_CASE("canonical basis on small weights") {
  auto a2 = build_cartan("A2");
  Algebra alg(a2);
  PBWBasis h(alg, ReducedWord(a2, {0, 1, 0})), hp(alg, ReducedWord(a2, {1, 0, 1}));
  CanonicalBasis b(h), bp(hp);

  auto one = b.elements({0, 0});
  REQUIRE(one.size() == 1);
  CHECK(one[0].value == QuotElt::one(alg));

  auto pow = b.elements({3, 0});
  REQUIRE(pow.size() == 1);
  CHECK(pow[0].value == QuotElt::divided_power(alg, 0, 3));

  auto two = b.elements({1, 1});
  REQUIRE(two.size() == 2);
  CHECK(two[0].label == PBWIndex{0, 1, 0});
  CHECK(two[1].label == PBWIndex{1, 0, 1});
  auto other = bp.elements({1, 1});
  for (const auto& e : two)
    CHECK(std::any_of(other.begin(), other.end(), [&](const CanonicalElt& f) { return f.value == e.value; }));

  for (const auto& g : weights_up_to_height(a2, 5)) {
    CHECK(verify_slice(b, g));
    for (const auto& e : b.elements(g)) {
      CHECK(e.value.bar() == e.value);
      CHECK(e.pbw_coeffs.at(e.label) == LaurentPoly(1));
    }
  }
}

TEST_CASE("label transitions") {
  auto a2 = build_cartan("A2");
  Algebra alg(a2, 6);
  PBWBasis h(alg, ReducedWord(a2, {0, 1, 0})), hp(alg, ReducedWord(a2, {1, 0, 1}));
  CanonicalBasis b(h), bp(hp);
  for (const auto& g : weights_up_to_height(a2, 6)) {
    for (const auto& m : label_transition(b, b, g)) {
      CHECK(m.from == m.to);
      CHECK(m.sign == 1);
    }
    for (const auto& m : label_transition(b, bp, g)) {
      Trop3 y = phi_a2({m.from[0], m.from[1], m.from[2]});
      CHECK(PBWIndex{int(y[0]), int(y[1]), int(y[2])} == m.to);
      CHECK(m.sign == 1);
    }
  }

  auto b2 = build_cartan("B2");
  Algebra balg(b2, 6);
  PBWBasis k(balg, ReducedWord(b2, {0, 1, 0, 1})), kp(balg, ReducedWord(b2, {1, 0, 1, 0}), RootMode::StarReversed);
  CanonicalBasis c(k), cp(kp);
  for (const auto& g : weights_up_to_height(b2, 6))
    for (const auto& m : label_transition(c, cp, g)) {
      Trop4 y = phi_b2({m.from[0], m.from[1], m.from[2], m.from[3]});
      CHECK(PBWIndex{int(y[0]), int(y[1]), int(y[2]), int(y[3])} == m.to);
      CHECK(m.sign == 1);
    }
}

TEST_CASE("epsilon_j") {
  auto b2 = build_cartan("B2");
  Algebra alg(b2, 8);
  PBWBasis h(alg, ReducedWord(b2, {0, 1, 0, 1})), hp(alg, ReducedWord(b2, {1, 0, 1, 0}));
  CHECK(epsilon_j(h, QuotElt::one(alg)) == 0);
  CHECK(epsilon_j(h, QuotElt::divided_power(alg, 0, 3)) == 3);
  CHECK(epsilon_j(hp, QuotElt::divided_power(alg, 1, 3)) == 3);
  for (const auto& g : weights_up_to_height(b2, 5))
    for (const auto& c : h.labels(g)) CHECK(epsilon_j(h, h.monomial(c)) == c[0]);
  CHECK_THROWS(epsilon_j(h, QuotElt::zero(alg, {1, 1})));
}

TEST_CASE("Kashiwara operators") {
  auto b2 = build_cartan("B2");
  Algebra alg(b2, 8);
  PBWBasis h(alg, ReducedWord(b2, {0, 1, 0, 1})), hp(alg, ReducedWord(b2, {1, 0, 1, 0}));
  CanonicalBasis b(h), bp(hp);
  CHECK(kashiwara_F(b, b, {0, 0, 0, 0}).value == QuotElt::generator(alg, 0));
  CHECK(kashiwara_F(b, bp, {0, 0, 0, 0}).value == QuotElt::generator(alg, 1));
  for (int n = 0; n <= 3; ++n) {
    CHECK(kashiwara_F(b, b, {n, 0, 0, 0}).value == b.element({n + 1, 0, 0, 0}).value);
    CHECK(kashiwara_F(b, bp, {0, 0, 0, n}).value == b.element({0, 0, 0, n + 1}).value);
  }
}

TEST_CASE("signed basis test") {
  auto a2 = build_cartan("A2");
  Algebra alg(a2);
  CHECK(signed_basis_test(QuotElt::one(alg)));
  CHECK(signed_basis_test(QuotElt::generator(alg, 0)));
  CHECK_FALSE(signed_basis_test((LaurentPoly(1) + LaurentPoly::q()) * QuotElt::generator(alg, 0)));
  CHECK_FALSE(signed_basis_test(LaurentPoly(2) * QuotElt::generator(alg, 0)));
}
