#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcanon/folding.hpp"

using namespace qcanon;

namespace {

FoldedDatum a3_to_b2() {
  auto a3 = build_cartan("A3");
  return fold_datum(a3, make_automorphism(a3, {{"1", "1'"}, {"1'", "1"}}));
}

FoldedDatum d4_to_g2() {
  auto d4 = build_cartan("D4");
  return fold_datum(d4, make_automorphism(d4, {{"1", "3"}, {"3", "4"}, {"4", "1"}}));
}

}  // namespace

TEST_CASE("orbit products") {
  Folding f(a3_to_b2(), {0, 1, 0, 1}, 6);
  const Algebra& ua = f.unfolded_pbw().algebra();
  CHECK(f.tilde_f(1, 2) == QuotElt::divided_power(ua, 1, 2));
  CHECK(f.tilde_f(0, 1) == QuotElt::generator(ua, 0) * QuotElt::generator(ua, 2));
  for (int a = 1; a <= 2; ++a) CHECK(f.tilde_f(0, a).sigma(f.datum().sigma) == f.tilde_f(0, a));
}

TEST_CASE("orbit-sum ideal") {
  Folding f(a3_to_b2(), {0, 1, 0, 1}, 6);
  CHECK(f.ideal_J_rank({0, 0, 0}) == 0);
  CHECK(f.ideal_J_rank({1, 0, 1}) == 0);
  for (const Weight& g : {Weight{1, 1, 1}, Weight{1, 2, 1}, Weight{2, 2, 2}})
    CHECK(f.ideal_J_rank(g) == f.nonfixed_orbits(g));
  CHECK(f.nonfixed_orbits({1, 1, 1}) > 0);
}

TEST_CASE("projection and Phi") {
  Folding f(a3_to_b2(), {0, 1, 0, 1}, 6);
  const Algebra& ua = f.unfolded_pbw().algebra();
  const Algebra& fa = f.folded_pbw().algebra();

  VqElt one = f.project_pi(QuotElt::one(ua));
  CHECK(one.coords.size() == 1);
  CHECK(one == f.phi_of_ul(QuotElt::one(fa)));

  // orbit sum of a moved word
  QuotElt w = QuotElt::generator(ua, 0) * QuotElt::generator(ua, 1) * QuotElt::generator(ua, 2);
  QuotElt s = w + w.sigma(f.datum().sigma);
  CHECK(f.project_pi(s).coords.empty());
  CHECK_THROWS_AS(f.project_pi(w), DomainError);

  for (int j = 0; j < 2; ++j)
    for (int a = 1; a <= 2; ++a) {
      VqElt image = f.project_pi(f.tilde_f(j, a));
      CHECK_FALSE(image.coords.empty());
      CHECK(f.phi_of_ul(QuotElt::divided_power(fa, j, a)) == image);
    }

  for (const auto& g : weights_up_to_height(f.datum().folded, 3))
    for (const auto& c : f.folded_pbw().labels(g)) {
      auto lifted = index_lift(f.datum(), {0, 1, 0, 1}, c);
      CHECK(lifted == std::vector<int>{c[0], c[0], c[1], c[2], c[2], c[3]});
      CHECK(f.phi_of_ul(f.folded_pbw().monomial(c)) == f.project_pi(f.unfolded_pbw().monomial(lifted)));
    }
}

TEST_CASE("weight reports") {
  Folding f(a3_to_b2(), {0, 1, 0, 1}, 6);
  auto zero = f.verify_fold_weight({0, 0});
  CHECK(zero.ok());
  CHECK(zero.vq_dim == 1);
  CHECK(zero.folded_labels == 1);
  CHECK(f.verify_fold_weight({1, 1}).ok());

  Folding g(d4_to_g2(), {0, 1, 0, 1, 0, 1}, 5);
  CHECK(g.prime() == 3);
  for (const auto& fg : weights_up_to_height(g.datum().folded, 3))
    if (height(g.datum().lift_weight(fg)) <= 4) CHECK(g.verify_fold_weight(fg).ok());
}

TEST_CASE("helpers") {
  CHECK(divided_power_sequences({0, 0}).size() == 1);
  CHECK(divided_power_sequences({1, 1}).size() == 2);
  // f1^(2), f1 f2 f1 ... no equal neighbours
  CHECK(divided_power_sequences({2, 1}).size() == 3);
  std::vector<std::vector<LaurentPoly>> m{{LaurentPoly(1, 2), LaurentPoly(1, 2)}, {LaurentPoly(1, 2), LaurentPoly(1, 2)}};
  CHECK(rank_mod_p(m, 2) == 1);
  std::vector<std::vector<LaurentPoly>> n{{LaurentPoly(2), LaurentPoly(0)}, {LaurentPoly(0), LaurentPoly(1)}};
  CHECK(rank_mod_p(n, 2) == 1);
  CHECK(rank_mod_p(n, 3) == 2);
}
