#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcanon/freealg.hpp"

using namespace qcanon;

namespace {

QuotElt word(const Algebra& alg, const Word& w) {
  FreeElt x;
  Weight g = alg.datum().zero_weight();
  for (int i : w) ++g[i];
  x.weight = g;
  x.add(w, LaurentPoly(1));
  return QuotElt::from_free(alg, x);
}

QuotElt random_elt(const Algebra& alg, const Weight& g, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-2, 2), deg(-2, 2);
  FreeElt x;
  x.weight = g;
  for (const auto& w : alg.space(g).words) x.add(w, LaurentPoly::monomial(coef(rng), deg(rng)));
  return QuotElt::from_free(alg, x);
}

}  // namespace

TEST_CASE("Serre relators have m + 1 terms and vanish") {
  for (const char* t : {"A2", "B2", "G2"}) {
    auto d = build_cartan(t);
    Algebra alg(d, 8);
    for (int i = 0; i < 2; ++i) {
      int j = 1 - i;
      FreeElt r = serre_relator(d, i, j);
      CHECK(r.terms.size() == static_cast<std::size_t>(2 - d.a(i, j)));
      CHECK(QuotElt::from_free(alg, r).is_zero());
    }
  }
}

TEST_CASE("normal forms") {
  auto aa = build_cartan("A1xA1");
  Algebra alg(aa);
  CHECK(word(alg, {0, 1}) == word(alg, {1, 0}));

  auto a2 = build_cartan("A2");
  Algebra a(a2);
  CHECK(weight_dim(a2, {2, 1}) == 2);
  CHECK(serre_consistency(a, {2, 1}).gram_rank == 2);
  CHECK(word(a, {0, 1}) != word(a, {1, 0}));
  CHECK_THROWS_AS(a.space({13, 0}), ResourceLimit);
}

TEST_CASE("bar involution") {
  auto a2 = build_cartan("A2");
  Algebra alg(a2);
  CHECK(word(alg, {0, 1}).bar() == word(alg, {0, 1}));
  CHECK((LaurentPoly::q() * QuotElt::generator(alg, 0)).bar() == LaurentPoly::q(-1) * QuotElt::generator(alg, 0));
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    QuotElt x = random_elt(alg, {2, 1}, rng);
    CHECK(x.bar().bar() == x);
  }
}

TEST_CASE("star anti-involution") {
  auto b2 = build_cartan("B2");
  Algebra alg(b2);
  CHECK(word(alg, {0, 1}).star() == word(alg, {1, 0}));
  for (int n = 1; n <= 3; ++n) CHECK(QuotElt::divided_power(alg, 1, n).star() == QuotElt::divided_power(alg, 1, n));
  std::mt19937 rng(5);
  for (int t = 0; t < 8; ++t) {
    QuotElt x = random_elt(alg, {1, 1}, rng), y = random_elt(alg, {1, 2}, rng);
    CHECK((x * y).star() == y.star() * x.star());
  }
}

TEST_CASE("diagram automorphism on U^-") {
  auto a3 = build_cartan("A3");
  Algebra alg(a3);
  auto s = make_automorphism(a3, {{"1", "1'"}, {"1'", "1"}});
  CHECK(word(alg, {0, 1}).sigma(s) == word(alg, {2, 1}));
  CHECK(word(alg, {0, 2}) == word(alg, {2, 0}));
  CHECK(word(alg, {0, 2}).sigma(s) == word(alg, {0, 2}));
  std::mt19937 rng(9);
  for (int t = 0; t < 6; ++t) {
    QuotElt x = random_elt(alg, {1, 1, 1}, rng);
    CHECK(x.sigma(s).sigma(s) == x);
  }
}

TEST_CASE("bilinear form") {
  auto a2 = build_cartan("A2");
  Algebra alg(a2);
  CHECK(bilinear_form(QuotElt::generator(alg, 0), QuotElt::generator(alg, 1)).is_zero());
  CHECK(bilinear_form(QuotElt::one(alg), QuotElt::one(alg)) == RatFunc(1));
  for (const char* t : {"A2", "B2", "G2"}) {
    Algebra b(build_cartan(t));
    for (int i = 0; i < 2; ++i)
      for (int n = 1; n <= 4; ++n) {
        QuotElt x = QuotElt::divided_power(b, i, n);
        CHECK(in_one_plus_qA0(bilinear_form(x, x)));
      }
  }
  // (f_i, f_i) = 1 / (1 - q_i^2)
  Algebra b(build_cartan("B2"));
  LaurentPoly one(1);
  CHECK(bilinear_form(QuotElt::generator(b, 0), QuotElt::generator(b, 0)) == RatFunc(one, one - LaurentPoly::q(4)));
}

TEST_CASE("Kostant partition counts") {
  CHECK(weight_dim(build_cartan("A2"), {0, 0}) == 1);
  CHECK(weight_dim(build_cartan("A2"), {1, 1}) == 2);
  CHECK(weight_dim(build_cartan("B2"), {1, 2}) == 3);
}

TEST_CASE("Serre consistency certificate on small weights") {
  for (const char* t : {"A2", "B2", "A3"}) {
    Algebra alg(build_cartan(t), 4);
    for (const auto& g : weights_up_to_height(alg.datum(), 4)) CHECK(serre_consistency(alg, g).ok());
  }
}

TEST_CASE("word budget") {
  CHECK_THROWS_AS(Algebra(build_cartan("D4"), 16), ResourceLimit);
  CHECK_NOTHROW(Algebra(build_cartan("D4"), 12));
}
