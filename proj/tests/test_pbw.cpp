#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcanon/pbw.hpp"

using namespace qcanon;

TEST_CASE("braid operators move weights") {
  auto a2 = build_cartan("A2");
  Algebra alg(a2);
  CHECK(braid_apply(0, QuotElt::generator(alg, 1)).weight() == Weight{1, 1});

  auto b2 = build_cartan("B2");
  Algebra b(b2);
  CHECK(braid_apply(0, QuotElt::generator(b, 1)).weight() == Weight{1, 1});

  auto aa = build_cartan("A1xA1");
  Algebra c(aa);
  CHECK(braid_apply(0, QuotElt::generator(c, 1)) == QuotElt::generator(c, 1));
}

TEST_CASE("root vectors and monomials") {
  auto b2 = build_cartan("B2");
  Algebra alg(b2, 10);
  PBWBasis h(alg, ReducedWord(b2, {0, 1, 0, 1}));
  CHECK(h.root_vector(0, 1) == QuotElt::generator(alg, 0));
  for (int k = 0; k < 4; ++k)
    for (int n = 1; n <= 2; ++n) CHECK(h.root_vector(k, n).weight() == scale(n, h.word().roots()[k]));

  CHECK(h.monomial({0, 0, 0, 0}) == QuotElt::one(alg));
  CHECK(h.monomial({3, 0, 0, 0}) == QuotElt::divided_power(alg, 0, 3));
  QuotElt x = h.root_vector(0, 1) * h.root_vector(1, 2) * h.root_vector(3, 1);
  CHECK(h.monomial({1, 2, 0, 1}) == x);
  CHECK(h.weight_of({1, 2, 0, 1}) == Weight{3, 3});
}

TEST_CASE("expansion in a PBW basis") {
  auto a2 = build_cartan("A2");
  Algebra alg(a2);
  PBWBasis h(alg, ReducedWord(a2, {0, 1, 0}));
  for (const auto& c : h.labels({2, 2})) {
    auto e = h.expand(h.monomial(c));
    CHECK(e.size() == 1);
    CHECK(e.begin()->first == c);
    CHECK(e.begin()->second == LaurentPoly(1));
  }
  // f1 f2 is itself L((1,0,1)); the reversed product needs both labels
  CHECK(h.expand(QuotElt::generator(alg, 0) * QuotElt::generator(alg, 1)).size() == 1);
  auto e = h.expand(QuotElt::generator(alg, 1) * QuotElt::generator(alg, 0));
  CHECK(e.size() == 2);
  CHECK(e.count({1, 0, 1}) == 1);
  CHECK(e.count({0, 1, 0}) == 1);
  CHECK(h.labels({1, 1}) == std::vector<PBWIndex>{{0, 1, 0}, {1, 0, 1}});
}

TEST_CASE("f_2 L(c, h) for B2 at small labels") {
  auto b2 = build_cartan("B2");
  Algebra alg(b2, 8);
  PBWBasis h(alg, ReducedWord(b2, {0, 1, 0, 1}));
  QuotElt f2 = QuotElt::generator(alg, 1);
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int c = 0; c <= 1; ++c)
        for (int d = 0; d <= 1; ++d) {
          std::map<PBWIndex, LaurentPoly> want;
          if (a >= 1) want[{a - 1, b + 1, c, d}] = quantum_integer(b + 1);
          if (b >= 1)
            want[{a, b - 1, c + 1, d}] = LaurentPoly::q(2 * a - b + 1) * quantum_integer(2) * quantum_integer(c + 1, 2);
          want[{a, b, c, d + 1}] = LaurentPoly::q(2 * a - 2 * c) * quantum_integer(d + 1);
          CHECK(h.expand(f2 * h.monomial({a, b, c, d})) == want);
        }
}

TEST_CASE("PBW monomials are orthogonal with norms in 1 + qA_0") {
  auto g2 = build_cartan("G2");
  Algebra alg(g2, 5);
  PBWBasis h(alg, ReducedWord(g2, enumerate_reduced_words(g2).front()));
  for (const auto& g : weights_up_to_height(g2, 4)) {
    auto labels = h.labels(g);
    for (std::size_t x = 0; x < labels.size(); ++x)
      for (std::size_t y = 0; y < labels.size(); ++y) {
        RatFunc f = bilinear_form(h.monomial(labels[x]), h.monomial(labels[y]));
        if (x == y)
          CHECK(in_one_plus_qA0(f));
        else
          CHECK(f.is_zero());
      }
  }
}

TEST_CASE("transition matrices") {
  auto a2 = build_cartan("A2");
  Algebra alg(a2);
  PBWBasis h(alg, ReducedWord(a2, {0, 1, 0})), hp(alg, ReducedWord(a2, {1, 0, 1}));

  Transition self = transition_between_words(h, h, {2, 1});
  for (std::size_t r = 0; r < self.m.size(); ++r)
    for (std::size_t c = 0; c < self.m.size(); ++c) CHECK(self.m[r][c] == LaurentPoly(r == c ? 1 : 0));

  Transition zero = transition_between_words(h, hp, {0, 0});
  CHECK(zero.m.size() == 1);
  CHECK(zero.m[0][0] == LaurentPoly(1));

  Transition t = transition_between_words(h, hp, {1, 1});
  Transition back = transition_between_words(hp, h, {1, 1});
  CHECK(t.m.size() == 2);
  CHECK(in_Zq(t));
  CHECK(is_permutation_mod_q(t));
  CHECK(is_inverse_pair(t, back));
}

TEST_CASE("star-reversed root vectors agree with braid ones for B2") {
  auto b2 = build_cartan("B2");
  Algebra alg(b2);
  PBWBasis braid(alg, ReducedWord(b2, {1, 0, 1, 0}));
  PBWBasis star(alg, ReducedWord(b2, {1, 0, 1, 0}), RootMode::StarReversed);
  for (int k = 0; k < 4; ++k) CHECK(braid.root_vector(k, 1) == star.root_vector(k, 1));
}
