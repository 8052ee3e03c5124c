#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcanon/tropical.hpp"

using namespace qcanon;

TEST_CASE("A2 map") {
  CHECK(phi_a2({0, 0, 0}) == Trop3{0, 0, 0});
  CHECK(phi_a2({1, 1, 1}) == Trop3{1, 1, 1});
  CHECK(phi_a2({2, 1, 0}) == Trop3{1, 0, 3});
  for (long x = 0; x <= 4; ++x)
    for (long y = 0; y <= 4; ++y)
      for (long z = 0; z <= 4; ++z) CHECK(phi_a2(phi_a2({x, y, z})) == Trop3{x, y, z});
}

TEST_CASE("B2 maps") {
  CHECK(phi_b2({0, 0, 0, 0}) == Trop4{0, 0, 0, 0});
  CHECK(phi_b2({1, 0, 0, 0}) == Trop4{0, 0, 0, 1});
  CHECK(phi_b2({1, 1, 1, 1}) == Trop4{1, 1, 1, 1});
  CHECK(phi_b2_inv({0, 0, 0, 0}) == Trop4{0, 0, 0, 0});
  CHECK(phi_b2_inv({0, 0, 0, 1}) == Trop4{1, 0, 0, 0});
  CHECK(phi_b2_inv({1, 0, 0, 1}) == Trop4{0, 1, 0, 0});
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b)
      for (long c = 0; c <= 3; ++c)
        for (long d = 0; d <= 3; ++d) {
          Trop4 x{a, b, c, d};
          CHECK(phi_b2_inv(phi_b2(x)) == x);
          for (long v : phi_b2(x)) CHECK(v >= 0);
        }
}

TEST_CASE("A2 shift") {
  CHECK(a2_shift({0, 0, 0}) == Trop3{0, 0, 1});
  CHECK(a2_shift({1, 0, 0}) == Trop3{0, 1, 0});
  CHECK(a2_shift({1, 1, 1}) == Trop3{1, 1, 2});
}

TEST_CASE("h-side case split") {
  auto r = b2_shift_cases({1, 0, 0, 0});
  CHECK(r.which == 1);
  CHECK(r.value == Trop4{0, 1, 0, 0});
  r = b2_shift_cases({0, 1, 1, 1});
  CHECK(r.which == 3);
  CHECK(r.value == Trop4{0, 1, 1, 2});
  r = b2_shift_cases({0, 0, 0, 0});
  CHECK(r.which == 3);
  CHECK(r.value == Trop4{0, 0, 0, 1});
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= 4; ++b)
      for (long c = 0; c <= 4; ++c)
        for (long d = 0; d <= 4; ++d) {
          auto k = b2_shift_cases({a, b, c, d});
          CHECK(k.fired == 1);
          CHECK(k.value == bullet_ops({a, b, c, d}, Side::H));
        }
  // the other printed form of the second guard disagrees somewhere
  bool differs = false;
  for (long a = 0; a <= 4 && !differs; ++a)
    for (long b = 0; b <= 4 && !differs; ++b)
      for (long c = 0; c <= 4 && !differs; ++c)
        for (long d = 0; d <= 4 && !differs; ++d)
          differs = b2_shift_cases({a, b, c, d}, ShiftGuard::Product).value != bullet_ops({a, b, c, d}, Side::H);
  CHECK(differs);
}

TEST_CASE("h'-side case split") {
  auto r = b2_inverse_shift_cases({0, 0, 0, 0});
  CHECK(r.which == 4);
  CHECK(r.value == Trop4{0, 0, 0, 1});
  CHECK(b2_inverse_shift_cases({2, 0, 0, 0}).value == phi_b2(inc(phi_b2_inv({2, 0, 0, 0}))));
  CHECK(b2_inverse_shift_cases({1, 1, 1, 1}).value == phi_b2(inc(phi_b2_inv({1, 1, 1, 1}))));
  r = b2_inverse_shift_cases({0, 1, 0, 0});
  CHECK(r.which == 3);
  CHECK(r.value == Trop4{0, 0, 2, 0});
}

TEST_CASE("bullet operations") {
  CHECK(bullet_ops({1, 0, 0, 0}, Side::H) == Trop4{0, 1, 0, 0});
  CHECK(bullet_ops({0, 0, 0, 0}, Side::HPrime) == Trop4{0, 0, 0, 1});
  for (long a = 0; a <= 3; ++a)
    for (long d = 0; d <= 3; ++d) {
      Trop4 c{a, 1, 2, d};
      CHECK(phi_b2(bullet_ops(c, Side::H)) == inc(phi_b2(c)));
      CHECK(phi_b2_inv(bullet_ops(c, Side::HPrime)) == inc(phi_b2_inv(c)));
    }
}

TEST_CASE("braid-move chains") {
  auto a2 = build_cartan("A2");
  for (long x = 0; x <= 3; ++x)
    for (long y = 0; y <= 3; ++y)
      for (long z = 0; z <= 3; ++z) {
        auto out = pl_chain(a2, {0, 1, 0}, {1, 0, 1}, {x, y, z});
        Trop3 want = phi_a2({x, y, z});
        CHECK(out == std::vector<long>(want.begin(), want.end()));
        CHECK(pl_chain(a2, {0, 1, 0}, {0, 1, 0}, {x, y, z}) == std::vector<long>{x, y, z});
      }

  auto a3 = build_cartan("A3");
  const Word h{0, 2, 1, 2, 0, 1}, hp{1, 0, 2, 1, 2, 0};
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= 2; ++b)
      for (long c = 0; c <= 2; ++c)
        for (long d = 0; d <= 2; ++d) {
          Trop4 y = phi_b2({a, b, c, d});
          CHECK(pl_chain(a3, h, hp, {a, a, b, c, c, d}) == std::vector<long>{y[0], y[1], y[1], y[2], y[3], y[3]});
        }

  CHECK_THROWS_AS(pl_chain(build_cartan("B2"), {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 0, 0, 0}), CartanError);
}
