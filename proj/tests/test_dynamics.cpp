#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "sclera/dynamics.hpp"
#include "support.hpp"

using namespace sclera;

namespace {

const NetworkParams kStock;  // unit rates, th=(0.4,0.5,0.6,0.7), h=0.01

HybridState state(std::array<double, 3> x, std::array<bool, 4> q) { return HybridState(x, q); }

}  // namespace

TEST_CASE("mode targets at unit rates") {
  const auto m = mode_target({true, true, false, true}, kStock);
  CHECK(m.input == std::array<double, 3>{1.0, 1.0, 1.0});
  CHECK(m.flow[0].target == 1.0);
  CHECK(m.flow[1].target == 1.0);
  CHECK(m.flow[2].target == 1.0);
}

TEST_CASE("latch 3 on zeroes both expression targets") {
  for (bool q1 : {false, true})
    for (bool q2 : {false, true})
      for (bool q4 : {false, true}) {
        const auto m = mode_target({q1, q2, true, q4}, kStock);
        CHECK(m.flow[1].target == 0.0);
        CHECK(m.flow[2].target == 0.0);
      }
}

TEST_CASE("mode targets with asymmetric growth rates") {
  NetworkParams p = kStock;
  p.growth = {0.55, 1.0, 0.9};
  const auto m = mode_target({true, true, false, true}, p);
  CHECK(m.flow[0].target == 0.55);
  CHECK(m.flow[1].target == 1.0);
  CHECK(m.flow[2].target == 0.9);
}

TEST_CASE("flow map worked examples") {
  const auto v1 = flow_map(state({0.15, 0.45, 0.8}, {true, true, false, true}), kStock);
  CHECK(v1[0] == doctest::Approx(0.85));
  CHECK(v1[1] == doctest::Approx(0.55));
  CHECK(v1[2] == doctest::Approx(0.20));

  const auto v2 = flow_map(state({0.0, 0.0, 0.0}, {false, false, false, false}), kStock);
  CHECK(v2 == std::array<double, 3>{0.0, 0.0, 0.0});

  const auto v3 = flow_map(state({1.0, 1.0, 1.0}, {true, true, true, true}), kStock);
  CHECK(v3[0] == doctest::Approx(0.0));
  CHECK(v3[1] == doctest::Approx(-1.0));
  CHECK(v3[2] == doctest::Approx(-1.0));
}

TEST_CASE("flow map agrees with the relaxation form on random states") {
  std::mt19937_64 rng(101);
  for (int n = 0; n < 1000; ++n) {
    const auto d = test::random_draw(rng);
    const auto v = flow_map(d.z0, d.p);
    const auto m = mode_target(d.z0.q, d.p);
    for (int i = 0; i < 3; ++i) {
      const double expected = m.flow[i].rate * (m.flow[i].target - d.z0.x[i]);
      CHECK(v[i] == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("watched coordinates") {
  CHECK(watched_coordinate(1) == 0);
  CHECK(watched_coordinate(2) == 1);
  CHECK(watched_coordinate(3) == 0);
  CHECK(watched_coordinate(4) == 2);
  CHECK_THROWS_AS(watched_coordinate(0), std::invalid_argument);
  CHECK_THROWS_AS(watched_coordinate(5), std::invalid_argument);
}

TEST_CASE("membership includes the band edge") {
  // latch on, watched exactly at the lower edge th1 - h1
  const double edge = kStock.threshold[0] - kStock.hysteresis[0];
  const auto active = jump_set_membership(state({edge, 0.45, 0.5}, {true, false, false, false}),
                                          kStock);
  CHECK(active == std::vector<int>{1});
  // a hair above the edge is safe
  const auto none = jump_set_membership(
      state({std::nextafter(edge, 1.0), 0.45, 0.5}, {true, false, false, false}), kStock);
  CHECK(none.empty());
}

TEST_CASE("membership of the stock start state") {
  // x1 = 0.15 <= 0.39 triggers family 1; x2 = 0.45 <= 0.49 triggers family 2.
  const auto active =
      jump_set_membership(state({0.15, 0.45, 0.8}, {true, true, false, true}), kStock);
  CHECK(active == std::vector<int>{1, 2});
}

TEST_CASE("membership with all latches off at upper edges") {
  const HybridState z = state({kStock.threshold[0] + kStock.hysteresis[0],
                               kStock.threshold[1] + kStock.hysteresis[1],
                               kStock.threshold[3] + kStock.hysteresis[3]},
                              {false, false, false, false});
  CHECK(jump_set_membership(z, kStock) == std::vector<int>{1, 2, 4});
}

TEST_CASE("jump map produces one successor per active family") {
  const HybridState z = state({0.15, 0.45, 0.8}, {true, true, false, true});

  const auto one = jump_map(z, {1});
  REQUIRE(one.size() == 1);
  CHECK(one[0].q == std::array<bool, 4>{false, true, false, true});
  CHECK(one[0].x == z.x);

  const auto two = jump_map(z, {1, 2});
  REQUIRE(two.size() == 2);
  CHECK(two[0].q == std::array<bool, 4>{false, true, false, true});
  CHECK(two[1].q == std::array<bool, 4>{true, false, false, true});
  for (const auto& s : two) CHECK(s.x == z.x);

  const auto all = jump_map(z, {1, 2, 3, 4});
  REQUIRE(all.size() == 4);
  for (int i = 0; i < 4; ++i) {
    int flipped = 0;
    for (int b = 0; b < 4; ++b)
      if (all[i].q[b] != z.q[b]) ++flipped;
    CHECK(flipped == 1);
    CHECK(all[i].q[i] != z.q[i]);
  }

  CHECK_THROWS_AS(jump_map(z, {}), std::invalid_argument);
}

TEST_CASE("latch flips are involutions and preserve x") {
  std::mt19937_64 rng(202);
  for (int n = 0; n < 1000; ++n) {
    const auto d = test::random_draw(rng);
    for (int family = 1; family <= 4; ++family) {
      const HybridState once = apply_flip(d.z0, family);
      CHECK(once.x == d.z0.x);
      CHECK(apply_flip(once, family) == d.z0);
    }
  }
}

TEST_CASE("hysteresis branch exclusivity") {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int n = 0; n < 1000; ++n) {
    const auto d = test::random_draw(rng);
    for (int family = 1; family <= 4; ++family) {
      const int i = family - 1;
      const double xw = u(rng);
      const bool on_branch = xw <= d.p.threshold[i] - d.p.hysteresis[i];
      const bool off_branch = xw >= d.p.threshold[i] + d.p.hysteresis[i];
      CHECK_FALSE((on_branch && off_branch));  // h > 0 in these draws
    }
  }
  // With h = 0 the two branch conditions touch only at the threshold itself.
  NetworkParams p;
  p.hysteresis = {0.0, 0.0, 0.0, 0.0};
  const double th = p.threshold[0];
  CHECK(((th <= th) && (th >= th)));
  CHECK_FALSE((th - 1e-12 >= th));
  CHECK_FALSE((th + 1e-12 <= th));
}

TEST_CASE("a flip leaves its own switching set when h > 0") {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n < 1000; ++n) {
    auto d = test::random_draw(rng);
    for (int family = 1; family <= 4; ++family) {
      const int i = family - 1;
      const int w = watched_coordinate(family);
      // Place the watched coordinate somewhere inside the membership region.
      HybridState z = d.z0;
      const double edge = active_edge(family, z.q[i], d.p);
      z.x[w] = z.q[i] ? edge * u(rng) : edge + 2.0 * u(rng);
      auto has = [&](const HybridState& s) {
        const auto active = jump_set_membership(s, d.p);
        return std::find(active.begin(), active.end(), family) != active.end();
      };
      REQUIRE(has(z));
      CHECK_FALSE(has(apply_flip(z, family)));
    }
  }
}

TEST_CASE("jump selection policies") {
  const HybridState z = state({0.15, 0.45, 0.8}, {true, true, false, true});

  JumpSelector lowest(JumpPolicy::LowestIndex, 0);
  CHECK(lowest.pick({1, 2}) == 1);
  CHECK(lowest.pick({3}) == 3);

  JumpSelector seeded_a(JumpPolicy::SeededRandom, 7);
  JumpSelector seeded_b(JumpPolicy::SeededRandom, 7);
  for (int n = 0; n < 32; ++n) {
    const int a = seeded_a.pick({1, 2, 3, 4});
    const int b = seeded_b.pick({1, 2, 3, 4});
    CHECK(a == b);
    CHECK((a >= 1 && a <= 4));
  }
  JumpSelector singleton(JumpPolicy::SeededRandom, 99);
  CHECK(singleton.pick({3}) == 3);

  JumpSelector sel(JumpPolicy::LowestIndex, 0);
  const HybridState next = resolve_jump(z, {1, 2}, sel);
  CHECK(next.q == std::array<bool, 4>{false, true, false, true});
  CHECK_THROWS_AS(sel.pick({}), std::invalid_argument);
}
