#include "doctest.h"

#include "rankone/alcove.hpp"
#include "test_support.hpp"

using namespace rankone;

namespace {

RationalVector ints(std::initializer_list<long> values) {
  RationalVector out;
  for (long v : values) out.push_back(make_rational(v));
  return out;
}

// Random point of the closed alcove whose zero set is exactly `zeros`.
AlcovePoint random_point(std::mt19937& rng, const RootSystem& sys, NodeSet zeros) {
  std::uniform_int_distribution<int> value(1, 7);
  RationalVector v(sys.size());
  Rational total = 0;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    v[i] = zeros.contains(int(i)) ? 0 : value(rng);
    if (sys.affine()) total += sys.comarks()[i] * v[i];
  }
  if (sys.affine())
    for (auto& x : v) x /= total;
  return {v};
}

}  // namespace

TEST_CASE("translate along the highest root direction in A_n affine") {
  for (int n = 2; n <= 6; ++n) {
    auto sys = build_affine('A', n);
    RationalVector x = zeros(n + 1), w = zeros(n + 1), expected = zeros(n + 1);
    x[0] = 1;
    for (int i = 1; i <= n; ++i) w[i] = 1;
    expected[1] = expected[n] = make_rational(1, 2);
    auto moved = translate(sys, {x}, make_rational(1, 2), w);
    CHECK(moved == expected);
    NodeSet s = sys.all_nodes();
    s.erase(1);
    s.erase(n);
    CHECK(zero_set(moved) == s);
    CHECK(translate(sys, {x}, 0, w) == x);
    CHECK(translate(sys, {x}, make_rational(5, 3), sys.delta()) == x);
  }
  CHECK(zero_set(ints({1, 0, 0, 0})) == NodeSet::of({1, 2, 3}));
  CHECK(zero_set(ints({1, 2, 3})).empty());
}

TEST_CASE("face_solve: A_n affine from the vertex X1 = (1,0,...,0)") {
  for (int n = 2; n <= 6; ++n) {
    auto sys = build_affine('A', n);
    RationalVector w = zeros(n + 1);
    for (int i = 1; i <= n; ++i) w[i] = 1;
    NodeSet s1 = sys.all_nodes();
    s1.erase(0);
    DirectionSpec dir{sys.profile(w), {}, {}};
    for (NodeSet s2 : {NodeSet::single(0), sys.all_nodes().minus(NodeSet::of({1, n}))}) {
      auto r = face_solve(sys, s1, s2, dir);
      REQUIRE(r.status == FaceStatus::solved);
      CHECK(r.solution->c == make_rational(1, 2));
      CHECK(r.solution->x1.values[0] == 1);
      CHECK(zero_set(r.solution->x2) == sys.all_nodes().minus(NodeSet::of({1, n})));
    }
    // alpha_1 is pushed away from zero: it can never vanish at X2.
    CHECK(face_solve(sys, s1, NodeSet::of({0, 1}), dir).status != FaceStatus::solved);
  }
}

TEST_CASE("face_solve: finite A3 between the alpha2 wall and the alpha1, alpha3 edge") {
  auto sys = build_finite('A', 3);
  RationalVector w{make_rational(-1, 2), 0, make_rational(-1, 2)};
  auto r = face_solve(sys, NodeSet::of({1}), NodeSet::of({0, 2}), {sys.profile(w), {}, {}});
  REQUIRE(r.status == FaceStatus::solved);
  CHECK(r.solution->x1.values == ints({1, 0, 1}));
  CHECK(zero_set(r.solution->x2) == NodeSet::of({0, 2}));
  auto back = face_solve(sys, NodeSet::of({0, 2}), NodeSet::of({1}), {sys.profile(-w), {}, {}});
  REQUIRE(back.status == FaceStatus::solved);
  CHECK(back.solution->x2.values == ints({1, 0, 1}));
}

TEST_CASE("face_solve reports families and free pairings") {
  auto sys = build_affine('A', 3);
  // Nothing pins the point: a family.
  RationalVector p{make_rational(-1), make_rational(1), 0, 0};
  CHECK(face_solve(sys, NodeSet::single(1), NodeSet::single(0), {p, {}, {}}).status == FaceStatus::family);
  // Free pairings are resolved and the result is a gradient.
  RationalVector q{0, make_rational(1), 0, 0};
  auto r = face_solve(sys, NodeSet::of({1, 2, 3}), NodeSet::of({0, 2}), {q, NodeSet::of({0, 2, 3}), {{3, 0}}});
  REQUIRE(r.status == FaceStatus::solved);
  Rational sum = 0;
  for (const auto& v : r.solution->profile) sum += v;
  CHECK(sum == 0);
  CHECK(r.solution->profile[3] == 0);
  CHECK(weight_from_profile(sys, r.solution->profile).has_value());
}

TEST_CASE("translate preserves the normalization") {
  std::mt19937 rng(testing_support::kSeed + 2);
  const auto selectors = testing_support::affine_selectors();
  for (int k = 0; k < testing_support::kCases; ++k) {
    auto sys = build_system(parse_selector(testing_support::pick(rng, selectors)));
    auto x = random_point(rng, sys, NodeSet(std::uniform_int_distribution<std::uint32_t>(0, sys.all_nodes().bits() - 1)(rng)));
    auto moved = translate(sys, x, testing_support::random_rational(rng), testing_support::random_vector(rng, sys.size()));
    Rational total = 0;
    for (std::size_t i = 0; i < sys.size(); ++i) total += sys.comarks()[i] * moved[i];
    CHECK(total == 1);
  }
}

TEST_CASE("wall crossing along a ray") {
  std::mt19937 rng(testing_support::kSeed + 3);
  auto selectors = testing_support::affine_selectors(6);
  for (auto s : testing_support::finite_selectors(6)) selectors.push_back(s);
  for (int k = 0; k < testing_support::kCases; ++k) {
    auto sys = build_system(parse_selector(testing_support::pick(rng, selectors)));
    const std::uint32_t limit = sys.all_nodes().bits() - (sys.affine() ? 1 : 0);
    NodeSet z(std::uniform_int_distribution<std::uint32_t>(0, limit)(rng));
    auto x = random_point(rng, sys, z);
    RationalVector w = testing_support::random_vector(rng, sys.size());
    // Occasionally steer the step onto a wall.
    Rational c = make_rational(std::uniform_int_distribution<int>(1, 9)(rng), 4);
    auto prof = sys.profile(w);
    if (k % 3 == 0) {
      for (std::size_t i = 0; i < sys.size(); ++i)
        if (!z.contains(int(i)) && prof[i] != 0) {
          c = -x.values[i] / prof[i];
          break;
        }
      if (c <= 0) c = 1;
    }
    auto moved = translate(sys, x, c, w);
    for (std::size_t i = 0; i < sys.size(); ++i) {
      const bool now_zero = moved[i] == 0;
      if (z.contains(int(i)))
        CHECK(now_zero == (prof[i] == 0));
      else if (prof[i] == 0)
        CHECK_FALSE(now_zero);
      else
        CHECK(now_zero == (c == -x.values[i] / prof[i]));
    }
  }
}

TEST_CASE("face_solve solutions vanish on the target face") {
  std::mt19937 rng(testing_support::kSeed + 4);
  const auto selectors = testing_support::affine_selectors(6);
  int solved = 0;
  for (int k = 0; k < testing_support::kCases; ++k) {
    auto sys = build_system(parse_selector(testing_support::pick(rng, selectors)));
    auto bits = std::uniform_int_distribution<std::uint32_t>(0, sys.all_nodes().bits());
    NodeSet s1(bits(rng)), s2(bits(rng)), free(bits(rng));
    DirectionSpec dir{testing_support::random_vector(rng, sys.size()), free.minus(s1), {}};
    auto r = face_solve(sys, s1, s2, dir);
    if (r.status != FaceStatus::solved) continue;
    ++solved;
    const auto& sol = *r.solution;
    CHECK(sol.c > 0);
    CHECK(s1.subset_of(zero_set(sol.x1)));
    CHECK(s2.subset_of(zero_set(sol.x2)));
    CHECK(translate_by_profile(sol.x1, sol.c, sol.profile) == sol.x2.values);
    CHECK(weight_from_profile(sys, sol.profile).has_value());
  }
  CHECK(solved >= 10);  // enough solved instances to exercise the checks
}
