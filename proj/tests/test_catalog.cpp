#include "doctest.h"

#include "rankone/alcove.hpp"
#include "rankone/catalog.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <set>

using namespace rankone;

namespace {

RationalVector vec(std::initializer_list<Rational> values) { return RationalVector(values); }

std::set<RationalVector> weights(const std::vector<LocalModel>& models) {
  std::set<RationalVector> out;
  for (const auto& m : models) out.insert(m.weight);
  return out;
}

}  // namespace

TEST_CASE("sp_set") {
  for (int n = 2; n <= 6; ++n) {
    auto sys = build_affine('A', n);
    RationalVector w = zeros(n + 1);
    for (int i = 1; i <= n; ++i) w[i] = 1;
    NodeSet s1 = sys.all_nodes();
    s1.erase(0);
    CHECK(sp_set(sys, w, s1) == s1.minus(NodeSet::of({1, n})));
    CHECK(sp_set(sys, zeros(n + 1), s1) == s1);
  }
  auto a3 = build_finite('A', 3);
  CHECK(sp_set(a3, vec({make_rational(1, 2), 0, make_rational(1, 2)}), NodeSet::of({0, 2})).empty());
}

TEST_CASE("homogeneous models on small supports") {
  auto a3 = build_finite('A', 3);
  auto single = homogeneous_models(a3, NodeSet::of({1}));
  CHECK(weights(single) == std::set<RationalVector>{vec({0, 1, 0}), vec({0, 2, 0})});

  auto pair = homogeneous_models(a3, NodeSet::of({0, 2}));
  CHECK(pair.size() == 6);
  CHECK(weights(pair).count(vec({1, 0, 1})) == 1);
  CHECK(weights(pair).count(vec({make_rational(1, 2), 0, make_rational(1, 2)})) == 1);

  auto g2 = build_finite('G', 2);
  auto gm = homogeneous_models(g2, g2.all_nodes());
  CHECK(gm.size() == 6);
  CHECK(weights(gm).count(vec({2, 1})) == 1);
  CHECK(weights(gm).count(vec({4, 2})) == 1);

  // Whole A3: 6 single-node, 2 A2 chains, 1 A3 chain, 2 middle-2, 2 orthogonal pair models.
  CHECK(homogeneous_models(a3, a3.all_nodes()).size() == 13);

  auto f4 = build_finite('F', 4);
  auto fm = homogeneous_models(f4, f4.all_nodes());
  CHECK(weights(fm).count(vec({1, 2, 3, 2})) == 1);
  CHECK(weights(fm).count(vec({0, make_rational(1, 2), 1, make_rational(3, 2)})) == 0);  // support is C3, not B3
  CHECK(weights(fm).count(vec({0, 1, 2, 1})) == 1);  // C3 pattern on {2, 3, 4}
  auto b3 = build_finite('B', 3);
  CHECK(weights(homogeneous_models(b3, b3.all_nodes())).count(vec({make_rational(1, 2), 1, make_rational(3, 2)})) == 1);
}

TEST_CASE("triple labels") {
  auto a5 = build_finite('A', 5);
  for (const auto& m : homogeneous_models(a5, a5.all_nodes())) {
    if (m.pattern == "A3") CHECK(m.triple == "(sl(4), gl(3), 0)");
    if (m.pattern == "D3") CHECK(m.triple == "(sl(4), sp(4), 0)");
    if (m.pattern == "D2") CHECK(m.triple == "(sl(2)+sl(2), diag sl(2), 0)");
  }
  auto inh = inhomogeneous_models(a5, NodeSet::of({0, 1, 2}));
  REQUIRE(inh.size() == 2);
  CHECK(inh[0].triple == "(t1+sl(4), t1+sl(4), C^4)");
}

TEST_CASE("inhomogeneous models") {
  auto a6 = build_finite('A', 6);
  CHECK(inhomogeneous_models(a6, NodeSet::of({1, 2, 3})).size() == 2);
  CHECK(inhomogeneous_models(a6, NodeSet::of({1, 2, 4, 5})).size() == 4);
  CHECK(inhomogeneous_models(a6, NodeSet::of({3})).size() == 1);
  auto c4 = build_finite('C', 4);
  auto cm = inhomogeneous_models(c4, c4.all_nodes());
  REQUIRE(cm.size() == 1);
  CHECK(cm[0].distinguished == 0);
  auto b2 = build_finite('B', 2);
  auto bm = inhomogeneous_models(b2, b2.all_nodes());
  REQUIRE(bm.size() == 1);
  CHECK(bm[0].distinguished == 1);
  CHECK(bm[0].triple == "(t1+sp(4), t1+sp(4), C^4)");
  for (auto t : {"D5", "E6", "F4", "G2", "B3"}) {
    auto sys = build_system(parse_selector(t));
    CHECK(inhomogeneous_models(sys, sys.all_nodes()).empty());
  }
}

TEST_CASE("match_sharp examples") {
  for (int n = 2; n <= 6; ++n) {
    auto sys = build_affine('A', n);
    RationalVector w = zeros(n + 1);
    for (int i = 1; i <= n; ++i) w[i] = 1;
    auto m = match_sharp(sys, w, sys.all_nodes().minus(NodeSet::of({1, n})));
    REQUIRE(m);
    CHECK(m->t == 1);
    RationalVector expected = zeros(n + 1);
    expected[0] = 1;
    CHECK(m->model.weight == expected);
    CHECK(m->model.pattern == "A1");
  }
  auto a1 = build_affine('A', 1);
  auto m = match_sharp(a1, vec({0, 2}), NodeSet::single(0));
  REQUIRE(m);
  CHECK(m->t == 2);
  CHECK(m->model.weight == vec({2, 0}));

  auto a3 = build_affine('A', 3);
  const Rational h = make_rational(1, 2);
  m = match_sharp(a3, vec({0, h, 1, h}), NodeSet::of({0, 1, 3}));
  REQUIRE(m);
  CHECK(m->model.weight == vec({1, h, 0, h}));
  CHECK(m->model.pattern == "D3");
  CHECK_FALSE(match_sharp(build_finite('A', 3), vec({1, 1, 1}), NodeSet::of({1})));
}

TEST_CASE("catalog properties") {
  std::mt19937 rng(testing_support::kSeed + 5);
  const auto selectors = testing_support::affine_selectors(6);
  for (int k = 0; k < testing_support::kCases; ++k) {
    auto sys = build_system(parse_selector(testing_support::pick(rng, selectors)));
    const auto bits = sys.all_nodes().bits();
    NodeSet local(std::uniform_int_distribution<std::uint32_t>(0, bits - 1)(rng));
    auto models = homogeneous_models(sys, local);
    // Support and pairing signature: the pattern's own Cartan data reproduces the profile on its support.
    for (const auto& m : models) {
      REQUIRE(m.support.subset_of(local));
      auto finite = build_finite(m.shape.letter, m.shape.rank);
      auto comp = m.pattern == "D2" ? Component{} : classify_connected(sys, m.support);
      if (m.pattern != "D2") {
        RationalVector local_w(m.shape.rank);
        for (int t = 0; t < m.shape.rank; ++t) local_w[t] = m.weight[comp.relabel[t]];
        for (int t = 0; t < m.shape.rank; ++t) CHECK(finite.pairing(local_w, t) == sys.pairing(m.weight, comp.relabel[t]));
      }
      for (int i = 0; i < int(sys.size()); ++i)
        if (!m.support.contains(i)) CHECK(m.weight[i] == 0);
    }
    // Equivariance under diagram automorphisms.
    const auto autos = diagram_automorphisms(sys);
    const auto& p = testing_support::pick(rng, autos);
    std::set<RationalVector> moved;
    for (const auto& m : models) moved.insert(apply(p, m.weight));
    CHECK(moved == weights(homogeneous_models(sys, apply(p, local))));
    // Inhomogeneous profiles.
    for (const auto& m : inhomogeneous_models(sys, local)) {
      auto prof = inhomogeneous_profile(sys, m);
      for (int i : local.to_vector()) CHECK(prof[i] == (i == m.distinguished ? 1 : 0));
    }
    // match_sharp identity.
    if (!models.empty()) {
      const auto& w = testing_support::pick(rng, models).weight;
      for (int attempt = 0; attempt < 4; ++attempt) {
        NodeSet far(std::uniform_int_distribution<std::uint32_t>(0, bits - 1)(rng));
        if (auto s = match_sharp(sys, w, far)) CHECK(w + s->model.weight == s->t * sys.delta());
      }
    }
  }
}
