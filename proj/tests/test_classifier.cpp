#include "doctest.h"

#include "oracle.hpp"
#include "rankone/classifier.hpp"
#include "test_support.hpp"

#include <set>

using namespace rankone;
using testing_support::affine_selectors;
using testing_support::finite_selectors;

namespace {

std::set<std::string> keys(const std::vector<PolytopeRecord>& records) {
  std::set<std::string> out;
  for (const auto& r : records) out.insert(record_key(r));
  return out;
}

RationalVector vec(std::initializer_list<Rational> values) { return RationalVector(values); }

const PolytopeEnd* inhomogeneous_end(const PolytopeRecord& r, const PolytopeEnd** other) {
  if (r.end1.model.kind == ModelKind::inhomogeneous) {
    *other = &r.end2;
    return &r.end1;
  }
  if (r.end2.model.kind == ModelKind::inhomogeneous) {
    *other = &r.end1;
    return &r.end2;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("A1 affine has three polytopes") {
  auto sys = build_affine('A', 1);
  auto recs = classify_genuine(sys);
  REQUIRE(recs.size() == 3);
  int bihom = 0, biinhom = 0;
  for (const auto& r : recs) {
    if (r.kind == RecordKind::bihom) ++bihom;
    if (r.kind == RecordKind::biinhom) ++biinhom;
  }
  CHECK(bihom == 2);
  CHECK(biinhom == 1);
}

TEST_CASE("G2 affine mixed row") {
  auto sys = build_affine('G', 2);
  bool found = false;
  for (const auto& r : classify_genuine(sys, true)) {
    if (r.kind != RecordKind::mixed) continue;
    if (r.end1.zeros == NodeSet::of({1, 2}) && r.end1.weight == vec({0, 2, 1}) &&
        r.end2.zeros == NodeSet::of({0, 2}) && r.end2.model.kind == ModelKind::inhomogeneous)
      found = true;
  }
  CHECK(found);
}

TEST_CASE("G2 finite mixed row") {
  auto sys = build_finite('G', 2);
  bool found = false;
  for (const auto& r : classify_hamiltonian(sys, true)) {
    if (r.kind == RecordKind::mixed && r.end1.zeros == NodeSet::of({0}) && r.end1.weight == vec({1, 0}) &&
        r.end2.zeros == NodeSet::of({1}) && r.end2.model.distinguished == 1) {
      found = true;
      REQUIRE(r.end2.center.size() == 1);
      CHECK(r.end2.center[0] == -1);
    }
  }
  CHECK(found);
}

TEST_CASE("E types have no bi-homogeneous polytopes") {
  for (int r : {6, 7}) {
    for (const auto& rec : classify_genuine(build_affine('E', r))) CHECK(rec.kind != RecordKind::bihom);
  }
}

TEST_CASE("records are sound and closed under automorphisms") {
  for (const auto& sel : affine_selectors(5)) {
    auto sys = build_system(parse_selector(sel));
    auto all = classify_genuine(sys, true);
    auto all_keys = keys(all);
    std::size_t canonical = 0;
    for (const auto& r : all) {
      CAPTURE(sel);
      CHECK(check_record(sys, Mode::genuine, r).empty());
      if (r.canonical) ++canonical;
      for (const auto& p : diagram_automorphisms(sys)) CHECK(all_keys.count(record_key(rankone::apply(sys, p, r))) == 1);
    }
    CHECK(canonical == classify_genuine(sys).size());
  }
}

TEST_CASE("hamiltonian runs have no bi-homogeneous records") {
  for (const auto& sel : finite_selectors(6)) {
    auto sys = build_system(parse_selector(sel));
    for (const auto& r : classify_hamiltonian(sys, true)) {
      CAPTURE(sel);
      CHECK(r.kind != RecordKind::bihom);
      CHECK(check_record(sys, Mode::hamiltonian, r).empty());
    }
  }
}

TEST_CASE("inhomogeneous end forces the other end to miss only k") {
  std::vector<std::string> sels = affine_selectors(5);
  for (const auto& s : finite_selectors(5)) sels.push_back(s);
  for (const auto& sel : sels) {
    auto sys = build_system(parse_selector(sel));
    for (const auto& r : classify(sys, sys.affine() ? Mode::genuine : Mode::hamiltonian, true)) {
      const PolytopeEnd* other = nullptr;
      const PolytopeEnd* inh = inhomogeneous_end(r, &other);
      if (!inh) continue;
      NodeSet expected = sys.all_nodes();
      expected.erase(inh->model.distinguished);
      CAPTURE(sel);
      CHECK(other->zeros == expected);
    }
  }
}

TEST_CASE("pruned search equals brute force on small systems") {
  for (std::string sel : {"A1~1", "A2~1", "C2~1", "G2~1", "A2~2", "A2", "B2", "G2", "A3"}) {
    auto sys = build_system(parse_selector(sel));
    Mode mode = sys.affine() ? Mode::genuine : Mode::hamiltonian;
    CAPTURE(sel);
    CHECK(keys(classify(sys, mode, true)) == keys(testing_support::brute_force(sys, mode)));
  }
}

TEST_CASE("classification is deterministic") {
  auto sys = build_affine('D', 5);
  CHECK(keys(classify_genuine(sys)) == keys(classify_genuine(sys)));
  auto a = classify_genuine(sys);
  auto b = classify_genuine(sys);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(record_key(a[i]) == record_key(b[i]));
}

TEST_CASE("record kind names round-trip") {
  for (auto k : {RecordKind::bihom, RecordKind::mixed, RecordKind::biinhom}) CHECK(parse_record_kind(to_string(k)) == k);
}
