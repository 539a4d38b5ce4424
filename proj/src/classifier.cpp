#include "rankone/classifier.hpp"

#include "rankone/linsolve.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

namespace rankone {

namespace {

int smallest(NodeSet s) { return s.empty() ? 0 : s.to_vector().front(); }

std::string pad(int v) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%02d", v);
  return buf;
}

std::string nodes_key(NodeSet s) {
  std::string out;
  for (int i : s.to_vector()) out += pad(i) + ",";
  return out;
}

std::string vector_key(const RationalVector& v) {
  std::string out;
  for (const auto& x : v) out += to_string(x) + ",";
  return out;
}

std::string end_key(const PolytopeEnd& e) {
  std::string out = nodes_key(e.zeros);
  if (e.model.kind == ModelKind::homogeneous) return out + ";h:" + vector_key(e.weight);
  return out + ";i:" + pad(e.model.distinguished);
}

// Shifts an affine weight by a multiple of delta so that it vanishes at `gauge`.
RationalVector regauge(const RootSystem& sys, RationalVector w, int gauge) {
  if (!sys.affine()) return w;
  const Rational s = w[gauge] / sys.marks()[gauge];
  return w - s * sys.delta();
}

bool genuine_cover(const RootSystem& sys, NodeSet s1, NodeSet s2) { return (s1 | s2) == sys.all_nodes(); }

}  // namespace

std::string to_string(RecordKind kind) {
  switch (kind) {
    case RecordKind::bihom: return "bihom";
    case RecordKind::mixed: return "mixed";
    case RecordKind::biinhom: return "biinhom";
  }
  return "?";
}

RecordKind parse_record_kind(const std::string& text) {
  if (text == "bihom") return RecordKind::bihom;
  if (text == "mixed") return RecordKind::mixed;
  if (text == "biinhom") return RecordKind::biinhom;
  throw std::invalid_argument("unknown record kind " + text);
}

std::vector<Rational> center_scalar(const RootSystem& sys, const RationalVector& weight, NodeSet zeros) {
  const auto missing = zeros.complement(sys.size()).to_vector();
  std::vector<Rational> out;
  if (missing.empty()) return out;
  if (!sys.affine()) {
    for (int m : missing) out.push_back(weight[m]);
    return out;
  }
  // Affine: the centre has dimension |M| - 1. Reference node r has the smallest
  // mark; for every other missing m, zeta_m pairs to a_r at m and to -a_m at r,
  // scaled to be primitive in the coroot lattice of the gradient root system.
  const int r = *std::min_element(missing.begin(), missing.end(), [&](int a, int b) {
    return std::pair(sys.marks()[a], a) < std::pair(sys.marks()[b], b);
  });
  const int n = static_cast<int>(sys.size()) - 1;
  for (int m : missing) {
    if (m == r) continue;
    RationalVector y = rankone::zeros(sys.size());
    y[m] = sys.marks()[r];
    y[r] = -sys.marks()[m];
    RationalMatrix rows;
    RationalVector rhs;
    for (int i = 1; i <= n; ++i) {
      RationalVector row(n);
      for (int j = 1; j <= n; ++j) row[j - 1] = sys.gcm(j, i);
      rows.push_back(std::move(row));
      rhs.push_back(y[i]);
    }
    const auto z = solve_linear(std::move(rows), std::move(rhs), n).values;
    mpz_class den = 1, content = 0;
    for (const auto& v : z) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    for (const auto& v : z) {
      const mpz_class num = Rational(v * den).get_num();
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    const Rational scale = Rational(den) / Rational(content);
    Rational value = 0;
    for (std::size_t j = 0; j < sys.size(); ++j) value += weight[j] * y[j];
    out.push_back(scale * value);
  }
  return out;
}

std::vector<Rational> center_scalar(const RootSystem& sys, const PolytopeRecord& record, int end) {
  const PolytopeEnd& e = end == 1 ? record.end1 : record.end2;
  return center_scalar(sys, e.weight, e.zeros);
}

std::optional<PolytopeRecord> evaluate_candidate(const RootSystem& sys, Mode mode, const LocalModel& start,
                                                 NodeSet s2, const FarModel& far) {
  if ((mode == Mode::genuine) != sys.affine()) throw std::invalid_argument("mode does not match system type");
  const NodeSet all = sys.all_nodes();
  const NodeSet s1 = start.local;
  if (s1 == all || s2 == all || !genuine_cover(sys, s1, s2)) return std::nullopt;

  DirectionSpec dir;
  if (start.kind == ModelKind::homogeneous) {
    dir.profile = sys.profile(start.weight);
  } else {
    dir.profile = inhomogeneous_profile(sys, start);
    dir.free = all.minus(s1);
  }
  std::optional<LocalModel> far_model;
  if (far.kind == ModelKind::inhomogeneous) {
    for (auto& m : inhomogeneous_models(sys, s2))
      if (m.distinguished == far.distinguished) far_model = std::move(m);
    if (!far_model) return std::nullopt;
    for (int j : s2.to_vector()) dir.far.emplace_back(j, j == far.distinguished ? -1 : 0);
  }

  const FaceResult solved = face_solve(sys, s1, s2, dir);
  if (solved.status != FaceStatus::solved) return std::nullopt;
  const FaceSolution& sol = *solved.solution;
  if (!in_closed_alcove(sys, sol.x1.values) || !in_closed_alcove(sys, sol.x2.values)) return std::nullopt;
  if (zero_set(sol.x1) != s1 || zero_set(sol.x2) != s2) return std::nullopt;

  PolytopeRecord rec;
  rec.system = sys.id();
  rec.c = sol.c;
  rec.end1.x = sol.x1;
  rec.end1.zeros = s1;
  rec.end1.model = start;
  rec.end2.x = sol.x2;
  rec.end2.zeros = s2;

  if (start.kind == ModelKind::homogeneous) {
    rec.end1.weight = start.weight;
  } else {
    auto w = weight_from_profile(sys, sol.profile, smallest(all.minus(s1)));
    if (!w) return std::nullopt;
    rec.end1.weight = *w;
    rec.end1.model.weight = *w;
  }

  if (far.kind == ModelKind::homogeneous) {
    auto match = match_sharp(sys, rec.end1.weight, s2);
    if (!match) return std::nullopt;
    rec.t = match->t;
    rec.end2.model = std::move(match->model);
    rec.end2.weight = rec.end2.model.weight;
  } else {
    auto w = weight_from_profile(sys, -sol.profile, smallest(all.minus(s2)));
    if (!w) return std::nullopt;
    rec.end2.model = std::move(*far_model);
    rec.end2.model.weight = *w;
    rec.end2.weight = *w;
  }

  const bool h1 = rec.end1.model.kind == ModelKind::homogeneous;
  const bool h2 = rec.end2.model.kind == ModelKind::homogeneous;
  rec.kind = h1 && h2 ? RecordKind::bihom : (!h1 && !h2 ? RecordKind::biinhom : RecordKind::mixed);
  for (PolytopeEnd* e : {&rec.end1, &rec.end2})
    if (e->model.kind == ModelKind::inhomogeneous) e->center = center_scalar(sys, e->weight, e->zeros);
  return normalize(sys, std::move(rec));
}

std::string record_key(const PolytopeRecord& record) {
  return to_string(record.kind) + "|" + end_key(record.end1) + "|" + end_key(record.end2);
}

PolytopeRecord normalize(const RootSystem&, PolytopeRecord record) {
  bool swap = false;
  if (record.kind == RecordKind::mixed)
    swap = record.end1.model.kind == ModelKind::inhomogeneous;
  else
    swap = end_key(record.end2) < end_key(record.end1);
  if (swap) std::swap(record.end1, record.end2);
  return record;
}

PolytopeRecord apply(const RootSystem& sys, const Permutation& p, const PolytopeRecord& record) {
  PolytopeRecord out = record;
  for (PolytopeEnd* e : {&out.end1, &out.end2}) {
    e->x.values = rankone::apply(p, e->x.values);
    e->zeros = rankone::apply(p, e->zeros);
    LocalModel& m = e->model;
    m.local = rankone::apply(p, m.local);
    m.support = rankone::apply(p, m.support);
    if (m.distinguished >= 0) m.distinguished = p[m.distinguished];
    e->weight = rankone::apply(p, e->weight);
    if (m.kind == ModelKind::inhomogeneous) {
      e->weight = regauge(sys, e->weight, smallest(e->zeros.complement(sys.size())));
      e->center = center_scalar(sys, e->weight, e->zeros);
    }
    m.weight = e->weight;
  }
  return normalize(sys, std::move(out));
}

std::vector<PolytopeRecord> dedupe(const RootSystem& sys, std::vector<PolytopeRecord> records, bool keep_all) {
  std::map<std::string, PolytopeRecord> unique;
  for (auto& r : records) {
    r = normalize(sys, std::move(r));
    unique.emplace(record_key(r), std::move(r));
  }
  const auto autos = diagram_automorphisms(sys);
  auto geometric_key = [](const PolytopeRecord& r) {
    std::string a = vector_key(r.end1.x.values), b = vector_key(r.end2.x.values);
    return std::min(a, b) + "|" + std::max(a, b);
  };
  struct Info {
    std::string canonical_key;
    std::size_t orbit_size;
    std::string geometry;
  };
  std::map<std::string, Info> info;
  std::set<std::string> geometries;
  for (const auto& [key, r] : unique) {
    std::set<std::string> orbit;
    std::string geometry;
    for (const auto& p : autos) {
      PolytopeRecord image = rankone::apply(sys, p, r);
      orbit.insert(record_key(image));
      std::string g = geometric_key(image);
      if (geometry.empty() || g < geometry) geometry = g;
    }
    info[key] = Info{*orbit.begin(), orbit.size(), geometry};
    geometries.insert(geometry);
  }
  std::vector<PolytopeRecord> out;
  for (auto& [key, r] : unique) {
    const Info& in = info[key];
    r.canonical = in.canonical_key == key;
    r.orbit_size = in.orbit_size;
    r.polytope = static_cast<std::size_t>(std::distance(geometries.begin(), geometries.find(in.geometry)));
    if (keep_all || r.canonical) out.push_back(std::move(r));
  }
  return out;
}

std::vector<PolytopeRecord> classify_genuine(const RootSystem& sys, bool keep_all) {
  if (!sys.affine()) throw std::invalid_argument("genuine classification needs an affine system");
  const NodeSet all = sys.all_nodes();
  const std::size_t n = sys.rank();
  std::vector<PolytopeRecord> found;
  auto keep = [&](std::optional<PolytopeRecord> r) {
    if (r) found.push_back(std::move(*r));
  };
  for (std::uint32_t bits = 0; bits < all.bits(); ++bits) {
    const NodeSet s1(bits);
    if (s1.size() + 1 < n || s1.size() > n) continue;
    for (const auto& m : homogeneous_models(sys, s1)) {
      // Walls of s1 stay walls exactly where omega is orthogonal; every other wall must be reached.
      const NodeSet s2 = sp_set(sys, m.weight, s1) | all.minus(s1);
      if (s2 == all) continue;
      if (s2.size() + 1 >= n) keep(evaluate_candidate(sys, Mode::genuine, m, s2, {ModelKind::homogeneous, -1}));
      if (s1.size() == n)
        for (const auto& f : inhomogeneous_models(sys, s2))
          keep(evaluate_candidate(sys, Mode::genuine, m, s2, {ModelKind::inhomogeneous, f.distinguished}));
    }
    if (s1.size() != n) continue;
    for (const auto& m : inhomogeneous_models(sys, s1)) {
      NodeSet s2 = all;
      s2.erase(m.distinguished);
      for (const auto& f : inhomogeneous_models(sys, s2))
        keep(evaluate_candidate(sys, Mode::genuine, m, s2, {ModelKind::inhomogeneous, f.distinguished}));
    }
  }
  return dedupe(sys, std::move(found), keep_all);
}

std::vector<PolytopeRecord> classify_hamiltonian(const RootSystem& sys, bool keep_all) {
  if (sys.affine()) throw std::invalid_argument("Hamiltonian classification needs a finite system");
  const NodeSet all = sys.all_nodes();
  const std::size_t n = sys.rank();
  std::vector<PolytopeRecord> found;
  auto keep = [&](std::optional<PolytopeRecord> r) {
    if (r) found.push_back(std::move(*r));
  };
  for (int missing = 0; missing < static_cast<int>(n); ++missing) {
    NodeSet s1 = all;
    s1.erase(missing);
    for (const auto& m : homogeneous_models(sys, s1)) {
      const NodeSet s2 = sp_set(sys, m.weight, s1) | all.minus(s1);
      if (s2 == all) continue;
      for (const auto& f : inhomogeneous_models(sys, s2))
        keep(evaluate_candidate(sys, Mode::hamiltonian, m, s2, {ModelKind::inhomogeneous, f.distinguished}));
    }
    for (const auto& m : inhomogeneous_models(sys, s1)) {
      NodeSet s2 = all;
      s2.erase(m.distinguished);
      for (const auto& f : inhomogeneous_models(sys, s2))
        keep(evaluate_candidate(sys, Mode::hamiltonian, m, s2, {ModelKind::inhomogeneous, f.distinguished}));
    }
  }
  return dedupe(sys, std::move(found), keep_all);
}

std::vector<PolytopeRecord> classify(const RootSystem& sys, Mode mode, bool keep_all) {
  return mode == Mode::genuine ? classify_genuine(sys, keep_all) : classify_hamiltonian(sys, keep_all);
}

std::vector<std::string> check_record(const RootSystem& sys, Mode mode, const PolytopeRecord& r) {
  std::vector<std::string> bad;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  const NodeSet all = sys.all_nodes();
  const std::size_t n = sys.rank();
  require(r.system == sys.id(), "system mismatch");
  require(in_closed_alcove(sys, r.end1.x.values), "X1 outside the closed alcove");
  require(in_closed_alcove(sys, r.end2.x.values), "X2 outside the closed alcove");
  require(zero_set(r.end1.x) == r.end1.zeros, "zero set of X1 differs from S1");
  require(zero_set(r.end2.x) == r.end2.zeros, "zero set of X2 differs from S2");
  require(r.end1.zeros != all && r.end2.zeros != all, "an end is the origin or not a point");
  require((r.end1.zeros | r.end2.zeros) == all, "polytope misses a wall");
  require(r.c > 0, "nonpositive step");
  require(translate(sys, r.end1.x, r.c, r.end1.weight) == r.end2.x.values, "X2 != X1 + c * omega");
  require(sys.profile(r.end2.weight) == -sys.profile(r.end1.weight), "far weight is not -omega");
  const bool h1 = r.end1.model.kind == ModelKind::homogeneous;
  const bool h2 = r.end2.model.kind == ModelKind::homogeneous;
  switch (r.kind) {
    case RecordKind::bihom:
      require(h1 && h2, "bihom record with an inhomogeneous end");
      require(mode == Mode::genuine, "bihom record in the Hamiltonian setting");
      require(r.end1.zeros.size() + 1 >= n && r.end2.zeros.size() + 1 >= n, "bihom end with fewer than n-1 walls");
      require(r.t && r.end1.weight + r.end2.weight == *r.t * sys.delta(), "omega + sharp != t * delta");
      break;
    case RecordKind::mixed:
      require(h1 && !h2, "mixed record not stored homogeneous end first");
      if (mode == Mode::genuine) require(r.end1.zeros.size() == n, "mixed record: homogeneous end without n walls");
      break;
    case RecordKind::biinhom:
      require(!h1 && !h2, "biinhom record with a homogeneous end");
      if (mode == Mode::genuine)
        require(r.end1.zeros.size() == n && r.end2.zeros.size() == n, "biinhom end without n walls");
      break;
  }
  for (const PolytopeEnd* e : {&r.end1, &r.end2}) {
    if (e->model.kind != ModelKind::inhomogeneous) continue;
    // The opposite end must be S minus the distinguished node.
    const PolytopeEnd* other = e == &r.end1 ? &r.end2 : &r.end1;
    NodeSet expected = all;
    expected.erase(e->model.distinguished);
    require(other->zeros == expected, "opposite end of an inhomogeneous model is not S minus k");
    const auto p = sys.profile(e->weight);
    for (int j : e->zeros.to_vector())
      require(p[j] == (j == e->model.distinguished ? 1 : 0), "inhomogeneous profile is not 1 at k and 0 elsewhere");
  }
  if (h1 && h2) {
    // homogeneous models must be catalog entries at their ends
    for (const PolytopeEnd* e : {&r.end1, &r.end2}) {
      bool listed = false;
      for (const auto& m : homogeneous_models(sys, e->zeros)) listed = listed || m.weight == e->weight;
      require(listed, "homogeneous weight not in the catalog");
    }
  }
  return bad;
}

}  // namespace rankone
