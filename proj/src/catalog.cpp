#include "rankone/catalog.hpp"

#include <cassert>
#include <functional>
#include <set>
#include <stdexcept>

namespace rankone {

namespace {

struct Pattern {
  char letter;   // finite type of the support
  int min_rank;
  int max_rank;
  std::string (*id)(int rank);
  std::vector<int> (*coefficients)(int rank);
  std::vector<Rational> factors;
  std::string (*label)(int rank);
};

std::string str(int v) { return std::to_string(v); }

const std::vector<Pattern>& patterns() {
  static const std::vector<Pattern> list = {
      {'A', 1, 1, [](int) { return std::string("A1"); }, [](int) { return std::vector<int>{1}; },
       {1, 2}, [](int) { return std::string("(sl(2), t1, 0)"); }},
      {'A', 2, 32, [](int r) { return "A" + str(r); }, [](int r) { return std::vector<int>(r, 1); },
       {1}, [](int r) { return "(sl(" + str(r + 1) + "), gl(" + str(r) + "), 0)"; }},
      {'A', 3, 3, [](int) { return std::string("D3"); }, [](int) { return std::vector<int>{1, 2, 1}; },
       {make_rational(1, 2), 1}, [](int) { return std::string("(sl(4), sp(4), 0)"); }},
      {'B', 2, 32, [](int r) { return "B" + str(r); }, [](int r) { return std::vector<int>(r, 1); },
       {1, 2}, [](int r) { return "(so(" + str(2 * r + 1) + "), so(" + str(2 * r) + "), 0)"; }},
      {'B', 3, 3, [](int) { return std::string("B3'"); }, [](int) { return std::vector<int>{1, 2, 3}; },
       {make_rational(1, 2), 1}, [](int) { return std::string("(so(7), G2, 0)"); }},
      {'C', 3, 32, [](int r) { return "C" + str(r); },
       [](int r) {
         std::vector<int> c(r, 2);
         c.front() = c.back() = 1;
         return c;
       },
       {1}, [](int r) { return "(sp(" + str(2 * r) + "), sl(2)+sp(" + str(2 * r - 2) + "), 0)"; }},
      {'D', 4, 32, [](int r) { return "D" + str(r); },
       [](int r) {
         std::vector<int> c(r, 2);
         c[r - 1] = c[r - 2] = 1;
         return c;
       },
       {make_rational(1, 2), 1}, [](int r) { return "(so(" + str(2 * r) + "), so(" + str(2 * r - 1) + "), 0)"; }},
      {'F', 4, 4, [](int) { return std::string("F4"); }, [](int) { return std::vector<int>{1, 2, 3, 2}; },
       {1}, [](int) { return std::string("(f4, so(9), 0)"); }},
      {'G', 2, 2, [](int) { return std::string("G2"); }, [](int) { return std::vector<int>{2, 1}; },
       {1, 2}, [](int) { return std::string("(G2, sl(3), 0)"); }},
  };
  return list;
}

const std::string kPairId = "D2";
const std::string kPairLabel = "(sl(2)+sl(2), diag sl(2), 0)";

bool connected(const RootSystem& sys, NodeSet subset) {
  if (subset.empty()) return false;
  const auto nodes = subset.to_vector();
  NodeSet reached = NodeSet::single(nodes.front());
  std::vector<int> stack{nodes.front()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : nodes)
      if (!reached.contains(w) && sys.adjacent(v, w)) {
        reached.insert(w);
        stack.push_back(w);
      }
  }
  return reached == subset;
}

}  // namespace

NodeSet sp_set(const RootSystem& sys, const RationalVector& w, NodeSet subset) {
  NodeSet out;
  for (int i : subset.to_vector())
    if (sys.pairing(w, i) == 0) out.insert(i);
  return out;
}

std::vector<LocalModel> homogeneous_models(const RootSystem& sys, NodeSet local) {
  std::vector<LocalModel> out;
  std::set<RationalVector> seen;
  auto emit = [&](LocalModel m) {
    if (seen.insert(m.weight).second) out.push_back(std::move(m));
  };
  const std::uint32_t bits = local.bits();
  // Connected supports, in increasing bitmask order.
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t sub = bits;; sub = (sub - 1) & bits) {
    if (sub) subsets.push_back(sub);
    if (sub == 0) break;
  }
  std::sort(subsets.begin(), subsets.end());
  for (std::uint32_t b : subsets) {
    const NodeSet support(b);
    if (!connected(sys, support)) continue;
    const Component comp = classify_connected(sys, support);
    const int r = comp.type.rank;
    for (const Pattern& p : patterns()) {
      if (p.letter != comp.type.letter || r < p.min_rank || r > p.max_rank) continue;
      const auto coeffs = p.coefficients(r);
      for (const Rational& factor : p.factors) {
        for (const auto& sigma : template_automorphisms(comp.type)) {
          LocalModel m;
          m.kind = ModelKind::homogeneous;
          m.local = local;
          m.support = support;
          m.shape = comp.type;
          m.pattern = p.id(r);
          m.factor = factor;
          m.weight = zeros(sys.size());
          for (int t = 0; t < r; ++t) m.weight[comp.relabel[sigma[t]]] = factor * coeffs[t];
          m.triple = p.label(r);
          emit(std::move(m));
        }
      }
    }
  }
  const auto nodes = local.to_vector();
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      if (sys.adjacent(nodes[a], nodes[b])) continue;
      for (const Rational& factor : {make_rational(1, 2), make_rational(1)}) {
        LocalModel m;
        m.kind = ModelKind::homogeneous;
        m.local = local;
        m.support = NodeSet::of({nodes[a], nodes[b]});
        m.shape = FiniteType{'A', 1};
        m.pattern = kPairId;
        m.factor = factor;
        m.weight = zeros(sys.size());
        m.weight[nodes[a]] = m.weight[nodes[b]] = factor;
        m.triple = kPairLabel;
        emit(std::move(m));
      }
    }
  return out;
}

std::vector<LocalModel> inhomogeneous_models(const RootSystem& sys, NodeSet local) {
  std::vector<LocalModel> out;
  for (const Component& comp : components(sys, local).components) {
    std::vector<int> ends;
    const int l = comp.type.rank;
    if (comp.type.letter == 'A') {
      ends.push_back(comp.relabel.front());
      if (l > 1) ends.push_back(comp.relabel.back());
    } else if (comp.type.letter == 'C' || (comp.type.letter == 'B' && l == 2)) {
      // Short end: node 1 of C_l, node 2 of B_2.
      ends.push_back(comp.type.letter == 'C' ? comp.relabel.front() : comp.relabel.back());
    }
    for (int k : ends) {
      LocalModel m;
      m.kind = ModelKind::inhomogeneous;
      m.local = local;
      m.support = comp.nodes();
      m.shape = comp.type;
      m.pattern = "I:" + comp.type.name();
      m.distinguished = k;
      m.triple = triple_label(m);
      out.push_back(std::move(m));
    }
  }
  std::sort(out.begin(), out.end(), [](const LocalModel& a, const LocalModel& b) { return a.distinguished < b.distinguished; });
  return out;
}

RationalVector inhomogeneous_profile(const RootSystem& sys, const LocalModel& model) {
  assert(model.kind == ModelKind::inhomogeneous);
  RationalVector p = zeros(sys.size());
  p[model.distinguished] = 1;
  return p;
}

std::optional<SharpMatch> match_sharp(const RootSystem& sys, const RationalVector& w, NodeSet far) {
  if (!sys.affine()) return std::nullopt;
  const NodeSet missing = far.complement(sys.size());
  if (missing.empty()) return std::nullopt;
  std::optional<Rational> t;
  for (int j : missing.to_vector()) {
    Rational tj = w[j] / sys.marks()[j];
    if (t && *t != tj) return std::nullopt;
    t = tj;
  }
  RationalVector sharp = *t * sys.delta() - w;
  for (const auto& v : sharp)
    if (v < 0) return std::nullopt;
  for (auto& m : homogeneous_models(sys, far)) {
    if (m.weight == sharp) {
      // Sanity bound: no coefficient of t*delta exceeds twice the largest one of w or w#.
      Rational largest = 0;
      for (std::size_t i = 0; i < w.size(); ++i) largest = std::max({largest, w[i], sharp[i]});
      for (int a : sys.marks())
        if (*t * a > 2 * largest) throw std::logic_error("t bound violated");
      return SharpMatch{*t, std::move(m)};
    }
  }
  return std::nullopt;
}

std::string triple_label(const LocalModel& model) {
  if (model.kind == ModelKind::homogeneous) {
    if (model.pattern == kPairId) return kPairLabel;
    for (const Pattern& p : patterns()) {
      const int r = model.shape.rank;
      if (p.letter == model.shape.letter && r >= p.min_rank && r <= p.max_rank && p.id(r) == model.pattern)
        return p.label(r);
    }
    throw std::logic_error("no triple label for pattern " + model.pattern);
  }
  const int l = model.shape.rank;
  if (model.shape.letter == 'A') {
    const std::string g = "t1+sl(" + str(l + 1) + ")";
    return "(" + g + ", " + g + ", C^" + str(l + 1) + ")";
  }
  if (model.shape.letter == 'C' || (model.shape.letter == 'B' && l == 2)) {
    const std::string g = "t1+sp(" + str(2 * l) + ")";
    return "(" + g + ", " + g + ", C^" + str(2 * l) + ")";
  }
  throw std::logic_error("no triple label for inhomogeneous model on " + model.shape.name());
}

}  // namespace rankone
