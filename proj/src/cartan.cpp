#include "rankone/cartan.hpp"

#include "cartan_tables_data.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace rankone {

namespace {

struct FamilySpec {
  std::string key;
  int twist = 0;
  int min_rank = 1;
  int max_rank = 1 << 20;
  std::vector<std::vector<std::string>> lines;  // tokenized body lines
};

std::vector<FamilySpec> parse_tables(const std::string& text) {
  std::vector<FamilySpec> out;
  std::istringstream in(text);
  std::string line;
  FamilySpec* current = nullptr;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    auto fail = [&](const std::string& what) {
      throw std::logic_error("cartan tables line " + std::to_string(line_no) + ": " + what);
    };
    if (tokens[0] == "family") {
      if (current) fail("nested family");
      if (tokens.size() < 4 || tokens.size() > 5) fail("bad family header");
      FamilySpec spec;
      spec.key = tokens[1];
      spec.twist = std::stoi(tokens[2]);
      spec.min_rank = std::stoi(tokens[3]);
      if (tokens.size() == 5) spec.max_rank = std::stoi(tokens[4]);
      out.push_back(std::move(spec));
      current = &out.back();
    } else if (tokens[0] == "end") {
      if (!current) fail("end without family");
      current = nullptr;
    } else {
      if (!current) fail("statement outside family");
      current->lines.push_back(std::move(tokens));
    }
  }
  if (current) throw std::logic_error("cartan tables: unterminated family");
  return out;
}

const std::vector<FamilySpec>& tables() {
  static const std::vector<FamilySpec> specs = parse_tables(kCartanTablesText);
  return specs;
}

int eval_expr(const std::string& e, int n) {
  if (e.empty()) throw std::logic_error("empty expression");
  if (e[0] == 'n') {
    if (e.size() == 1) return n;
    int k = std::stoi(e.substr(2));
    if (e[1] == '-') return n - k;
    if (e[1] == '+') return n + k;
    throw std::logic_error("bad expression: " + e);
  }
  return std::stoi(e);
}

std::vector<int> eval_items(const std::vector<std::string>& tokens, int n, std::size_t size) {
  std::vector<int> values(size, 0);
  std::vector<bool> seen(size, false);
  std::size_t position = 0;
  for (std::size_t t = 1; t < tokens.size(); ++t) {
    const std::string& item = tokens[t];
    auto at = item.find('@');
    int value = std::stoi(item.substr(0, at));
    int lo = 0, hi = 0;
    if (at == std::string::npos) {
      lo = hi = static_cast<int>(position);
    } else {
      std::string range = item.substr(at + 1);
      auto dots = range.find("..");
      lo = eval_expr(range.substr(0, dots), n);
      hi = dots == std::string::npos ? lo : eval_expr(range.substr(dots + 2), n);
    }
    for (int i = lo; i <= hi; ++i) {
      if (i < 0 || static_cast<std::size_t>(i) >= size || seen[i])
        throw std::logic_error("bad mark item " + item);
      values[i] = value;
      seen[i] = true;
    }
    position = static_cast<std::size_t>(hi + 1);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw std::logic_error("incomplete mark list");
  return values;
}

RootSystem instantiate(const FamilySpec& spec, const SystemId& id, int n) {
  const bool affine = spec.twist != 0;
  const std::size_t size = static_cast<std::size_t>(affine ? n + 1 : n);
  const int offset = affine ? 0 : 1;
  std::vector<std::vector<int>> a(size, std::vector<int>(size, 0));
  for (std::size_t i = 0; i < size; ++i) a[i][i] = 2;
  auto node = [&](const std::string& e) {
    int v = eval_expr(e, n) - offset;
    if (v < 0 || static_cast<std::size_t>(v) >= size) throw std::logic_error("node out of range: " + e);
    return v;
  };
  auto bond = [&](int i, int j, int aij, int aji) {
    if (i == j) throw std::logic_error("self bond");
    a[i][j] += aij;
    a[j][i] += aji;
  };
  std::vector<int> marks, comarks;
  for (const auto& tokens : spec.lines) {
    const std::string& op = tokens[0];
    if (op == "chain" || op == "cycle") {
      int lo = node(tokens.at(1)), hi = node(tokens.at(2));
      for (int i = lo; i < hi; ++i) bond(i, i + 1, -1, -1);
      if (op == "cycle") bond(hi, lo, -1, -1);
    } else if (op == "bond") {
      bond(node(tokens.at(1)), node(tokens.at(2)), std::stoi(tokens.at(3)), std::stoi(tokens.at(4)));
    } else if (op == "marks") {
      marks = eval_items(tokens, n, size);
    } else if (op == "comarks") {
      comarks = eval_items(tokens, n, size);
    } else {
      throw std::logic_error("unknown statement " + op);
    }
  }
  if (affine && (marks.empty() || comarks.empty())) throw std::logic_error("affine family without marks");
  return RootSystem(id, std::move(a), std::move(marks), std::move(comarks));
}

// Maps a selector to (table key, number of nodes parameter n).
std::pair<std::string, int> table_key(const SystemId& id) {
  const std::string letter(1, id.letter);
  const int N = id.index;
  auto bad = [&] { return std::invalid_argument("unsupported system " + id.selector()); };
  switch (id.twist) {
    case 0:
    case 1:
      if (id.letter >= 'E') return {letter + std::to_string(N), N};
      return {letter, N};
    case 2:
      if (id.letter == 'A') {
        if (N == 2) return {"A2", 1};
        if (N >= 4 && N % 2 == 0) return {"Aeven", N / 2};
        if (N >= 5 && N % 2 == 1) return {"Aodd", (N + 1) / 2};
        throw bad();
      }
      if (id.letter == 'D') return {"D", N - 1};
      if (id.letter == 'E' && N == 6) return {"E6", 4};
      throw bad();
    case 3:
      if (id.letter == 'D' && N == 4) return {"D4", 2};
      throw bad();
    default:
      throw bad();
  }
}

}  // namespace

const char* cartan_tables_text() { return kCartanTablesText; }

std::string SystemId::selector() const {
  std::string s = std::string(1, letter) + std::to_string(index);
  if (twist != 0) s += "~" + std::to_string(twist);
  return s;
}

SystemId parse_selector(const std::string& text) {
  static const std::regex pattern(R"(^([A-G])([0-9]{1,2})(~([0-9]))?$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw std::invalid_argument("malformed system selector: " + text);
  SystemId id;
  id.letter = m[1].str()[0];
  id.index = std::stoi(m[2].str());
  id.twist = m[3].matched ? std::stoi(m[4].str()) : 0;
  build_system(id);  // validates
  return id;
}

RootSystem::RootSystem(SystemId id, std::vector<std::vector<int>> gcm, std::vector<int> marks,
                       std::vector<int> comarks)
    : id_(id), gcm_(std::move(gcm)), marks_(std::move(marks)), comarks_(std::move(comarks)) {}

RationalVector RootSystem::delta() const {
  RationalVector d(size());
  for (std::size_t i = 0; i < size(); ++i) d[i] = marks_.empty() ? 0 : marks_[i];
  return d;
}

Rational RootSystem::pairing(const RationalVector& w, int i) const {
  Rational s = 0;
  for (std::size_t j = 0; j < size(); ++j)
    if (gcm_[i][j] != 0 && w[j] != 0) s += gcm_[i][j] * w[j];
  return s;
}

RationalVector RootSystem::profile(const RationalVector& w) const {
  RationalVector p(size());
  for (std::size_t i = 0; i < size(); ++i) p[i] = pairing(w, static_cast<int>(i));
  return p;
}

RootSystem build_system(const SystemId& id) {
  const auto [key, n] = table_key(id);
  for (const auto& spec : tables()) {
    const int spec_twist = spec.twist;
    if (spec.key != key || spec_twist != id.twist) continue;
    if (n < spec.min_rank || n > spec.max_rank) break;
    return instantiate(spec, id, n);
  }
  throw std::invalid_argument("unsupported system " + id.selector());
}

RootSystem build_affine(char letter, int index, int twist) {
  return build_system(SystemId{letter, index, twist});
}

RootSystem build_finite(char letter, int index) { return build_system(SystemId{letter, index, 0}); }

namespace {

const RootSystem& template_system(const FiniteType& type) {
  static std::mutex mutex;
  static std::map<FiniteType, RootSystem> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(type);
  if (it == cache.end()) it = cache.emplace(type, build_finite(type.letter, type.rank)).first;
  return it->second;
}

bool try_embed(const RootSystem& sys, const RootSystem& tmpl, const std::vector<int>& nodes,
               std::vector<int>& relabel, std::vector<bool>& used) {
  const std::size_t t = relabel.size();
  if (t == tmpl.size()) return true;
  for (std::size_t c = 0; c < nodes.size(); ++c) {
    if (used[c]) continue;
    const int v = nodes[c];
    bool ok = true;
    for (std::size_t s = 0; s < t && ok; ++s) {
      ok = sys.gcm(relabel[s], v) == tmpl.gcm(static_cast<int>(s), static_cast<int>(t)) &&
           sys.gcm(v, relabel[s]) == tmpl.gcm(static_cast<int>(t), static_cast<int>(s));
    }
    if (!ok) continue;
    used[c] = true;
    relabel.push_back(v);
    if (try_embed(sys, tmpl, nodes, relabel, used)) return true;
    relabel.pop_back();
    used[c] = false;
  }
  return false;
}

std::vector<FiniteType> candidate_types(int rank) {
  std::vector<FiniteType> out;
  out.push_back({'A', rank});
  if (rank >= 2) out.push_back({'B', rank});
  if (rank >= 3) out.push_back({'C', rank});
  if (rank >= 4) out.push_back({'D', rank});
  if (rank >= 6 && rank <= 8) out.push_back({'E', rank});
  if (rank == 4) out.push_back({'F', 4});
  if (rank == 2) out.push_back({'G', 2});
  return out;
}

}  // namespace

Component classify_connected(const RootSystem& sys, NodeSet subset) {
  const std::vector<int> nodes = subset.to_vector();
  const int rank = static_cast<int>(nodes.size());
  if (rank == 0) throw std::logic_error("empty component");
  for (const FiniteType& type : candidate_types(rank)) {
    const RootSystem& tmpl = template_system(type);
    std::vector<int> relabel;
    std::vector<bool> used(nodes.size(), false);
    if (try_embed(sys, tmpl, nodes, relabel, used)) return Component{type, relabel};
  }
  throw std::logic_error("subdiagram is not of finite type");
}

Subdiagram components(const RootSystem& sys, NodeSet subset) {
  Subdiagram out;
  out.nodes = subset;
  NodeSet remaining = subset;
  while (!remaining.empty()) {
    const int seed = remaining.to_vector().front();
    NodeSet comp = NodeSet::single(seed);
    std::vector<int> stack{seed};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : remaining.to_vector()) {
        if (!comp.contains(w) && sys.adjacent(v, w)) {
          comp.insert(w);
          stack.push_back(w);
        }
      }
    }
    out.components.push_back(classify_connected(sys, comp));
    remaining = remaining.minus(comp);
  }
  return out;
}

std::vector<Permutation> diagram_automorphisms(const RootSystem& sys) {
  const std::size_t n = sys.size();
  std::vector<Permutation> out;
  Permutation p;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    const std::size_t i = p.size();
    if (i == n) {
      out.push_back(p);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = sys.gcm(static_cast<int>(v), static_cast<int>(v)) == sys.gcm(static_cast<int>(i), static_cast<int>(i));
      for (std::size_t s = 0; s < i && ok; ++s)
        ok = sys.gcm(p[s], static_cast<int>(v)) == sys.gcm(static_cast<int>(s), static_cast<int>(i)) &&
             sys.gcm(static_cast<int>(v), p[s]) == sys.gcm(static_cast<int>(i), static_cast<int>(s));
      if (!ok) continue;
      used[v] = true;
      p.push_back(static_cast<int>(v));
      self(self);
      p.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
  return out;
}

const std::vector<std::vector<int>>& template_automorphisms(const FiniteType& type) {
  static std::mutex mutex;
  static std::map<FiniteType, std::vector<Permutation>> cache;
  const RootSystem& tmpl = template_system(type);
  std::lock_guard lock(mutex);
  auto it = cache.find(type);
  if (it == cache.end()) it = cache.emplace(type, diagram_automorphisms(tmpl)).first;
  return it->second;
}

NodeSet apply(const Permutation& p, NodeSet s) {
  NodeSet out;
  for (int i : s.to_vector()) out.insert(p[i]);
  return out;
}

RationalVector apply(const Permutation& p, const RationalVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[p[i]] = v[i];
  return out;
}

}  // namespace rankone
