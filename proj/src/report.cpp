#include "rankone/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace rankone {

namespace {

using nlohmann::json;

constexpr const char* kTool = "rankone";
constexpr const char* kVersion = "1.0.0";

// ---------------------------------------------------------------------------
// JSON

json labels(const RootSystem& sys, NodeSet s) {
  json out = json::array();
  for (int i : s.to_vector()) out.push_back(sys.label(i));
  return out;
}

NodeSet nodes(const RootSystem& sys, const json& j) {
  NodeSet s;
  for (const auto& l : j) {
    int i = sys.index_of_label(l.get<int>());
    if (i < 0 || i >= static_cast<int>(sys.size())) throw std::invalid_argument("node label out of range");
    s.insert(i);
  }
  return s;
}

json rationals(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

RationalVector rationals(const json& j) {
  RationalVector v;
  for (const auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
  return v;
}

std::string kind_name(ModelKind kind) { return kind == ModelKind::homogeneous ? "homogeneous" : "inhomogeneous"; }

ModelKind parse_model_kind(const std::string& s) {
  if (s == "homogeneous") return ModelKind::homogeneous;
  if (s == "inhomogeneous") return ModelKind::inhomogeneous;
  throw std::invalid_argument("unknown model kind: " + s);
}

FiniteType parse_shape(const std::string& s) {
  if (s.size() < 2 || !std::isupper(static_cast<unsigned char>(s[0])))
    throw std::invalid_argument("bad shape: " + s);
  return FiniteType{s[0], std::stoi(s.substr(1))};
}

json model_json(const RootSystem& sys, const LocalModel& m) {
  json j;
  j["kind"] = kind_name(m.kind);
  j["local"] = labels(sys, m.local);
  j["support"] = labels(sys, m.support);
  j["shape"] = m.shape.name();
  j["pattern"] = m.pattern;
  j["factor"] = to_string(m.factor);
  j["weight"] = rationals(m.weight);
  j["distinguished"] = m.distinguished < 0 ? json(nullptr) : json(sys.label(m.distinguished));
  j["triple"] = m.triple;
  return j;
}

LocalModel model_from_json(const RootSystem& sys, const json& j) {
  LocalModel m;
  m.kind = parse_model_kind(j.at("kind").get<std::string>());
  m.local = nodes(sys, j.at("local"));
  m.support = nodes(sys, j.at("support"));
  m.shape = parse_shape(j.at("shape").get<std::string>());
  m.pattern = j.at("pattern").get<std::string>();
  m.factor = parse_rational(j.at("factor").get<std::string>());
  m.weight = rationals(j.at("weight"));
  m.distinguished = j.at("distinguished").is_null() ? -1 : sys.index_of_label(j.at("distinguished").get<int>());
  m.triple = j.at("triple").get<std::string>();
  return m;
}

json end_json(const RootSystem& sys, const PolytopeEnd& e) {
  json j;
  j["x"] = rationals(e.x.values);
  j["zeros"] = labels(sys, e.zeros);
  j["model"] = model_json(sys, e.model);
  j["weight"] = rationals(e.weight);
  j["center"] = rationals(e.center);
  return j;
}

PolytopeEnd end_from_json(const RootSystem& sys, const json& j) {
  PolytopeEnd e;
  e.x.values = rationals(j.at("x"));
  e.zeros = nodes(sys, j.at("zeros"));
  e.model = model_from_json(sys, j.at("model"));
  e.weight = rationals(j.at("weight"));
  e.center = rationals(j.at("center"));
  return e;
}

json record_json(const RootSystem& sys, const PolytopeRecord& r) {
  json j;
  j["system"] = r.system.selector();
  j["kind"] = to_string(r.kind);
  j["c"] = to_string(r.c);
  j["t"] = r.t ? json(to_string(*r.t)) : json(nullptr);
  j["canonical"] = r.canonical;
  j["orbit_size"] = r.orbit_size;
  j["polytope"] = r.polytope;
  j["ends"] = json::array({end_json(sys, r.end1), end_json(sys, r.end2)});
  return j;
}

PolytopeRecord record_from_json(const RootSystem& sys, const json& j) {
  PolytopeRecord r;
  r.system = parse_selector(j.at("system").get<std::string>());
  r.kind = parse_record_kind(j.at("kind").get<std::string>());
  r.c = parse_rational(j.at("c").get<std::string>());
  if (!j.at("t").is_null()) r.t = parse_rational(j.at("t").get<std::string>());
  r.canonical = j.at("canonical").get<bool>();
  r.orbit_size = j.at("orbit_size").get<std::size_t>();
  r.polytope = j.at("polytope").get<std::size_t>();
  const auto& ends = j.at("ends");
  if (ends.size() != 2) throw std::invalid_argument("a record has two ends");
  r.end1 = end_from_json(sys, ends[0]);
  r.end2 = end_from_json(sys, ends[1]);
  return r;
}

// ---------------------------------------------------------------------------
// Text helpers

std::string node_list(const RootSystem& sys, NodeSet s) {
  std::string out;
  for (int i : s.to_vector()) out += (out.empty() ? "a" : ",a") + std::to_string(sys.label(i));
  return out;
}

std::string face(const RootSystem& sys, NodeSet zeros) {
  NodeSet missing = zeros.complement(sys.size());
  if (missing.empty()) return "S";
  if (zeros.empty()) return "{}";
  return "S\\{" + node_list(sys, missing) + "}";
}

std::string linear_form(const RootSystem& sys, const RationalVector& w) {
  std::string out;
  for (int i = 0; i < static_cast<int>(sys.size()); ++i) {
    if (w[i] == 0) continue;
    Rational c = w[i];
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    Rational a = abs(c);
    if (a != 1) out += to_short_string(a);
    out += "a" + std::to_string(sys.label(i));
  }
  return out.empty() ? "0" : out;
}

std::string model_text(const RootSystem& sys, const PolytopeEnd& e) {
  if (e.model.kind == ModelKind::inhomogeneous) {
    std::string out = "I_" + std::to_string(sys.label(e.model.distinguished));
    if (!e.center.empty()) {
      out += " N=";
      for (std::size_t i = 0; i < e.center.size(); ++i) out += (i ? "," : "") + to_short_string(e.center[i]);
    }
    return out;
  }
  RationalVector base = e.weight;
  for (auto& x : base) x /= e.model.factor;
  std::string out = "H ";
  if (e.model.factor != 1) out += "[" + to_short_string(e.model.factor) + "]";
  return out + linear_form(sys, base);
}

char bond(const RootSystem& sys, int i, int j) {
  switch (sys.gcm(i, j) * sys.gcm(j, i)) {
    case 0: return ' ';
    case 1: return '-';
    case 2: return '=';
    case 3: return '#';
    default: return '%';
  }
}

std::string end_diagram(const RootSystem& sys, const PolytopeEnd& e) {
  std::string out;
  for (int i = 0; i < static_cast<int>(sys.size()); ++i) {
    if (i > 0) out += bond(sys, i - 1, i);
    char symbol = '.';
    if (e.model.kind == ModelKind::inhomogeneous && e.model.distinguished == i)
      symbol = '>';
    else if (e.model.kind == ModelKind::homogeneous && e.weight[i] != 0)
      symbol = '*';
    else if (e.zeros.contains(i))
      symbol = 'o';
    out += symbol;
  }
  if (e.model.kind == ModelKind::homogeneous && e.model.factor != 1) out += " [" + to_short_string(e.model.factor) + "]";
  return out;
}

std::vector<std::string> affine_candidates(int max_rank) {
  std::vector<std::string> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back("A" + std::to_string(n) + "~1");
  for (int n = 3; n <= max_rank; ++n) out.push_back("B" + std::to_string(n) + "~1");
  for (int n = 2; n <= max_rank; ++n) out.push_back("C" + std::to_string(n) + "~1");
  for (int n = 4; n <= max_rank; ++n) out.push_back("D" + std::to_string(n) + "~1");
  for (const char* s : {"E6~1", "E7~1", "E8~1", "F4~1", "G2~1", "E6~2", "D4~3"}) out.push_back(s);
  for (int n = 2; n <= 2 * max_rank; ++n)
    if (n != 3) out.push_back("A" + std::to_string(n) + "~2");
  for (int n = 3; n <= max_rank + 1; ++n) out.push_back("D" + std::to_string(n) + "~2");
  return out;
}

std::vector<std::string> finite_candidates(int max_rank) {
  std::vector<std::string> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back("A" + std::to_string(n));
  for (int n = 2; n <= max_rank; ++n) out.push_back("B" + std::to_string(n));
  for (int n = 3; n <= max_rank; ++n) out.push_back("C" + std::to_string(n));
  for (int n = 4; n <= max_rank; ++n) out.push_back("D" + std::to_string(n));
  for (const char* s : {"E6", "E7", "E8", "F4", "G2"}) out.push_back(s);
  return out;
}

std::vector<SystemId> bounded(const std::vector<std::string>& candidates, int max_rank) {
  std::vector<SystemId> out;
  for (const auto& s : candidates) {
    SystemId id = parse_selector(s);
    if (static_cast<int>(build_system(id).rank()) <= max_rank) out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string to_string(Mode mode) { return mode == Mode::genuine ? "genuine" : "hamiltonian"; }

Mode parse_mode(const std::string& text) {
  if (text == "genuine") return Mode::genuine;
  if (text == "hamiltonian") return Mode::hamiltonian;
  throw std::invalid_argument("unknown mode: " + text);
}

std::vector<std::pair<SystemId, Mode>> expand(const ReportConfig& config) {
  std::vector<std::pair<SystemId, Mode>> out;
  const bool genuine = config.mode != ModeSelection::hamiltonian;
  const bool hamiltonian = config.mode != ModeSelection::genuine;
  if (config.system == "all") {
    if (config.max_rank < 1 || config.max_rank > 16) throw std::invalid_argument("max rank must lie in 1..16");
    if (genuine)
      for (const auto& id : bounded(affine_candidates(config.max_rank), config.max_rank)) out.emplace_back(id, Mode::genuine);
    if (hamiltonian)
      for (const auto& id : bounded(finite_candidates(config.max_rank), config.max_rank))
        out.emplace_back(id, Mode::hamiltonian);
    return out;
  }
  SystemId id = parse_selector(config.system);
  if (id.affine() && !genuine) throw std::invalid_argument(config.system + " is affine; use the genuine mode");
  if (!id.affine() && !hamiltonian) throw std::invalid_argument(config.system + " is finite; use the hamiltonian mode");
  out.emplace_back(id, id.affine() ? Mode::genuine : Mode::hamiltonian);
  return out;
}

std::string serialize(const std::vector<Run>& runs) {
  json doc;
  doc["tool"] = kTool;
  doc["version"] = kVersion;
  doc["runs"] = json::array();
  for (const auto& run : runs) {
    auto sys = build_system(run.system);
    json j;
    j["system"] = run.system.selector();
    j["mode"] = to_string(run.mode);
    std::size_t orbits = 0;
    for (const auto& r : run.records) orbits += r.canonical ? 1 : 0;
    j["orbits"] = orbits;
    j["records"] = json::array();
    for (const auto& r : run.records) j["records"].push_back(record_json(sys, r));
    doc["runs"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::vector<Run> parse_report(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  std::vector<Run> runs;
  try {
    for (const auto& j : doc.at("runs")) {
      Run run;
      run.system = parse_selector(j.at("system").get<std::string>());
      run.mode = parse_mode(j.at("mode").get<std::string>());
      auto sys = build_system(run.system);
      for (const auto& r : j.at("records")) run.records.push_back(record_from_json(sys, r));
      runs.push_back(std::move(run));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
  return runs;
}

std::string emit_table(const std::vector<Run>& runs) {
  std::ostringstream out;
  const std::vector<std::string> header = {"kind", "S(X1)", "model at X1", "S(X2)", "model at X2", "c", "orbit", "triples"};
  for (const auto& run : runs) {
    auto sys = build_system(run.system);
    std::vector<std::vector<std::string>> rows{header};
    for (const auto& r : run.records) {
      rows.push_back({to_string(r.kind), face(sys, r.end1.zeros), model_text(sys, r.end1), face(sys, r.end2.zeros),
                      model_text(sys, r.end2), to_short_string(r.c),
                      std::to_string(r.polytope) + (r.canonical ? "" : "'") + " x" + std::to_string(r.orbit_size),
                      r.end1.model.triple + " | " + r.end2.model.triple});
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& row : rows)
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    out << "== " << run.system.selector() << " " << to_string(run.mode) << ": " << run.records.size() << " records\n";
    for (const auto& row : rows) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      out << line << "\n";
    }
  }
  return out.str();
}

std::string emit_diagram(const RootSystem& sys, const PolytopeRecord& record) {
  std::string out = end_diagram(sys, record.end1) + "  |  " + end_diagram(sys, record.end2);
  std::string extra;
  for (int i = 0; i < static_cast<int>(sys.size()); ++i)
    for (int j = i + 2; j < static_cast<int>(sys.size()); ++j)
      if (sys.gcm(i, j) != 0) {
        extra += extra.empty() ? "" : " ";
        extra += std::to_string(sys.label(i)) + bond(sys, i, j) + std::to_string(sys.label(j));
      }
  if (!extra.empty()) out += "  (" + extra + ")";
  return out;
}

std::string emit_diagrams(const std::vector<Run>& runs) {
  std::ostringstream out;
  for (const auto& run : runs) {
    auto sys = build_system(run.system);
    out << "== " << run.system.selector() << " " << to_string(run.mode) << ": " << run.records.size() << " records\n";
    for (const auto& r : run.records) out << std::left << std::setw(8) << to_string(r.kind) << emit_diagram(sys, r) << "\n";
  }
  return out.str();
}

RunResult run(const ReportConfig& config) {
  RunResult result;
  std::vector<std::pair<SystemId, Mode>> plan;
  try {
    plan = expand(config);
  } catch (const std::exception& e) {
    result.status = exit_usage;
    result.error = e.what();
    return result;
  }

  std::vector<Run> runs;
  for (const auto& [id, mode] : plan) {
    auto sys = build_system(id);
    Run r{id, mode, classify(sys, mode, !config.dedupe)};
    if (config.check) {
      for (const auto& rec : r.records)
        for (const auto& v : check_record(sys, mode, rec))
          result.violations.push_back(id.selector() + " " + record_key(rec) + ": " + v);
    }
    runs.push_back(std::move(r));
  }

  switch (config.format) {
    case Format::json: result.report = serialize(runs); break;
    case Format::table: result.report = emit_table(runs); break;
    case Format::diagram: result.report = emit_diagrams(runs); break;
  }

  if (!config.output.empty()) {
    std::ofstream file(config.output, std::ios::binary);
    file << result.report;
    if (!file) {
      result.status = exit_io;
      result.error = "cannot write " + config.output;
      return result;
    }
  }
  result.status = result.violations.empty() ? exit_ok : exit_violation;
  return result;
}

}  // namespace rankone
