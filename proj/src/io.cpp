#include "lgc/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "lgc/errors.hpp"

namespace lgc {
namespace {

std::string Where(const std::string& source, std::size_t line) {
  return source + ":" + std::to_string(line);
}

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream OpenOut(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  return out;
}

std::string Format17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

double ParseDouble(const std::string& text, const std::string& where) {
  double x = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, x);
  if (ec != std::errc() || ptr != end || !std::isfinite(x)) {
    throw InputError(where + ": '" + text + "' is not a finite number");
  }
  return x;
}

std::uint64_t ParseId(const std::string& text, const std::string& where) {
  std::uint64_t x = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, x);
  if (ec != std::errc() || ptr != end) {
    throw InputError(where + ": '" + text + "' is not a nonnegative integer id");
  }
  return x;
}

VertexId LoadedGraph::ToInternal(std::uint64_t file_id) const {
  if (!compacted()) {
    if (file_id >= graph.vertex_count()) {
      throw InputError("vertex id " + std::to_string(file_id) + " is not in the graph");
    }
    return static_cast<VertexId>(file_id);
  }
  const auto it = std::lower_bound(original_ids.begin(), original_ids.end(), file_id);
  if (it == original_ids.end() || *it != file_id) {
    throw InputError("vertex id " + std::to_string(file_id) + " is not in the graph");
  }
  return static_cast<VertexId>(it - original_ids.begin());
}

LoadedGraph ParseEdgeList(std::istream& in, const std::string& source) {
  struct Raw {
    std::uint64_t u, v;
    double w;
    std::size_t line;
  };
  std::vector<Raw> raw;
  std::optional<std::uint64_t> declared;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = Trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::string body = Trim(t.substr(1));
      const std::string key = "vertices:";
      if (body.rfind(key, 0) == 0) {
        declared = ParseId(Trim(body.substr(key.size())), Where(source, lineno));
      }
      continue;
    }
    std::istringstream fields(t);
    std::vector<std::string> tok;
    for (std::string f; fields >> f;) tok.push_back(f);
    if (tok.size() != 2 && tok.size() != 3) {
      throw InputError(Where(source, lineno) + ": expected 'u v [w]'");
    }
    Raw r{ParseId(tok[0], Where(source, lineno)), ParseId(tok[1], Where(source, lineno)),
          tok.size() == 3 ? ParseDouble(tok[2], Where(source, lineno)) : 1.0, lineno};
    if (r.u == r.v) {
      throw InputError(Where(source, lineno) + ": self-loop at vertex " + std::to_string(r.u));
    }
    if (r.w < 0.0) throw InputError(Where(source, lineno) + ": negative weight");
    raw.push_back(r);
  }

  LoadedGraph out;
  std::vector<WeightedEdge> edges;
  edges.reserve(raw.size());
  if (declared) {
    for (const Raw& r : raw) {
      if (std::max(r.u, r.v) >= *declared) {
        throw InputError(Where(source, r.line) + ": id " + std::to_string(std::max(r.u, r.v)) +
                         " exceeds declared " + std::to_string(*declared) + " vertices");
      }
      edges.push_back({static_cast<VertexId>(r.u), static_cast<VertexId>(r.v), r.w});
    }
    out.graph = WeightedGraph::FromEdges(*declared, edges);
    return out;
  }
  std::vector<std::uint64_t> ids;
  for (const Raw& r : raw) {
    ids.push_back(r.u);
    ids.push_back(r.v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const bool contiguous = ids.empty() || ids.back() + 1 == ids.size();
  if (contiguous) {
    for (const Raw& r : raw) {
      edges.push_back({static_cast<VertexId>(r.u), static_cast<VertexId>(r.v), r.w});
    }
    out.graph = WeightedGraph::FromEdges(ids.size(), edges);
    return out;
  }
  out.original_ids = ids;
  const auto local = [&](std::uint64_t id) {
    return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  for (const Raw& r : raw) edges.push_back({local(r.u), local(r.v), r.w});
  out.graph = WeightedGraph::FromEdges(ids.size(), edges);
  return out;
}

LoadedGraph LoadGraph(const std::string& path) {
  std::ifstream in = OpenIn(path);
  return ParseEdgeList(in, path);
}

void WriteEdgeList(std::ostream& out, const WeightedGraph& graph) {
  out << "# vertices: " << graph.vertex_count() << "\n";
  for (const WeightedEdge& e : graph.Edges()) {
    out << e.u << ' ' << e.v << ' ' << Format17(e.weight) << '\n';
  }
}

void SaveGraph(const std::string& path, const WeightedGraph& graph) {
  std::ofstream out = OpenOut(path);
  WriteEdgeList(out, graph);
}

VertexSet ParseVertexSet(std::istream& in, const WeightedGraph& graph, const LoadedGraph* map,
                         const std::string& source) {
  std::vector<VertexId> ids;
  std::unordered_map<VertexId, std::size_t> first_line;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::uint64_t file_id = ParseId(t, Where(source, lineno));
    VertexId id;
    if (map) {
      try {
        id = map->ToInternal(file_id);
      } catch (const InputError& e) {
        throw InputError(Where(source, lineno) + ": " + e.what());
      }
    } else {
      if (file_id >= graph.vertex_count()) {
        throw InputError(Where(source, lineno) + ": vertex " + std::to_string(file_id) +
                         " is not in the graph");
      }
      id = static_cast<VertexId>(file_id);
    }
    const auto [it, inserted] = first_line.emplace(id, lineno);
    if (!inserted) {
      throw InputError(Where(source, lineno) + ": duplicate vertex " + t + " (first at line " +
                       std::to_string(it->second) + ")");
    }
    ids.push_back(id);
  }
  return VertexSet(graph, std::move(ids));
}

VertexSet LoadVertexSet(const std::string& path, const WeightedGraph& graph,
                        const LoadedGraph* map) {
  std::ifstream in = OpenIn(path);
  return ParseVertexSet(in, graph, map, path);
}

void SaveVertexSet(const std::string& path, const VertexSet& set) {
  std::ofstream out = OpenOut(path);
  for (VertexId u : set) out << u << '\n';
}

Points ParsePoints(std::istream& in, bool label_column, const std::string& source) {
  Points pts;
  std::string line;
  std::size_t lineno = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(t);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(Trim(f));
    std::size_t start = 0;
    if (label_column) {
      if (fields.empty()) throw InputError(Where(source, lineno) + ": missing label");
      const double lab = ParseDouble(fields[0], Where(source, lineno));
      if (lab != std::floor(lab)) {
        throw InputError(Where(source, lineno) + ": label is not an integer");
      }
      pts.labels.push_back(static_cast<int>(lab));
      start = 1;
    }
    std::vector<double> row;
    for (std::size_t i = start; i < fields.size(); ++i) {
      row.push_back(ParseDouble(fields[i], Where(source, lineno)));
    }
    if (row.empty()) throw InputError(Where(source, lineno) + ": empty feature row");
    if (pts.rows.empty()) width = row.size();
    if (row.size() != width) {
      throw InputError(Where(source, lineno) + ": expected " + std::to_string(width) +
                       " features, got " + std::to_string(row.size()));
    }
    pts.rows.push_back(std::move(row));
  }
  return pts;
}

Points LoadPoints(const std::string& path, bool label_column) {
  std::ifstream in = OpenIn(path);
  return ParsePoints(in, label_column, path);
}

void SaveLabels(const std::string& path, const std::vector<std::string>& labels) {
  std::ofstream out = OpenOut(path);
  out << "vertex,label\n";
  for (std::size_t u = 0; u < labels.size(); ++u) out << u << ',' << labels[u] << '\n';
}

void WriteSweepProfileCsv(std::ostream& out, const SweepProfile& profile) {
  out << "rank,vertex,normalized,prefix_volume,prefix_cut,prefix_conductance\n";
  for (std::size_t j = 0; j < profile.size(); ++j) {
    out << j + 1 << ',' << profile.order[j] << ',' << Format17(profile.normalized[j]) << ','
        << Format17(profile.prefix_volume[j]) << ',' << Format17(profile.prefix_cut[j]) << ','
        << Format17(profile.PrefixConductance(j)) << '\n';
  }
}

using nlohmann::json;

json ToJson(const VertexSet& s) { return json(std::vector<VertexId>(s.begin(), s.end())); }

json ToJson(const NibbleParams& p) {
  json j{{"seed_vertex", p.seed},   {"conn", p.conn},   {"vol0", p.vol0},
         {"alpha_scale", p.alpha_scale}, {"c_min", p.c_min}, {"c_max", p.c_max}};
  j["alpha_override"] = p.alpha_override ? json(*p.alpha_override) : json(nullptr);
  j["epsilon_override"] = p.epsilon_override ? json(*p.epsilon_override) : json(nullptr);
  return j;
}

json ToJson(const PushStats& s) {
  return {{"push_count", s.push_count}, {"work", s.work}, {"support_volume", s.support_volume}};
}

json ToJson(const NibbleResult& r) {
  return {{"set", ToJson(r.output_set)},
          {"size", r.output_set.size()},
          {"volume", r.output_set.volume()},
          {"phi", r.conductance},
          {"mode", ToString(r.mode)},
          {"alpha", r.alpha},
          {"epsilon", r.epsilon},
          {"candidates", r.candidates},
          {"stats", ToJson(r.stats)},
          {"params", ToJson(r.params)},
          {"warnings", r.warnings}};
}

json ToJson(const ConnectivityReport& r) {
  json j{{"definition", ToString(r.definition)},
         {"log_base", r.log_base},
         {"lambda", r.lambda},
         {"tau_mix_exceeded", r.tau_mix_exceeded},
         {"tau_mix_estimated", r.tau_mix_estimated},
         {"phi_s", r.phi_s},
         {"phi_s_exact", r.phi_s_exact},
         {"phi_s_disconnected", r.phi_s_disconnected},
         {"phi_a", r.phi_a},
         {"volume", r.volume},
         {"conn_mix", r.conn_mix},
         {"conn_lambda", r.conn_lambda},
         {"conn_phi_s", r.conn_phi_s},
         {"gap_mix", r.gap_mix},
         {"gap_lambda", r.gap_lambda},
         {"gap_phi_s", r.gap_phi_s},
         {"conn", r.conn()},
         {"gap", r.gap()}};
  j["tau_mix"] = r.tau_mix ? json(*r.tau_mix) : json(nullptr);
  return j;
}

json ToJson(const ClusterReport& r) {
  json j{{"phi_s", r.phi_s},       {"phi_a", r.phi_a},       {"conductance_ratio", r.conductance_ratio},
         {"recall", r.recall},     {"vol_out", r.vol_out},   {"vol_miss", r.vol_miss},
         {"accuracy", r.accuracy}, {"size_s", r.size_s},     {"size_a", r.size_a},
         {"intersection", r.intersection}};
  j["precision"] = r.precision_defined ? json(r.precision) : json(nullptr);
  return j;
}

json ToJson(const AppendixCheck& c) {
  return {{"lemma", ToString(c.request.lemma)},
          {"ell", c.request.ell},
          {"gamma", c.request.gamma},
          {"alpha", c.request.alpha()},
          {"measured", c.measured},
          {"bound", c.bound},
          {"slacked_bound", c.slacked_bound},
          {"truncation", c.truncation},
          {"margin", c.margin},
          {"pass", c.pass}};
}

json ToJson(const SweepScan& s) {
  return {{"min_phi", s.min_phi},
          {"prefix_length", s.prefix_length},
          {"phi_a", s.phi_a},
          {"ratio_to_phi_ell", s.ratio},
          {"position_c", s.position_c},
          {"position_d", s.position_d},
          {"c_without_d", s.c_without_d},
          {"normalized_d", s.lemma51.normalized_d},
          {"normalized_c", s.lemma51.normalized_c},
          {"lemma51", s.lemma51.pass}};
}

json ToJson(const HardGridPoint& p) {
  json j{{"ell", p.ell},
         {"phi_ell2", p.phi_ell2},
         {"gamma", p.gamma},
         {"n", p.spec.n},
         {"phi", p.spec.phi},
         {"c0", p.spec.c0},
         {"max_drift", p.max_drift},
         {"lemma51", p.lemma51},
         {"sweep_bound", p.sweep_bound},
         {"pass", p.pass()},
         {"error", p.error}};
  if (p.error.empty()) j["scan"] = ToJson(p.scan);
  return j;
}

json ToJson(const BetaRunRecord& r) {
  return {{"beta", r.beta},         {"run", r.run},         {"graph_seed", r.graph_seed},
          {"seed_vertex", r.seed_vertex}, {"ok", r.ok},     {"error", r.error},
          {"alpha", r.alpha},       {"phi_a", r.phi_a},     {"phi_s", r.phi_s},
          {"ratio", r.ratio},       {"accuracy", r.accuracy}, {"output_size", r.output_size}};
}

}  // namespace lgc
