#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lgc/connectivity.hpp"
#include "lgc/eval.hpp"
#include "lgc/nibble.hpp"
#include "lgc/oracles.hpp"
#include "lgc/sweep.hpp"

namespace lgc {

struct LoadedGraph {
  WeightedGraph graph;
  // Internal id -> id in the file. Empty when the file ids are used as is.
  std::vector<std::uint64_t> original_ids;

  bool compacted() const { return !original_ids.empty(); }
  // File id -> internal id; InputError if the id does not occur.
  VertexId ToInternal(std::uint64_t file_id) const;
};

// Edge list: "u v [w]" per line, '#' comments, blank lines ignored. A
// "# vertices: N" comment fixes the vertex count; otherwise ids that are not
// exactly 0..max are compacted in ascending order. Errors carry
// "<source>:<line>: ".
LoadedGraph ParseEdgeList(std::istream& in, const std::string& source = "<input>");
LoadedGraph LoadGraph(const std::string& path);

// "# vertices: N" header, then each edge once (u < v) with 17 significant
// digits.
void WriteEdgeList(std::ostream& out, const WeightedGraph& graph);
void SaveGraph(const std::string& path, const WeightedGraph& graph);

// One id per line, '#' comments; duplicates are errors with line numbers.
// Ids pass through `map` when given.
VertexSet ParseVertexSet(std::istream& in, const WeightedGraph& graph,
                         const LoadedGraph* map = nullptr,
                         const std::string& source = "<input>");
VertexSet LoadVertexSet(const std::string& path, const WeightedGraph& graph,
                        const LoadedGraph* map = nullptr);
void SaveVertexSet(const std::string& path, const VertexSet& set);

struct Points {
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;  // empty unless a label column was read
};

// CSV of feature vectors; with `label_column`, the first field of each row
// is an integer class label. Rows must be rectangular and finite.
Points ParsePoints(std::istream& in, bool label_column, const std::string& source = "<input>");
Points LoadPoints(const std::string& path, bool label_column);

// "vertex,label" rows.
void SaveLabels(const std::string& path, const std::vector<std::string>& labels);

// rank,vertex,normalized,prefix_volume,prefix_cut,prefix_conductance
void WriteSweepProfileCsv(std::ostream& out, const SweepProfile& profile);

nlohmann::json ToJson(const NibbleParams& p);
nlohmann::json ToJson(const PushStats& s);
nlohmann::json ToJson(const NibbleResult& r);
nlohmann::json ToJson(const ConnectivityReport& r);
nlohmann::json ToJson(const ClusterReport& r);
nlohmann::json ToJson(const AppendixCheck& c);
nlohmann::json ToJson(const SweepScan& s);
nlohmann::json ToJson(const HardGridPoint& p);
nlohmann::json ToJson(const BetaRunRecord& r);
nlohmann::json ToJson(const VertexSet& s);

// Strict number parsing shared by the loaders.
double ParseDouble(const std::string& text, const std::string& where);
std::uint64_t ParseId(const std::string& text, const std::string& where);

}  // namespace lgc
