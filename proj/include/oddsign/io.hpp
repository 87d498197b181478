#ifndef ODDSIGN_IO_HPP
#define ODDSIGN_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "oddsign/graph.hpp"
#include "oddsign/pipeline.hpp"
#include "oddsign/rational.hpp"
#include "oddsign/twojoin.hpp"
#include "oddsign/treedec.hpp"
#include "oddsign/wheel.hpp"

namespace oddsign {

using Json = nlohmann::json;

enum class GraphFormat { edge_list, json };

struct GraphDocument {
  Graph g;
  std::optional<WeightAssignment> w;  // absent means uniform

  WeightAssignment weights() const { return w ? *w : WeightAssignment::uniform(g); }
};

// Edge-list text: `p n m`, then `e u v` and optional `w u p/q` and `v u label`
// lines, one-based. Lines starting with `c` or `#` are comments.
GraphDocument parse_edge_list(const std::string& text);
std::string emit_edge_list(const GraphDocument& doc);

// {"n": 4, "edges": [[1,2],...], "labels": [...], "weights": {"1": "1/4", ...}}
GraphDocument parse_graph_json(const Json& j);
Json graph_to_json(const GraphDocument& doc);

// Picks the format from the first non-blank character ('{' means JSON).
GraphDocument parse_graph(const std::string& text);
std::string emit_graph(const GraphDocument& doc, GraphFormat format);

// Reads a file, or standard input for "-". Throws Error(no_input) when the
// file cannot be opened and DataError on malformed content.
GraphDocument read_graph(const std::string& path);
std::string read_text(const std::string& path);

Json vertex_list(VertexSet s);  // one-based, ascending
VertexSet parse_vertex_list(const Json& j, int n);
Json weights_to_json(const WeightAssignment& w);
WeightAssignment weights_from_json(const Json& j, int n);

struct RunMetadata {
  std::uint64_t seed = 0;
  std::string mode;
  std::uint64_t work_budget = 0;
  int treewidth_cap = 0;
  std::string parameters;  // "explicit", "paper", or "tight"
};

Json certificate_document(const GraphDocument& doc, const Rational& c, int d, const PipelineResult& r,
                          const RunMetadata& meta);

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  bool ok = false;
  std::string status;  // as recorded in the document
  std::vector<VerifyCheck> checks;
};

// Re-checks everything a certificate document claims without rerunning the
// pipeline: level weight totals, bag nesting, every lift, and the final
// separator against the input graph.
VerifyReport verify_certificate_document(const Json& doc);

Json membership_to_json(const MembershipResult& m);
Json forcer_to_json(const ForcerRecord& f, const CutsetCertificate& cert);
Json tree_decomposition_to_json(const TreeDecomposition& td);
// [{"a": [...], "c": [...], "b": [...]}, ...], one-based.
std::vector<Separation> separations_from_json(const Json& j, int n);
Json twojoin_split_to_json(const TwoJoinSplit& s);
Json twojoin_tree_to_json(const TwoJoinTree& t);

}  // namespace oddsign

#endif  // ODDSIGN_IO_HPP
