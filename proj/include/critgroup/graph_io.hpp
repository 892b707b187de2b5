#pragma once

#include <optional>
#include <string>

#include "critgroup/abelian_group.hpp"
#include "critgroup/critical_group.hpp"
#include "critgroup/decomposition.hpp"
#include "critgroup/families.hpp"
#include "critgroup/quotient.hpp"
#include "json.hpp"

namespace critgroup {

using Json = nlohmann::json;

/// Contents of a graph file:
///   {"vertices": [...], "edges": [[u, v], ...], "edge_labels": [...],
///    "actions": {"sigma1": {v: w}, "sigma2": {...}},
///    "edge_actions": {"sigma1": {e: f}, "sigma2": {...}}}
/// Only "vertices" and "edges" are required. Without "edge_actions" the
/// k-th parallel edge is sent to the k-th parallel edge.
struct GraphFile {
  std::string name;
  Multigraph graph;
  std::optional<VertexPermutation> sigma1;
  std::optional<VertexPermutation> sigma2;

  bool has_actions() const { return sigma1.has_value() && sigma2.has_value(); }
};

/// Throws kParse on malformed input.
GraphFile parse_graph_file(const Json& j);
GraphFile read_graph_file(const std::string& path);

Json integer_to_json(const Integer& x);
Json to_json(const Multigraph& g);
Json to_json(const Multigraph& g, const VertexPermutation& sigma1, const VertexPermutation& sigma2);
Json to_json(const FamilyInstance& f);
Json to_json(const FinAbGroup& g);
Json divisor_to_json(const Multigraph& g, const Divisor& d);
Json to_json(const QuotientResult& q, const Multigraph& source);
Json to_json(const TheoremCheck& c, const Multigraph& g);
Json to_json(const DecompositionReport& r, const Multigraph& g);

}  // namespace critgroup
