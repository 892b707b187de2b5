#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "critgroup/int_matrix.hpp"

namespace critgroup {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Finite undirected multigraph. Parallel edges and loops are representable;
/// loops are ignored by every matrix and chip-firing computation.
///
/// Edges are stored in canonical order (sorted by endpoint pair, endpoints
/// normalised so that u <= v), so two graphs built from the same edge multiset
/// compare equal. Optional edge labels travel with their edges when sorting.
class Multigraph {
 public:
  struct Edge {
    VertexId u;
    VertexId v;
    bool is_loop() const { return u == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  Multigraph() = default;
  Multigraph(std::size_t vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges,
             std::vector<std::string> vertex_labels = {},
             std::vector<std::string> edge_labels = {});

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  const std::string& vertex_label(VertexId v) const { return vertex_labels_[v]; }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  std::optional<VertexId> find_vertex(std::string_view label) const;

  bool has_edge_labels() const { return !edge_labels_.empty(); }
  const std::string& edge_label(EdgeId e) const { return edge_labels_.at(e); }
  std::optional<EdgeId> find_edge(std::string_view label) const;

  std::size_t loop_count() const;
  /// Number of edges joining u and v (loops at u when u == v).
  std::size_t multiplicity(VertexId u, VertexId v) const;
  /// Loopless degree.
  std::size_t degree(VertexId v) const;
  /// Ids of all edges joining u and v, in canonical order.
  std::vector<EdgeId> edges_between(VertexId u, VertexId v) const;

  bool is_connected() const;
  /// Connected, loopless, no parallel edges and |E| = |V| - 1.
  bool is_tree() const;

  /// Graph equality compares vertex count and canonical edge list only.
  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> vertex_labels_;
  std::vector<std::string> edge_labels_;
};

IntMatrix adjacency_matrix(const Multigraph& g);
/// D - A (positive semidefinite convention).
IntMatrix laplacian(const Multigraph& g);
/// Laplacian with the root's row and column removed. Requires a connected
/// graph with at least two vertices.
IntMatrix reduced_laplacian(const Multigraph& g, VertexId root);
/// Matrix-tree theorem; requires a connected graph.
Integer spanning_tree_count(const Multigraph& g);

}  // namespace critgroup
