#include "critgroup/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "critgroup/error.hpp"

namespace critgroup {

Multigraph::Multigraph(std::size_t vertex_count,
                       const std::vector<std::pair<VertexId, VertexId>>& edges,
                       std::vector<std::string> vertex_labels,
                       std::vector<std::string> edge_labels)
    : vertex_count_(vertex_count) {
  if (vertex_labels.empty()) {
    vertex_labels.reserve(vertex_count);
    for (std::size_t i = 0; i < vertex_count; ++i) vertex_labels.push_back(std::to_string(i));
  }
  if (vertex_labels.size() != vertex_count) {
    throw Error(ErrorCode::kInvalidArgument, "vertex label count differs from vertex count");
  }
  if (std::set<std::string>(vertex_labels.begin(), vertex_labels.end()).size() != vertex_count) {
    throw Error(ErrorCode::kInvalidArgument, "vertex labels are not unique");
  }
  if (!edge_labels.empty()) {
    if (edge_labels.size() != edges.size()) {
      throw Error(ErrorCode::kInvalidArgument, "edge label count differs from edge count");
    }
    if (std::set<std::string>(edge_labels.begin(), edge_labels.end()).size() != edges.size()) {
      throw Error(ErrorCode::kInvalidArgument, "edge labels are not unique");
    }
  }
  vertex_labels_ = std::move(vertex_labels);

  std::vector<Edge> raw;
  raw.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) {
      throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    raw.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return raw[i] < raw[j]; });
  edges_.reserve(raw.size());
  for (std::size_t i : order) {
    edges_.push_back(raw[i]);
    if (!edge_labels.empty()) edge_labels_.push_back(std::move(edge_labels[i]));
  }
}

std::optional<VertexId> Multigraph::find_vertex(std::string_view label) const {
  for (VertexId v = 0; v < vertex_count_; ++v)
    if (vertex_labels_[v] == label) return v;
  return std::nullopt;
}

std::optional<EdgeId> Multigraph::find_edge(std::string_view label) const {
  for (EdgeId e = 0; e < edge_labels_.size(); ++e)
    if (edge_labels_[e] == label) return e;
  return std::nullopt;
}

std::size_t Multigraph::loop_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); }));
}

std::size_t Multigraph::multiplicity(VertexId u, VertexId v) const {
  return edges_between(u, v).size();
}

std::size_t Multigraph::degree(VertexId v) const {
  std::size_t d = 0;
  for (const auto& e : edges_)
    if (!e.is_loop() && (e.u == v || e.v == v)) ++d;
  return d;
}

std::vector<EdgeId> Multigraph::edges_between(VertexId u, VertexId v) const {
  const Edge key{std::min(u, v), std::max(u, v)};
  auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), key);
  std::vector<EdgeId> ids;
  for (auto it = lo; it != hi; ++it) ids.push_back(static_cast<EdgeId>(it - edges_.begin()));
  return ids;
}

bool Multigraph::is_connected() const {
  if (vertex_count_ == 0) return false;
  std::vector<std::vector<VertexId>> adj(vertex_count_);
  for (const auto& e : edges_) {
    if (e.is_loop()) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(vertex_count_, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == vertex_count_;
}

bool Multigraph::is_tree() const {
  if (!is_connected() || loop_count() != 0) return false;
  if (edges_.size() + 1 != vertex_count_) return false;
  return std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end();
}

IntMatrix adjacency_matrix(const Multigraph& g) {
  IntMatrix a(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    a(e.u, e.v) += 1;
    a(e.v, e.u) += 1;
  }
  return a;
}

IntMatrix laplacian(const Multigraph& g) {
  IntMatrix l(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    l(e.u, e.v) -= 1;
    l(e.v, e.u) -= 1;
    l(e.u, e.u) += 1;
    l(e.v, e.v) += 1;
  }
  return l;
}

IntMatrix reduced_laplacian(const Multigraph& g, VertexId root) {
  if (g.vertex_count() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "reduced Laplacian needs at least two vertices");
  }
  if (root >= g.vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument, "root vertex out of range");
  }
  if (!g.is_connected()) {
    throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  }
  return laplacian(g).without_row_and_column(root, root);
}

Integer spanning_tree_count(const Multigraph& g) {
  if (!g.is_connected()) {
    throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  }
  if (g.vertex_count() == 1) return 1;
  return abs(determinant(reduced_laplacian(g, 0)));
}

}  // namespace critgroup
