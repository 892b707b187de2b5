#include "critgroup/quotient.hpp"

#include <algorithm>
#include <queue>

#include "critgroup/error.hpp"

namespace critgroup {

QuotientResult quotient_graph(const Multigraph& g, const PermutationGroup& group) {
  if (!is_harmonic(g, group)) {
    throw Error(ErrorCode::kNonHarmonic, "the group does not act harmonically");
  }
  QuotientResult q;
  q.group_order = group.size();
  q.fibers = orbits(g, group);
  q.vertex_map.assign(g.vertex_count(), 0);
  q.multiplicity.assign(g.vertex_count(), 0);
  std::vector<std::string> labels;
  for (VertexId w = 0; w < q.fibers.size(); ++w) {
    labels.push_back("q:" + g.vertex_label(q.fibers[w].front()));
    for (VertexId v : q.fibers[w]) {
      q.vertex_map[v] = w;
      q.multiplicity[v] = group.size() / q.fibers[w].size();
    }
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::string> edge_labels;
  for (const auto& orbit : edge_orbits(g, group)) {
    const auto& e = g.edge(orbit.front());
    const VertexId a = q.vertex_map[e.u];
    const VertexId b = q.vertex_map[e.v];
    if (a == b) {
      ++q.collapsed_edges;
      continue;
    }
    edges.emplace_back(a, b);
    if (g.has_edge_labels()) edge_labels.push_back("q:" + g.edge_label(orbit.front()));
  }
  q.quotient = Multigraph(q.fibers.size(), edges, std::move(labels), std::move(edge_labels));
  return q;
}

Divisor pullback(const QuotientResult& q, const Divisor& d) {
  if (d.size() != q.fibers.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "divisor does not live on the quotient");
  }
  Divisor out(q.vertex_map.size());
  for (VertexId v = 0; v < out.size(); ++v) out[v] = Integer(q.multiplicity[v]) * d[q.vertex_map[v]];
  return out;
}

Divisor pullback_between(const QuotientResult& to_h, const QuotientResult& to_b, const Divisor& d) {
  if (d.size() != to_b.fibers.size() || to_h.vertex_map.size() != to_b.vertex_map.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "divisor does not live on the base quotient");
  }
  Divisor out(to_h.fibers.size());
  for (VertexId w = 0; w < to_h.fibers.size(); ++w) {
    const VertexId v = to_h.fibers[w].front();
    if (to_b.multiplicity[v] % to_h.multiplicity[v] != 0) {
      throw Error(ErrorCode::kInvalidArgument, "the acting groups are not nested");
    }
    out[w] = Integer(to_b.multiplicity[v] / to_h.multiplicity[v]) * d[to_b.vertex_map[v]];
  }
  return out;
}

std::optional<Divisor> pullback_witness(const QuotientResult& q, const Divisor& delta) {
  if (delta.size() != q.vertex_map.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "divisor does not live on the source graph");
  }
  if (delta.degree() != 0) throw Error(ErrorCode::kNonzeroDegree, "divisor has nonzero degree");
  Divisor witness(q.fibers.size());
  for (VertexId w = 0; w < q.fibers.size(); ++w) {
    const auto& fiber = q.fibers[w];
    const Integer& value = delta[fiber.front()];
    for (VertexId v : fiber)
      if (delta[v] != value) return std::nullopt;
    const std::size_t m = q.multiplicity[fiber.front()];
    if (!mpz_divisible_ui_p(value.get_mpz_t(), m)) return std::nullopt;
    witness[w] = value / Integer(m);
  }
  return witness;
}

bool is_pullback(const QuotientResult& q, const Divisor& delta) {
  return pullback_witness(q, delta).has_value();
}

FiringScript tree_reduce(const Multigraph& g, const QuotientResult& q, const Divisor& delta) {
  if (!q.quotient.is_tree()) throw Error(ErrorCode::kPrecondition, "quotient is not a tree");
  if (!pullback_witness(q, delta)) {
    throw Error(ErrorCode::kPrecondition, "divisor fails the pullback criterion");
  }
  const Multigraph& tree = q.quotient;
  const std::size_t k = tree.vertex_count();

  // weight[a][b]: edges from one vertex above a to the whole fiber above b.
  std::vector<std::vector<Integer>> weight(k, std::vector<Integer>(k, 0));
  for (VertexId a = 0; a < k; ++a) {
    const VertexId rep = q.fibers[a].front();
    for (const auto& e : g.edges()) {
      if (e.is_loop()) continue;
      if (e.u == rep) weight[a][q.vertex_map[e.v]] += 1;
      if (e.v == rep) weight[a][q.vertex_map[e.u]] += 1;
    }
  }

  std::vector<VertexId> order{0};
  std::vector<std::size_t> parent(k, k);
  std::vector<bool> seen(k, false);
  seen[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId a = order[head];
    for (VertexId b = 0; b < k; ++b)
      if (!seen[b] && tree.multiplicity(a, b) > 0) {
        seen[b] = true;
        parent[b] = a;
        order.push_back(b);
      }
  }

  // diff[a] = script(a) - script(parent(a)), fixed leaves first.
  std::vector<Integer> diff(k, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId a = *it;
    if (a == 0) continue;
    Integer need = delta[q.fibers[a].front()];
    for (VertexId c = 0; c < k; ++c)
      if (parent[c] == a) need += weight[a][c] * diff[c];
    const Integer& w = weight[a][parent[a]];
    if (!mpz_divisible_p(need.get_mpz_t(), w.get_mpz_t())) {
      throw Error(ErrorCode::kPrecondition, "leaf peeling left a non-divisible remainder");
    }
    diff[a] = need / w;
  }
  std::vector<Integer> level(k, 0);
  for (VertexId a : order)
    if (a != 0) level[a] = level[parent[a]] + diff[a];

  FiringScript script;
  script.values.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) script.values[v] = level[q.vertex_map[v]];
  if (!apply_firing(g, delta, script).is_zero()) {
    throw Error(ErrorCode::kPrecondition, "firing script did not reach the zero divisor");
  }
  return script;
}

}  // namespace critgroup
