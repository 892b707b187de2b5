#include "critgroup/families.hpp"

#include <algorithm>
#include <set>

#include "critgroup/error.hpp"

namespace critgroup {
namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

void require_harmonic(const Multigraph& g, const DihedralAction& action) {
  for (const auto& p : action.elements) {
    if (p.is_identity()) continue;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edge(e);
      if (p.fixes(edge.u) && p.fixes(edge.v) && p.edge(e) == e) {
        throw Error(ErrorCode::kNonHarmonic, "edge " + g.vertex_label(edge.u) + "-" +
                                                 g.vertex_label(edge.v) +
                                                 " is fixed by a non-identity element");
      }
    }
  }
}

EdgeId edge_by_label(const Multigraph& g, const std::string& label) {
  auto e = g.find_edge(label);
  if (!e) throw Error(ErrorCode::kInvalidArgument, "unknown edge label " + label);
  return *e;
}

}  // namespace

FamilyInstance circulant(std::size_t n, const std::vector<std::size_t>& steps) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "circulant needs n >= 3");
  if (steps.empty()) throw Error(ErrorCode::kInvalidArgument, "circulant needs at least one step");
  std::vector<std::size_t> distinct;
  for (std::size_t a : steps) {
    if (a < 1 || a >= n) throw Error(ErrorCode::kInvalidArgument, "circulant steps must satisfy 1 <= a < n");
    if (std::find(distinct.begin(), distinct.end(), a) == distinct.end()) distinct.push_back(a);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t a : distinct)
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + a) % n);
  Multigraph g(n, edges, numbered("v", n));

  std::vector<VertexId> s1(n), s2(n);
  for (std::size_t i = 0; i < n; ++i) {
    s1[i] = (2 * n - 1 - i) % n;
    s2[i] = (n - i) % n;
  }
  FamilyInstance out;
  out.name = "circulant";
  out.action = make_dihedral_action(g, VertexPermutation::from_vertex_map(g, s1),
                                    VertexPermutation::from_vertex_map(g, s2));
  require_harmonic(g, out.action);
  if (!g.is_connected()) throw Error(ErrorCode::kDisconnected, "circulant graph is disconnected");
  out.graph = std::move(g);
  return out;
}

FamilyInstance chained_copies(const Multigraph& base, const std::vector<VertexId>& phi, VertexId a,
                              VertexId b, std::size_t n, const std::string& name) {
  const std::size_t m = base.vertex_count();
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "chained_copies needs n >= 2");
  if (a >= m || b >= m || a == b) throw Error(ErrorCode::kInvalidArgument, "a and b must be distinct vertices");
  const VertexPermutation phi_perm = VertexPermutation::from_vertex_map(base, phi);
  if (!(phi_perm * phi_perm).is_identity()) {
    throw Error(ErrorCode::kInvalidArgument, "phi is not an involution");
  }
  if (phi[a] != b) throw Error(ErrorCode::kInvalidArgument, "phi(a) must equal b");

  // Interior vertices of copy i come first, then the glued vertices w_1..w_n
  // where w_i is b of copy i and a of copy i+1 (0-based, cyclic).
  std::vector<VertexId> interior;
  std::vector<std::size_t> slot(m, 0);
  for (VertexId v = 0; v < m; ++v)
    if (v != a && v != b) {
      slot[v] = interior.size();
      interior.push_back(v);
    }
  const std::size_t k = interior.size();
  auto vertex = [&](VertexId v, std::size_t copy) -> VertexId {
    copy %= n;
    if (v == b) return n * k + copy;
    if (v == a) return n * k + (copy + n - 1) % n;
    return copy * k + slot[v];
  };

  std::vector<std::string> labels(n * (k + 1));
  for (std::size_t c = 0; c < n; ++c) {
    for (VertexId v : interior) labels[vertex(v, c)] = base.vertex_label(v) + "_" + std::to_string(c + 1);
    labels[n * k + c] = "w" + std::to_string(c + 1);
  }
  auto edge_label = [&](EdgeId e, std::size_t copy) {
    return (base.has_edge_labels() ? base.edge_label(e) : "e" + std::to_string(e + 1)) + "_" +
           std::to_string(copy % n + 1);
  };
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::string> edge_labels;
  for (std::size_t c = 0; c < n; ++c)
    for (EdgeId e = 0; e < base.edge_count(); ++e) {
      edges.emplace_back(vertex(base.edge(e).u, c), vertex(base.edge(e).v, c));
      edge_labels.push_back(edge_label(e, c));
    }
  Multigraph g(labels.size(), edges, labels, edge_labels);

  // sigma_r sends v in copy i to phi(v) in copy r - i.
  auto reflection = [&](std::size_t r) {
    std::vector<VertexId> vimg(g.vertex_count());
    std::vector<EdgeId> eimg(g.edge_count());
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t target = (r + n - c) % n;
      for (VertexId v = 0; v < m; ++v) vimg[vertex(v, c)] = vertex(phi[v], target);
      for (EdgeId e = 0; e < base.edge_count(); ++e)
        eimg[edge_by_label(g, edge_label(e, c))] = edge_by_label(g, edge_label(phi_perm.edge(e), target));
    }
    return VertexPermutation::from_maps(g, vimg, eimg);
  };
  FamilyInstance out;
  out.name = name;
  out.action = make_dihedral_action(g, reflection(0), reflection(1));
  require_harmonic(g, out.action);
  out.graph = std::move(g);
  return out;
}

FamilyInstance chained_preset(const std::string& base, std::size_t n) {
  if (base == "edge") {
    Multigraph g(2, {{0, 1}}, {"a", "b"});
    return chained_copies(g, {1, 0}, 0, 1, n, "chained-edge");
  }
  if (base == "path") {
    Multigraph g(3, {{0, 1}, {1, 2}}, {"a", "m", "b"});
    return chained_copies(g, {2, 1, 0}, 0, 2, n, "chained-path");
  }
  if (base == "square") {
    // a=0, p=1, b=2, q=3
    Multigraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {"a", "p", "b", "q"});
    return chained_copies(g, {2, 3, 0, 1}, 0, 2, n, "chained-square");
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown chained base '" + base + "'");
}

FamilyInstance concentric_polygon(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "concentric_polygon needs n >= 3");
  auto z = [&](std::size_t i) -> VertexId { return i % n; };
  auto x = [&](std::size_t i) -> VertexId { return n + i % n; };
  auto y = [&](std::size_t i) -> VertexId { return 2 * n + i % n; };
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(z(i), z(i + 1));
    edges.emplace_back(x(i), y(i));
    edges.emplace_back(x(i), y(i + 1));
    edges.emplace_back(z(i), x(i));
    edges.emplace_back(z(i), y(i));
  }
  std::vector<std::string> labels = numbered("z", n);
  for (auto& l : numbered("x", n)) labels.push_back(l);
  for (auto& l : numbered("y", n)) labels.push_back(l);
  Multigraph g(3 * n, edges, labels);

  // sigma1: z_i -> z_{2-i}, x_i -> y_{2-i}, y_i -> x_{2-i}; sigma2 uses 3-i.
  auto reflection = [&](std::size_t shift) {
    std::vector<VertexId> img(3 * n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (shift + 2 * n - i) % n;  // 0-based image of 0-based i
      img[z(i)] = z(j);
      img[x(i)] = y(j);
      img[y(i)] = x(j);
    }
    return VertexPermutation::from_vertex_map(g, img);
  };
  FamilyInstance out;
  out.name = "concentric";
  out.action = make_dihedral_action(g, reflection(0), reflection(1));
  require_harmonic(g, out.action);
  out.graph = std::move(g);
  return out;
}

FamilyInstance klein_example() {
  // x1=0, x2=1, a1=2, a2=3, b1=4, b2=5
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId xv : {0, 1})
    for (VertexId w : {2, 3, 4, 5}) edges.emplace_back(xv, w);
  Multigraph g(6, edges, {"x1", "x2", "a1", "a2", "b1", "b2"});
  FamilyInstance out;
  out.name = "klein";
  out.action = make_dihedral_action(g, VertexPermutation::from_vertex_map(g, {1, 0, 2, 3, 4, 5}),
                                    VertexPermutation::from_vertex_map(g, {0, 1, 4, 5, 2, 3}));
  require_harmonic(g, out.action);
  out.graph = std::move(g);
  return out;
}

FamilyInstance intro_counterexample() {
  // v1=0, x1=1, x2=2, x3=3, v2=4
  const std::vector<std::pair<VertexId, VertexId>> edges{
      {0, 1}, {0, 1}, {0, 2}, {0, 2}, {0, 3}, {0, 3},
      {1, 4}, {1, 4}, {2, 4}, {2, 4}, {3, 4}, {3, 4}};
  const std::vector<std::string> edge_labels{"a1", "a2", "b1", "b2", "c1", "c2",
                                             "d1", "d2", "e1", "e2", "f1", "f2"};
  Multigraph g(5, edges, {"v1", "x1", "x2", "x3", "v2"}, edge_labels);

  auto from_cycles = [&](const std::vector<VertexId>& vimg,
                         const std::vector<std::pair<std::string, std::string>>& swaps) {
    std::vector<EdgeId> eimg(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) eimg[e] = e;
    for (const auto& [p, q] : swaps) {
      const EdgeId ep = edge_by_label(g, p);
      const EdgeId eq = edge_by_label(g, q);
      eimg[ep] = eq;
      eimg[eq] = ep;
    }
    return VertexPermutation::from_maps(g, vimg, eimg);
  };
  const VertexPermutation s1 = from_cycles(
      {0, 1, 3, 2, 4},
      {{"a1", "a2"}, {"b1", "c2"}, {"b2", "c1"}, {"d1", "d2"}, {"e1", "f2"}, {"e2", "f1"}});
  const VertexPermutation s2 = from_cycles(
      {0, 2, 1, 3, 4},
      {{"a1", "b2"}, {"a2", "b1"}, {"c1", "c2"}, {"d1", "e2"}, {"d2", "e1"}, {"f1", "f2"}});
  FamilyInstance out;
  out.name = "intro";
  out.action = make_dihedral_action(g, s1, s2);
  require_harmonic(g, out.action);
  out.graph = std::move(g);
  return out;
}

Multigraph h_graph(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "h_graph needs k >= 1");
  // v_i is vertex i-1 for i <= k; v_{k+1} stands for vinf = vertex k.
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  for (std::size_t i = 0; i + 2 <= k; ++i) edges.emplace_back(i, i + 2);
  edges.emplace_back(k - 1, k);
  edges.emplace_back(k - 1, k);
  std::vector<std::string> labels = numbered("v", k);
  labels.push_back("vinf");
  return Multigraph(k + 1, edges, labels);
}

Integer fibonacci(std::size_t n) {
  if (n == 0) return 0;
  Integer a = 1, b = 1;
  for (std::size_t i = 2; i < n; ++i) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  return n == 1 ? a : b;
}

}  // namespace critgroup
