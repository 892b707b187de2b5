#include "critgroup/critical_group.hpp"

#include "critgroup/error.hpp"

namespace critgroup {

Divisor Divisor::difference(std::size_t n, VertexId a, VertexId b) {
  Divisor d(n);
  d[a] += 1;
  d[b] -= 1;
  return d;
}

Integer Divisor::degree() const {
  Integer s = 0;
  for (const auto& x : values) s += x;
  return s;
}

Divisor& Divisor::operator+=(const Divisor& o) {
  if (o.size() != size()) throw Error(ErrorCode::kDimensionMismatch, "divisor size mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  if (o.size() != size()) throw Error(ErrorCode::kDimensionMismatch, "divisor size mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
  return *this;
}

Divisor operator-(Divisor a) {
  for (auto& x : a.values) x = -x;
  return a;
}

Divisor operator*(const Integer& k, Divisor a) {
  for (auto& x : a.values) x *= k;
  return a;
}

Divisor apply_firing(const Multigraph& g, const Divisor& delta, const FiringScript& script) {
  if (delta.size() != g.vertex_count() || script.values.size() != g.vertex_count()) {
    throw Error(ErrorCode::kDimensionMismatch, "divisor or script does not match the graph");
  }
  Divisor out = delta;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    // Each firing of u sends one chip along the edge to v, and vice versa.
    Integer flow = script.values[e.u] - script.values[e.v];
    out[e.u] -= flow;
    out[e.v] += flow;
  }
  return out;
}

CriticalGroup::CriticalGroup(const Multigraph& g) : graph_(g), laplacian_(critgroup::laplacian(g)) {
  if (!g.is_connected()) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  reduced_ = laplacian_.without_row_and_column(root(), root());
  reduced_hnf_ = hermite_normal_form(reduced_);
  cokernel_ = cokernel(reduced_);
}

void CriticalGroup::check(const Divisor& delta) const {
  if (delta.size() != graph_.vertex_count()) {
    throw Error(ErrorCode::kDimensionMismatch, "divisor does not match the graph");
  }
  if (delta.degree() != 0) {
    throw Error(ErrorCode::kNonzeroDegree, "divisor has nonzero degree");
  }
}

IntVector CriticalGroup::reduce(const Divisor& delta) const {
  check(delta);
  IntVector r;
  r.reserve(delta.size() - 1);
  for (VertexId v = 0; v < delta.size(); ++v)
    if (v != root()) r.push_back(delta[v]);
  return r;
}

Divisor CriticalGroup::expand(const IntVector& reduced) const {
  if (reduced.size() + 1 != graph_.vertex_count()) {
    throw Error(ErrorCode::kDimensionMismatch, "reduced vector has the wrong length");
  }
  Divisor d(graph_.vertex_count());
  Integer sum = 0;
  for (std::size_t i = 0, v = 0; v < d.size(); ++v) {
    if (v == root()) continue;
    d[v] = reduced[i++];
    sum += d[v];
  }
  d[root()] = -sum;
  return d;
}

IntVector CriticalGroup::project(const Divisor& delta) const {
  return coordinates().apply(reduce(delta));
}

Divisor CriticalGroup::generator(std::size_t i) const {
  return expand(coordinates().generator(i));
}

bool is_principal(const CriticalGroup& cg, const Divisor& delta) {
  return lattice_contains(cg.reduced_hnf(), cg.reduce(delta));
}

IntMatrix reduced_columns(const CriticalGroup& cg, const std::vector<Divisor>& divisors) {
  std::vector<IntVector> cols;
  cols.reserve(divisors.size());
  for (const auto& d : divisors) cols.push_back(cg.reduce(d));
  return IntMatrix::from_columns(cg.graph().vertex_count() - 1, cols);
}

FinAbGroup subgroup_generated(const CriticalGroup& cg, const std::vector<Divisor>& gens) {
  // In group coordinates the subgroup is (span(M) + diag(d)) / diag(d).
  const IntVector& d = cg.coordinates().moduli;
  std::vector<IntVector> cols;
  for (const auto& g : gens) cols.push_back(cg.project(g));
  const IntMatrix relations = IntMatrix::diagonal(d);
  if (d.empty()) return FinAbGroup{};
  return subquotient(hconcat(IntMatrix::from_columns(d.size(), cols), relations), relations);
}

FinAbGroup quotient_by_subgroup(const CriticalGroup& cg, const std::vector<Divisor>& gens) {
  return cokernel(hconcat(cg.reduced_laplacian(), reduced_columns(cg, gens))).group;
}

}  // namespace critgroup
