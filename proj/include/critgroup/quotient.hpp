#pragma once

#include <optional>
#include <vector>

#include "critgroup/critical_group.hpp"
#include "critgroup/group_action.hpp"

namespace critgroup {

/// G / Gamma for a harmonic action. Quotient vertices are the vertex orbits
/// (ordered by minimal vertex); quotient edges are the edge orbits joining two
/// distinct vertex orbits. Edge orbits inside one vertex orbit would become
/// loops and are only counted.
struct QuotientResult {
  Multigraph quotient;
  /// phi: source vertex -> quotient vertex.
  std::vector<VertexId> vertex_map;
  /// Horizontal multiplicity |Stab(v)| per source vertex.
  std::vector<std::size_t> multiplicity;
  std::size_t group_order = 0;
  std::size_t collapsed_edges = 0;
  /// fibers[w] lists the source vertices above quotient vertex w.
  std::vector<std::vector<VertexId>> fibers;
};

/// Throws kNonHarmonic when the group does not act harmonically.
QuotientResult quotient_graph(const Multigraph& g, const PermutationGroup& group);

/// v -> m(v) * d(phi(v)).
Divisor pullback(const QuotientResult& q, const Divisor& d);

/// Pullback along the intermediate map H -> B when both are quotients of
/// the same source by nested groups (the group of `to_h` inside that of
/// `to_b`). Multiplicities are the ratios m_B(v) / m_H(v).
Divisor pullback_between(const QuotientResult& to_h, const QuotientResult& to_b, const Divisor& d);

/// The divisor d on the quotient with pullback(d) == delta, if one exists:
/// delta must be constant on orbits and delta(v) divisible by m(v).
/// Throws kNonzeroDegree for delta of nonzero degree.
std::optional<Divisor> pullback_witness(const QuotientResult& q, const Divisor& delta);
bool is_pullback(const QuotientResult& q, const Divisor& delta);

/// Firing script, constant on orbits, that brings a pullback divisor to zero
/// when the quotient is a tree. Leaves are peeled towards quotient vertex 0.
/// Throws kPrecondition if the quotient is not a tree or delta is not a pullback.
FiringScript tree_reduce(const Multigraph& g, const QuotientResult& q, const Divisor& delta);

}  // namespace critgroup
