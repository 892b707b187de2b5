#pragma once

#include <string>
#include <vector>

#include "critgroup/group_action.hpp"
#include "critgroup/multigraph.hpp"

namespace critgroup {

/// A graph together with the dihedral action it is studied with.
struct FamilyInstance {
  std::string name;
  Multigraph graph;
  DihedralAction action;
};

/// C_n^{a_1,...,a_k}: for every listed step a and every i an edge v_i - v_{i+a}.
/// sigma1(v_i) = v_{n+1-i}, sigma2(v_i) = v_{n+2-i}. Repeated steps are
/// dropped; a and n - a are kept as separate steps, so C_3^{1,2} is a doubled
/// triangle. Throws kInvalidArgument for bad parameters and kNonHarmonic
/// (naming an offending edge) when the reflections fix an edge.
FamilyInstance circulant(std::size_t n, const std::vector<std::size_t>& steps);

/// n copies of `base` glued in a cycle, b of copy i identified with a of copy
/// i+1. `phi` is an involution of base with phi(a) = b. The glued vertices
/// are w1..wn; the copy of v in copy i is labelled "<label>_i".
FamilyInstance chained_copies(const Multigraph& base, const std::vector<VertexId>& phi, VertexId a,
                              VertexId b, std::size_t n, const std::string& name = "chained");

/// Preset bases for chained_copies: "edge" (a-b), "path" (a-m-b) and
/// "square" (a-p-b-q with phi = (a b)(p q)).
FamilyInstance chained_preset(const std::string& base, std::size_t n);

/// Inner n-cycle z_i, outer 2n-cycle x_1 y_2 x_2 y_3 ... x_n y_1, spokes
/// z_i - x_i and z_i - y_i. sigma1 fixes z_1, sigma2 swaps z_1 and z_2.
FamilyInstance concentric_polygon(std::size_t n);

/// K_{2,4} on {x1, x2} x {a1, a2, b1, b2}; sigma1 = (x1 x2), sigma2 = (a1 b1)(a2 b2).
FamilyInstance klein_example();

/// v1 and v2 joined to each of x1, x2, x3 by doubled edges, with the edge
/// permutations sigma1 = (a1 a2)(b1 c2)(b2 c1)(d1 d2)(e1 f2)(e2 f1) and
/// sigma2 = (a1 b2)(a2 b1)(c1 c2)(d1 e2)(d2 e1)(f1 f2).
FamilyInstance intro_counterexample();

/// Path v1..vk, chords v_i - v_{i+2} (v_{k+1} read as vinf), and a doubled
/// edge v_k - vinf.
Multigraph h_graph(std::size_t k);

/// F_1 = F_2 = 1.
Integer fibonacci(std::size_t n);

}  // namespace critgroup
