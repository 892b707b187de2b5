#pragma once

#include <cstddef>
#include <vector>

#include "critgroup/multigraph.hpp"

namespace critgroup {

/// A graph automorphism: a vertex permutation together with the induced
/// permutation of edge ids. When only the vertex map is known, the k-th
/// parallel copy between u and v is sent to the k-th copy between the images;
/// an explicit edge map is needed for actions that permute parallel edges
/// non-trivially.
class VertexPermutation {
 public:
  VertexPermutation() = default;

  static VertexPermutation identity(const Multigraph& g);
  /// Throws kNotAutomorphism if the map is not a bijection preserving edge multiplicities.
  static VertexPermutation from_vertex_map(const Multigraph& g, std::vector<VertexId> image);
  /// Throws kNotAutomorphism unless both maps are bijections and every edge
  /// is sent to an edge joining the images of its endpoints.
  static VertexPermutation from_maps(const Multigraph& g, std::vector<VertexId> vertex_image,
                                     std::vector<EdgeId> edge_image);

  VertexId operator()(VertexId v) const { return vertex_image_[v]; }
  EdgeId edge(EdgeId e) const { return edge_image_[e]; }
  const std::vector<VertexId>& vertex_image() const { return vertex_image_; }
  const std::vector<EdgeId>& edge_image() const { return edge_image_; }
  std::size_t degree() const { return vertex_image_.size(); }

  bool is_identity() const;
  bool fixes(VertexId v) const { return vertex_image_[v] == v; }
  VertexPermutation inverse() const;
  /// Smallest k >= 1 with p^k = identity.
  std::size_t order() const;

  /// (a * b)(v) = a(b(v)).
  friend VertexPermutation operator*(const VertexPermutation& a, const VertexPermutation& b);
  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
  friend auto operator<=>(const VertexPermutation&, const VertexPermutation&) = default;

 private:
  std::vector<VertexId> vertex_image_;
  std::vector<EdgeId> edge_image_;
};

using PermutationGroup = std::vector<VertexPermutation>;

/// Closure of the generators under composition, sorted and deduplicated;
/// always contains the identity.
PermutationGroup generate_group(const Multigraph& g, const std::vector<VertexPermutation>& gens);

/// No non-identity element fixes an edge whose endpoints it both fixes.
bool is_harmonic(const Multigraph& g, const PermutationGroup& group);

/// Vertex orbits, each sorted, ordered by their minimal vertex.
std::vector<std::vector<VertexId>> orbits(const Multigraph& g, const PermutationGroup& group);
/// Edge orbits under the edge action, each sorted, ordered by minimal edge id.
std::vector<std::vector<EdgeId>> edge_orbits(const Multigraph& g, const PermutationGroup& group);
PermutationGroup stabilizer(const PermutationGroup& group, VertexId v);

/// D_n generated by two involutions whose product sigma2*sigma1 has order n.
struct DihedralAction {
  std::size_t n = 0;
  VertexPermutation sigma1;
  VertexPermutation sigma2;
  /// All 2n elements, sorted.
  PermutationGroup elements;

  /// sigma2 * sigma1, the rotation by one step.
  VertexPermutation rotation() const { return sigma2 * sigma1; }
  PermutationGroup subgroup_sigma1() const;
  PermutationGroup subgroup_sigma2() const;
  PermutationGroup rotation_subgroup() const;
};

/// Validates the involutions and the dihedral relations. Throws
/// kNotAutomorphism / kInvalidArgument.
DihedralAction make_dihedral_action(const Multigraph& g, const VertexPermutation& sigma1,
                                    const VertexPermutation& sigma2);

/// Canonical labeling of a D_n-graph whose orbits all have n or 2n points:
/// sigma1(z_i) = z_{n+1-i}, sigma2(z_i) = z_{n+2-i}, sigma1(x_i) = y_{n+1-i},
/// sigma2(x_i) = y_{n+2-i} (1-based indices mod n; stored 0-based here).
///
/// When `swapped` is set the equations hold with the roles of sigma1 and
/// sigma2 exchanged; this is how even-n actions whose size-n orbits are
/// stabilised by conjugates of sigma1 are labelled.
struct OrbitLabeling {
  std::size_t n = 0;
  bool swapped = false;
  /// z[j][i] is z_{i+1}^{j+1}.
  std::vector<std::vector<VertexId>> z;
  std::vector<std::vector<VertexId>> x;
  std::vector<std::vector<VertexId>> y;

  std::size_t s() const { return z.size(); }
  std::size_t t() const { return x.size(); }
};

/// Builds the labeling and re-verifies every index equation. `x_seed_shift`
/// rotates the x_1 seed of every 2n-orbit by that many rotation steps.
/// Throws kNonHarmonic, kOrbitSize or kLabelingImpossible.
OrbitLabeling classify_dihedral_orbits(const Multigraph& g, const DihedralAction& action,
                                       std::size_t x_seed_shift = 0);

/// Checks the index equations of a labeling against the action.
bool labeling_satisfies_equations(const DihedralAction& action, const OrbitLabeling& labeling);

}  // namespace critgroup
