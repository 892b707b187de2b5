#pragma once

#include <vector>

#include "critgroup/abelian_group.hpp"
#include "critgroup/exact_linalg.hpp"
#include "critgroup/multigraph.hpp"

namespace critgroup {

/// Integer-valued function on the vertices of a graph.
struct Divisor {
  IntVector values;

  Divisor() = default;
  explicit Divisor(std::size_t n) : values(n) {}
  explicit Divisor(IntVector v) : values(std::move(v)) {}
  static Divisor from(std::initializer_list<long> v) { return Divisor(to_int_vector(v)); }
  /// e_a - e_b
  static Divisor difference(std::size_t n, VertexId a, VertexId b);

  std::size_t size() const { return values.size(); }
  Integer degree() const;
  bool is_zero() const { return critgroup::is_zero(values); }
  const Integer& operator[](VertexId v) const { return values[v]; }
  Integer& operator[](VertexId v) { return values[v]; }

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator-(Divisor a);
  friend Divisor operator*(const Integer& k, Divisor a);
  friend bool operator==(const Divisor&, const Divisor&) = default;
};

/// Vertex v fires values[v] times (negative values borrow).
struct FiringScript {
  IntVector values;
};

/// delta - L * script, with L = D - A.
Divisor apply_firing(const Multigraph& g, const Divisor& delta, const FiringScript& script);

/// The critical group K(G) = (degree-zero divisors) / (Laplacian lattice),
/// computed as the cokernel of the reduced Laplacian at the lowest-index
/// root, together with the projection of divisors into group coordinates.
class CriticalGroup {
 public:
  explicit CriticalGroup(const Multigraph& g);

  const Multigraph& graph() const { return graph_; }
  const FinAbGroup& group() const { return cokernel_.group; }
  VertexId root() const { return 0; }
  const IntMatrix& laplacian() const { return laplacian_; }
  const IntMatrix& reduced_laplacian() const { return reduced_; }
  const CoordinateMap& coordinates() const { return cokernel_.coordinates; }
  const HnfResult& reduced_hnf() const { return reduced_hnf_; }

  /// Drops the root coordinate. Requires a degree-0 divisor of the right size.
  IntVector reduce(const Divisor& delta) const;
  /// Inverse of reduce: the root receives minus the sum of the rest.
  Divisor expand(const IntVector& reduced) const;

  /// Group coordinates of a degree-0 divisor; zero iff the divisor is principal.
  IntVector project(const Divisor& delta) const;
  /// Degree-0 divisor whose class is the i-th standard generator.
  Divisor generator(std::size_t i) const;

 private:
  void check(const Divisor& delta) const;

  Multigraph graph_;
  IntMatrix laplacian_;
  IntMatrix reduced_;
  HnfResult reduced_hnf_;
  Cokernel cokernel_;
};

/// Membership of a degree-0 divisor in the Laplacian lattice, decided by
/// lattice membership on the reduced system (independent of project()).
bool is_principal(const CriticalGroup& cg, const Divisor& delta);

/// Structure of the subgroup generated by the classes of `gens`.
FinAbGroup subgroup_generated(const CriticalGroup& cg, const std::vector<Divisor>& gens);
/// K(G) / <gens>, as the cokernel of [reduced Laplacian | reduced gens].
FinAbGroup quotient_by_subgroup(const CriticalGroup& cg, const std::vector<Divisor>& gens);

/// Reduced coordinates of each divisor as matrix columns.
IntMatrix reduced_columns(const CriticalGroup& cg, const std::vector<Divisor>& divisors);

}  // namespace critgroup
