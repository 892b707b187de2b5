#pragma once

#include <string>
#include <vector>

#include "critgroup/int_matrix.hpp"

namespace critgroup {

/// Finite abelian group stored as its invariant-factor chain d1 | d2 | ...,
/// every factor >= 2. The empty chain is the trivial group.
class FinAbGroup {
 public:
  FinAbGroup() = default;

  /// Canonicalises an arbitrary list of cyclic orders (any order, 1s allowed)
  /// into the invariant-factor chain of their direct sum. Zero is rejected.
  static FinAbGroup from_orders(const IntVector& orders);
  static FinAbGroup from_orders(std::initializer_list<long> orders);
  static FinAbGroup cyclic(const Integer& n) { return from_orders(IntVector{n}); }

  const IntVector& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  bool is_trivial() const { return factors_.empty(); }
  Integer order() const;
  /// Largest element order (the last invariant factor).
  Integer exponent() const;

  std::string to_string() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  IntVector factors_;
};

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);
FinAbGroup direct_power(const FinAbGroup& a, std::size_t times);
bool is_isomorphic(const FinAbGroup& a, const FinAbGroup& b);

/// Sends an ambient integer vector to coordinates in Z/d1 + Z/d2 + ...
struct CoordinateMap {
  IntVector moduli;
  /// moduli.size() x ambient_dimension
  IntMatrix projection;
  /// ambient_dimension x moduli.size(); column i projects onto the i-th unit vector.
  IntMatrix generators;

  std::size_t ambient_dimension() const { return projection.cols(); }
  /// Coordinates reduced into [0, d_i).
  IntVector apply(const IntVector& x) const;
  IntVector generator(std::size_t i) const { return generators.column(i); }
};

struct Cokernel {
  FinAbGroup group;
  CoordinateMap coordinates;
};

/// Z^rows / (column span of relations). Throws kInfiniteGroup when the
/// quotient has a free part.
Cokernel cokernel(const IntMatrix& relations);

/// A / B for lattices B <= A in Z^m given by generator columns. Throws
/// kInvalidArgument when B is not contained in A and kInfiniteGroup when
/// the index is infinite.
FinAbGroup subquotient(const IntMatrix& lattice, const IntMatrix& sublattice);

/// Homomorphism between diagonally presented groups (+) Z/m_i, with
/// matrix(target index, source index). The moduli need not form a chain.
struct GroupHom {
  IntVector source_moduli;
  IntVector target_moduli;
  IntMatrix matrix;

  FinAbGroup source() const { return FinAbGroup::from_orders(source_moduli); }
  FinAbGroup target() const { return FinAbGroup::from_orders(target_moduli); }
  /// matrix * (m_j e_j) vanishes in the target for every source relation.
  bool is_well_defined() const;
};

FinAbGroup kernel_of_hom(const GroupHom& h);
Integer image_order(const GroupHom& h);

/// Additive order of an element given in coordinates for the given moduli.
Integer element_order(const IntVector& coords, const IntVector& moduli);

}  // namespace critgroup
