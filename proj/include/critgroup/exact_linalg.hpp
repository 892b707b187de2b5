#pragma once

#include <optional>
#include <vector>

#include "critgroup/int_matrix.hpp"

namespace critgroup {

/// U * M * V = S with U, V unimodular and S diagonal. The diagonal carries
/// the invariant factors d1 | d2 | ... followed by trailing zeros.
/// `U_inverse` is maintained alongside U so that group generators can be
/// lifted back to ambient coordinates without a separate inversion.
struct SnfResult {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  IntMatrix U_inverse;

  /// min(rows, cols) diagonal entries of S.
  IntVector diagonal() const;
  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

/// Column Hermite normal form: M * T = H, T unimodular. The first `rank`
/// columns of H are a basis of the column lattice of M, in lower staircase
/// form with positive pivots; entries left of a pivot in its row lie in
/// [0, pivot). The remaining columns are zero.
struct HnfResult {
  IntMatrix H;
  IntMatrix T;
  std::size_t rank = 0;
  /// pivot_rows[k] is the row holding the pivot of column k (k < rank).
  std::vector<std::size_t> pivot_rows;

  /// The `rank` nonzero columns of H.
  IntMatrix basis() const;
};

HnfResult hermite_normal_form(const IntMatrix& m);

/// Coefficients y with basis() * y == v, or nullopt if v is outside the lattice.
std::optional<IntVector> solve_in_hnf(const HnfResult& hnf, const IntVector& v);

/// Some integer x with m * x == v, or nullopt.
std::optional<IntVector> lattice_coordinates(const IntMatrix& m, const IntVector& v);

bool lattice_contains(const IntMatrix& m, const IntVector& v);
bool lattice_contains(const HnfResult& hnf, const IntVector& v);

/// Columns form a Z-basis of { x : m * x = 0 }.
IntMatrix integer_kernel(const IntMatrix& m);

}  // namespace critgroup
