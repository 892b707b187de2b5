#include "critgroup/abelian_group.hpp"

#include <algorithm>
#include <sstream>

#include "critgroup/error.hpp"
#include "critgroup/exact_linalg.hpp"

namespace critgroup {

FinAbGroup FinAbGroup::from_orders(const IntVector& orders) {
  IntVector d;
  for (const auto& x : orders) {
    if (x == 0) throw Error(ErrorCode::kInfiniteGroup, "cyclic factor of order zero");
    d.push_back(abs(x));
  }
  // Pairwise (gcd, lcm) refolding preserves the isomorphism type and leaves
  // d[i] dividing every later entry once row i has been processed.
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Integer g = gcd(d[i], d[j]);
      Integer l = d[i] / g * d[j];
      d[i] = std::move(g);
      d[j] = std::move(l);
    }
  FinAbGroup out;
  for (auto& x : d)
    if (x != 1) out.factors_.push_back(std::move(x));
  return out;
}

FinAbGroup FinAbGroup::from_orders(std::initializer_list<long> orders) {
  return from_orders(to_int_vector(orders));
}

Integer FinAbGroup::order() const {
  Integer p = 1;
  for (const auto& d : factors_) p *= d;
  return p;
}

Integer FinAbGroup::exponent() const { return factors_.empty() ? Integer(1) : factors_.back(); }

std::string FinAbGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? " + " : "") << "Z/" << factors_[i];
  return os.str();
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  IntVector all = a.invariant_factors();
  all.insert(all.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  return FinAbGroup::from_orders(all);
}

FinAbGroup direct_power(const FinAbGroup& a, std::size_t times) {
  FinAbGroup out;
  for (std::size_t i = 0; i < times; ++i) out = direct_sum(out, a);
  return out;
}

bool is_isomorphic(const FinAbGroup& a, const FinAbGroup& b) {
  return a.invariant_factors() == b.invariant_factors();
}

IntVector CoordinateMap::apply(const IntVector& x) const {
  IntVector c = projection * x;
  for (std::size_t i = 0; i < c.size(); ++i) mpz_fdiv_r(c[i].get_mpz_t(), c[i].get_mpz_t(), moduli[i].get_mpz_t());
  return c;
}

Cokernel cokernel(const IntMatrix& relations) {
  const std::size_t m = relations.rows();
  const SnfResult snf = smith_normal_form(relations);
  if (snf.rank() < m) {
    throw Error(ErrorCode::kInfiniteGroup, "cokernel has a free part");
  }
  Cokernel out;
  std::vector<std::size_t> kept;
  IntVector factors;
  for (std::size_t i = 0; i < m; ++i) {
    const Integer& d = snf.S(i, i);
    if (d != 1) {
      kept.push_back(i);
      factors.push_back(d);
    }
  }
  out.group = FinAbGroup::from_orders(factors);
  CoordinateMap& cm = out.coordinates;
  cm.moduli = factors;
  cm.projection = IntMatrix(kept.size(), m);
  cm.generators = IntMatrix(m, kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k)
    for (std::size_t j = 0; j < m; ++j) {
      cm.projection(k, j) = snf.U(kept[k], j);
      cm.generators(j, k) = snf.U_inverse(j, kept[k]);
    }
  return out;
}

FinAbGroup subquotient(const IntMatrix& lattice, const IntMatrix& sublattice) {
  if (lattice.rows() != sublattice.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "lattices live in different ambient spaces");
  }
  const HnfResult hnf = hermite_normal_form(lattice);
  IntMatrix coords(hnf.rank, sublattice.cols());
  for (std::size_t c = 0; c < sublattice.cols(); ++c) {
    auto y = solve_in_hnf(hnf, sublattice.column(c));
    if (!y) throw Error(ErrorCode::kInvalidArgument, "sublattice is not contained in lattice");
    for (std::size_t r = 0; r < hnf.rank; ++r) coords(r, c) = (*y)[r];
  }
  if (hnf.rank == 0) return FinAbGroup{};
  return cokernel(coords).group;
}

bool GroupHom::is_well_defined() const {
  if (matrix.rows() != target_moduli.size() || matrix.cols() != source_moduli.size()) return false;
  for (std::size_t j = 0; j < source_moduli.size(); ++j)
    for (std::size_t i = 0; i < target_moduli.size(); ++i) {
      Integer image = matrix(i, j) * source_moduli[j];
      if (!mpz_divisible_p(image.get_mpz_t(), target_moduli[i].get_mpz_t())) return false;
    }
  return true;
}

FinAbGroup kernel_of_hom(const GroupHom& h) {
  if (!h.is_well_defined()) {
    throw Error(ErrorCode::kIllDefinedHom, "homomorphism does not respect source relations");
  }
  const std::size_t s = h.source_moduli.size();
  if (s == 0) return FinAbGroup{};
  // x lies in the kernel lattice iff matrix * x + diag(target) * y = 0 for some y.
  const IntMatrix block = hconcat(h.matrix, IntMatrix::diagonal(h.target_moduli));
  const IntMatrix lifted = integer_kernel(block).row_block(0, s);
  return subquotient(lifted, IntMatrix::diagonal(h.source_moduli));
}

Integer image_order(const GroupHom& h) {
  return h.source().order() / kernel_of_hom(h).order();
}

Integer element_order(const IntVector& coords, const IntVector& moduli) {
  if (coords.size() != moduli.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "coordinate count differs from modulus count");
  }
  Integer result = 1;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    Integer o = moduli[i] / gcd(coords[i], moduli[i]);
    result = lcm(result, o);
  }
  return result;
}

}  // namespace critgroup
