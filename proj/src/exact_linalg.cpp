#include "critgroup/exact_linalg.hpp"

#include <utility>

#include "critgroup/error.hpp"

namespace critgroup {
namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Tracks S together with the transforms so that U * M * V == S holds after
// every elementary step.
class SmithState {
 public:
  explicit SmithState(const IntMatrix& m)
      : S(m),
        U(IntMatrix::identity(m.rows())),
        U_inv(IntMatrix::identity(m.rows())),
        V(IntMatrix::identity(m.cols())) {}

  void row_add(std::size_t target, std::size_t source, const Integer& q) {
    if (q == 0) return;
    S.add_row_multiple(target, source, q);
    U.add_row_multiple(target, source, q);
    U_inv.add_col_multiple(source, target, -q);
  }
  void col_add(std::size_t target, std::size_t source, const Integer& q) {
    if (q == 0) return;
    S.add_col_multiple(target, source, q);
    V.add_col_multiple(target, source, q);
  }
  void row_swap(std::size_t a, std::size_t b) {
    S.swap_rows(a, b);
    U.swap_rows(a, b);
    U_inv.swap_cols(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    S.swap_cols(a, b);
    V.swap_cols(a, b);
  }
  void row_negate(std::size_t r) {
    S.negate_row(r);
    U.negate_row(r);
    U_inv.negate_col(r);
  }

  IntMatrix S, U, U_inv, V;
};

}  // namespace

IntVector SnfResult::diagonal() const {
  const std::size_t k = std::min(S.rows(), S.cols());
  IntVector d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = S(i, i);
  return d;
}

std::size_t SnfResult::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

SnfResult smith_normal_form(const IntMatrix& m) {
  SmithState st(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    bool found_any = false;
    while (true) {
      // Smallest nonzero magnitude in the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const Integer& x = st.S(i, j);
          if (x == 0) continue;
          if (pi == rows || abs(x) < best) {
            best = abs(x);
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) break;
      found_any = true;
      st.row_swap(t, pi);
      st.col_swap(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (st.S(i, t) == 0) continue;
        st.row_add(i, t, -floor_div(st.S(i, t), st.S(t, t)));
        if (st.S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (st.S(t, j) == 0) continue;
        st.col_add(j, t, -floor_div(st.S(t, j), st.S(t, t)));
        if (st.S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column are clear; enforce divisibility of the remaining block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(st.S(i, j).get_mpz_t(), st.S(t, t).get_mpz_t())) {
            st.row_add(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (!found_any) break;
    if (st.S(t, t) < 0) st.row_negate(t);
  }
  return SnfResult{std::move(st.U), std::move(st.S), std::move(st.V), std::move(st.U_inv)};
}

IntMatrix HnfResult::basis() const { return H.column_block(0, rank); }

HnfResult hermite_normal_form(const IntMatrix& m) {
  HnfResult out;
  out.H = m;
  out.T = IntMatrix::identity(m.cols());
  IntMatrix& H = out.H;
  IntMatrix& T = out.T;
  const std::size_t cols = m.cols();

  auto col_add = [&](std::size_t target, std::size_t source, const Integer& q) {
    if (q == 0) return;
    H.add_col_multiple(target, source, q);
    T.add_col_multiple(target, source, q);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    H.swap_cols(a, b);
    T.swap_cols(a, b);
  };

  std::size_t pc = 0;
  for (std::size_t r = 0; r < m.rows() && pc < cols; ++r) {
    bool pivot = false;
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = pc; j < cols; ++j) {
        if (H(r, j) == 0) continue;
        if (best == cols || abs(H(r, j)) < abs(H(r, best))) best = j;
      }
      if (best == cols) break;
      pivot = true;
      col_swap(pc, best);
      bool clean = true;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (H(r, j) == 0) continue;
        col_add(j, pc, -floor_div(H(r, j), H(r, pc)));
        if (H(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!pivot) continue;
    if (H(r, pc) < 0) {
      H.negate_col(pc);
      T.negate_col(pc);
    }
    for (std::size_t j = 0; j < pc; ++j) col_add(j, pc, -floor_div(H(r, j), H(r, pc)));
    out.pivot_rows.push_back(r);
    ++pc;
  }
  out.rank = pc;
  return out;
}

std::optional<IntVector> solve_in_hnf(const HnfResult& hnf, const IntVector& v) {
  if (v.size() != hnf.H.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "vector length differs from lattice dimension");
  }
  IntVector residual = v;
  IntVector coeffs(hnf.rank);
  std::size_t k = 0;
  for (std::size_t r = 0; r < hnf.H.rows(); ++r) {
    if (k < hnf.rank && hnf.pivot_rows[k] == r) {
      const Integer& p = hnf.H(r, k);
      if (!mpz_divisible_p(residual[r].get_mpz_t(), p.get_mpz_t())) return std::nullopt;
      Integer q;
      mpz_divexact(q.get_mpz_t(), residual[r].get_mpz_t(), p.get_mpz_t());
      if (q != 0)
        for (std::size_t i = r; i < residual.size(); ++i) residual[i] -= q * hnf.H(i, k);
      coeffs[k] = std::move(q);
      ++k;
    } else if (residual[r] != 0) {
      return std::nullopt;
    }
  }
  return coeffs;
}

std::optional<IntVector> lattice_coordinates(const IntMatrix& m, const IntVector& v) {
  const HnfResult hnf = hermite_normal_form(m);
  auto y = solve_in_hnf(hnf, v);
  if (!y) return std::nullopt;
  IntVector padded(m.cols());
  for (std::size_t i = 0; i < y->size(); ++i) padded[i] = (*y)[i];
  return hnf.T * padded;
}

bool lattice_contains(const IntMatrix& m, const IntVector& v) {
  return lattice_contains(hermite_normal_form(m), v);
}

bool lattice_contains(const HnfResult& hnf, const IntVector& v) {
  return solve_in_hnf(hnf, v).has_value();
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const HnfResult hnf = hermite_normal_form(m);
  return hnf.T.column_block(hnf.rank, m.cols() - hnf.rank);
}

}  // namespace critgroup
