#include "epsalg/linear_solve.hpp"

namespace epsalg {

SolveResult linear_solve(const LinearMap& A, const Element& b) {
  if (!A.is_finite()) throw std::logic_error("linear_solve needs a finite matrix");
  const std::size_t m = *A.codomain_dim();
  const std::size_t n = *A.domain_dim();
  for (const auto& [i, c] : b) {
    if (i < 0 || static_cast<std::size_t>(i) >= m) throw DimensionError("right-hand side out of range");
  }

  struct Row {
    Element coeffs;  // over columns
    Scalar rhs;
    Element combo;  // over original rows
  };
  std::vector<Row> rows(m);
  for (std::size_t i = 0; i < m; ++i) {
    rows[i].rhs = b.coeff(static_cast<Index>(i));
    rows[i].combo = basis_element(static_cast<Index>(i));
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [i, c] : A.columns()[j]) rows[static_cast<std::size_t>(i)].coeffs.add(static_cast<Index>(j), c);
  }

  std::vector<bool> is_pivot(m, false);
  std::vector<std::pair<Index, std::size_t>> pivots;  // (column, row)
  for (std::size_t col = 0; col < n; ++col) {
    const Index c = static_cast<Index>(col);
    std::size_t p = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_pivot[i] && sgn(rows[i].coeffs.coeff(c)) != 0) {
        p = i;
        break;
      }
    }
    if (p == m) continue;
    is_pivot[p] = true;
    pivots.emplace_back(c, p);
    Scalar inv = 1 / rows[p].coeffs.coeff(c);
    rows[p].coeffs *= inv;
    rows[p].rhs *= inv;
    rows[p].combo *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == p) continue;
      Scalar f = rows[i].coeffs.coeff(c);
      if (sgn(f) == 0) continue;
      rows[i].coeffs.add_scaled(rows[p].coeffs, -f);
      rows[i].rhs -= f * rows[p].rhs;
      rows[i].combo.add_scaled(rows[p].combo, -f);
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (!is_pivot[i] && sgn(rows[i].rhs) != 0) return Infeasible{rows[i].combo};
  }
  Solution sol;
  for (const auto& [c, p] : pivots) sol.x.add(c, rows[p].rhs);
  sol.nullity = n - pivots.size();
  return sol;
}

}  // namespace epsalg
