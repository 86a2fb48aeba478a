#pragma once

#include <variant>

#include "epsalg/linear_map.hpp"

namespace epsalg {

struct Solution {
  Element x;
  std::size_t nullity = 0;
};

/// y with y^T A = 0 and y . b != 0; indices of y are rows of A.
struct Infeasible {
  Element certificate;
};

using SolveResult = std::variant<Solution, Infeasible>;

/// Exact Gaussian elimination over Q. A must be finite.
SolveResult linear_solve(const LinearMap& A, const Element& b);

}  // namespace epsalg
