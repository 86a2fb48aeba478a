#pragma once

#include "epsalg/structures.hpp"

namespace epsalg {

/// An algebra with a solution r = sum u_i (x) v_i of the associative
/// Yang-Baxter equation.
struct QuasiTriangular {
  FinAlgebra base;
  Tensor2 r;
  std::string name;
};

struct BaxterOp {
  FinAlgebra carrier;
  LinearMap beta;
};

/// r13 r12 - r12 r23 + r23 r13 in A (x) A (x) A.
Tensor3 aybe_residual(const FinAlgebra& A, const Tensor2& r);
Report check_aybe(const FinAlgebra& A, const Tensor2& r);

/// Delta(a) = r.a - a.r. Throws LawViolation when r fails the AYBE.
EpsBialgebra principal_coproduct(const FinAlgebra& A, const Tensor2& r, std::string name = {});
EpsBialgebra principal_coproduct(const QuasiTriangular& Q);

/// (Delta (x) id)(r) - r23 r13, computed in the given ε-bialgebra.
Tensor3 delta_on_r_residual(const EpsBialgebra& A, const Tensor2& r);
Report check_delta_on_r(const EpsBialgebra& A, const Tensor2& r);

/// beta(x) = sum u_i x v_i. Throws LawViolation when r fails the AYBE.
BaxterOp baxter_from_r(const FinAlgebra& A, const Tensor2& r);
Report check_baxter(const BaxterOp& b, const CheckOptions& opts = {});

/// Baxter operator beta(a) = R_a, beta(f) = L_f, beta(T) = id*T on the
/// algebra End(A) + A + A*, laid out as the double (see DoubleLayout).
BaxterOp end_baxter(const EpsBialgebra& A);

/// pi(a) = a, pi(f) = sum f(u_i) v_i, pi(T) = sum T(u_i) v_i, from the
/// End(A) + A + A* layout onto A.
LinearMap pi_projection(const QuasiTriangular& Q);

/// Sum of u_i (x) v_i terms of r, as pairs of basis-expanded elements.
std::vector<std::pair<Element, Element>> r_terms(const Tensor2& r);

}  // namespace epsalg
