#pragma once

#include "epsalg/structures.hpp"

namespace epsalg {

/// a o b = b_1 a b_2.
BilinearOp prelie_from_eps(const EpsBialgebra& A);

/// Left symmetry of the associator x o (y o z) - (x o y) o z.
Report check_prelie(const BilinearOp& op, const Probe& probe, const CheckOptions& opts = {});

/// {x, y} = x o y - y o x.
BilinearOp lie_from_prelie(const BilinearOp& op);
/// Antisymmetry and the Jacobi identity.
Report check_lie(const BilinearOp& bracket, const Probe& probe, const CheckOptions& opts = {});

/// Each L_c = c o (-) is a derivation of (A, mu).
Report check_L_derivation(const EpsBialgebra& A, const BasisWindow& window = {}, const CheckOptions& opts = {});

/// The identity a o (b o c) - (a o b) o c = c_1 b c_2 a c_3 + c_1 a c_2 b c_3.
Report check_prelie_proof_identity(const EpsBialgebra& A, const BasisWindow& window = {},
                                   const CheckOptions& opts = {});

/// Derivation and coderivation laws for B. When both hold, also B as a
/// derivation of the pre-Lie product and a coderivation of gamma.
Report check_biderivation(const EpsBialgebra& A, const LinearMap& B, const BasisWindow& window = {},
                          const CheckOptions& opts = {});

struct PreLieCoalgebra {
  CoMap gamma;  // a_2 (x) a_1 a_3
  CoMap delta;  // gamma - flip o gamma
};

PreLieCoalgebra prelie_coalgebra(const EpsBialgebra& A);

/// Dual left-symmetry of gamma, antisymmetry of delta and co-Jacobi.
Report check_prelie_coalgebra(const EpsBialgebra& A, const BasisWindow& window = {},
                              const CheckOptions& opts = {});

/// Residual of delta({a,b}) against the Lie bialgebra cocycle condition; the
/// structures are not expected to be compatible, so nothing is asserted.
Tensor2 lie_bialgebra_cocycle_residual(const EpsBialgebra& A, Index a, Index b);

}  // namespace epsalg
