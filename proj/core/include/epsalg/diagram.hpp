#pragma once

#include "epsalg/brace.hpp"
#include "epsalg/dendriform.hpp"

namespace epsalg {

/// The square from quasitriangular ε-bialgebras to pre-Lie algebras, with
/// the brace refinement:
///   prelie-square:  b1 a b2 for the principal coproduct equals x≻y − y≺x;
///   brace-prelie:   <a; b> equals the pre-Lie product;
///   lie-brackets:   the commutators of ∘ and of x≻y + x≺y agree.
Report check_quasi_diagram(const QuasiTriangular& Q, const CheckOptions& opts = {});

}  // namespace epsalg
