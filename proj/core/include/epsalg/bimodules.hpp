#pragma once

#include "epsalg/dendriform.hpp"
#include "epsalg/modules.hpp"
#include "epsalg/prelie.hpp"

namespace epsalg {

/// Left and right actions of a pre-Lie algebra on M.
struct PreLieBimoduleData {
  std::optional<std::size_t> dim;
  BilinearOp left;   // x o m
  BilinearOp right;  // m o x
  std::vector<Index> probe;

  std::vector<Index> basis() const;
};

/// The four actions of a dendriform algebra on M.
struct DendriformBimoduleData {
  std::optional<std::size_t> dim;
  BilinearOp succ_left;   // x ≻ m
  BilinearOp prec_left;   // x ≺ m
  BilinearOp succ_right;  // m ≻ x
  BilinearOp prec_right;  // m ≺ x
  std::vector<Index> probe;

  std::vector<Index> basis() const;
};

/// Lambda(m) = sum u_i (x) v_i m. Throws LawViolation if M is not a left module.
HopfModuleData hopf_module_from_quasi(const QuasiTriangular& Q, const ModuleData& M);
/// Adds Xi(m) = -sum m u_i (x) v_i. M must be a bimodule.
HopfModuleData hopf_bimodule_from_quasi(const QuasiTriangular& Q, const ModuleData& M);

/// a o m = m_-1 a m_0 + m_0 a m_1 and m o a = a_1 m a_2. Missing right
/// structures count as zero. Throws LawViolation if M fails check_hopf_module.
PreLieBimoduleData prelie_bimodule_from_hopf(const EpsBialgebra& A, const HopfModuleData& M,
                                             const BasisWindow& window = {});

/// x o (y o m) - (x o y) o m symmetric in x, y, and
/// x o (m o z) - (x o m) o z = m o (x o z) - (m o x) o z.
Report check_prelie_bimodule(const BilinearOp& P, const Probe& p_probe, const PreLieBimoduleData& M,
                             const CheckOptions& opts = {});

/// The expansions behind the pre-Lie bimodule laws for the actions built from
/// a Hopf bimodule:
///   a o (b o m) - (a o b) o m = m_-2 a m_-1 b m_0 + m_-2 b m_-1 a m_0 + m_-1 a m_0 b m_1
///                             + m_-1 b m_0 a m_1 + m_0 b m_1 a m_2 + m_0 a m_1 b m_2
///   a o (m o b) - (a o m) o b = b_1 a b_2 m b_3 + b_1 m b_2 a b_3
///   m o (a o b) - (m o a) o b = b_1 m b_2 a b_3 + b_1 a b_2 m b_3
Report check_prelie_bimodule_expansions(const EpsBialgebra& A, const HopfModuleData& M,
                                        const BasisWindow& window = {}, const CheckOptions& opts = {});

/// beta_M(m) = sum u_i m v_i. Throws LawViolation if r fails the AYBE or M is
/// not a bimodule.
LinearMap bimodule_baxter_from_r(const QuasiTriangular& Q, const ModuleData& M);
/// beta_A(a) beta_M(m) = beta_M(a beta_M(m) + beta_A(a) m) and
/// beta_M(m) beta_A(a) = beta_M(m beta_A(a) + beta_M(m) a).
Report check_bimodule_baxter(const BaxterOp& b, const ModuleData& M, const LinearMap& beta_M,
                             const CheckOptions& opts = {});

/// a≻m = beta_A(a)m, m≻a = beta_M(m)a, a≺m = a beta_M(m), m≺a = m beta_A(a).
/// Throws LawViolation if either Baxter law fails.
DendriformBimoduleData dendriform_bimodule_from_baxter(const BaxterOp& b, const LinearMap& beta_M,
                                                       const ModuleData& M);
/// a≻m = sum u a v m, m≻a = sum u m v a, a≺m = sum a u m v, m≺a = sum m u a v.
DendriformBimoduleData quasi_dendriform_bimodule(const QuasiTriangular& Q, const ModuleData& M);

/// The nine bimodule axioms over (D, ≻, ≺).
Report check_dendriform_bimodule(const Dendriform& D, const Probe& d_probe, const DendriformBimoduleData& M,
                                 const CheckOptions& opts = {});
/// M with x·m = x≻m + x≺m and m·x = m≻x + m≺x.
ModuleData dendriform_bimodule_sum(const DendriformBimoduleData& M);

/// x o m = x≻m - m≺x and m o x = m≻x - x≺m.
PreLieBimoduleData dendri_bimod_to_prelie_bimod(const DendriformBimoduleData& M);

/// The pre-Lie bimodule from hopf_bimodule_from_quasi + prelie_bimodule_from_hopf
/// equals the one from quasi_dendriform_bimodule + dendri_bimod_to_prelie_bimod.
Report check_bimod_diagram(const QuasiTriangular& Q, const ModuleData& M, const CheckOptions& opts = {});

}  // namespace epsalg
