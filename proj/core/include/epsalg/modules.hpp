#pragma once

#include <optional>
#include <vector>

#include "epsalg/structures.hpp"

namespace epsalg {

/// A left module, or a bimodule when `right` is set, over an algebra. The
/// carrier has its own basis; `dim` is empty for Z-indexed carriers, in which
/// case `probe` lists the carrier indices the checkers enumerate.
struct ModuleData {
  std::optional<std::size_t> dim;
  BilinearOp left;                  // A x M -> M
  std::optional<BilinearOp> right;  // M x A -> M
  std::vector<Index> probe;

  std::vector<Index> basis() const;
  Element act_left(const Element& a, const Element& m) const { return left.apply(a, m); }
  Element act_right(const Element& m, const Element& a) const;
};

/// lambda, Lambda and optionally xi, Xi.
///   Lambda(m) = m_-1 (x) m_0, keyed (A index, M index)
///   Xi(m)     = m_0 (x) m_1,  keyed (M index, A index)
struct HopfModuleData {
  std::optional<std::size_t> dim;
  BilinearOp left;
  CoMap left_coaction;
  std::optional<BilinearOp> right;
  std::optional<CoMap> right_coaction;
  std::vector<Index> probe;

  bool two_sided() const { return right.has_value() || right_coaction.has_value(); }
  std::vector<Index> basis() const;
  ModuleData module() const { return ModuleData{dim, left, right, probe}; }
  Element act_right(const Element& m, const Element& a) const;
  Tensor2 coact_right(const Element& m) const;
};

/// Module laws a(bm) = (ab)m, (ma)b = m(ab), (am)b = a(mb). The right action
/// is checked against `right_alg`, which defaults to `left_alg`.
Report check_module(const FinAlgebra& left_alg, const ModuleData& M,
                    const FinAlgebra* right_alg = nullptr, const CheckOptions& opts = {});

/// Left laws: module, comodule, Lambda(am) = a Lambda(m) + Delta(a) m.
/// Two-sided inputs add the right laws, the bimodule and bicomodule laws and
/// the two mixed squares Xi(am) = a m_0 (x) m_1, Lambda(ma) = m_-1 (x) m_0 a.
Report check_hopf_module(const EpsBialgebra& A, const HopfModuleData& M,
                         const BasisWindow& window = {}, const CheckOptions& opts = {});

// --- fixtures ---------------------------------------------------------------

/// A over itself via mu and Delta (left only).
HopfModuleData regular_hopf_module(const EpsBialgebra& A, std::vector<Index> probe = {});
/// A (x) V with mu (x) id and Delta (x) id; a (x) v sits at index a*dim V + v.
HopfModuleData free_hopf_module(const EpsBialgebra& A, std::size_t dim_v);
/// A (x) A with mu (x) id, Delta (x) id, id (x) mu, id (x) Delta.
HopfModuleData tensor_square_hopf_bimodule(const EpsBialgebra& A);
HopfModuleData zero_hopf_module(std::size_t dim, bool two_sided = false);

ModuleData regular_module(const FinAlgebra& A);
ModuleData regular_bimodule(const FinAlgebra& A);
/// Column space k^k of the matrix algebra M_k, basis E_ij at i*k + j.
ModuleData matrix_column_module(std::size_t k);
ModuleData zero_module(std::size_t dim, bool two_sided = false);

}  // namespace epsalg
