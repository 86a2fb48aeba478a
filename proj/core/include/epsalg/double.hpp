#pragma once

#include <utility>
#include <variant>

#include "epsalg/modules.hpp"

namespace epsalg {

/// Basis of (A (x) A') + A + A' for dim A = n: e_i at i, f_j at n + j and
/// e_i ⋈ f_j at 2n + i*n + j. Under End(A) ≅ A (x) A*, e_i ⋈ f_j is the
/// matrix unit x -> f_j(x) e_i.
struct DoubleLayout {
  enum class Part { base, dual, tensor };

  std::size_t n = 0;

  std::size_t dim() const { return n * n + 2 * n; }
  Part part(Index x) const;
  Index base(Index i) const { return i; }
  Index dual(Index j) const { return static_cast<Index>(n) + j; }
  Index tensor(Index i, Index j) const { return static_cast<Index>(2 * n) + i * static_cast<Index>(n) + j; }
  std::pair<Index, Index> split(Index x) const;
  std::string label(Index x, const EpsBialgebra& A) const;
};

struct DoubleAlgebra {
  EpsBialgebra algebra;  // D(A)
  EpsBialgebra base;     // A
  EpsBialgebra dual;     // A'
  DoubleLayout layout;
  Tensor2 r;             // sum e_i (x) f_i
  LinearMap embed_base;  // A -> D(A)
  LinearMap embed_dual;  // A' -> D(A)
};

/// (f -> a, f <- a) with f -> a = f(a_1) a_2 and (f <- a)(b) = f(ab).
std::pair<Element, Element> arrow_actions(const EpsBialgebra& A, const Element& f, const Element& a);

/// D(A). The comultiplication is r.x - x.r. Throws DimensionError if A is
/// infinite or dim A > max_dim, LawViolation if A fails the ε-axioms.
DoubleAlgebra build_double(const EpsBialgebra& A, std::size_t max_dim = 8);

/// The algebra acting on the right of ε-Hopf bimodules, D(A^{op,cop})^{op}, on
/// the same layout: m.a = ma, m.f = f(m_1) m_0, m.(a ⋈ f) = f(m_1) m_0 a.
DoubleAlgebra build_right_double(const EpsBialgebra& A, std::size_t max_dim = 8);

/// Delta_D on A and A' against the embedded Delta_A and Delta_A', the
/// derivation rule Delta(af) = a Delta(f) + Delta(a) f, the AYBE for r,
/// (Delta (x) id)(r) = r23 r13, and the ε-axioms of D(A).
Report check_double_consistency(const DoubleAlgebra& D, const CheckOptions& opts = {});

/// End(V) with E_ij at i*m + j, E_ij E_kl = δ_jk E_il.
FinAlgebra endomorphism_algebra(std::size_t m);

struct Refused {
  Index f = 0;  // index in A'
  Index a = 0;  // index in A
  Element residual;
  std::string reason;
};

/// The algebra map D(A) -> B extending rho: A -> B and rho': A' -> B, or
/// Refused when rho'(f)rho(a) = rho(f -> a) + rho'(f <- a) fails. Throws
/// LawViolation when rho or rho' is not an algebra map.
std::variant<LinearMap, Refused> extend_by_universal_property(const DoubleAlgebra& D, const FinAlgebra& B,
                                                              const LinearMap& rho, const LinearMap& rho_dual);

/// a.m = am, f.m = f(m_-1) m_0, (a ⋈ f).m = f(m_-1) a m_0.
ModuleData double_module_from_hopf_module(const DoubleAlgebra& D, const HopfModuleData& M);
/// Lambda(m) = sum_i e_i (x) f_i.m. Throws LawViolation if M is not a D(A)-module.
HopfModuleData hopf_module_from_double_module(const DoubleAlgebra& D, const ModuleData& M);

/// Left D(A)-action as above; right action of build_right_double(A).
ModuleData double_bimodule_from_hopf_bimodule(const DoubleAlgebra& D, const HopfModuleData& M);
HopfModuleData hopf_bimodule_from_double_bimodule(const DoubleAlgebra& D, const DoubleAlgebra& Dr,
                                                  const ModuleData& M);

}  // namespace epsalg
