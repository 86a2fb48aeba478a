#pragma once

#include <random>

#include "epsalg/linear_solve.hpp"
#include "epsalg/modules.hpp"

namespace epsalg {

/// V ⊚ W = V + W + V (x) W. v_i at i, w_j at dim V + j, v_i (x) w_j at
/// dim V + dim W + i * dim W + j.
struct CircLayout {
  std::size_t v = 0;
  std::size_t w = 0;

  std::size_t dim() const { return v + w + v * w; }
  Index left(Index i) const { return i; }
  Index right(Index j) const { return static_cast<Index>(v) + j; }
  Index pair(Index i, Index j) const { return static_cast<Index>(v + w) + i * static_cast<Index>(w) + j; }

  enum class Part { left, right, pair };
  struct Decoded {
    Part part;
    Index i;  // V index, or W index for Part::right
    Index j;  // W index for Part::pair
  };
  Decoded decode(Index k) const;
};

/// (a, b, x (x) y)(a', b', x' (x) y') = (aa', bb', ax' (x) y' + x (x) yb').
FinAlgebra circ_algebra(const FinAlgebra& A, const FinAlgebra& B);

enum class Braiding { sigma, beta };
std::string_view to_string(Braiding b);

/// The product on A ⊚ B induced by a braiding:
///   sigma adds a (x) b' + a' (x) b + x' (x) by' + xa' (x) y + xx' (x) yy',
///   beta adds a (x) b',
/// to the circular product.
FinAlgebra braided_circ_algebra(const FinAlgebra& A, const FinAlgebra& B, Braiding b);

/// f ⊚ g : V ⊚ W -> X ⊚ Y.
LinearMap circ_map(const LinearMap& f, const LinearMap& g);

/// mu~ : A ⊚ A -> A, (a, a', x (x) x') -> a + a' + xx'.
LinearMap monoid_wrap(const FinAlgebra& A);
/// Delta~ : C -> C ⊚ C, c -> (c, c, Delta(c)).
LinearMap comonoid_wrap(const FinCoalgebra& C);

/// Associativity square of mu~ over U + V + W + UV + UW + VW + UVW, and
/// mu~(0, a, 0) = mu~(a, 0, 0) = a.
Report check_circ_monoid(const FinAlgebra& A, const CheckOptions& opts = {});
/// Coassociativity square of Delta~.
Report check_circ_comonoid(const FinCoalgebra& C, const CheckOptions& opts = {});

/// f(xy) = f(x) f(y) on all basis pairs.
Report check_algebra_morphism(const FinAlgebra& src, const FinAlgebra& dst, const LinearMap& f,
                              const std::string& law = "algebra-morphism", const CheckOptions& opts = {});

/// Two independent verdicts on the same candidate.
struct EquivalenceReport {
  Report direct;       // the axioms as stated
  Report categorical;  // the structure maps as (co)monoid morphisms
  bool agree() const { return direct.passed() == categorical.passed(); }
  Report combined() const;
};

/// Direct: check_eps_axioms. Categorical: check_circ_monoid, check_circ_comonoid
/// and Delta~ : A -> A ⊚ A an algebra morphism ("delta-tilde-morphism").
EquivalenceReport check_comonoid_alg_equiv(const EpsBialgebra& A, const CheckOptions& opts = {});

/// Residual Delta(aa') - law(a, a') for the bimonoid law of the braiding:
///   sigma: a (x) a' + a' (x) a + aa'_1 (x) a'_2 + a'_1 (x) aa'_2 + a_1a' (x) a_2
///          + a_1 (x) a_2a' + a_1a'_1 (x) a_2a'_2
///   beta:  a (x) a' + aa'_1 (x) a'_2 + a_1 (x) a_2a'
/// Also checks that Delta~ into braided_circ_algebra is an algebra morphism
/// exactly when the law holds ("bimonoid-morphism"). Diagnostic only.
Report braid_bimonoid_check(const EpsBialgebra& A, Braiding b, const CheckOptions& opts = {});

/// Left action of A ⊚ B on A ⊚ N for a left B-module N:
/// (a, b, x (x) y)(a', n, x' (x) v) = (aa', bn, ax' (x) v + x (x) yn).
ModuleData circ_module_action(const FinAlgebra& A, const FinAlgebra& B, const ModuleData& N);
/// Right action of A ⊚ B on M ⊚ B for a right A-module M:
/// (m, b', u (x) y')(a, b, x (x) y) = (ma, b'b, ub (x) y' + mx (x) y).
/// The module's right action is read from M.right.
ModuleData circ_right_module_action(const FinAlgebra& A, const FinAlgebra& B, const ModuleData& M);
/// The action of A on A ⊚ N by restriction along Delta~:
/// a(a', n, x (x) v) = (aa', an, ax (x) v + a_1 (x) a_2 n).
ModuleData circ_restricted_action(const EpsBialgebra& A, const ModuleData& N);

struct AugmentedAlgebra {
  FinAlgebra algebra;
  Element eta;  // covector over the basis
};

/// eta(aa') = 0 on all basis pairs.
Report check_augmented(const AugmentedAlgebra& A, const CheckOptions& opts = {});

/// A (x) B, a (x) b at a * dim B + b, with
/// (a (x) b)(a' (x) b') = eta_B(b) aa' (x) b' + eta_A(a') a (x) bb' and
/// augmentation eta_A (x) eta_B.
AugmentedAlgebra eps_tensor_algebra(const AugmentedAlgebra& A, const AugmentedAlgebra& B);

/// a (x) b -> eta_B(b) a + eta_A(a) b + a (x) b, from A (x)_ε B to A ⊚ B.
LinearMap infcir_map(const AugmentedAlgebra& A, const AugmentedAlgebra& B);

/// A+ = A + k with (a, x)(b, y) = (ab, 0) and eta(a, x) = x; the unit vector
/// sits at index dim A.
AugmentedAlgebra plus_algebra(const FinAlgebra& A);
/// The counital ε-bialgebra on A+: Delta(1) = 1 (x) 1 and
/// Delta(a) = a (x) 1 + 1 (x) a + a_1 (x) a_2.
EpsBialgebra augment_plus(const EpsBialgebra& A);

/// (A ⊚ B)+ -> A+ (x)_ε B+: a -> a (x) 1, b -> 1 (x) b, x (x) y -> x (x) y,
/// 1 -> 1 (x) 1.
LinearMap plus_comparison(std::size_t dim_a, std::size_t dim_b);
/// plus_comparison is a bijective morphism of augmented algebras.
Report check_plus_iso(const FinAlgebra& A, const FinAlgebra& B, const CheckOptions& opts = {});
/// plus_comparison is natural with respect to algebra morphisms f : A -> A', g : B -> B'.
Report check_plus_naturality(const FinAlgebra& A, const FinAlgebra& A2, const LinearMap& f, const FinAlgebra& B,
                             const FinAlgebra& B2, const LinearMap& g, const CheckOptions& opts = {});

/// Direct: check_eps_axioms with the counit. Categorical: (A, eta) augmented,
/// Delta : A -> A (x)_ε A an algebra morphism preserving augmentations,
/// coassociativity and the counit law. Throws std::invalid_argument without a counit.
EquivalenceReport check_counital_comonoid_equiv(const EpsBialgebra& A, const CheckOptions& opts = {});

/// The left action of a counital A on A (x) N:
/// a(a' (x) n) = aa' (x) n + eta(a') a_1 (x) a_2 n.
ModuleData eps_tensor_module(const EpsBialgebra& A, const ModuleData& N);

/// Direct: Lambda(an) = a Lambda(n) + Delta(a) n. Categorical: Lambda : N -> A (x)_ε N
/// is a module morphism. Both presuppose a counital comodule, checked as
/// "comodule-counit" in each.
EquivalenceReport check_counital_hopf_char(const EpsBialgebra& A, const HopfModuleData& N,
                                           const CheckOptions& opts = {});

/// Solves Delta(a) = r.a - a.r for r in A (x) A. For a counital A of positive
/// dimension the system must be infeasible; the certificate is verified.
struct QuasiZeroResult {
  Report report;
  SolveResult result;
};
QuasiZeroResult check_counital_quasi_zero(const EpsBialgebra& A);

/// Seeded random candidates with structure constants in {-1, 0, 1}; `density`
/// is the probability of a nonzero constant.
EpsBialgebra random_candidate(std::mt19937_64& rng, std::size_t dim, double density = 0.2);
/// Same with a random counit covector.
EpsBialgebra random_counital_candidate(std::mt19937_64& rng, std::size_t dim, double density = 0.2);

inline constexpr std::uint64_t kAppendixSeed = 0x5eed'a4b5ULL;

}  // namespace epsalg
