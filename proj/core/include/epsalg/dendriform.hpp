#pragma once

#include "epsalg/quasitriangular.hpp"

namespace epsalg {

struct Dendriform {
  BilinearOp succ;  // x ≻ y
  BilinearOp prec;  // x ≺ y
};

/// (x≺y)≺z = x≺(y≺z) + x≺(y≻z), (x≻y)≺z = x≻(y≺z), x≻(y≻z) = (x≺y)≻z + (x≻y)≻z.
Report check_dendriform(const Dendriform& d, const Probe& probe, const CheckOptions& opts = {});
/// Consequences asserted on every dendriform output: the sum is associative,
/// x∘y = x≻y − y≺x is pre-Lie and both operations give the same Lie bracket.
Report check_dendriform_consequences(const Dendriform& d, const Probe& probe, const CheckOptions& opts = {});

/// x≻y = β(x)y, x≺y = xβ(y). Throws LawViolation if β is not a Baxter operator.
Dendriform dendriform_from_baxter(const BaxterOp& b);
/// x≻y = Σ u_i x v_i y, x≺y = Σ x u_i y v_i. Throws LawViolation if r fails the AYBE.
Dendriform quasi_dendriform(const QuasiTriangular& Q);
/// Dendriform axioms for quasi_dendriform(Q) and equality with the Baxter route.
Report check_quasi_dendriform(const QuasiTriangular& Q, const CheckOptions& opts = {});

BilinearOp dendriform_to_prelie(const Dendriform& d);  // x≻y − y≺x
BilinearOp dendriform_to_assoc(const Dendriform& d);   // x≻y + x≺y

/// Endomorphisms of a finite-dimensional ε-bialgebra used by the End(A)
/// formulas. Maps are n x n.
class EndHelpers {
 public:
  explicit EndHelpers(EpsBialgebra A);

  const EpsBialgebra& algebra() const { return A_; }
  std::size_t dim() const { return A_.dim(); }

  LinearMap L(const Element& a) const;   // x -> ax
  LinearMap R(const Element& a) const;   // x -> xa
  LinearMap Lf(const Element& f) const;  // x -> f(x_2) x_1
  LinearMap Rf(const Element& f) const;  // x -> f(x_1) x_2
  LinearMap P(const Element& a) const;   // x -> x_1 a x_2
  LinearMap Pf(const Element& f) const;  // x -> f(x_2) x_1 x_3

  LinearMap conv(const LinearMap& T, const LinearMap& S) const;  // T∗S
  LinearMap id_conv(const LinearMap& T) const;                   // id∗T
  LinearMap conv_id(const LinearMap& T) const;                   // T∗id
  LinearMap sandwich(const LinearMap& T) const;                  // id∗T∗id

  /// Matrix unit x -> f_l(x) e_k.
  LinearMap unit_map(Index k, Index l) const;

 private:
  EpsBialgebra A_;
  LinearMap id_;
};

/// Covector f∘T as an element over the dual basis.
Element precompose(const Element& f, const LinearMap& T);

/// The dendriform structure on End(A) + A + A* on the double's layout, from
/// the closed-form table. Requires finite dimension.
Dendriform triple_dendriform(const EpsBialgebra& A);
/// T≻S and T≺S on End(A) alone, E_kl at k*n + l.
Dendriform end_dendriform(const EpsBialgebra& A);

/// φ(x≻y) = φ(x)≻φ(y) and φ(x≺y) = φ(x)≺φ(y) for x, y in `probe`.
Report check_dendriform_morphism(const Dendriform& src, const Dendriform& dst, const LinearMap& phi,
                                 const Probe& probe, const CheckOptions& opts = {});

/// Leibniz rules for ≻ and ≺ of the quasitriangular dendriform structure. The
/// Leibniz laws are only probed when D is a derivation with (D⊗id + id⊗D)(r) = 0;
/// otherwise they are reported unprobed next to the failing precondition.
Report check_derivation_dendriform(const QuasiTriangular& Q, const LinearMap& D, const CheckOptions& opts = {});

}  // namespace epsalg
