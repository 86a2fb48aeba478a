#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epsalg/modules.hpp"
#include "epsalg/quasitriangular.hpp"

namespace epsalg {

// --- Laurent polynomials ----------------------------------------------------

/// k[x, 1/x] with Delta(f) = (f(x) - f(y)) / (x - y). Basis index n is x^n;
/// laws are probed on exponents in [-N, N].
EpsBialgebra divided_differences(Index N = 5);

/// d/dx on Laurent polynomials.
LinearMap laurent_derivative();

// --- quivers ----------------------------------------------------------------

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::optional<std::size_t> truncation;  // required when the quiver has a cycle

  bool acyclic() const;
};

/// A path: a vertex (no arrows) or a nonempty chain of arrow ids.
struct Path {
  std::size_t vertex = 0;          // meaningful when arrows is empty
  std::vector<std::size_t> arrows; // arrow ids in the quiver's sorted order

  bool is_vertex() const { return arrows.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Ranks paths contiguously: vertices first in the given order, then paths by
/// length and lexicographically by arrow name.
class PathBasis {
 public:
  explicit PathBasis(Quiver q, std::size_t max_length);

  const Quiver& quiver() const { return q_; }
  std::size_t max_length() const { return max_len_; }
  /// Number of paths of length <= len.
  std::size_t count_up_to(std::size_t len) const;
  Index rank(const Path& p) const;
  Path unrank(Index i) const;
  std::size_t source(const Path& p) const;
  std::size_t target(const Path& p) const;
  std::string label(const Path& p) const;
  /// Arrow id of the quiver arrow with the given position in name order.
  const Arrow& arrow(std::size_t id) const { return sorted_[id]; }
  std::size_t arrow_count() const { return sorted_.size(); }

  Element multiply(const Path& p, const Path& q) const;
  Tensor2 comultiply(const Path& p) const;

 private:
  Quiver q_;
  std::vector<Arrow> sorted_;
  std::size_t max_len_;
  std::vector<std::vector<std::size_t>> from_;     // arrow ids leaving each vertex, sorted
  std::vector<std::vector<std::size_t>> count_;    // count_[len][v]: paths of length len from v
  std::vector<std::size_t> offset_;                // first index of each length
};

/// Path algebra with concatenation and the deconcatenation coproduct. Acyclic
/// quivers give a dense algebra; cyclic ones need a truncation length L and
/// use a closed-form backend probed on paths of length <= L.
EpsBialgebra quiver_path_algebra(const Quiver& q, std::string name = {});

Quiver single_arrow_quiver();  // e0 -a-> e1
Quiver chain_quiver();         // e0 -a1-> e1 -a2-> e2 -a3-> e3
Quiver triangle_quiver();      // e0 -a-> e1 -b-> e2 and the chord c: e0 -> e2
Quiver loop_quiver(std::size_t L = 4);
Quiver two_cycle_quiver(std::size_t L = 4);

EpsBialgebra a3();

/// alpha o beta as the sum over shortcuts (alpha, b_i), b_i an arrow of beta.
Element shortcut_prelie_oracle(const PathBasis& basis, const Path& alpha, const Path& beta);

// --- small algebras and quasitriangular fixtures ----------------------------

FinAlgebra truncated_polynomial();  // k[t]/(t^2), basis 1, t
FinAlgebra upper_triangular();      // basis E11, E12, E22
FinAlgebra matrix_algebra(std::size_t k = 2);  // E_ij at i*k + j

struct M2Example {
  EpsBialgebra bialgebra;  // the displayed comultiplication on M_2
  QuasiTriangular quasi;   // r = E11 (x) E12 - E12 (x) E11
};
M2Example m2_example();

/// r = 1 (x) b; throws LawViolation unless A is unital and b^2 = 0.
QuasiTriangular nilpotent_r_example(const FinAlgebra& A, const Element& b, std::string name = {});

/// Heisenberg and centre decomposition of the Lie algebra of M_2 on the basis
/// x = E21, y = E11, z = E12, i = I: {x,y} = z, all other brackets zero.
Report check_m2_heisenberg(const EpsBialgebra& m2);

// --- counital fixtures ------------------------------------------------------

/// A (x) N with a.(a' (x) n) = aa' (x) n + η(a') a_1 (x) a_2 n and
/// Lambda(a (x) n) = a_1 (x) a_2 (x) n; a (x) n at index a*dim N + n.
HopfModuleData counital_hopf_fixture(const EpsBialgebra& A, const ModuleData& N);

}  // namespace epsalg
