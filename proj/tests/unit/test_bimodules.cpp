#include "epsalg/bimodules.hpp"
#include "epsalg/examples.hpp"
#include "helpers.hpp"

using namespace epsalg;
using testing::el;

namespace {

const Element kB = basis_element(1);  // E12 in the upper triangular algebra

QuasiTriangular nil() { return nilpotent_r_example(upper_triangular(), kB, "upper"); }

ModuleData left_only(ModuleData M) {
  M.right = BilinearOp::zero(M.dim.value(), 4, M.dim.value());
  return M;
}

std::vector<std::pair<QuasiTriangular, ModuleData>> cases() {
  const QuasiTriangular m2 = m2_example().quasi;
  return {{nil(), regular_bimodule(upper_triangular())},
          {nilpotent_r_example(truncated_polynomial(), basis_element(1), "k[t]/t^2"), regular_bimodule(truncated_polynomial())},
          {m2, regular_bimodule(matrix_algebra(2))},
          {m2, left_only(matrix_column_module(2))}};
}

}  // namespace

TEST_CASE("Hopf modules from quasitriangular structures") {
  const FinAlgebra A = upper_triangular();
  const QuasiTriangular Q = nil();
  const EpsBialgebra E = principal_coproduct(Q);
  const HopfModuleData H = hopf_bimodule_from_quasi(Q, regular_bimodule(A));
  const Element one = *A.unit();
  for (Index m = 0; m < 3; ++m) {
    const Element em = basis_element(m);
    CHECK(H.left_coaction(m) == outer(one, A.multiply(kB, em)));
    CHECK(H.coact_right(em) == -outer(em, kB));
  }
  CHECK_PASSES(check_hopf_module(E, H));

  for (const auto& [Qc, M] : cases()) {
    CHECK_PASSES(check_hopf_module(principal_coproduct(Qc), hopf_bimodule_from_quasi(Qc, M)));
    CHECK_PASSES(check_hopf_module(principal_coproduct(Qc), hopf_module_from_quasi(Qc, M)));
  }
  const QuasiTriangular m2 = m2_example().quasi;
  CHECK_PASSES(check_hopf_module(principal_coproduct(m2), hopf_module_from_quasi(m2, matrix_column_module(2))));

  const HopfModuleData Z = hopf_bimodule_from_quasi(Q, zero_module(2, true));
  for (Index m = 0; m < 2; ++m) {
    CHECK(Z.left_coaction(m).is_zero());
    CHECK(Z.coact_right(basis_element(m)).is_zero());
  }
}

TEST_CASE("the sign of Xi matters") {
  const FinAlgebra A = upper_triangular();
  const QuasiTriangular Q = nil();
  HopfModuleData H = hopf_bimodule_from_quasi(Q, regular_bimodule(A));
  H.right_coaction = CoMap::from_rule([&](Index m) { return outer(basis_element(m), kB); }, 3);
  const Report r = check_hopf_module(principal_coproduct(Q), H);
  CHECK_FAILS(r);
  CHECK(r.find("right-hopf")->status == Status::fail);
}

TEST_CASE("non-modules are refused") {
  ModuleData bad = regular_bimodule(upper_triangular());
  bad.left = BilinearOp::on(3, [](Index, Index m) { return basis_element(m); });
  CHECK_THROWS_AS(hopf_module_from_quasi(nil(), bad), LawViolation);
  CHECK_THROWS_AS(bimodule_baxter_from_r(nil(), bad), LawViolation);
  CHECK_THROWS_AS(hopf_bimodule_from_quasi(nil(), regular_module(upper_triangular())), std::invalid_argument);
}

// --- pre-Lie bimodules ----------------------------------------------------------

TEST_CASE("pre-Lie bimodule from the tensor square") {
  const EpsBialgebra A = a3();
  const HopfModuleData M = tensor_square_hopf_bimodule(A);
  CHECK_PASSES(check_hopf_module(A, M));
  const PreLieBimoduleData P = prelie_bimodule_from_hopf(A, M);
  CHECK_PASSES(check_prelie_bimodule(prelie_from_eps(A), Probe::of(A), P));
  CHECK_PASSES(check_prelie_bimodule_expansions(A, M));

  // a o (x (x) y) = x_1 a x_2 (x) y + x (x) y_1 a y_2; (x (x) y) o b = b_1 x (x) y b_2
  const BilinearOp circ = prelie_from_eps(A);
  for (Index a = 0; a < 3; ++a) {
    for (Index m = 0; m < 9; ++m) {
      const Index x = m / 3, y = m % 3;
      Element want;
      for (const auto& [k, c] : circ(a, x)) want.add(k * 3 + y, c);
      for (const auto& [k, c] : circ(a, y)) want.add(x * 3 + k, c);
      CHECK(P.left(a, m) == want);
      Element rw;
      for (const auto& [k, c] : A.coproduct(a)) {
        const Element l = A.product(k[0], x), r = A.product(y, k[1]);
        for (const auto& [i, ci] : l) {
          for (const auto& [j, cj] : r) rw.add(i * 3 + j, c * ci * cj);
        }
      }
      CHECK(P.right(m, a) == rw);
    }
  }
  // e.g. a o (e1 (x) a) = e1 (x) a
  CHECK(P.left(2, 1 * 3 + 2) == basis_element(1 * 3 + 2));
}

TEST_CASE("pre-Lie bimodules on other fixtures") {
  for (const auto& [Q, M] : cases()) {
    const EpsBialgebra A = principal_coproduct(Q);
    const HopfModuleData H = hopf_bimodule_from_quasi(Q, M);
    CHECK_PASSES(check_prelie_bimodule(prelie_from_eps(A), Probe::of(A), prelie_bimodule_from_hopf(A, H)));
    CHECK_PASSES(check_prelie_bimodule_expansions(A, H));
  }
  const EpsBialgebra T = quiver_path_algebra(triangle_quiver());
  CHECK_PASSES(check_prelie_bimodule_expansions(T, tensor_square_hopf_bimodule(T)));
}

TEST_CASE("left Hopf modules give left pre-Lie modules") {
  // regular module over divided differences: a o m = m_-1 a m_0 is the pre-Lie product
  const EpsBialgebra L = divided_differences(12);
  const BasisWindow w = BasisWindow::range(-3, 3);
  const HopfModuleData R = regular_hopf_module(L, w.resolve(L).indices);
  const PreLieBimoduleData P = prelie_bimodule_from_hopf(L, R, w);
  const BilinearOp circ = prelie_from_eps(L);
  for (Index a = -3; a <= 3; ++a) {
    for (Index m = -3; m <= 3; ++m) {
      CHECK(P.left(a, m) == circ(a, m));
      CHECK(P.right(m, a).is_zero());
    }
  }
  const Report r = check_prelie_bimodule(circ, w.resolve(L), P);
  CHECK_PASSES(r);
  CHECK(r.find("prelie-bimodule-left")->checked > 0);
  CHECK_PASSES(check_prelie_bimodule_expansions(L, R, w));

  const EpsBialgebra A = a3();
  const PreLieBimoduleData F = prelie_bimodule_from_hopf(A, free_hopf_module(A, 2));
  CHECK_PASSES(check_prelie_bimodule(prelie_from_eps(A), Probe::of(A), F));
}

TEST_CASE("trivial coactions") {
  const EpsBialgebra flat = EpsBialgebra::dense(truncated_polynomial(), FinCoalgebra::zero(2));
  HopfModuleData M;
  M.dim = 2;
  M.left = truncated_polynomial().op();
  M.right = truncated_polynomial().op();
  M.left_coaction = CoMap::zero(2);
  M.right_coaction = CoMap::zero(2);
  const PreLieBimoduleData P = prelie_bimodule_from_hopf(flat, M);
  CHECK(P.left == BilinearOp::zero(2, 2, 2));
  CHECK(P.right == BilinearOp::zero(2, 2, 2));

  const EpsBialgebra A = a3();
  const PreLieBimoduleData Z = prelie_bimodule_from_hopf(A, zero_hopf_module(4, true));
  CHECK_PASSES(check_prelie_bimodule(prelie_from_eps(A), Probe::of(A), Z));
  CHECK_THROWS_AS(prelie_bimodule_from_hopf(A, [] {
                    HopfModuleData bad = zero_hopf_module(3);
                    bad.left = a3().algebra().op();
                    return bad;
                  }()),
                  LawViolation);
}

TEST_CASE("a perturbed pre-Lie action is caught") {
  const EpsBialgebra A = a3();
  PreLieBimoduleData P = prelie_bimodule_from_hopf(A, tensor_square_hopf_bimodule(A));
  const BilinearOp good = P.left;
  P.left = BilinearOp::from_rule(
      [good](Index a, Index m) { return a == 2 && m == 0 ? good(a, m) + basis_element(2) : good(a, m); }, 3, 9, 9);
  const Report r = check_prelie_bimodule(prelie_from_eps(A), Probe::of(A), P);
  CHECK_FAILS(r);
  const LawResult* right = r.find("prelie-bimodule-right");
  REQUIRE(right->status == Status::fail);
  CHECK(right->witnesses.front().residual == to_tensor_n(basis_element(2, -1)));
}

// --- Baxter operators and dendriform bimodules -------------------------------------

TEST_CASE("Baxter operators on bimodules") {
  const FinAlgebra A = upper_triangular();
  const QuasiTriangular Q = nil();
  const ModuleData M = regular_bimodule(A);
  const LinearMap bM = bimodule_baxter_from_r(Q, M);
  for (Index m = 0; m < 3; ++m) CHECK(bM(m) == A.multiply(basis_element(m), kB));
  CHECK_PASSES(check_bimodule_baxter(baxter_from_r(A, Q.r), M, bM));

  for (const auto& [Qc, Mc] : cases()) {
    CHECK_PASSES(check_bimodule_baxter(baxter_from_r(Qc.base, Qc.r), Mc, bimodule_baxter_from_r(Qc, Mc)));
  }
  const QuasiTriangular zero{matrix_algebra(2), Tensor2{}, "zero"};
  CHECK(bimodule_baxter_from_r(zero, regular_bimodule(matrix_algebra(2))) == LinearMap::zero(4, 4));

  // identity is not a Baxter operator relative to beta_A
  const Report r = check_bimodule_baxter(baxter_from_r(A, Q.r), M, LinearMap::identity(3));
  CHECK_FAILS(r);
}

TEST_CASE("dendriform bimodules, nilpotent closed forms") {
  const FinAlgebra A = upper_triangular();
  const QuasiTriangular Q = nil();
  const ModuleData M = regular_bimodule(A);
  const DendriformBimoduleData D = quasi_dendriform_bimodule(Q, M);
  auto mul = [&](Index x, const Element& y, Index z) {
    return A.multiply(A.multiply(basis_element(x), y), basis_element(z));
  };
  for (Index a = 0; a < 3; ++a) {
    for (Index m = 0; m < 3; ++m) {
      CHECK(D.succ_left(a, m) == mul(a, kB, m));                                     // abm
      CHECK(D.succ_right(m, a) == mul(m, kB, a));                                    // mba
      CHECK(D.prec_left(a, m) == A.multiply(A.product(a, m), kB));                   // amb
      CHECK(D.prec_right(m, a) == A.multiply(A.product(m, a), kB));                  // mab
    }
  }
  // frozen: E11 ≻ E22 = E12, E22 ≻ E11 = 0, E11 ≺ E11 = E12
  CHECK(D.succ_left(0, 2) == basis_element(1));
  CHECK(D.succ_left(2, 0).is_zero());
  CHECK(D.prec_left(0, 0) == basis_element(1));

  const DendriformBimoduleData viaB = dendriform_bimodule_from_baxter(baxter_from_r(A, Q.r), bimodule_baxter_from_r(Q, M), M);
  CHECK(viaB.succ_left == D.succ_left);
  CHECK(viaB.prec_left == D.prec_left);
  CHECK(viaB.succ_right == D.succ_right);
  CHECK(viaB.prec_right == D.prec_right);
}

TEST_CASE("dendriform bimodule axioms") {
  for (const auto& [Q, M] : cases()) {
    const Dendriform d = quasi_dendriform(Q);
    const Probe all = Probe::all(Q.base.dim());
    const DendriformBimoduleData D = quasi_dendriform_bimodule(Q, M);
    CHECK_PASSES(check_dendriform_bimodule(d, all, D));
    const DendriformBimoduleData viaB =
        dendriform_bimodule_from_baxter(baxter_from_r(Q.base, Q.r), bimodule_baxter_from_r(Q, M), M);
    CHECK(viaB.succ_left == D.succ_left);
    CHECK(viaB.prec_left == D.prec_left);
    CHECK(viaB.succ_right == D.succ_right);
    CHECK(viaB.prec_right == D.prec_right);

    const BilinearOp sum = dendriform_to_assoc(d);
    const FinAlgebra S = FinAlgebra::from_rule(Q.base.dim(), [&](Index x, Index y) { return sum(x, y); });
    CHECK_PASSES(check_module(S, dendriform_bimodule_sum(D)));
    CHECK_PASSES(check_prelie_bimodule(dendriform_to_prelie(d), all, dendri_bimod_to_prelie_bimod(D)));
  }
}

TEST_CASE("zero Baxter operators give zero dendriform actions") {
  const FinAlgebra A = matrix_algebra(2);
  const DendriformBimoduleData D =
      dendriform_bimodule_from_baxter(BaxterOp{A, LinearMap::zero(4, 4)}, LinearMap::zero(4, 4), regular_bimodule(A));
  CHECK(D.succ_left == BilinearOp::zero(4, 4, 4));
  CHECK(D.prec_left == BilinearOp::zero(4, 4, 4));
  CHECK(D.succ_right == BilinearOp::zero(4, 4, 4));
  CHECK(D.prec_right == BilinearOp::zero(4, 4, 4));
  const PreLieBimoduleData P = dendri_bimod_to_prelie_bimod(D);
  CHECK(P.left == BilinearOp::zero(4, 4, 4));
  CHECK_PASSES(check_prelie_bimodule(BilinearOp::zero(4, 4, 4), Probe::all(4), P));
}

TEST_CASE("a broken dendriform bimodule is caught") {
  const QuasiTriangular Q = nil();
  DendriformBimoduleData D = quasi_dendriform_bimodule(Q, regular_bimodule(upper_triangular()));
  D.succ_left = upper_triangular().op();
  CHECK_FAILS(check_dendriform_bimodule(quasi_dendriform(Q), Probe::all(3), D));
}

// --- diagram -------------------------------------------------------------------

TEST_CASE("bimodule diagram commutes") {
  for (const auto& [Q, M] : cases()) CHECK_PASSES(check_bimod_diagram(Q, M));
  const QuasiTriangular zero{matrix_algebra(2), Tensor2{}, "zero"};
  CHECK_PASSES(check_bimod_diagram(zero, regular_bimodule(matrix_algebra(2))));
  const PreLieBimoduleData P =
      dendri_bimod_to_prelie_bimod(quasi_dendriform_bimodule(zero, regular_bimodule(matrix_algebra(2))));
  CHECK(P.left == BilinearOp::zero(4, 4, 4));
  CHECK(P.right == BilinearOp::zero(4, 4, 4));

  // nilpotent example, explicitly: a o m = abm - mab, m o a = mba - amb
  const FinAlgebra A = upper_triangular();
  const PreLieBimoduleData N = dendri_bimod_to_prelie_bimod(quasi_dendriform_bimodule(nil(), regular_bimodule(A)));
  for (Index a = 0; a < 3; ++a) {
    for (Index m = 0; m < 3; ++m) {
      const Element ea = basis_element(a), em = basis_element(m);
      CHECK(N.left(a, m) == A.multiply(A.multiply(ea, kB), em) - A.multiply(A.multiply(em, ea), kB));
      CHECK(N.right(m, a) == A.multiply(A.multiply(em, kB), ea) - A.multiply(A.multiply(ea, em), kB));
    }
  }
}
