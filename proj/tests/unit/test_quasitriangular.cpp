#include "epsalg/double.hpp"
#include "epsalg/examples.hpp"
#include "epsalg/quasitriangular.hpp"
#include "helpers.hpp"

using namespace epsalg;
using testing::el;

namespace {

Tensor2 t2(std::initializer_list<std::tuple<Index, Index, long>> terms) {
  Tensor2 t;
  for (auto [i, j, c] : terms) t.add({i, j}, c);
  return t;
}

std::vector<QuasiTriangular> fixtures() {
  return {m2_example().quasi, nilpotent_r_example(truncated_polynomial(), basis_element(1), "k[t]/t^2"),
          nilpotent_r_example(upper_triangular(), basis_element(1), "upper"),
          nilpotent_r_example(matrix_algebra(2), basis_element(1), "M2 nil")};
}

}  // namespace

TEST_CASE("AYBE on the fixtures") {
  for (const QuasiTriangular& Q : fixtures()) {
    CHECK_PASSES(check_aybe(Q.base, Q.r));
    CHECK(aybe_residual(Q.base, Q.r).is_zero());
  }
  CHECK_PASSES(check_aybe(matrix_algebra(2), Tensor2{}));
  // 1 (x) 1 in k[t]/t^2: residual 1 (x) 1 (x) 1
  const Tensor3 res = aybe_residual(truncated_polynomial(), t2({{0, 0, 1}}));
  Tensor3 expect;
  expect.add({0, 0, 0}, 1);
  CHECK(res == expect);
  CHECK_FAILS(check_aybe(truncated_polynomial(), t2({{0, 0, 1}})));
  CHECK_THROWS_AS(principal_coproduct(truncated_polynomial(), t2({{0, 0, 1}})), LawViolation);
  CHECK_THROWS_AS(baxter_from_r(truncated_polynomial(), t2({{0, 0, 1}})), LawViolation);
}

TEST_CASE("principal coproducts") {
  const FinAlgebra A = upper_triangular();
  const QuasiTriangular Q = nilpotent_r_example(A, basis_element(1));
  const EpsBialgebra P = principal_coproduct(Q);
  // Δ(x) = 1 (x) bx - x (x) b with 1 = E11 + E22, b = E12
  const Element one = el({{0, 1}, {2, 1}});
  for (Index x = 0; x < 3; ++x) {
    const Tensor2 want = outer(one, A.product(1, x)) - outer(basis_element(x), basis_element(1));
    CHECK(P.coproduct(x) == want);
  }
  CHECK(P.comultiply(one).is_zero());
  for (const QuasiTriangular& q : fixtures()) {
    const EpsBialgebra E = principal_coproduct(q);
    CHECK_PASSES(check_eps_axioms(E));
    CHECK_PASSES(check_delta_on_r(E, q.r));
  }
}

TEST_CASE("the displayed M2 coproduct is principal for r = -E12 (x) E12") {
  const EpsBialgebra shown = m2_example().bialgebra;
  CHECK(shown == principal_coproduct(matrix_algebra(2), t2({{1, 1, -1}})));
  // the other quasitriangular structure on M2 gives a different coproduct
  CHECK_FALSE(shown.coalgebra() == principal_coproduct(m2_example().quasi).coalgebra());
}

TEST_CASE("Baxter operators from r") {
  // r = 1 (x) b: β(x) = xb
  const FinAlgebra A = upper_triangular();
  const BaxterOp b = baxter_from_r(A, nilpotent_r_example(A, basis_element(1)).r);
  for (Index x = 0; x < 3; ++x) CHECK(b.beta(x) == A.product(x, 1));
  CHECK_PASSES(check_baxter(b));

  const FinAlgebra M = matrix_algebra(2);
  const BaxterOp bm = baxter_from_r(M, m2_example().quasi.r);
  for (Index x = 0; x < 4; ++x) {
    const Element want = M.multiply(M.product(0, x), basis_element(1)) - M.multiply(M.product(1, x), basis_element(0));
    CHECK(bm.beta(x) == want);
  }
  CHECK_PASSES(check_baxter(bm));

  const BaxterOp zero = baxter_from_r(M, Tensor2{});
  CHECK(zero.beta == LinearMap::zero(4, 4));
  CHECK_PASSES(check_baxter(zero));
  for (const QuasiTriangular& q : fixtures()) CHECK_PASSES(check_baxter(baxter_from_r(q.base, q.r)));
}

TEST_CASE("the identity is not a Baxter operator on A3") {
  const BaxterOp id{a3().algebra(), LinearMap::identity(3)};
  const Report r = check_baxter(id);
  CHECK_FAILS(r);
  const LawResult* law = r.find("baxter");
  REQUIRE(law != nullptr);
  REQUIRE_FALSE(law->witnesses.empty());
  CHECK(law->witnesses.front().tuple == std::vector<Index>{0, 0});
  // e0 e0 - β(e0 e0 + e0 e0) = -e0
  CHECK(law->witnesses.front().residual == to_tensor_n(-basis_element(0)));
}

TEST_CASE("Baxter operator on End(A) + A + A*") {
  for (const EpsBialgebra& A : {a3(), quiver_path_algebra(triangle_quiver()), m2_example().bialgebra}) {
    const BaxterOp E = end_baxter(A);
    CHECK_PASSES(check_baxter(E));
    const DoubleAlgebra D = build_double(A);
    CHECK(E.carrier == D.algebra.algebra());
    const BaxterOp viaR = baxter_from_r(D.algebra.algebra(), D.r);
    CHECK(E.beta == viaR.beta);

    const DoubleLayout L = D.layout;
    const auto n = static_cast<Index>(L.n);
    // β(a) = R_a as a matrix: column j is e_j a
    for (Index a = 0; a < n; ++a) {
      Element want;
      for (Index j = 0; j < n; ++j) {
        for (const auto& [i, c] : A.product(j, a)) want.add(L.tensor(i, j), c);
      }
      CHECK(E.beta(a) == want);
    }
  }
}

TEST_CASE("pi projection") {
  const FinAlgebra A = upper_triangular();
  const QuasiTriangular Q = nilpotent_r_example(A, basis_element(1));
  const LinearMap pi = pi_projection(Q);
  const DoubleLayout L{3};
  Element id;
  for (Index i = 0; i < 3; ++i) id.add(L.tensor(i, i), 1);
  CHECK(pi.apply(id) == basis_element(1));
  CHECK(pi.apply(Element{}).is_zero());
  for (Index a = 0; a < 3; ++a) CHECK(pi(a) == basis_element(a));

  for (const QuasiTriangular& q : fixtures()) {
    const LinearMap p = pi_projection(q);
    const BaxterOp bE = end_baxter(principal_coproduct(q));
    const BaxterOp bA = baxter_from_r(q.base, q.r);
    CHECK(compose(p, bE.beta) == compose(bA.beta, p));
  }
}
