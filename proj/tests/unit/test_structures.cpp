#include "epsalg/examples.hpp"
#include "epsalg/structures.hpp"
#include "helpers.hpp"

using namespace epsalg;
using testing::el;

namespace {

Tensor2 t2(std::initializer_list<std::tuple<Index, Index, long>> terms) {
  Tensor2 t;
  for (auto [i, j, c] : terms) t.add({i, j}, c);
  return t;
}

// A3 with Δ(a) replaced by e1 (x) e0.
EpsBialgebra broken_a3() {
  const EpsBialgebra A = a3();
  std::vector<Tensor2> co(3);
  co[2] = t2({{1, 0, 1}});
  return EpsBialgebra::dense(A.algebra(), FinCoalgebra(3, co), "broken");
}

}  // namespace

TEST_CASE("A3 multiplication and comultiplication") {
  const EpsBialgebra A = a3();
  REQUIRE(A.dim() == 3);
  CHECK(A.multiply(basis_element(0), basis_element(2)) == basis_element(2));
  CHECK(A.multiply(basis_element(2), basis_element(1)) == basis_element(2));
  CHECK(A.multiply(basis_element(2), basis_element(2)).is_zero());
  CHECK(A.multiply(basis_element(2), basis_element(0)).is_zero());
  CHECK(A.multiply(basis_element(2), Element{}).is_zero());
  CHECK(A.coproduct(2) == t2({{0, 1, 1}}));
  CHECK(A.coproduct(0).is_zero());
  CHECK(A.coproduct(1).is_zero());
  CHECK(A.unit() == el({{0, 1}, {1, 1}}));
  CHECK_FALSE(A.counit().has_value());
}

TEST_CASE("Laurent multiplication and comultiplication") {
  const EpsBialgebra L = divided_differences(5);
  CHECK(L.multiply(basis_element(3), basis_element(-7)) == basis_element(-4));
  CHECK(L.multiply(basis_element(2), el({{1, 1}, {-1, 2}})) == el({{3, 1}, {1, 2}}));
  CHECK(L.coproduct(3) == t2({{0, 2, 1}, {1, 1, 1}, {2, 0, 1}}));
  CHECK(L.coproduct(2) == t2({{0, 1, 1}, {1, 0, 1}}));
  CHECK(L.coproduct(0).is_zero());
  CHECK(L.coproduct(-1) == t2({{-1, -1, -1}}));
  CHECK(L.coproduct(-2) == t2({{-1, -2, -1}, {-2, -1, -1}}));
  // far outside the probe window the closed form is still exact
  CHECK(L.coproduct(40).size() == 40);
}

TEST_CASE("every shipped example passes the ε-axioms") {
  for (const EpsBialgebra& A : {a3(), quiver_path_algebra(chain_quiver()), quiver_path_algebra(triangle_quiver()),
                                m2_example().bialgebra, principal_coproduct(nilpotent_r_example(
                                                            truncated_polynomial(), basis_element(1))),
                                principal_coproduct(nilpotent_r_example(upper_triangular(), basis_element(1)))}) {
    CHECK_PASSES(check_eps_axioms(A));
  }
}

TEST_CASE("windowed ε-axioms") {
  const Report lr = check_eps_axioms(divided_differences(5));
  CHECK_PASSES(lr);
  const LawResult* assoc = lr.find("associativity");
  REQUIRE(assoc != nullptr);
  CHECK(assoc->unprobed > 0);
  CHECK(assoc->checked > 0);

  for (const Quiver& q : {loop_quiver(4), two_cycle_quiver(4)}) {
    const Report r = check_eps_axioms(quiver_path_algebra(q));
    CHECK_PASSES(r);
    CHECK(r.find("eps-compatibility")->unprobed > 0);
  }
}

TEST_CASE("a broken comultiplication is caught at (e0, a)") {
  const Report r = check_eps_axioms(broken_a3());
  CHECK_FAILS(r);
  const LawResult* law = r.find("eps-compatibility");
  REQUIRE(law != nullptr);
  CHECK(law->status == Status::fail);
  REQUIRE_FALSE(law->witnesses.empty());
  CHECK(law->witnesses.front().tuple == std::vector<Index>{0, 2});
  CHECK(law->witnesses.front().residual == to_tensor_n(t2({{1, 0, 1}})));
  CHECK(r.find("associativity")->status == Status::pass);
}

TEST_CASE("the zero algebra passes vacuously") {
  const EpsBialgebra Z = EpsBialgebra::dense(FinAlgebra(0, {}), FinCoalgebra(0, {}));
  CHECK_PASSES(check_eps_axioms(Z));
  const EpsBialgebra Zboth =
      EpsBialgebra::dense(FinAlgebra(0, {}, Element{}), FinCoalgebra(0, {}, Element{}));
  CHECK_PASSES(check_unital_counital_zero(Zboth));
}

TEST_CASE("unital and counital together forces dimension zero") {
  CHECK_PASSES(check_unital_counital_zero(a3()));
  const EpsBialgebra A = a3();
  const EpsBialgebra both =
      EpsBialgebra::dense(A.algebra(), FinCoalgebra(3, {Tensor2{}, Tensor2{}, A.coproduct(2)}, basis_element(2)));
  CHECK_FAILS(check_unital_counital_zero(both));
}

TEST_CASE("dual of A3") {
  const EpsBialgebra D = dual_eps(a3());
  CHECK_PASSES(check_eps_axioms(D));
  // (f_p f_q)(a) = f_q(e0) f_p(e1): the only nonzero product is f1 f0 = g
  for (Index p = 0; p < 3; ++p) {
    for (Index q = 0; q < 3; ++q) {
      CHECK(D.product(p, q) == (p == 1 && q == 0 ? basis_element(2) : Element{}));
    }
  }
  // g(e0 a) = g(a e1) = 1 = -(g_2(x) g_1(y)); f0 = e0 e0, f1 = e1 e1
  CHECK(D.coproduct(2) == t2({{2, 0, -1}, {1, 2, -1}}));
  CHECK(D.coproduct(0) == t2({{0, 0, -1}}));
  CHECK(D.coproduct(1) == t2({{1, 1, -1}}));
  CHECK(D.counit() == el({{0, -1}, {1, -1}}));
  CHECK_FALSE(D.unit().has_value());
}

TEST_CASE("dual of an algebra with zero multiplication has zero comultiplication") {
  const EpsBialgebra A = EpsBialgebra::dense(FinAlgebra(2, std::vector<Element>(4)),
                                             FinCoalgebra(2, {t2({{0, 0, 1}}), t2({{0, 1, 1}, {1, 0, 1}})}));
  const EpsBialgebra D = dual_eps(A);
  for (Index i = 0; i < 2; ++i) CHECK(D.coproduct(i).is_zero());
}

TEST_CASE("the double dual is A under x -> -x") {
  for (const EpsBialgebra& A : {a3(), quiver_path_algebra(chain_quiver()), quiver_path_algebra(triangle_quiver()),
                                m2_example().bialgebra}) {
    const EpsBialgebra DD = dual_eps(dual_eps(A));
    const Index n = static_cast<Index>(A.dim());
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) CHECK(DD.product(i, j) == -A.product(i, j));
      CHECK(DD.coproduct(i) == -A.coproduct(i));
    }
    CHECK_PASSES(check_eps_axioms(dual_eps(A)));
  }
  CHECK_THROWS(dual_eps(divided_differences()));
}

TEST_CASE("op-cop and iterated coproducts") {
  const EpsBialgebra A = quiver_path_algebra(chain_quiver());
  CHECK_PASSES(check_eps_axioms(op_cop(A)));
  // a1a2a3 sits at index 9
  const TensorN d2 = iterated_coproduct(A, basis_element(9), 2);
  // Δ^(2)(a1a2a3) = e0 (x) e1 (x) a3 + e0 (x) a2 (x) e3 + a1 (x) e2 (x) e3
  TensorN oracle;
  oracle.add({0, 1, 6}, 1);
  oracle.add({0, 5, 3}, 1);
  oracle.add({4, 2, 3}, 1);
  CHECK(d2 == oracle);
  CHECK(iterated_coproduct(A, basis_element(9), 0) == to_tensor_n(basis_element(9)));
  const std::vector<Element> factors{basis_element(4), basis_element(5), basis_element(6)};
  CHECK(multiply_all(A, factors) == basis_element(9));
}
