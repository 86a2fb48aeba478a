#include <random>

#include "epsalg/examples.hpp"
#include "epsalg/linear_solve.hpp"
#include "epsalg/structures.hpp"
#include "helpers.hpp"

using namespace epsalg;
using testing::el;

TEST_CASE("scalars parse exactly and stay in lowest terms") {
  CHECK(parse_scalar("6/4") == Scalar(3, 2));
  CHECK(to_string(parse_scalar("-6/4")) == "-3/2");
  CHECK(to_string(parse_scalar("+7")) == "7");
  CHECK(to_string(parse_scalar("0/5")) == "0");
  CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1e3"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  CHECK_THROWS_AS(parse_scalar("abc"), ParseError);
}

TEST_CASE("scalar addition round-trips on random rationals") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    const Scalar a(num(rng), den(rng)), b(num(rng), den(rng));
    Scalar x = a;
    x.canonicalize();
    Scalar y = b;
    y.canonicalize();
    CHECK((x + y) - y == x);
    CHECK(Scalar((x + y) - y).get_den() > 0);
  }
}

TEST_CASE("sparse tensors drop zeros") {
  Element x = el({{0, 1}, {2, 3}});
  x.add(2, -3);
  CHECK(x.size() == 1);
  CHECK(x == basis_element(0));
  CHECK((x - x).is_zero());
  Tensor2 t = outer(el({{0, 1}, {1, 1}}), basis_element(1));
  CHECK(t.size() == 2);
  CHECK(flip(t) == outer(basis_element(1), el({{0, 1}, {1, 1}})));
}

TEST_CASE("contract") {
  const Tensor2 t = outer(basis_element(0), basis_element(1));
  const LinearMap id = LinearMap::identity(2);
  CHECK(contract(t, id, id) == t);
  CHECK(contract(t, LinearMap::zero(2, 2), id).is_zero());
  const LinearMap swap = LinearMap::from_columns(2, {basis_element(1), basis_element(0)});
  CHECK(contract(t, swap, swap) == outer(basis_element(1), basis_element(0)));
  CHECK_THROWS_AS(contract(outer(basis_element(3), basis_element(0)), id, id), DimensionError);
}

TEST_CASE("contract respects composition") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-2, 2);
  auto random_map = [&](std::size_t n) {
    std::vector<Element> cols(n);
    for (auto& c : cols) {
      for (std::size_t i = 0; i < n; ++i) c.add(static_cast<Index>(i), coef(rng));
    }
    return LinearMap::from_columns(n, cols);
  };
  for (int trial = 0; trial < 20; ++trial) {
    const LinearMap f1 = random_map(3), f2 = random_map(3), g1 = random_map(3), g2 = random_map(3);
    Tensor2 t;
    for (Index i = 0; i < 3; ++i) {
      for (Index j = 0; j < 3; ++j) t.add({i, j}, coef(rng));
    }
    CHECK(contract(t, compose(f2, f1), compose(g2, g1)) == contract(contract(t, f1, g1), f2, g2));
  }
}

TEST_CASE("linear_solve") {
  const LinearMap id = LinearMap::identity(3);
  const Element v = el({{0, 1}, {2, -4}});
  auto s = linear_solve(id, v);
  REQUIRE(std::holds_alternative<Solution>(s));
  CHECK(std::get<Solution>(s).x == v);
  CHECK(std::get<Solution>(s).nullity == 0);

  auto z = linear_solve(LinearMap::zero(2, 2), basis_element(0));
  REQUIRE(std::holds_alternative<Infeasible>(z));
  const Element y = std::get<Infeasible>(z).certificate;
  CHECK(pair(y, basis_element(0)) != 0);

  // x + y = 1, x - y = 0
  const LinearMap A = LinearMap::from_matrix({{1, 1}, {1, -1}}, 2);
  auto h = linear_solve(A, basis_element(0));
  REQUIRE(std::holds_alternative<Solution>(h));
  CHECK(std::get<Solution>(h).x == el({{0, 1}, {1, 1}}) * Scalar(1, 2));
}

TEST_CASE("linear_solve on random systems") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Element> cols(4);
    for (auto& c : cols) {
      for (Index i = 0; i < 3; ++i) c.add(i, coef(rng));
    }
    const LinearMap A = LinearMap::from_columns(3, cols);
    Element b;
    for (Index i = 0; i < 3; ++i) b.add(i, coef(rng));
    const auto res = linear_solve(A, b);
    if (const auto* s = std::get_if<Solution>(&res)) {
      CHECK(A.apply(s->x) == b);
    } else {
      const Element y = std::get<Infeasible>(res).certificate;
      for (const auto& col : A.columns()) CHECK(pair(y, col) == 0);
      CHECK(pair(y, b) != 0);
    }
  }
}

TEST_CASE("convolution on A3 and divided differences") {
  const EpsBialgebra A = a3();
  const LinearMap id = LinearMap::identity(3);
  CHECK(convolution_of_maps(id, id, A) == LinearMap::zero(3, 3));

  const EpsBialgebra zero = EpsBialgebra::dense(truncated_polynomial(), FinCoalgebra::zero(2));
  CHECK(convolution_of_maps(LinearMap::identity(2), LinearMap::identity(2), zero) == LinearMap::zero(2, 2));

  const EpsBialgebra L = divided_differences(5);
  const LinearMap lid = LinearMap::identity_rule();
  const LinearMap c = convolution_of_maps(lid, lid, L);
  for (Index n = -5; n <= 5; ++n) CHECK(c(n) == (n == 0 ? Element{} : basis_element(n - 1, Scalar(n))));
  CHECK_THROWS_AS(convolution_of_maps(LinearMap::identity(2), id, A), DimensionError);
}

TEST_CASE("convolution is associative on the example algebras") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (const EpsBialgebra& A : {a3(), quiver_path_algebra(chain_quiver()), quiver_path_algebra(triangle_quiver()),
                                m2_example().bialgebra}) {
    const std::size_t n = A.dim();
    auto random_map = [&] {
      std::vector<Element> cols(n);
      for (auto& col : cols) {
        for (std::size_t i = 0; i < n; ++i) col.add(static_cast<Index>(i), coef(rng));
      }
      return LinearMap::from_columns(n, cols);
    };
    const LinearMap T = random_map(), S = random_map(), R = random_map();
    const LinearMap lhs = convolution_of_maps(convolution_of_maps(T, S, A), R, A);
    const LinearMap rhs = convolution_of_maps(T, convolution_of_maps(S, R, A), A);
    CHECK(lhs == rhs);
  }
}
