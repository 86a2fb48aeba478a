#include "epsalg/structures.hpp"

namespace epsalg {

namespace {

TupleLabeler labels_of(const EpsBialgebra& A) {
  return [A](std::span<const Index> t) {
    std::vector<std::string> out;
    for (Index i : t) out.push_back(A.label(i));
    return out;
  };
}

Tensor3 delta_left(const EpsBialgebra& A, const Tensor2& t) {
  Tensor3 out;
  for (const auto& [k, c] : t) {
    for (const auto& [pq, d] : A.coproduct(k[0])) out.add({pq[0], pq[1], k[1]}, c * d);
  }
  return out;
}

Tensor3 delta_right(const EpsBialgebra& A, const Tensor2& t) {
  Tensor3 out;
  for (const auto& [k, c] : t) {
    for (const auto& [pq, d] : A.coproduct(k[1])) out.add({k[0], pq[0], pq[1]}, c * d);
  }
  return out;
}

}  // namespace

Report check_eps_axioms(const EpsBialgebra& A, const BasisWindow& probe, const CheckOptions& opts) {
  Report report("eps-axioms " + A.name());
  const Probe pr = probe.resolve(A);
  const std::vector<Index>& p = pr.indices;
  const TupleLabeler lab = labels_of(A);

  report.add(run_law(
      "associativity", {p, p, p},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(pr);
        const Element ab = g(A.product(t[0], t[1]));
        const Element bc = g(A.product(t[1], t[2]));
        const Element lhs = g(A.multiply(ab, basis_element(t[2])));
        const Element rhs = g(A.multiply(basis_element(t[0]), bc));
        if (!g.ok()) return std::nullopt;
        return to_tensor_n(lhs - rhs);
      },
      opts, lab));

  report.add(run_law(
      "coassociativity", {p},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(pr);
        const Tensor2 d = g(A.coproduct(t[0]));
        const Tensor3 l = g(delta_left(A, d));
        const Tensor3 r = g(delta_right(A, d));
        if (!g.ok()) return std::nullopt;
        return to_tensor_n(l - r);
      },
      opts, lab));

  report.add(run_law(
      "eps-compatibility", {p, p},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(pr);
        const Element a = basis_element(t[0]);
        const Element b = basis_element(t[1]);
        const Tensor2 lhs = g(A.comultiply(g(A.product(t[0], t[1]))));
        const Tensor2 r1 = g(A.multiply_left(a, g(A.coproduct(t[1]))));
        const Tensor2 r2 = g(A.multiply_right(g(A.coproduct(t[0])), b));
        if (!g.ok()) return std::nullopt;
        return to_tensor_n(lhs - r1 - r2);
      },
      opts, lab));

  if (const auto u = A.unit()) {
    report.add(run_law(
        "unit", {p},
        [&](std::span<const Index> t) -> std::optional<TensorN> {
          WindowGuard g(pr);
          const Element x = basis_element(t[0]);
          const Element left = g(A.multiply(*u, x)) - x;
          const Element right = g(A.multiply(x, *u)) - x;
          if (!g.ok()) return std::nullopt;
          return to_tensor_n(left.is_zero() ? right : left);
        },
        opts, lab));
  }

  if (const auto eta = A.counit()) {
    report.add(run_law(
        "counit", {p},
        [&](std::span<const Index> t) -> std::optional<TensorN> {
          Element left, right;
          for (const auto& [k, c] : A.coproduct(t[0])) {
            left.add(k[0], c * eta->coeff(k[1]));
            right.add(k[1], c * eta->coeff(k[0]));
          }
          left -= basis_element(t[0]);
          right -= basis_element(t[0]);
          return to_tensor_n(left.is_zero() ? right : left);
        },
        opts, lab));
    report.add(run_law(
        "counit-kills-products", {p, p},
        [&](std::span<const Index> t) -> std::optional<TensorN> {
          const Scalar v = pair(*eta, A.product(t[0], t[1]));
          return TensorN::basis({}, v);
        },
        opts, lab));
  }
  return report;
}

Report check_associativity(const FinAlgebra& A, const CheckOptions& opts) {
  Report report("associativity");
  std::vector<Index> p(A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) p[i] = static_cast<Index>(i);
  report.add(run_law(
      "associativity", {p, p, p},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        const Element lhs = A.multiply(A.product(t[0], t[1]), basis_element(t[2]));
        const Element rhs = A.multiply(basis_element(t[0]), A.product(t[1], t[2]));
        return to_tensor_n(lhs - rhs);
      },
      opts));
  return report;
}

Report check_unital_counital_zero(const EpsBialgebra& A) {
  Report report("unital-counital-zero " + A.name());
  const bool both = A.unit().has_value() && A.counit().has_value();
  if (both && A.dim() > 0) {
    report.add(failed_law("unital-and-counital-forces-zero", Witness{{}, to_tensor_n(*A.unit()), {}},
                          "a nonzero ε-bialgebra cannot carry both a unit and a counit"));
  } else {
    report.add(passed_law("unital-and-counital-forces-zero"));
  }
  return report;
}

}  // namespace epsalg
