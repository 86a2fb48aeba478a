#include "epsalg/prelie.hpp"

namespace epsalg {

namespace {

std::optional<std::size_t> dim_of(const EpsBialgebra& A) {
  return A.is_finite() ? std::optional<std::size_t>(A.dim()) : std::nullopt;
}

TupleLabeler labels_of(const EpsBialgebra& A) {
  return [A](std::span<const Index> t) {
    std::vector<std::string> out;
    for (Index i : t) out.push_back(A.label(i));
    return out;
  };
}

Tensor3 permute(const Tensor3& t, std::array<int, 3> p) {
  Tensor3 out;
  for (const auto& [k, c] : t) out.add({k[p[0]], k[p[1]], k[p[2]]}, c);
  return out;
}

}  // namespace

BilinearOp prelie_from_eps(const EpsBialgebra& A) {
  const auto n = dim_of(A);
  return BilinearOp::from_rule(
      [A](Index i, Index j) {
        Element out;
        for (const auto& [k, c] : A.coproduct(j)) out.add_scaled(A.multiply(A.product(k[0], i), basis_element(k[1])), c);
        return out;
      },
      n, n, n);
}

Report check_prelie(const BilinearOp& op, const Probe& probe, const CheckOptions& opts) {
  Report report("prelie");
  const auto& ix = probe.indices;
  report.add(run_law(
      "prelie", {ix, ix, ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(probe);
        const Element x = basis_element(t[0]);
        const Element y = basis_element(t[1]);
        const Element z = basis_element(t[2]);
        const Element lhs = op.apply(x, g(op(t[1], t[2]))) - op.apply(g(op(t[0], t[1])), z);
        const Element rhs = op.apply(y, g(op(t[0], t[2]))) - op.apply(g(op(t[1], t[0])), z);
        g(lhs);
        g(rhs);
        if (!g.ok()) return std::nullopt;
        return to_tensor_n(lhs - rhs);
      },
      opts));
  return report;
}

BilinearOp lie_from_prelie(const BilinearOp& op) {
  return BilinearOp::from_rule([op](Index i, Index j) { return op(i, j) - op(j, i); }, op.left_dim(),
                               op.right_dim(), op.out_dim());
}

Report check_lie(const BilinearOp& br, const Probe& probe, const CheckOptions& opts) {
  Report report("lie");
  const auto& ix = probe.indices;
  report.add(run_law(
      "antisymmetry", {ix, ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        return to_tensor_n(br(t[0], t[1]) + br(t[1], t[0]));
      },
      opts));
  report.add(run_law(
      "jacobi", {ix, ix, ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(probe);
        Element res;
        for (int s = 0; s < 3; ++s) {
          const Index a = t[s], b = t[(s + 1) % 3], c = t[(s + 2) % 3];
          res += g(br.apply(basis_element(a), g(br(b, c))));
        }
        if (!g.ok()) return std::nullopt;
        return to_tensor_n(res);
      },
      opts));
  return report;
}

Report check_L_derivation(const EpsBialgebra& A, const BasisWindow& window, const CheckOptions& opts) {
  Report report("L-derivation");
  const Probe p = window.resolve(A);
  const BilinearOp circ = prelie_from_eps(A);
  const auto& ix = p.indices;
  report.add(run_law(
      "L-derivation", {ix, ix, ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(p);
        const Element c = basis_element(t[0]);
        const Element a = basis_element(t[1]);
        const Element b = basis_element(t[2]);
        Element res = circ.apply(c, g(A.product(t[1], t[2])));
        res -= A.multiply(a, g(circ(t[0], t[2])));
        res -= A.multiply(g(circ(t[0], t[1])), b);
        g(res);
        if (!g.ok()) return std::nullopt;
        return to_tensor_n(res);
      },
      opts, labels_of(A)));
  return report;
}

Report check_prelie_proof_identity(const EpsBialgebra& A, const BasisWindow& window, const CheckOptions& opts) {
  Report report("prelie-proof-identity");
  const Probe p = window.resolve(A);
  const BilinearOp circ = prelie_from_eps(A);
  const auto& ix = p.indices;
  report.add(run_law(
      "associator-expansion", {ix, ix, ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(p);
        const Element a = basis_element(t[0]);
        const Element b = basis_element(t[1]);
        const Element c = basis_element(t[2]);
        Element res = circ.apply(a, g(circ(t[1], t[2]))) - circ.apply(g(circ(t[0], t[1])), c);
        for (const auto& [k, coef] : iterated_coproduct(A, c, 2)) {
          const Element c1 = basis_element(k[0]), c2 = basis_element(k[1]), c3 = basis_element(k[2]);
          const std::array<Element, 5> bac{c1, b, c2, a, c3};
          const std::array<Element, 5> abc{c1, a, c2, b, c3};
          res.add_scaled(multiply_all(A, bac), -coef);
          res.add_scaled(multiply_all(A, abc), -coef);
        }
        g(res);
        if (!g.ok()) return std::nullopt;
        return to_tensor_n(res);
      },
      opts, labels_of(A)));
  return report;
}

PreLieCoalgebra prelie_coalgebra(const EpsBialgebra& A) {
  const auto n = dim_of(A);
  CoMap gamma = CoMap::from_rule(
      [A](Index i) {
        Tensor2 out;
        for (const auto& [k, c] : iterated_coproduct(A, basis_element(i), 2)) {
          for (const auto& [m, d] : A.product(k[0], k[2])) out.add({k[1], m}, c * d);
        }
        return out;
      },
      n);
  CoMap delta = CoMap::from_rule(
      [gamma](Index i) {
        const Tensor2 g = gamma(i);
        return g - flip(g);
      },
      n);
  return PreLieCoalgebra{std::move(gamma), std::move(delta)};
}

namespace {

// (id (x) f) t and (f (x) id) t for a co-operation f.
Tensor3 right_apply(const CoMap& f, const Tensor2& t) {
  Tensor3 out;
  for (const auto& [k, c] : t) out.add_scaled(outer(basis_element(k[0]), f(k[1])), c);
  return out;
}

Tensor3 left_apply(const CoMap& f, const Tensor2& t) {
  Tensor3 out;
  for (const auto& [k, c] : t) out.add_scaled(outer(f(k[0]), basis_element(k[1])), c);
  return out;
}

}  // namespace

Report check_prelie_coalgebra(const EpsBialgebra& A, const BasisWindow& window, const CheckOptions& opts) {
  Report report("prelie-coalgebra");
  const Probe p = window.resolve(A);
  const PreLieCoalgebra pc = prelie_coalgebra(A);
  const auto& ix = p.indices;
  report.add(run_law(
      "co-prelie", {ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(p);
        const Tensor2 gm = g(pc.gamma(t[0]));
        const Tensor3 assoc = g(right_apply(pc.gamma, gm)) - g(left_apply(pc.gamma, gm));
        if (!g.ok()) return std::nullopt;
        return to_tensor_n(assoc - permute(assoc, {1, 0, 2}));
      },
      opts, labels_of(A)));
  report.add(run_law(
      "co-antisymmetry", {ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        const Tensor2 d = pc.delta(t[0]);
        return to_tensor_n(d + flip(d));
      },
      opts, labels_of(A)));
  report.add(run_law(
      "co-jacobi", {ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(p);
        const Tensor3 x = g(right_apply(pc.delta, g(pc.delta(t[0]))));
        if (!g.ok()) return std::nullopt;
        // the three cyclic rotations of the tensor factors
        return to_tensor_n(x + permute(x, {1, 2, 0}) + permute(x, {2, 0, 1}));
      },
      opts, labels_of(A)));
  return report;
}

Report check_biderivation(const EpsBialgebra& A, const LinearMap& B, const BasisWindow& window,
                          const CheckOptions& opts) {
  Report report("biderivation");
  const Probe p = window.resolve(A);
  const auto& ix = p.indices;
  report.add(run_law(
      "derivation", {ix, ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(p);
        const Element a = basis_element(t[0]);
        const Element b = basis_element(t[1]);
        const Element res = B.apply(g(A.product(t[0], t[1]))) - A.multiply(a, g(B(t[1]))) - A.multiply(g(B(t[0])), b);
        g(res);
        if (!g.ok()) return std::nullopt;
        return to_tensor_n(res);
      },
      opts, labels_of(A)));
  report.add(run_law(
      "coderivation", {ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(p);
        Tensor2 res = A.comultiply(g(B(t[0])));
        for (const auto& [k, c] : A.coproduct(t[0])) {
          res.add_scaled(outer(basis_element(k[0]), g(B(k[1]))), -c);
          res.add_scaled(outer(g(B(k[0])), basis_element(k[1])), -c);
        }
        g(res);
        if (!g.ok()) return std::nullopt;
        return to_tensor_n(res);
      },
      opts, labels_of(A)));
  if (!report.passed()) {
    LawResult skipped;
    skipped.law = "prelie-derivation";
    skipped.status = Status::unprobed;
    skipped.note = "not checked: B is not a biderivation";
    report.add(std::move(skipped));
    return report;
  }
  const BilinearOp circ = prelie_from_eps(A);
  report.add(run_law(
      "prelie-derivation", {ix, ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(p);
        const Element a = basis_element(t[0]);
        const Element b = basis_element(t[1]);
        const Element res =
            B.apply(g(circ(t[0], t[1]))) - circ.apply(a, g(B(t[1]))) - circ.apply(g(B(t[0])), b);
        g(res);
        if (!g.ok()) return std::nullopt;
        return to_tensor_n(res);
      },
      opts, labels_of(A)));
  const PreLieCoalgebra pc = prelie_coalgebra(A);
  report.add(run_law(
      "gamma-coderivation", {ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(p);
        Tensor2 res = pc.gamma.apply(g(B(t[0])));
        const Tensor2 ga = pc.gamma(t[0]);
        for (const auto& [k, c] : g(ga)) {
          res.add_scaled(outer(g(B(k[0])), basis_element(k[1])), -c);
          res.add_scaled(outer(basis_element(k[0]), g(B(k[1]))), -c);
        }
        g(res);
        if (!g.ok()) return std::nullopt;
        return to_tensor_n(res);
      },
      opts, labels_of(A)));
  return report;
}

Tensor2 lie_bialgebra_cocycle_residual(const EpsBialgebra& A, Index a, Index b) {
  // delta({a,b}) - ad_a delta(b) + ad_b delta(a), with ad_x (y (x) z) = {x,y} (x) z + y (x) {x,z}
  const BilinearOp br = lie_from_prelie(prelie_from_eps(A));
  const PreLieCoalgebra pc = prelie_coalgebra(A);
  auto ad = [&](Index x, const Tensor2& t) {
    Tensor2 out;
    for (const auto& [k, c] : t) {
      out.add_scaled(outer(br(x, k[0]), basis_element(k[1])), c);
      out.add_scaled(outer(basis_element(k[0]), br(x, k[1])), c);
    }
    return out;
  };
  return pc.delta.apply(br(a, b)) - ad(a, pc.delta(b)) + ad(b, pc.delta(a));
}

}  // namespace epsalg
