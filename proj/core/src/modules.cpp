#include "epsalg/modules.hpp"

#include <numeric>

namespace epsalg {

namespace {

std::vector<Index> iota_indices(std::size_t n) {
  std::vector<Index> v(n);
  std::iota(v.begin(), v.end(), Index{0});
  return v;
}

std::vector<Index> carrier_basis(const std::optional<std::size_t>& dim, const std::vector<Index>& probe) {
  if (!probe.empty()) return probe;
  if (!dim) throw DimensionError("module on a Z-indexed carrier needs a probe list");
  return iota_indices(*dim);
}

Tensor2 left_times(const BilinearOp& act, const Tensor2& t, const Element& m) {
  // sum t_(1) (x) t_(2) m
  Tensor2 out;
  for (const auto& [k, c] : t) out.add_scaled(outer(basis_element(k[0]), act.apply(basis_element(k[1]), m)), c);
  return out;
}

TupleLabeler index_labeler(const std::vector<std::string>& kinds) {
  return [kinds](std::span<const Index> t) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < t.size(); ++i) out.push_back(kinds[i] + std::to_string(t[i]));
    return out;
  };
}

}  // namespace

std::vector<Index> ModuleData::basis() const { return carrier_basis(dim, probe); }

Element ModuleData::act_right(const Element& m, const Element& a) const {
  return right ? right->apply(m, a) : Element{};
}

std::vector<Index> HopfModuleData::basis() const { return carrier_basis(dim, probe); }

Element HopfModuleData::act_right(const Element& m, const Element& a) const {
  return right ? right->apply(m, a) : Element{};
}

Tensor2 HopfModuleData::coact_right(const Element& m) const {
  return right_coaction ? right_coaction->apply(m) : Tensor2{};
}

Report check_module(const FinAlgebra& left_alg, const ModuleData& M, const FinAlgebra* right_alg,
                    const CheckOptions& opts) {
  const FinAlgebra& R = right_alg ? *right_alg : left_alg;
  Report report("module");
  const auto mb = M.basis();
  const auto lb = iota_indices(left_alg.dim());
  const auto rb = iota_indices(R.dim());
  report.add(run_law(
      "left-module", {lb, lb, mb},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        const Element m = basis_element(t[2]);
        const Element lhs = M.left.apply(basis_element(t[0]), M.left(t[1], t[2]));
        const Element rhs = M.left.apply(left_alg.product(t[0], t[1]), m);
        return to_tensor_n(lhs - rhs);
      },
      opts, index_labeler({"a", "b", "m"})));
  if (M.right) {
    const BilinearOp& xi = *M.right;
    report.add(run_law(
        "right-module", {mb, rb, rb},
        [&](std::span<const Index> t) -> std::optional<TensorN> {
          const Element lhs = xi.apply(xi(t[0], t[1]), basis_element(t[2]));
          const Element rhs = xi.apply(basis_element(t[0]), R.product(t[1], t[2]));
          return to_tensor_n(lhs - rhs);
        },
        opts, index_labeler({"m", "a", "b"})));
    report.add(run_law(
        "bimodule", {lb, mb, rb},
        [&](std::span<const Index> t) -> std::optional<TensorN> {
          const Element lhs = xi.apply(M.left(t[0], t[1]), basis_element(t[2]));
          const Element rhs = M.left.apply(basis_element(t[0]), xi(t[1], t[2]));
          return to_tensor_n(lhs - rhs);
        },
        opts, index_labeler({"a", "m", "b"})));
  }
  return report;
}

Report check_hopf_module(const EpsBialgebra& A, const HopfModuleData& M, const BasisWindow& window,
                         const CheckOptions& opts) {
  Report report("hopf-module");
  const auto ab = window.resolve(A).indices;
  const auto mb = M.basis();
  const BilinearOp& lam = M.left;
  const CoMap& Lam = M.left_coaction;

  report.add(run_law(
      "left-module", {ab, ab, mb},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        const Element lhs = lam.apply(basis_element(t[0]), lam(t[1], t[2]));
        const Element rhs = lam.apply(A.product(t[0], t[1]), basis_element(t[2]));
        return to_tensor_n(lhs - rhs);
      },
      opts, index_labeler({"a", "b", "m"})));
  report.add(run_law(
      "left-comodule", {mb},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        Tensor3 res;
        for (const auto& [k, c] : Lam(t[0])) {
          res.add_scaled(outer(A.coproduct(k[0]), basis_element(k[1])), c);
          res.add_scaled(outer(basis_element(k[0]), Lam(k[1])), -c);
        }
        return to_tensor_n(res);
      },
      opts, index_labeler({"m"})));
  report.add(run_law(
      "left-hopf", {ab, mb},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        const Element a = basis_element(t[0]);
        const Element m = basis_element(t[1]);
        Tensor2 res = Lam.apply(lam(t[0], t[1]));
        res -= A.multiply_left(a, Lam(t[1]));
        res -= left_times(lam, A.coproduct(t[0]), m);
        return to_tensor_n(res);
      },
      opts, index_labeler({"a", "m"})));
  if (!M.two_sided()) return report;

  auto xi_apply = [&](const Element& m, const Element& a) { return M.act_right(m, a); };
  auto Xi_apply = [&](const Element& m) { return M.coact_right(m); };

  report.add(run_law(
      "right-module", {mb, ab, ab},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        const Element m = basis_element(t[0]);
        const Element lhs = xi_apply(xi_apply(m, basis_element(t[1])), basis_element(t[2]));
        const Element rhs = xi_apply(m, A.product(t[1], t[2]));
        return to_tensor_n(lhs - rhs);
      },
      opts, index_labeler({"m", "a", "b"})));
  report.add(run_law(
      "right-comodule", {mb},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        Tensor3 res;
        for (const auto& [k, c] : Xi_apply(basis_element(t[0]))) {
          res.add_scaled(outer(Xi_apply(basis_element(k[0])), basis_element(k[1])), c);
          res.add_scaled(outer(basis_element(k[0]), A.coproduct(k[1])), -c);
        }
        return to_tensor_n(res);
      },
      opts, index_labeler({"m"})));
  report.add(run_law(
      "right-hopf", {mb, ab},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        const Element m = basis_element(t[0]);
        const Element a = basis_element(t[1]);
        Tensor2 res = Xi_apply(xi_apply(m, a));
        for (const auto& [k, c] : Xi_apply(m)) res.add_scaled(outer(basis_element(k[0]), A.product(k[1], t[1])), -c);
        for (const auto& [k, c] : A.coproduct(t[1])) res.add_scaled(outer(xi_apply(m, basis_element(k[0])), basis_element(k[1])), -c);
        return to_tensor_n(res);
      },
      opts, index_labeler({"m", "a"})));
  report.add(run_law(
      "bimodule", {ab, mb, ab},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        const Element lhs = xi_apply(lam(t[0], t[1]), basis_element(t[2]));
        const Element rhs = lam.apply(basis_element(t[0]), xi_apply(basis_element(t[1]), basis_element(t[2])));
        return to_tensor_n(lhs - rhs);
      },
      opts, index_labeler({"a", "m", "b"})));
  report.add(run_law(
      "bicomodule", {mb},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        Tensor3 res;
        for (const auto& [k, c] : Lam(t[0])) res.add_scaled(outer(basis_element(k[0]), Xi_apply(basis_element(k[1]))), c);
        for (const auto& [k, c] : Xi_apply(basis_element(t[0]))) res.add_scaled(outer(Lam(k[0]), basis_element(k[1])), -c);
        return to_tensor_n(res);
      },
      opts, index_labeler({"m"})));
  report.add(run_law(
      "square-left", {ab, mb},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        Tensor2 res = Xi_apply(lam(t[0], t[1]));
        for (const auto& [k, c] : Xi_apply(basis_element(t[1]))) res.add_scaled(outer(lam(t[0], k[0]), basis_element(k[1])), -c);
        return to_tensor_n(res);
      },
      opts, index_labeler({"a", "m"})));
  report.add(run_law(
      "square-right", {mb, ab},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        Tensor2 res = Lam.apply(xi_apply(basis_element(t[0]), basis_element(t[1])));
        for (const auto& [k, c] : Lam(t[0])) {
          res.add_scaled(outer(basis_element(k[0]), xi_apply(basis_element(k[1]), basis_element(t[1]))), -c);
        }
        return to_tensor_n(res);
      },
      opts, index_labeler({"m", "a"})));
  return report;
}

HopfModuleData regular_hopf_module(const EpsBialgebra& A, std::vector<Index> probe) {
  HopfModuleData M;
  if (A.is_finite()) M.dim = A.dim();
  M.probe = probe.empty() && !A.is_finite() ? A.probe_basis() : std::move(probe);
  M.left = BilinearOp::from_rule([A](Index i, Index j) { return A.product(i, j); }, M.dim, M.dim, M.dim);
  M.left_coaction = CoMap::from_rule([A](Index i) { return A.coproduct(i); }, M.dim);
  return M;
}

HopfModuleData free_hopf_module(const EpsBialgebra& A, std::size_t dim_v) {
  const std::size_t n = A.dim();
  const auto dv = static_cast<Index>(dim_v);
  HopfModuleData M;
  M.dim = n * dim_v;
  M.left = BilinearOp::from_rule(
      [A, dv](Index a, Index m) {
        Element out;
        for (const auto& [k, c] : A.product(a, m / dv)) out.add(k * dv + m % dv, c);
        return out;
      },
      n, M.dim, M.dim);
  M.left_coaction = CoMap::from_rule(
      [A, dv](Index m) {
        Tensor2 out;
        for (const auto& [k, c] : A.coproduct(m / dv)) out.add({k[0], k[1] * dv + m % dv}, c);
        return out;
      },
      M.dim);
  return M;
}

HopfModuleData tensor_square_hopf_bimodule(const EpsBialgebra& A) {
  const std::size_t n = A.dim();
  const auto N = static_cast<Index>(n);
  HopfModuleData M;
  M.dim = n * n;
  M.left = BilinearOp::from_rule(
      [A, N](Index a, Index m) {
        Element out;
        for (const auto& [k, c] : A.product(a, m / N)) out.add(k * N + m % N, c);
        return out;
      },
      n, M.dim, M.dim);
  M.left_coaction = CoMap::from_rule(
      [A, N](Index m) {
        Tensor2 out;
        for (const auto& [k, c] : A.coproduct(m / N)) out.add({k[0], k[1] * N + m % N}, c);
        return out;
      },
      M.dim);
  M.right = BilinearOp::from_rule(
      [A, N](Index m, Index a) {
        Element out;
        for (const auto& [k, c] : A.product(m % N, a)) out.add((m / N) * N + k, c);
        return out;
      },
      M.dim, n, M.dim);
  M.right_coaction = CoMap::from_rule(
      [A, N](Index m) {
        Tensor2 out;
        for (const auto& [k, c] : A.coproduct(m % N)) out.add({(m / N) * N + k[0], k[1]}, c);
        return out;
      },
      M.dim);
  return M;
}

HopfModuleData zero_hopf_module(std::size_t dim, bool two_sided) {
  HopfModuleData M;
  M.dim = dim;
  M.left = BilinearOp::from_rule([](Index, Index) { return Element{}; }, std::nullopt, dim, dim);
  M.left_coaction = CoMap::zero(dim);
  if (two_sided) {
    M.right = BilinearOp::from_rule([](Index, Index) { return Element{}; }, dim, std::nullopt, dim);
    M.right_coaction = CoMap::zero(dim);
  }
  return M;
}

ModuleData regular_module(const FinAlgebra& A) {
  return ModuleData{A.dim(), A.op(), std::nullopt, {}};
}

ModuleData regular_bimodule(const FinAlgebra& A) {
  return ModuleData{A.dim(), A.op(), A.op(), {}};
}

ModuleData matrix_column_module(std::size_t k) {
  const auto K = static_cast<Index>(k);
  ModuleData M;
  M.dim = k;
  M.left = BilinearOp::from_rule(
      [K](Index e, Index v) { return e % K == v ? basis_element(e / K) : Element{}; }, k * k, k, k);
  return M;
}

ModuleData zero_module(std::size_t dim, bool two_sided) {
  ModuleData M;
  M.dim = dim;
  M.left = BilinearOp::from_rule([](Index, Index) { return Element{}; }, std::nullopt, dim, dim);
  if (two_sided) M.right = BilinearOp::from_rule([](Index, Index) { return Element{}; }, dim, std::nullopt, dim);
  return M;
}

}  // namespace epsalg
