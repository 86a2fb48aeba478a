#include "epsalg/double.hpp"

#include "epsalg/quasitriangular.hpp"

namespace epsalg {

DoubleLayout::Part DoubleLayout::part(Index x) const {
  const auto N = static_cast<Index>(n);
  if (x < 0 || x >= static_cast<Index>(dim())) throw DimensionError("double index out of range");
  if (x < N) return Part::base;
  if (x < 2 * N) return Part::dual;
  return Part::tensor;
}

std::pair<Index, Index> DoubleLayout::split(Index x) const {
  const auto N = static_cast<Index>(n);
  const Index t = x - 2 * N;
  return {t / N, t % N};
}

std::string DoubleLayout::label(Index x, const EpsBialgebra& A) const {
  switch (part(x)) {
    case Part::base:
      return A.label(x);
    case Part::dual:
      return A.label(x - static_cast<Index>(n)) + "*";
    case Part::tensor: {
      const auto [i, j] = split(x);
      return A.label(i) + "⋈" + A.label(j) + "*";
    }
  }
  return {};
}

namespace {

// f -> a on basis vectors: f_k(a_1) a_2.
Element left_arrow(const EpsBialgebra& A, Index k, Index i) {
  Element out;
  for (const auto& [pq, c] : A.coproduct(i)) {
    if (pq[0] == k) out.add(pq[1], c);
  }
  return out;
}

// f <- a on basis vectors: b -> f_k(a b).
Element right_arrow(const EpsBialgebra& A, Index k, Index i) {
  Element out;
  const auto n = static_cast<Index>(A.dim());
  for (Index j = 0; j < n; ++j) out.add(j, A.product(i, j).coeff(k));
  return out;
}

struct Builder {
  const EpsBialgebra& A;
  const EpsBialgebra& Ad;
  DoubleLayout L;

  Element emb_a(const Element& x) const { return x; }
  Element emb_f(const Element& g) const {
    Element out;
    for (const auto& [j, c] : g) out.add(L.dual(j), c);
    return out;
  }
  Element bowtie(const Element& a, const Element& f) const {
    Element out;
    for (const auto& [i, c] : a) {
      for (const auto& [j, d] : f) out.add(L.tensor(i, j), c * d);
    }
    return out;
  }
  Element larrow(const Element& f, const Element& a) const {
    Element out;
    for (const auto& [k, c] : f) {
      for (const auto& [i, d] : a) out.add_scaled(left_arrow(A, k, i), c * d);
    }
    return out;
  }
  Element rarrow(const Element& f, const Element& a) const {
    Element out;
    for (const auto& [k, c] : f) {
      for (const auto& [i, d] : a) out.add_scaled(right_arrow(A, k, i), c * d);
    }
    return out;
  }

  Element product(Index x, Index y) const {
    using P = DoubleLayout::Part;
    const auto N = static_cast<Index>(L.n);
    const P px = L.part(x);
    const P py = L.part(y);
    auto dual_of = [&](Index z) { return basis_element(z - N); };
    if (px == P::base && py == P::base) return A.product(x, y);
    if (px == P::dual && py == P::dual) return emb_f(Ad.product(x - N, y - N));
    if (px == P::base && py == P::dual) return bowtie(basis_element(x), dual_of(y));
    if (px == P::dual && py == P::base) {
      return larrow(dual_of(x), basis_element(y)) + emb_f(rarrow(dual_of(x), basis_element(y)));
    }
    if (px == P::tensor && py == P::base) {
      const auto [i, j] = L.split(x);
      const Element a = basis_element(i);
      const Element f = basis_element(j);
      const Element b = basis_element(y);
      return A.multiply(a, larrow(f, b)) + bowtie(a, rarrow(f, b));
    }
    if (px == P::base && py == P::tensor) {
      const auto [i, j] = L.split(y);
      return bowtie(A.product(x, i), basis_element(j));
    }
    if (px == P::tensor && py == P::dual) {
      const auto [i, j] = L.split(x);
      return bowtie(basis_element(i), Ad.product(j, y - N));
    }
    if (px == P::dual && py == P::tensor) {
      const auto [i, j] = L.split(y);
      const Element g = dual_of(x);
      const Element a = basis_element(i);
      return bowtie(larrow(g, a), basis_element(j)) + emb_f(Ad.multiply(rarrow(g, a), basis_element(j)));
    }
    // (a ⋈ f)(b ⋈ g) = a(f -> b) ⋈ g + a ⋈ (f <- b) g
    const auto [i, j] = L.split(x);
    const auto [k, l] = L.split(y);
    const Element a = basis_element(i);
    const Element f = basis_element(j);
    const Element b = basis_element(k);
    const Element g = basis_element(l);
    return bowtie(A.multiply(a, larrow(f, b)), g) + bowtie(a, Ad.multiply(rarrow(f, b), g));
  }
};

Tensor2 principal(const FinAlgebra& D, const Tensor2& r, Index x) {
  Tensor2 out;
  const Element e = basis_element(x);
  for (const auto& [uv, c] : r) {
    out.add_scaled(outer(basis_element(uv[0]), D.multiply(basis_element(uv[1]), e)), c);
    out.add_scaled(outer(D.multiply(e, basis_element(uv[0])), basis_element(uv[1])), -c);
  }
  return out;
}

Tensor2 embed2(const Tensor2& t, Index shift) {
  Tensor2 out;
  for (const auto& [k, c] : t) out.add({k[0] + shift, k[1] + shift}, c);
  return out;
}

}  // namespace

std::pair<Element, Element> arrow_actions(const EpsBialgebra& A, const Element& f, const Element& a) {
  if (!A.is_finite()) throw DimensionError("arrow_actions needs a finite-dimensional ε-bialgebra");
  const auto n = static_cast<Index>(A.dim());
  for (const auto& [k, c] : f) {
    if (k < 0 || k >= n) throw DimensionError("functional index out of range");
  }
  for (const auto& [k, c] : a) {
    if (k < 0 || k >= n) throw DimensionError("element index out of range");
  }
  const EpsBialgebra Ad = dual_eps(A);
  Builder b{A, Ad, DoubleLayout{A.dim()}};
  return {b.larrow(f, a), b.rarrow(f, a)};
}

DoubleAlgebra build_double(const EpsBialgebra& A, std::size_t max_dim) {
  if (!A.is_finite()) throw DimensionError("the double needs a finite-dimensional ε-bialgebra");
  if (A.dim() > max_dim) {
    throw DimensionError("dim A = " + std::to_string(A.dim()) + " exceeds the double's cap of " +
                         std::to_string(max_dim));
  }
  require(check_eps_axioms(A), "build_double: input fails the ε-bialgebra axioms");
  const std::size_t n = A.dim();
  const EpsBialgebra Ad = dual_eps(A);
  const DoubleLayout L{n};
  const Builder b{A, Ad, L};

  std::vector<std::string> labels;
  for (std::size_t x = 0; x < L.dim(); ++x) labels.push_back(L.label(static_cast<Index>(x), A));
  FinAlgebra alg = FinAlgebra::from_rule(L.dim(), [&](Index x, Index y) { return b.product(x, y); }, std::nullopt,
                                         labels);
  Tensor2 r;
  for (std::size_t i = 0; i < n; ++i) r.add({static_cast<Index>(i), L.dual(static_cast<Index>(i))}, 1);
  FinCoalgebra co = FinCoalgebra::from_rule(L.dim(), [&](Index x) { return principal(alg, r, x); });

  std::vector<Element> ea, ed;
  for (std::size_t i = 0; i < n; ++i) {
    ea.push_back(basis_element(static_cast<Index>(i)));
    ed.push_back(basis_element(L.dual(static_cast<Index>(i))));
  }
  std::string name = A.name().empty() ? "D(A)" : "D(" + A.name() + ")";
  return DoubleAlgebra{EpsBialgebra::dense(std::move(alg), std::move(co), std::move(name)),
                       A,
                       Ad,
                       L,
                       std::move(r),
                       LinearMap::from_columns(L.dim(), std::move(ea)),
                       LinearMap::from_columns(L.dim(), std::move(ed))};
}

DoubleAlgebra build_right_double(const EpsBialgebra& A, std::size_t max_dim) {
  DoubleAlgebra D = build_double(op_cop(A), max_dim);
  const FinAlgebra& src = D.algebra.algebra();
  FinAlgebra alg = FinAlgebra::from_rule(
      src.dim(), [&](Index x, Index y) { return src.product(y, x); }, std::nullopt, src.labels());
  Tensor2 r = -flip(D.r);
  std::string name = A.name().empty() ? "Dr(A)" : "Dr(" + A.name() + ")";
  EpsBialgebra opc = op_cop(D.algebra);
  return DoubleAlgebra{EpsBialgebra::dense(std::move(alg), opc.coalgebra(), std::move(name)),
                       A,
                       op_cop(D.dual),
                       D.layout,
                       std::move(r),
                       D.embed_base,
                       D.embed_dual};
}

Report check_double_consistency(const DoubleAlgebra& D, const CheckOptions& opts) {
  Report report("double-consistency");
  const DoubleLayout& L = D.layout;
  const auto N = static_cast<Index>(L.n);
  const Probe base = Probe::all(L.n);
  report.add(run_law(
      "delta-on-A", {base.indices},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        return to_tensor_n(D.algebra.coproduct(t[0]) - D.base.coproduct(t[0]));
      },
      opts));
  report.add(run_law(
      "delta-on-A'", {base.indices},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        return to_tensor_n(D.algebra.coproduct(L.dual(t[0])) - embed2(D.dual.coproduct(t[0]), N));
      },
      opts));
  report.add(run_law(
      "delta-derivation", {base.indices, base.indices},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        const Element a = basis_element(t[0]);
        const Element f = basis_element(L.dual(t[1]));
        Tensor2 res = D.algebra.coproduct(L.tensor(t[0], t[1]));
        res -= D.algebra.multiply_left(a, D.algebra.coproduct(L.dual(t[1])));
        res -= D.algebra.multiply_right(D.algebra.coproduct(t[0]), f);
        return to_tensor_n(res);
      },
      opts));
  report.append(check_aybe(D.algebra.algebra(), D.r));
  report.append(check_delta_on_r(D.algebra, D.r));
  report.append(check_eps_axioms(D.algebra, {}, opts));
  return report;
}

FinAlgebra endomorphism_algebra(std::size_t m) {
  const auto M = static_cast<Index>(m);
  std::vector<std::string> labels;
  Element unit;
  for (Index i = 0; i < M; ++i) {
    for (Index j = 0; j < M; ++j) labels.push_back("E" + std::to_string(i) + std::to_string(j));
    unit.add(i * M + i, 1);
  }
  return FinAlgebra::from_rule(
      m * m,
      [M](Index x, Index y) {
        const Index i = x / M, j = x % M, k = y / M, l = y % M;
        return j == k ? basis_element(i * M + l) : Element{};
      },
      unit, labels);
}

namespace {

Report morphism_report(const std::string& law, const FinAlgebra& src, const FinAlgebra& B, const LinearMap& rho) {
  Report report(law);
  const Probe p = Probe::all(src.dim());
  report.add(run_law(law, {p.indices, p.indices}, [&](std::span<const Index> t) -> std::optional<TensorN> {
    const Element lhs = rho.apply(src.product(t[0], t[1]));
    const Element rhs = B.multiply(rho(t[0]), rho(t[1]));
    return to_tensor_n(lhs - rhs);
  }));
  return report;
}

}  // namespace

std::variant<LinearMap, Refused> extend_by_universal_property(const DoubleAlgebra& D, const FinAlgebra& B,
                                                              const LinearMap& rho, const LinearMap& rho_dual) {
  const std::size_t n = D.layout.n;
  for (const LinearMap* m : {&rho, &rho_dual}) {
    if (m->domain_dim() != n || m->codomain_dim() != B.dim()) {
      throw DimensionError("extend_by_universal_property: maps must go from a space of dim " +
                           std::to_string(n) + " to B of dim " + std::to_string(B.dim()));
    }
  }
  require(morphism_report("rho-morphism", D.base.algebra(), B, rho),
          "extend_by_universal_property: rho is not an algebra morphism");
  require(morphism_report("rho'-morphism", D.dual.algebra(), B, rho_dual),
          "extend_by_universal_property: rho' is not an algebra morphism");
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto [to, from] = arrow_actions(D.base, basis_element(static_cast<Index>(k)),
                                            basis_element(static_cast<Index>(i)));
      const Element res = B.multiply(rho_dual(static_cast<Index>(k)), rho(static_cast<Index>(i))) -
                          rho.apply(to) - rho_dual.apply(from);
      if (!res.is_zero()) {
        return Refused{static_cast<Index>(k), static_cast<Index>(i), res,
                       "rho'(f)rho(a) != rho(f -> a) + rho'(f <- a)"};
      }
    }
  }
  std::vector<Element> cols;
  for (std::size_t x = 0; x < D.layout.dim(); ++x) {
    const auto X = static_cast<Index>(x);
    switch (D.layout.part(X)) {
      case DoubleLayout::Part::base:
        cols.push_back(rho(X));
        break;
      case DoubleLayout::Part::dual:
        cols.push_back(rho_dual(X - static_cast<Index>(n)));
        break;
      case DoubleLayout::Part::tensor: {
        const auto [i, j] = D.layout.split(X);
        cols.push_back(B.multiply(rho(i), rho_dual(j)));
        break;
      }
    }
  }
  return LinearMap::from_columns(B.dim(), std::move(cols));
}

namespace {

// f_j(m_-1) m_0, optionally followed by a(.) on the left.
Element dual_act_left(const HopfModuleData& M, Index j, Index m, std::optional<Index> a) {
  Element out;
  for (const auto& [k, c] : M.left_coaction(m)) {
    if (k[0] != j) continue;
    out.add_scaled(a ? M.left(*a, k[1]) : basis_element(k[1]), c);
  }
  return out;
}

// f_j(m_1) m_0, optionally followed by (.)a on the right.
Element dual_act_right(const HopfModuleData& M, Index j, Index m, std::optional<Index> a) {
  Element out;
  for (const auto& [k, c] : M.coact_right(basis_element(m))) {
    if (k[1] != j) continue;
    out.add_scaled(a ? M.act_right(basis_element(k[0]), basis_element(*a)) : basis_element(k[0]), c);
  }
  return out;
}

HopfModuleData left_part(const HopfModuleData& M) {
  HopfModuleData L = M;
  L.right.reset();
  L.right_coaction.reset();
  return L;
}

std::size_t finite_dim(const HopfModuleData& M) {
  if (!M.dim) throw DimensionError("modules over the double need a finite-dimensional carrier");
  return *M.dim;
}

BilinearOp double_left_action(const DoubleAlgebra& D, const HopfModuleData& M) {
  const DoubleLayout L = D.layout;
  const auto N = static_cast<Index>(L.n);
  const std::size_t dm = finite_dim(M);
  return BilinearOp::from_rule(
      [&M, L, N](Index x, Index m) -> Element {
        switch (L.part(x)) {
          case DoubleLayout::Part::base:
            return M.left(x, m);
          case DoubleLayout::Part::dual:
            return dual_act_left(M, x - N, m, std::nullopt);
          case DoubleLayout::Part::tensor: {
            const auto [i, j] = L.split(x);
            return dual_act_left(M, j, m, i);
          }
        }
        return {};
      },
      L.dim(), dm, dm);
}

CoMap coaction_from_left(const DoubleAlgebra& D, const ModuleData& M) {
  const DoubleLayout L = D.layout;
  const std::size_t dm = *M.dim;
  return CoMap::from_rule(
      [&M, L](Index m) {
        Tensor2 out;
        for (std::size_t i = 0; i < L.n; ++i) {
          const auto I = static_cast<Index>(i);
          for (const auto& [k, c] : M.left(L.dual(I), m)) out.add({I, k}, c);
        }
        return out;
      },
      dm);
}

}  // namespace

ModuleData double_module_from_hopf_module(const DoubleAlgebra& D, const HopfModuleData& M) {
  const HopfModuleData Ml = left_part(M);
  require(check_hopf_module(D.base, Ml), "double_module_from_hopf_module: input is not a left ε-Hopf module");
  return ModuleData{Ml.dim, double_left_action(D, Ml), std::nullopt, {}};
}

HopfModuleData hopf_module_from_double_module(const DoubleAlgebra& D, const ModuleData& M) {
  if (!M.dim) throw DimensionError("modules over the double need a finite-dimensional carrier");
  ModuleData Ml{M.dim, M.left, std::nullopt, {}};
  require(check_module(D.algebra.algebra(), Ml), "hopf_module_from_double_module: input is not a D(A)-module");
  const std::size_t n = D.layout.n;
  const std::size_t dm = *M.dim;
  HopfModuleData out;
  out.dim = dm;
  out.left = BilinearOp::from_rule([&M](Index a, Index m) { return M.left(a, m); }, n, dm, dm);
  out.left_coaction = coaction_from_left(D, M);
  return out;
}

ModuleData double_bimodule_from_hopf_bimodule(const DoubleAlgebra& D, const HopfModuleData& M) {
  require(check_hopf_module(D.base, M), "double_bimodule_from_hopf_bimodule: input is not an ε-Hopf bimodule");
  const DoubleLayout L = D.layout;
  const auto N = static_cast<Index>(L.n);
  const std::size_t dm = finite_dim(M);
  BilinearOp right = BilinearOp::from_rule(
      [&M, L, N](Index m, Index x) -> Element {
        switch (L.part(x)) {
          case DoubleLayout::Part::base:
            return M.act_right(basis_element(m), basis_element(x));
          case DoubleLayout::Part::dual:
            return dual_act_right(M, x - N, m, std::nullopt);
          case DoubleLayout::Part::tensor: {
            const auto [i, j] = L.split(x);
            return dual_act_right(M, j, m, i);
          }
        }
        return {};
      },
      dm, L.dim(), dm);
  return ModuleData{dm, double_left_action(D, M), std::move(right), {}};
}

HopfModuleData hopf_bimodule_from_double_bimodule(const DoubleAlgebra& D, const DoubleAlgebra& Dr,
                                                  const ModuleData& M) {
  if (!M.dim || !M.right) throw DimensionError("expected a finite-dimensional two-sided module");
  require(check_module(D.algebra.algebra(), M, &Dr.algebra.algebra()),
          "hopf_bimodule_from_double_bimodule: input is not a D(A)-bimodule");
  const DoubleLayout L = D.layout;
  const std::size_t n = L.n;
  const std::size_t dm = *M.dim;
  HopfModuleData out;
  out.dim = dm;
  out.left = BilinearOp::from_rule([&M](Index a, Index m) { return M.left(a, m); }, n, dm, dm);
  out.left_coaction = coaction_from_left(D, M);
  out.right = BilinearOp::from_rule([&M](Index m, Index a) { return (*M.right)(m, a); }, dm, n, dm);
  out.right_coaction = CoMap::from_rule(
      [&M, L](Index m) {
        Tensor2 out2;
        for (std::size_t i = 0; i < L.n; ++i) {
          const auto I = static_cast<Index>(i);
          for (const auto& [k, c] : (*M.right)(m, L.dual(I))) out2.add({k, I}, c);
        }
        return out2;
      },
      dm);
  return out;
}

}  // namespace epsalg
