#include "epsalg/categorical.hpp"

#include <numeric>

namespace epsalg {

namespace {

std::vector<Index> range_of(std::size_t n) {
  std::vector<Index> v(n);
  std::iota(v.begin(), v.end(), Index{0});
  return v;
}

Element pair_element(const CircLayout& L, const Element& x, const Element& y) {
  Element out;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) out.add(L.pair(i, j), a * b);
  }
  return out;
}

// Embeds A- and B-elements into A ⊚ B.
Element in_left(const CircLayout&, const Element& x) { return x; }
Element in_right(const CircLayout& L, const Element& y) {
  Element out;
  for (const auto& [j, c] : y) out.add(L.right(j), c);
  return out;
}
Element in_pairs(const CircLayout& L, const Tensor2& t) {
  Element out;
  for (const auto& [k, c] : t) out.add(L.pair(k[0], k[1]), c);
  return out;
}

// U + V + W + UV + UW + VW + UVW
struct SevenLayout {
  std::size_t u, v, w;
  Index base(int part) const {
    const std::size_t sizes[] = {u, v, w, u * v, u * w, v * w, u * v * w};
    std::size_t s = 0;
    for (int p = 0; p < part; ++p) s += sizes[p];
    return static_cast<Index>(s);
  }
  std::size_t dim() const { return static_cast<std::size_t>(base(7)); }
};

// index of (U ⊚ V) ⊚ W -> seven-part index
Index seven_from_left(const SevenLayout& S, Index k) {
  const CircLayout uv{S.u, S.v};
  const CircLayout outer{uv.dim(), S.w};
  const auto d = outer.decode(k);
  const auto V = static_cast<Index>(S.v), W = static_cast<Index>(S.w);
  if (d.part == CircLayout::Part::right) return S.base(2) + d.i;
  const auto inner = uv.decode(d.i);
  if (d.part == CircLayout::Part::left) {
    switch (inner.part) {
      case CircLayout::Part::left: return S.base(0) + inner.i;
      case CircLayout::Part::right: return S.base(1) + inner.i;
      case CircLayout::Part::pair: return S.base(3) + inner.i * V + inner.j;
    }
  }
  switch (inner.part) {
    case CircLayout::Part::left: return S.base(4) + inner.i * W + d.j;
    case CircLayout::Part::right: return S.base(5) + inner.i * W + d.j;
    case CircLayout::Part::pair: return S.base(6) + (inner.i * V + inner.j) * W + d.j;
  }
  return -1;
}

// index of U ⊚ (V ⊚ W) -> seven-part index
Index seven_from_right(const SevenLayout& S, Index k) {
  const CircLayout vw{S.v, S.w};
  const CircLayout outer{S.u, vw.dim()};
  const auto d = outer.decode(k);
  const auto V = static_cast<Index>(S.v), W = static_cast<Index>(S.w);
  if (d.part == CircLayout::Part::left) return S.base(0) + d.i;
  const auto inner = vw.decode(d.part == CircLayout::Part::right ? d.i : d.j);
  if (d.part == CircLayout::Part::right) {
    switch (inner.part) {
      case CircLayout::Part::left: return S.base(1) + inner.i;
      case CircLayout::Part::right: return S.base(2) + inner.i;
      case CircLayout::Part::pair: return S.base(5) + inner.i * W + inner.j;
    }
  }
  switch (inner.part) {
    case CircLayout::Part::left: return S.base(3) + d.i * V + inner.i;
    case CircLayout::Part::right: return S.base(4) + d.i * W + inner.i;
    case CircLayout::Part::pair: return S.base(6) + (d.i * V + inner.i) * W + inner.j;
  }
  return -1;
}

// Inverse of an index bijection into the seven-part space.
std::vector<Index> invert(std::size_t n, const std::function<Index(Index)>& f) {
  std::vector<Index> inv(n, -1);
  for (Index k = 0; k < static_cast<Index>(n); ++k) inv[static_cast<std::size_t>(f(k))] = k;
  return inv;
}

Element reindex(const Element& x, const std::function<Index(Index)>& f) {
  Element out;
  for (const auto& [k, c] : x) out.add(f(k), c);
  return out;
}

TupleLabeler kinds(std::vector<std::string> k) {
  return [k = std::move(k)](std::span<const Index> t) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < t.size(); ++i) out.push_back(k[i] + std::to_string(t[i]));
    return out;
  };
}

std::vector<std::string> circ_labels(const FinAlgebra& A, const FinAlgebra& B) {
  std::vector<std::string> out;
  for (Index i = 0; i < static_cast<Index>(A.dim()); ++i) out.push_back("(" + A.label(i) + ",0,0)");
  for (Index j = 0; j < static_cast<Index>(B.dim()); ++j) out.push_back("(0," + B.label(j) + ",0)");
  for (Index i = 0; i < static_cast<Index>(A.dim()); ++i) {
    for (Index j = 0; j < static_cast<Index>(B.dim()); ++j) out.push_back(A.label(i) + "@" + B.label(j));
  }
  return out;
}

Scalar eval(const Element& covector, const Element& x) {
  Scalar s = 0;
  for (const auto& [k, c] : x) s += covector.coeff(k) * c;
  return s;
}

}  // namespace

CircLayout::Decoded CircLayout::decode(Index k) const {
  const auto V = static_cast<Index>(v), W = static_cast<Index>(w);
  if (k < 0 || k >= static_cast<Index>(dim())) throw std::out_of_range("circular layout index out of range");
  if (k < V) return {Part::left, k, 0};
  if (k < V + W) return {Part::right, k - V, 0};
  const Index p = k - V - W;
  return {Part::pair, p / W, p % W};
}

FinAlgebra circ_algebra(const FinAlgebra& A, const FinAlgebra& B) {
  const CircLayout L{A.dim(), B.dim()};
  return FinAlgebra::from_rule(
      L.dim(),
      [&](Index p, Index q) {
        const auto x = L.decode(p), y = L.decode(q);
        using P = CircLayout::Part;
        if (x.part == P::left && y.part == P::left) return in_left(L, A.product(x.i, y.i));
        if (x.part == P::right && y.part == P::right) return in_right(L, B.product(x.i, y.i));
        if (x.part == P::left && y.part == P::pair) return pair_element(L, A.product(x.i, y.i), basis_element(y.j));
        if (x.part == P::pair && y.part == P::right) return pair_element(L, basis_element(x.i), B.product(x.j, y.i));
        return Element{};
      },
      std::nullopt, circ_labels(A, B));
}

std::string_view to_string(Braiding b) { return b == Braiding::sigma ? "sigma" : "beta"; }

FinAlgebra braided_circ_algebra(const FinAlgebra& A, const FinAlgebra& B, Braiding br) {
  const CircLayout L{A.dim(), B.dim()};
  const FinAlgebra C = circ_algebra(A, B);
  return FinAlgebra::from_rule(
      L.dim(),
      [&](Index p, Index q) {
        using P = CircLayout::Part;
        const auto x = L.decode(p), y = L.decode(q);
        Element out = C.product(p, q);
        // a (x) b'
        if (x.part == P::left && y.part == P::right) out.add(L.pair(x.i, y.i), 1);
        if (br == Braiding::beta) return out;
        // a' (x) b
        if (x.part == P::right && y.part == P::left) out.add(L.pair(y.i, x.i), 1);
        // x' (x) by'
        if (x.part == P::right && y.part == P::pair) out += pair_element(L, basis_element(y.i), B.product(x.i, y.j));
        // xa' (x) y
        if (x.part == P::pair && y.part == P::left) out += pair_element(L, A.product(x.i, y.i), basis_element(x.j));
        // xx' (x) yy'
        if (x.part == P::pair && y.part == P::pair) out += pair_element(L, A.product(x.i, y.i), B.product(x.j, y.j));
        return out;
      },
      std::nullopt, circ_labels(A, B));
}

LinearMap circ_map(const LinearMap& f, const LinearMap& g) {
  const CircLayout src{f.domain_dim().value(), g.domain_dim().value()};
  const CircLayout dst{f.codomain_dim().value(), g.codomain_dim().value()};
  return LinearMap::from_rule(
      [&](Index k) {
        const auto d = src.decode(k);
        switch (d.part) {
          case CircLayout::Part::left: return in_left(dst, f(d.i));
          case CircLayout::Part::right: return in_right(dst, g(d.i));
          case CircLayout::Part::pair: return pair_element(dst, f(d.i), g(d.j));
        }
        return Element{};
      },
      src.dim(), dst.dim());
}

LinearMap monoid_wrap(const FinAlgebra& A) {
  const CircLayout L{A.dim(), A.dim()};
  return LinearMap::from_rule(
      [&](Index k) {
        const auto d = L.decode(k);
        if (d.part == CircLayout::Part::pair) return A.product(d.i, d.j);
        return basis_element(d.i);
      },
      L.dim(), A.dim());
}

LinearMap comonoid_wrap(const FinCoalgebra& C) {
  const CircLayout L{C.dim(), C.dim()};
  return LinearMap::from_rule(
      [&](Index c) {
        Element out = in_pairs(L, C.coproduct(c));
        out.add(L.left(c), 1);
        out.add(L.right(c), 1);
        return out;
      },
      C.dim(), L.dim());
}

Report check_circ_monoid(const FinAlgebra& A, const CheckOptions& opts) {
  Report report("circ-monoid");
  const std::size_t n = A.dim();
  const SevenLayout S{n, n, n};
  const CircLayout aa{n, n};
  const LinearMap mu = monoid_wrap(A);
  const LinearMap id = LinearMap::identity(n);
  const LinearMap left = compose(mu, circ_map(mu, id));   // on (A ⊚ A) ⊚ A
  const LinearMap right = compose(mu, circ_map(id, mu));  // on A ⊚ (A ⊚ A)
  const std::size_t N = S.dim();
  const auto from_left = invert(N, [&](Index k) { return seven_from_left(S, k); });
  const auto from_right = invert(N, [&](Index k) { return seven_from_right(S, k); });
  report.add(run_law(
      "monoid-associativity", {range_of(N)},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        const auto s = static_cast<std::size_t>(t[0]);
        return to_tensor_n(left(from_left[s]) - right(from_right[s]));
      },
      opts));
  report.add(run_law(
      "monoid-unit", {range_of(n)},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        TensorN out;
        for (const auto& [k, c] : mu(aa.left(t[0])) - basis_element(t[0])) out.add({0, k}, c);
        for (const auto& [k, c] : mu(aa.right(t[0])) - basis_element(t[0])) out.add({1, k}, c);
        return out;
      },
      opts));
  return report;
}

Report check_circ_comonoid(const FinCoalgebra& C, const CheckOptions& opts) {
  Report report("circ-comonoid");
  const std::size_t n = C.dim();
  const SevenLayout S{n, n, n};
  const LinearMap d = comonoid_wrap(C);
  const LinearMap id = LinearMap::identity(n);
  const LinearMap left = compose(circ_map(d, id), d);
  const LinearMap right = compose(circ_map(id, d), d);
  report.add(run_law(
      "comonoid-coassociativity", {range_of(n)},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        const Element l = reindex(left(t[0]), [&](Index k) { return seven_from_left(S, k); });
        const Element r = reindex(right(t[0]), [&](Index k) { return seven_from_right(S, k); });
        return to_tensor_n(l - r);
      },
      opts));
  return report;
}

Report check_algebra_morphism(const FinAlgebra& src, const FinAlgebra& dst, const LinearMap& f,
                              const std::string& law, const CheckOptions& opts) {
  Report report(law);
  const auto ix = range_of(src.dim());
  report.add(run_law(
      law, {ix, ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        return to_tensor_n(f.apply(src.product(t[0], t[1])) - dst.multiply(f(t[0]), f(t[1])));
      },
      opts));
  return report;
}

Report EquivalenceReport::combined() const {
  Report out(direct.title() + " / " + categorical.title());
  out.append(direct);
  out.append(categorical);
  if (agree()) {
    out.add(passed_law("verdicts-agree", direct.passed() ? "both pass" : "both fail"));
  } else {
    LawResult r;
    r.law = "verdicts-agree";
    r.status = Status::fail;
    r.note = std::string("direct ") + (direct.passed() ? "passes" : "fails") + ", categorical " +
             (categorical.passed() ? "passes" : "fails");
    out.add(std::move(r));
  }
  return out;
}

EquivalenceReport check_comonoid_alg_equiv(const EpsBialgebra& A, const CheckOptions& opts) {
  EquivalenceReport out{check_eps_axioms(A, {}, opts), Report("comonoid-in-circ")};
  const FinAlgebra& alg = A.algebra();
  out.categorical.append(check_circ_monoid(alg, opts));
  out.categorical.append(check_circ_comonoid(A.coalgebra(), opts));
  out.categorical.append(
      check_algebra_morphism(alg, circ_algebra(alg, alg), comonoid_wrap(A.coalgebra()), "delta-tilde-morphism", opts));
  return out;
}

Report braid_bimonoid_check(const EpsBialgebra& A, Braiding b, const CheckOptions& opts) {
  Report report("bimonoid-" + std::string(to_string(b)));
  const FinAlgebra& alg = A.algebra();
  const auto ix = range_of(A.dim());
  auto law_rhs = [&](Index i, Index j) {
    const Element a = basis_element(i), ap = basis_element(j);
    const Tensor2 da = A.coproduct(i), dap = A.coproduct(j);
    Tensor2 out = outer(a, ap) + A.multiply_left(a, dap) + A.multiply_right(da, ap);
    if (b == Braiding::sigma) {
      out += outer(ap, a);
      for (const auto& [k, c] : dap) out.add_scaled(outer(basis_element(k[0]), A.multiply(a, basis_element(k[1]))), c);
      for (const auto& [k, c] : da) out.add_scaled(outer(A.multiply(basis_element(k[0]), ap), basis_element(k[1])), c);
      out += alg.multiply(da, dap);
    }
    return out;
  };
  report.add(run_law(
      std::string(to_string(b)) + "-law", {ix, ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        return to_tensor_n(A.comultiply(A.product(t[0], t[1])) - law_rhs(t[0], t[1]));
      },
      opts, kinds({"a", "a'"})));
  // The law is the morphism property of Delta~ into the braided product.
  const FinAlgebra braided = braided_circ_algebra(alg, alg, b);
  const LinearMap dt = comonoid_wrap(A.coalgebra());
  const CircLayout L{A.dim(), A.dim()};
  report.add(run_law(
      "bimonoid-morphism", {ix, ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        const Element defect = dt.apply(A.product(t[0], t[1])) - braided.multiply(dt(t[0]), dt(t[1]));
        const Element law = in_pairs(L, A.comultiply(A.product(t[0], t[1])) - law_rhs(t[0], t[1]));
        return to_tensor_n(defect - law);
      },
      opts, kinds({"a", "a'"})));
  return report;
}

ModuleData circ_module_action(const FinAlgebra& A, const FinAlgebra& B, const ModuleData& N) {
  const std::size_t n = N.dim.value();
  const CircLayout AB{A.dim(), B.dim()}, AN{A.dim(), n};
  const BilinearOp lam = N.left;
  ModuleData M;
  M.dim = AN.dim();
  M.left = BilinearOp::from_rule(
      [=](Index p, Index q) {
        using P = CircLayout::Part;
        const auto x = AB.decode(p), y = AN.decode(q);
        if (x.part == P::left && y.part == P::left) return in_left(AN, A.product(x.i, y.i));
        if (x.part == P::right && y.part == P::right) return in_right(AN, lam(x.i, y.i));
        if (x.part == P::left && y.part == P::pair) return pair_element(AN, A.product(x.i, y.i), basis_element(y.j));
        if (x.part == P::pair && y.part == P::right) return pair_element(AN, basis_element(x.i), lam(x.j, y.i));
        return Element{};
      },
      AB.dim(), AN.dim(), AN.dim());
  return M;
}

ModuleData circ_right_module_action(const FinAlgebra& A, const FinAlgebra& B, const ModuleData& Mod) {
  if (!Mod.right) throw std::invalid_argument("circ_right_module_action: M has no right action");
  const std::size_t m = Mod.dim.value();
  const CircLayout AB{A.dim(), B.dim()}, MB{m, B.dim()};
  const BilinearOp xi = *Mod.right;
  ModuleData out;
  out.dim = MB.dim();
  out.left = BilinearOp::zero(AB.dim(), MB.dim(), MB.dim());
  out.right = BilinearOp::from_rule(
      [=](Index p, Index q) {
        using P = CircLayout::Part;
        const auto x = MB.decode(p), y = AB.decode(q);
        if (x.part == P::left && y.part == P::left) return in_left(MB, xi(x.i, y.i));
        if (x.part == P::right && y.part == P::right) return in_right(MB, B.product(x.i, y.i));
        // ub (x) y'
        if (x.part == P::pair && y.part == P::right) return pair_element(MB, basis_element(x.i), B.product(x.j, y.i));
        // mx (x) y
        if (x.part == P::left && y.part == P::pair) return pair_element(MB, xi(x.i, y.i), basis_element(y.j));
        return Element{};
      },
      MB.dim(), AB.dim(), MB.dim());
  return out;
}

ModuleData circ_restricted_action(const EpsBialgebra& A, const ModuleData& N) {
  const FinAlgebra& alg = A.algebra();
  const ModuleData big = circ_module_action(alg, alg, N);
  const LinearMap dt = comonoid_wrap(A.coalgebra());
  const BilinearOp act = big.left;
  ModuleData M;
  M.dim = big.dim;
  M.left = BilinearOp::from_rule([=](Index a, Index x) { return act.apply(dt(a), basis_element(x)); }, A.dim(),
                                 big.dim, big.dim);
  return M;
}

Report check_augmented(const AugmentedAlgebra& A, const CheckOptions& opts) {
  Report report("augmented");
  const auto ix = range_of(A.algebra.dim());
  report.add(run_law(
      "augmentation-kills-products", {ix, ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        TensorN out;
        const Scalar s = eval(A.eta, A.algebra.product(t[0], t[1]));
        if (sgn(s) != 0) out.add({}, s);
        return out;
      },
      opts, kinds({"a", "a'"})));
  return report;
}

AugmentedAlgebra eps_tensor_algebra(const AugmentedAlgebra& A, const AugmentedAlgebra& B) {
  const auto nb = static_cast<Index>(B.algebra.dim());
  const std::size_t dim = A.algebra.dim() * B.algebra.dim();
  const FinAlgebra alg = FinAlgebra::from_rule(dim, [&](Index p, Index q) {
    const Index a = p / nb, b = p % nb, a2 = q / nb, b2 = q % nb;
    Element out;
    const Scalar eb = B.eta.coeff(b), ea = A.eta.coeff(a2);
    if (sgn(eb) != 0) {
      for (const auto& [k, c] : A.algebra.product(a, a2)) out.add(k * nb + b2, eb * c);
    }
    if (sgn(ea) != 0) {
      for (const auto& [k, c] : B.algebra.product(b, b2)) out.add(a * nb + k, ea * c);
    }
    return out;
  });
  Element eta;
  for (const auto& [a, c] : A.eta) {
    for (const auto& [b, d] : B.eta) eta.add(a * nb + b, c * d);
  }
  return {alg, eta};
}

LinearMap infcir_map(const AugmentedAlgebra& A, const AugmentedAlgebra& B) {
  const CircLayout L{A.algebra.dim(), B.algebra.dim()};
  const auto nb = static_cast<Index>(B.algebra.dim());
  return LinearMap::from_rule(
      [=](Index p) {
        const Index a = p / nb, b = p % nb;
        Element out;
        out.add(L.left(a), B.eta.coeff(b));
        out.add(L.right(b), A.eta.coeff(a));
        out.add(L.pair(a, b), 1);
        return out;
      },
      A.algebra.dim() * B.algebra.dim(), L.dim());
}

AugmentedAlgebra plus_algebra(const FinAlgebra& A) {
  const auto n = static_cast<Index>(A.dim());
  std::vector<std::string> labels = A.labels();
  if (!labels.empty()) labels.push_back("1");
  const FinAlgebra alg = FinAlgebra::from_rule(
      A.dim() + 1, [&](Index i, Index j) { return i < n && j < n ? A.product(i, j) : Element{}; }, std::nullopt,
      labels);
  return {alg, basis_element(n)};
}

EpsBialgebra augment_plus(const EpsBialgebra& A) {
  const AugmentedAlgebra P = plus_algebra(A.algebra());
  const auto n = static_cast<Index>(A.dim());
  const FinCoalgebra co = FinCoalgebra::from_rule(
      A.dim() + 1,
      [&](Index i) {
        if (i == n) return outer(basis_element(n), basis_element(n));
        Tensor2 t = A.coproduct(i);
        t.add({i, n}, 1);
        t.add({n, i}, 1);
        return t;
      },
      P.eta);
  return EpsBialgebra::dense(P.algebra, co, A.name().empty() ? std::string() : A.name() + "+");
}

LinearMap plus_comparison(std::size_t dim_a, std::size_t dim_b) {
  const CircLayout L{dim_a, dim_b};
  const auto na = static_cast<Index>(dim_a), nb = static_cast<Index>(dim_b);
  const auto stride = nb + 1;  // B+ dimension
  const auto one = static_cast<Index>(L.dim());
  return LinearMap::from_rule(
      [=](Index k) {
        if (k == one) return basis_element(na * stride + nb);
        const auto d = L.decode(k);
        switch (d.part) {
          case CircLayout::Part::left: return basis_element(d.i * stride + nb);
          case CircLayout::Part::right: return basis_element(na * stride + d.i);
          case CircLayout::Part::pair: return basis_element(d.i * stride + d.j);
        }
        return Element{};
      },
      L.dim() + 1, (dim_a + 1) * (dim_b + 1));
}

Report check_plus_iso(const FinAlgebra& A, const FinAlgebra& B, const CheckOptions& opts) {
  Report report("plus-iso");
  const AugmentedAlgebra src = plus_algebra(circ_algebra(A, B));
  const AugmentedAlgebra dst = eps_tensor_algebra(plus_algebra(A), plus_algebra(B));
  const LinearMap phi = plus_comparison(A.dim(), B.dim());
  report.append(check_algebra_morphism(src.algebra, dst.algebra, phi, "plus-morphism", opts));
  const auto ix = range_of(src.algebra.dim());
  report.add(run_law(
      "plus-augmentation", {ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        TensorN out;
        const Scalar s = eval(dst.eta, phi(t[0])) - src.eta.coeff(t[0]);
        if (sgn(s) != 0) out.add({}, s);
        return out;
      },
      opts));
  // the images are distinct basis vectors and dimensions match
  std::vector<bool> hit(dst.algebra.dim(), false);
  bool bijective = src.algebra.dim() == dst.algebra.dim();
  for (Index k : ix) {
    const Element img = phi(k);
    if (img.size() != 1 || img.begin()->second != 1 || hit[static_cast<std::size_t>(img.begin()->first)]) {
      bijective = false;
      break;
    }
    hit[static_cast<std::size_t>(img.begin()->first)] = true;
  }
  report.add(bijective ? passed_law("plus-bijective")
                       : failed_law("plus-bijective", Witness{}, "comparison map is not a basis bijection"));
  return report;
}

Report check_plus_naturality(const FinAlgebra& A, const FinAlgebra& A2, const LinearMap& f, const FinAlgebra& B,
                             const FinAlgebra& B2, const LinearMap& g, const CheckOptions& opts) {
  Report report("plus-naturality");
  report.append(check_algebra_morphism(A, A2, f, "f-morphism", opts));
  report.append(check_algebra_morphism(B, B2, g, "g-morphism", opts));
  auto plus = [](const LinearMap& h) {
    const std::size_t n = h.domain_dim().value(), m = h.codomain_dim().value();
    return LinearMap::from_rule(
        [=](Index k) { return k == static_cast<Index>(n) ? basis_element(static_cast<Index>(m)) : h(k); }, n + 1, m + 1);
  };
  const LinearMap fp = plus(f), gp = plus(g);
  const LinearMap top = compose(plus_comparison(A2.dim(), B2.dim()), plus(circ_map(f, g)));
  const auto nb = static_cast<Index>(B.dim() + 1), nb2 = static_cast<Index>(B2.dim() + 1);
  const LinearMap fg = LinearMap::from_rule(
      [=](Index k) {
        Element out;
        for (const auto& [i, c] : fp(k / nb)) {
          for (const auto& [j, d] : gp(k % nb)) out.add(i * nb2 + j, c * d);
        }
        return out;
      },
      (A.dim() + 1) * (B.dim() + 1), (A2.dim() + 1) * (B2.dim() + 1));
  const LinearMap bottom = compose(fg, plus_comparison(A.dim(), B.dim()));
  report.add(run_law(
      "naturality-square", {range_of(top.domain_dim().value())},
      [&](std::span<const Index> t) -> std::optional<TensorN> { return to_tensor_n(top(t[0]) - bottom(t[0])); },
      opts));
  return report;
}

EquivalenceReport check_counital_comonoid_equiv(const EpsBialgebra& A, const CheckOptions& opts) {
  const auto eta = A.counit();
  if (!eta) throw std::invalid_argument("check_counital_comonoid_equiv: A has no counit");
  EquivalenceReport out{check_eps_axioms(A, {}, opts), Report("comonoid-in-augmented")};
  const FinAlgebra& alg = A.algebra();
  const AugmentedAlgebra aug{alg, *eta};
  const AugmentedAlgebra tens = eps_tensor_algebra(aug, aug);
  const auto n = static_cast<Index>(A.dim());
  const auto ix = range_of(A.dim());
  const LinearMap delta = LinearMap::from_rule(
      [&](Index i) {
        Element out;
        for (const auto& [k, c] : A.coproduct(i)) out.add(k[0] * n + k[1], c);
        return out;
      },
      A.dim(), A.dim() * A.dim());
  Report& cat = out.categorical;
  cat.append(check_associativity(alg, opts));
  cat.append(check_augmented(aug, opts));
  cat.append(check_algebra_morphism(alg, tens.algebra, delta, "delta-morphism", opts));
  cat.add(run_law(
      "delta-preserves-augmentation", {ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        TensorN r;
        const Scalar s = eval(tens.eta, delta(t[0])) - eta->coeff(t[0]);
        if (sgn(s) != 0) r.add({}, s);
        return r;
      },
      opts));
  cat.append(check_circ_comonoid(A.coalgebra(), opts));
  cat.add(run_law(
      "counit", {ix},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        Element l, r;
        for (const auto& [k, c] : A.coproduct(t[0])) {
          l.add(k[0], c * eta->coeff(k[1]));
          r.add(k[1], c * eta->coeff(k[0]));
        }
        TensorN res;
        for (const auto& [k, c] : l - basis_element(t[0])) res.add({0, k}, c);
        for (const auto& [k, c] : r - basis_element(t[0])) res.add({1, k}, c);
        return res;
      },
      opts));
  return out;
}

ModuleData eps_tensor_module(const EpsBialgebra& A, const ModuleData& N) {
  const auto eta = A.counit();
  if (!eta) throw std::invalid_argument("eps_tensor_module: A has no counit");
  const std::size_t nd = N.dim.value();
  const auto dn = static_cast<Index>(nd);
  const Element e = *eta;
  const BilinearOp lam = N.left;
  const EpsBialgebra Ac = A;
  ModuleData M;
  M.dim = A.dim() * nd;
  M.left = BilinearOp::from_rule(
      [=](Index a, Index x) {
        const Index ap = x / dn, v = x % dn;
        Element out;
        for (const auto& [k, c] : Ac.product(a, ap)) out.add(k * dn + v, c);
        const Scalar s = e.coeff(ap);
        if (sgn(s) != 0) {
          for (const auto& [pq, c] : Ac.coproduct(a)) {
            for (const auto& [w, d] : lam(pq[1], v)) out.add(pq[0] * dn + w, s * c * d);
          }
        }
        return out;
      },
      A.dim(), M.dim, M.dim);
  return M;
}

EquivalenceReport check_counital_hopf_char(const EpsBialgebra& A, const HopfModuleData& N, const CheckOptions& opts) {
  const auto eta = A.counit();
  if (!eta) throw std::invalid_argument("check_counital_hopf_char: A has no counit");
  const std::size_t nd = N.dim.value();
  const auto dn = static_cast<Index>(nd);
  const auto ix = range_of(A.dim());
  const auto nb = range_of(nd);
  const CoMap& Lam = N.left_coaction;

  const LawResult counit = run_law(
      "comodule-counit", {nb},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        Element l;
        for (const auto& [k, c] : Lam(t[0])) l.add(k[1], c * eta->coeff(k[0]));
        return to_tensor_n(l - basis_element(t[0]));
      },
      opts, kinds({"n"}));
  auto flat = [&](const Tensor2& t) {
    Element out;
    for (const auto& [k, c] : t) out.add(k[0] * dn + k[1], c);
    return out;
  };

  EquivalenceReport out{Report("hopf-module-law"), Report("coaction-module-morphism")};
  out.direct.add(counit);
  out.direct.add(run_law(
      "left-hopf", {ix, nb},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        const Element a = basis_element(t[0]);
        Tensor2 res = Lam.apply(N.left(t[0], t[1]));
        res -= A.multiply_left(a, Lam(t[1]));
        for (const auto& [k, c] : A.coproduct(t[0])) {
          res.add_scaled(outer(basis_element(k[0]), N.left(k[1], t[1])), -c);
        }
        return to_tensor_n(flat(res));
      },
      opts, kinds({"a", "n"})));

  ModuleData base{N.dim, N.left, std::nullopt, {}};
  const ModuleData AN = eps_tensor_module(A, base);
  out.categorical.add(counit);
  out.categorical.add(run_law(
      "coaction-morphism", {ix, nb},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        const Element lhs = flat(Lam.apply(N.left(t[0], t[1])));
        const Element rhs = AN.left.apply(basis_element(t[0]), flat(Lam(t[1])));
        return to_tensor_n(lhs - rhs);
      },
      opts, kinds({"a", "n"})));
  return out;
}

QuasiZeroResult check_counital_quasi_zero(const EpsBialgebra& A) {
  if (!A.counit()) throw std::invalid_argument("check_counital_quasi_zero: A has no counit");
  const std::size_t n = A.dim();
  Report report("counital-quasi-zero");
  if (n == 0) {
    report.add(passed_law("no-canonical-element", "dim 0: r = 0 solves the system trivially"));
    return {report, Solution{}};
  }
  const auto N = static_cast<Index>(n);
  // unknown r_pq at p*n + q; equation (a, i, j) at (a*n + i)*n + j
  const LinearMap M = LinearMap::from_rule(
      [&](Index pq) {
        const Element u = basis_element(pq / N), v = basis_element(pq % N);
        Element out;
        for (Index a = 0; a < N; ++a) {
          const Element ea = basis_element(a);
          const Tensor2 t = outer(u, A.multiply(v, ea)) - outer(A.multiply(ea, u), v);
          for (const auto& [k, c] : t) out.add((a * N + k[0]) * N + k[1], c);
        }
        return out;
      },
      n * n, n * n * n);
  Element rhs;
  for (Index a = 0; a < N; ++a) {
    for (const auto& [k, c] : A.coproduct(a)) rhs.add((a * N + k[0]) * N + k[1], c);
  }
  SolveResult res = linear_solve(M, rhs);
  if (const auto* inf = std::get_if<Infeasible>(&res)) {
    // y^T M = 0 and y . b != 0
    bool ok = sgn(eval(inf->certificate, rhs)) != 0;
    for (Index j = 0; ok && j < N * N; ++j) ok = sgn(eval(inf->certificate, M(j))) == 0;
    report.add(ok ? passed_law("no-canonical-element", "infeasible, certificate verified")
                  : failed_law("no-canonical-element", Witness{}, "infeasibility certificate does not verify"));
  } else {
    const auto& sol = std::get<Solution>(res);
    report.add(failed_law("no-canonical-element", Witness{{}, to_tensor_n(sol.x), {}},
                          "found r with Delta(a) = r.a - a.r on a counital algebra"));
  }
  return {report, res};
}

namespace {

Scalar random_coeff(std::mt19937_64& rng, double density) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (u(rng) >= density) return 0;
  return std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
}

}  // namespace

EpsBialgebra random_candidate(std::mt19937_64& rng, std::size_t dim, double density) {
  const auto n = static_cast<Index>(dim);
  std::vector<Element> prod(dim * dim);
  for (auto& e : prod) {
    for (Index k = 0; k < n; ++k) e.add(k, random_coeff(rng, density));
  }
  std::vector<Tensor2> co(dim);
  for (auto& t : co) {
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) t.add({i, j}, random_coeff(rng, density));
    }
  }
  return EpsBialgebra::dense(FinAlgebra(dim, std::move(prod)), FinCoalgebra(dim, std::move(co)), "random");
}

EpsBialgebra random_counital_candidate(std::mt19937_64& rng, std::size_t dim, double density) {
  const EpsBialgebra base = random_candidate(rng, dim, density);
  Element eta;
  for (Index k = 0; k < static_cast<Index>(dim); ++k) eta.add(k, random_coeff(rng, 0.5));
  return EpsBialgebra::dense(base.algebra(), FinCoalgebra::from_rule(dim, [&](Index i) { return base.coproduct(i); }, eta), "random-counital");
}

}  // namespace epsalg
