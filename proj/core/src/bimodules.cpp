#include "epsalg/bimodules.hpp"

#include <numeric>
#include <stdexcept>

namespace epsalg {

namespace {

std::vector<Index> carrier(const std::optional<std::size_t>& dim, const std::vector<Index>& probe) {
  if (!probe.empty()) return probe;
  if (!dim) throw DimensionError("module on a Z-indexed carrier needs a probe list");
  std::vector<Index> v(*dim);
  std::iota(v.begin(), v.end(), Index{0});
  return v;
}

TupleLabeler kinds(std::vector<std::string> k) {
  return [k = std::move(k)](std::span<const Index> t) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < t.size(); ++i) out.push_back(k[i] + std::to_string(t[i]));
    return out;
  };
}

// A x M -> M and M x A -> M with the module's dimensions
BilinearOp left_op(BilinearOp::Rule rule, std::optional<std::size_t> a_dim, std::optional<std::size_t> m_dim) {
  return BilinearOp::from_rule(std::move(rule), a_dim, m_dim, m_dim);
}
BilinearOp right_op(BilinearOp::Rule rule, std::optional<std::size_t> a_dim, std::optional<std::size_t> m_dim) {
  return BilinearOp::from_rule(std::move(rule), m_dim, a_dim, m_dim);
}

void require_bimodule(const FinAlgebra& A, const ModuleData& M, const std::string& who) {
  if (!M.right) throw std::invalid_argument(who + ": M has no right action");
  require(check_module(A, M), who + ": M is not an A-bimodule");
}

// Tags each residual so several outputs fit one tensor.
void tag(TensorN& out, Index which, const Element& e) {
  for (const auto& [k, c] : e) out.add({which, k}, c);
}

}  // namespace

std::vector<Index> PreLieBimoduleData::basis() const { return carrier(dim, probe); }
std::vector<Index> DendriformBimoduleData::basis() const { return carrier(dim, probe); }

HopfModuleData hopf_module_from_quasi(const QuasiTriangular& Q, const ModuleData& M) {
  require(check_module(Q.base, M), "hopf_module_from_quasi: M is not a left A-module");
  const auto terms = r_terms(Q.r);
  const BilinearOp lam = M.left;
  HopfModuleData out;
  out.dim = M.dim;
  out.left = lam;
  out.probe = M.probe;
  out.left_coaction = CoMap::from_rule(
      [terms, lam](Index m) {
        Tensor2 t;
        for (const auto& [u, v] : terms) t += outer(u, lam.apply(v, basis_element(m)));
        return t;
      },
      M.dim);
  return out;
}

HopfModuleData hopf_bimodule_from_quasi(const QuasiTriangular& Q, const ModuleData& M) {
  require_bimodule(Q.base, M, "hopf_bimodule_from_quasi");
  HopfModuleData out = hopf_module_from_quasi(Q, ModuleData{M.dim, M.left, std::nullopt, M.probe});
  const auto terms = r_terms(Q.r);
  const BilinearOp xi = *M.right;
  out.right = xi;
  out.right_coaction = CoMap::from_rule(
      [terms, xi](Index m) {
        Tensor2 t;
        for (const auto& [u, v] : terms) t -= outer(xi.apply(basis_element(m), u), v);
        return t;
      },
      M.dim);
  return out;
}

PreLieBimoduleData prelie_bimodule_from_hopf(const EpsBialgebra& A, const HopfModuleData& M,
                                             const BasisWindow& window) {
  require(check_hopf_module(A, M, window), "prelie_bimodule_from_hopf: M is not an ε-Hopf (bi)module");
  const std::optional<std::size_t> a_dim = A.is_finite() ? std::optional<std::size_t>(A.dim()) : std::nullopt;
  PreLieBimoduleData out;
  out.dim = M.dim;
  out.probe = M.probe;
  out.left = left_op(
      [A, M](Index a, Index m) {
        const Element ea = basis_element(a);
        Element res;
        for (const auto& [k, c] : M.left_coaction(m)) {
          res.add_scaled(M.left.apply(A.multiply(basis_element(k[0]), ea), basis_element(k[1])), c);
        }
        for (const auto& [k, c] : M.coact_right(basis_element(m))) {
          res.add_scaled(M.act_right(basis_element(k[0]), A.multiply(ea, basis_element(k[1]))), c);
        }
        return res;
      },
      a_dim, M.dim);
  out.right = right_op(
      [A, M](Index m, Index a) {
        Element res;
        for (const auto& [k, c] : A.coproduct(a)) {
          res.add_scaled(M.left.apply(basis_element(k[0]), M.act_right(basis_element(m), basis_element(k[1]))), c);
        }
        return res;
      },
      a_dim, M.dim);
  return out;
}

Report check_prelie_bimodule(const BilinearOp& P, const Probe& p_probe, const PreLieBimoduleData& M,
                             const CheckOptions& opts) {
  Report report("prelie-bimodule");
  const auto& pb = p_probe.indices;
  const auto mb = M.basis();
  report.add(run_law(
      "prelie-bimodule-left", {pb, pb, mb},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(p_probe);
        const Element x = basis_element(t[0]), y = basis_element(t[1]), m = basis_element(t[2]);
        const Element res = M.left.apply(x, M.left(t[1], t[2])) - M.left.apply(g(P(t[0], t[1])), m) -
                            M.left.apply(y, M.left(t[0], t[2])) + M.left.apply(g(P(t[1], t[0])), m);
        if (!g.ok()) return std::nullopt;
        return to_tensor_n(res);
      },
      opts, kinds({"x", "y", "m"})));
  report.add(run_law(
      "prelie-bimodule-right", {pb, mb, pb},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(p_probe);
        const Element x = basis_element(t[0]), m = basis_element(t[1]), z = basis_element(t[2]);
        const Element res = M.left.apply(x, M.right(t[1], t[2])) - M.right.apply(M.left(t[0], t[1]), z) -
                            M.right.apply(m, g(P(t[0], t[2]))) + M.right.apply(M.right(t[1], t[0]), z);
        if (!g.ok()) return std::nullopt;
        return to_tensor_n(res);
      },
      opts, kinds({"x", "m", "z"})));
  return report;
}

Report check_prelie_bimodule_expansions(const EpsBialgebra& A, const HopfModuleData& M, const BasisWindow& window,
                                        const CheckOptions& opts) {
  Report report("prelie-bimodule-expansions");
  const Probe p = window.resolve(A);
  const auto& ab = p.indices;
  const auto mb = M.basis();
  const PreLieBimoduleData P = prelie_bimodule_from_hopf(A, M, window);
  const BilinearOp circ = prelie_from_eps(A);
  const BilinearOp& lam = M.left;
  auto xi = [&](const Element& m, const Element& a) { return M.act_right(m, a); };
  auto mul = [&](std::initializer_list<Element> xs) {
    Element acc = *xs.begin();
    for (auto it = xs.begin() + 1; it != xs.end(); ++it) acc = A.multiply(acc, *it);
    return acc;
  };

  report.add(run_law(
      "left-expansion", {ab, ab, mb},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(p);
        const Element a = basis_element(t[0]), b = basis_element(t[1]), m = basis_element(t[2]);
        Element res = P.left.apply(a, P.left(t[1], t[2])) - P.left.apply(g(circ(t[0], t[1])), m);
        for (const auto& [k, c] : M.left_coaction(t[2])) {
          const Element m1 = g(basis_element(k[0]));
          // m_-2 (x) m_-1 (x) m_0
          for (const auto& [j, d] : M.left_coaction(k[1])) {
            const Element m2 = g(basis_element(j[0])), m0 = basis_element(j[1]);
            res.add_scaled(lam.apply(mul({m1, a, m2, b}) + mul({m1, b, m2, a}), m0), -(c * d));
          }
          // m_-1 (x) m_0 (x) m_1
          for (const auto& [j, d] : M.coact_right(basis_element(k[1]))) {
            const Element m0 = basis_element(j[0]), r1 = g(basis_element(j[1]));
            res.add_scaled(lam.apply(A.multiply(m1, a), xi(m0, A.multiply(b, r1))) +
                               lam.apply(A.multiply(m1, b), xi(m0, A.multiply(a, r1))),
                           -(c * d));
          }
        }
        // m_0 (x) m_1 (x) m_2
        for (const auto& [k, c] : M.coact_right(m)) {
          const Element r2 = g(basis_element(k[1]));
          for (const auto& [j, d] : M.coact_right(basis_element(k[0]))) {
            const Element m0 = basis_element(j[0]), r1 = g(basis_element(j[1]));
            res.add_scaled(xi(m0, mul({b, r1, a, r2}) + mul({a, r1, b, r2})), -(c * d));
          }
        }
        if (!g.ok()) return std::nullopt;
        return to_tensor_n(res);
      },
      opts, kinds({"a", "b", "m"})));

  // b_1 a b_2 m b_3 + b_1 m b_2 a b_3
  auto mixed = [&](WindowGuard& g, const Element& a, Index b, const Element& m) {
    Element out;
    for (const auto& [k, c] : g(iterated_coproduct(A, basis_element(b), 2))) {
      const Element b1 = basis_element(k[0]), b2 = basis_element(k[1]), b3 = basis_element(k[2]);
      out.add_scaled(lam.apply(mul({b1, a, b2}), xi(m, b3)), c);
      out.add_scaled(lam.apply(b1, xi(m, mul({b2, a, b3}))), c);
    }
    return out;
  };
  report.add(run_law(
      "mixed-expansion", {ab, mb, ab},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(p);
        const Element a = basis_element(t[0]), m = basis_element(t[1]), b = basis_element(t[2]);
        const Element res =
            P.left.apply(a, P.right(t[1], t[2])) - P.right.apply(P.left(t[0], t[1]), b) - mixed(g, a, t[2], m);
        if (!g.ok()) return std::nullopt;
        return to_tensor_n(res);
      },
      opts, kinds({"a", "m", "b"})));
  report.add(run_law(
      "right-expansion", {mb, ab, ab},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(p);
        const Element m = basis_element(t[0]), a = basis_element(t[1]), b = basis_element(t[2]);
        const Element res =
            P.right.apply(m, g(circ(t[1], t[2]))) - P.right.apply(P.right(t[0], t[1]), b) - mixed(g, a, t[2], m);
        if (!g.ok()) return std::nullopt;
        return to_tensor_n(res);
      },
      opts, kinds({"m", "a", "b"})));
  return report;
}

LinearMap bimodule_baxter_from_r(const QuasiTriangular& Q, const ModuleData& M) {
  require(check_aybe(Q.base, Q.r), "bimodule_baxter_from_r: r fails the associative Yang-Baxter equation");
  require_bimodule(Q.base, M, "bimodule_baxter_from_r");
  const auto terms = r_terms(Q.r);
  const ModuleData mod = M;
  return LinearMap::from_rule(
      [terms, mod](Index m) {
        Element out;
        for (const auto& [u, v] : terms) out += mod.act_right(mod.act_left(u, basis_element(m)), v);
        return out;
      },
      M.dim, M.dim);
}

Report check_bimodule_baxter(const BaxterOp& b, const ModuleData& M, const LinearMap& beta_M,
                             const CheckOptions& opts) {
  Report report("bimodule-baxter");
  const FinAlgebra& A = b.carrier;
  const Probe pa = Probe::all(A.dim());
  const auto mb = M.basis();
  report.add(run_law(
      "baxter-bimodule-left", {pa.indices, mb},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        const Element a = basis_element(t[0]);
        const Element bm = beta_M(t[1]);
        const Element ba = b.beta(t[0]);
        const Element res =
            M.act_left(ba, bm) - beta_M.apply(M.act_left(a, bm) + M.act_left(ba, basis_element(t[1])));
        return to_tensor_n(res);
      },
      opts, kinds({"a", "m"})));
  report.add(run_law(
      "baxter-bimodule-right", {mb, pa.indices},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        const Element a = basis_element(t[1]);
        const Element bm = beta_M(t[0]);
        const Element ba = b.beta(t[1]);
        const Element res =
            M.act_right(bm, ba) - beta_M.apply(M.act_right(basis_element(t[0]), ba) + M.act_right(bm, a));
        return to_tensor_n(res);
      },
      opts, kinds({"m", "a"})));
  return report;
}

DendriformBimoduleData dendriform_bimodule_from_baxter(const BaxterOp& b, const LinearMap& beta_M,
                                                       const ModuleData& M) {
  require(check_baxter(b), "dendriform_bimodule_from_baxter: beta_A is not a Baxter operator");
  if (!M.right) throw std::invalid_argument("dendriform_bimodule_from_baxter: M has no right action");
  require(check_bimodule_baxter(b, M, beta_M), "dendriform_bimodule_from_baxter: beta_M is not a Baxter operator");
  const LinearMap bA = b.beta;
  const BilinearOp lam = M.left, xi = *M.right;
  const std::size_t n = b.carrier.dim();
  DendriformBimoduleData out;
  out.dim = M.dim;
  out.probe = M.probe;
  out.succ_left = left_op([=](Index a, Index m) { return lam.apply(bA(a), basis_element(m)); }, n, M.dim);
  out.prec_left = left_op([=](Index a, Index m) { return lam.apply(basis_element(a), beta_M(m)); }, n, M.dim);
  out.succ_right = right_op([=](Index m, Index a) { return xi.apply(beta_M(m), basis_element(a)); }, n, M.dim);
  out.prec_right = right_op([=](Index m, Index a) { return xi.apply(basis_element(m), bA(a)); }, n, M.dim);
  return out;
}

DendriformBimoduleData quasi_dendriform_bimodule(const QuasiTriangular& Q, const ModuleData& M) {
  require(check_aybe(Q.base, Q.r), "quasi_dendriform_bimodule: r fails the associative Yang-Baxter equation");
  require_bimodule(Q.base, M, "quasi_dendriform_bimodule");
  const auto terms = r_terms(Q.r);
  const FinAlgebra A = Q.base;
  const ModuleData mod = M;
  const std::size_t n = A.dim();
  DendriformBimoduleData out;
  out.dim = M.dim;
  out.probe = M.probe;
  out.succ_left = left_op(
      [=](Index a, Index m) {
        Element s;
        for (const auto& [u, v] : terms) s += mod.act_left(A.multiply(A.multiply(u, basis_element(a)), v), basis_element(m));
        return s;
      },
      n, M.dim);
  out.succ_right = right_op(
      [=](Index m, Index a) {
        Element s;
        for (const auto& [u, v] : terms) {
          s += mod.act_right(mod.act_right(mod.act_left(u, basis_element(m)), v), basis_element(a));
        }
        return s;
      },
      n, M.dim);
  out.prec_left = left_op(
      [=](Index a, Index m) {
        Element s;
        for (const auto& [u, v] : terms) s += mod.act_right(mod.act_left(A.multiply(basis_element(a), u), basis_element(m)), v);
        return s;
      },
      n, M.dim);
  out.prec_right = right_op(
      [=](Index m, Index a) {
        Element s;
        for (const auto& [u, v] : terms) s += mod.act_right(basis_element(m), A.multiply(A.multiply(u, basis_element(a)), v));
        return s;
      },
      n, M.dim);
  return out;
}

Report check_dendriform_bimodule(const Dendriform& D, const Probe& d_probe, const DendriformBimoduleData& M,
                                 const CheckOptions& opts) {
  Report report("dendriform-bimodule");
  const auto& db = d_probe.indices;
  const auto mb = M.basis();
  const BilinearOp &sl = M.succ_left, &pl = M.prec_left, &sr = M.succ_right, &pr = M.prec_right;

  // m in the last slot
  report.add(run_law(
      "bimodule-last", {db, db, mb},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(d_probe);
        const Element x = basis_element(t[0]);
        const Element xpy = g(D.prec(t[0], t[1])), xsy = g(D.succ(t[0], t[1]));
        TensorN out;
        tag(out, 0, pl.apply(xpy, basis_element(t[2])) - pl.apply(x, pl(t[1], t[2])) - pl.apply(x, sl(t[1], t[2])));
        tag(out, 1, sl.apply(x, pl(t[1], t[2])) - pl.apply(xsy, basis_element(t[2])));
        tag(out, 2, sl.apply(x, sl(t[1], t[2])) - sl.apply(xpy, basis_element(t[2])) - sl.apply(xsy, basis_element(t[2])));
        if (!g.ok()) return std::nullopt;
        return out;
      },
      opts, kinds({"x", "y", "m"})));
  report.add(run_law(
      "bimodule-middle", {db, mb, db},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        const Element x = basis_element(t[0]), z = basis_element(t[2]);
        TensorN out;
        tag(out, 0, pr.apply(pl(t[0], t[1]), z) - pl.apply(x, pr(t[1], t[2])) - pl.apply(x, sr(t[1], t[2])));
        tag(out, 1, sl.apply(x, pr(t[1], t[2])) - pr.apply(sl(t[0], t[1]), z));
        tag(out, 2, sl.apply(x, sr(t[1], t[2])) - sr.apply(pl(t[0], t[1]), z) - sr.apply(sl(t[0], t[1]), z));
        return out;
      },
      opts, kinds({"x", "m", "z"})));
  report.add(run_law(
      "bimodule-first", {mb, db, db},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(d_probe);
        const Element m = basis_element(t[0]), z = basis_element(t[2]);
        const Element ypz = g(D.prec(t[1], t[2])), ysz = g(D.succ(t[1], t[2]));
        TensorN out;
        tag(out, 0, pr.apply(pr(t[0], t[1]), z) - pr.apply(m, ypz) - pr.apply(m, ysz));
        tag(out, 1, sr.apply(m, ypz) - pr.apply(sr(t[0], t[1]), z));
        tag(out, 2, sr.apply(m, ysz) - sr.apply(pr(t[0], t[1]), z) - sr.apply(sr(t[0], t[1]), z));
        if (!g.ok()) return std::nullopt;
        return out;
      },
      opts, kinds({"m", "y", "z"})));
  return report;
}

ModuleData dendriform_bimodule_sum(const DendriformBimoduleData& M) {
  return ModuleData{M.dim, M.succ_left + M.prec_left, M.succ_right + M.prec_right, M.probe};
}

PreLieBimoduleData dendri_bimod_to_prelie_bimod(const DendriformBimoduleData& M) {
  const BilinearOp sl = M.succ_left, pl = M.prec_left, sr = M.succ_right, pr = M.prec_right;
  PreLieBimoduleData out;
  out.dim = M.dim;
  out.probe = M.probe;
  out.left = left_op([sl, pr](Index x, Index m) { return sl(x, m) - pr(m, x); }, sl.left_dim(), M.dim);
  out.right = right_op([sr, pl](Index m, Index x) { return sr(m, x) - pl(x, m); }, sl.left_dim(), M.dim);
  return out;
}

Report check_bimod_diagram(const QuasiTriangular& Q, const ModuleData& M, const CheckOptions& opts) {
  Report report("bimodule-diagram" + (Q.name.empty() ? std::string() : " " + Q.name));
  const EpsBialgebra A = principal_coproduct(Q);
  const PreLieBimoduleData cw = prelie_bimodule_from_hopf(A, hopf_bimodule_from_quasi(Q, M));
  const PreLieBimoduleData ccw = dendri_bimod_to_prelie_bimod(quasi_dendriform_bimodule(Q, M));
  const Probe pa = Probe::all(A.dim());
  const auto mb = M.basis();
  report.add(run_law(
      "prelie-bimodule-left-square", {pa.indices, mb},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        return to_tensor_n(cw.left(t[0], t[1]) - ccw.left(t[0], t[1]));
      },
      opts, kinds({"a", "m"})));
  report.add(run_law(
      "prelie-bimodule-right-square", {mb, pa.indices},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        return to_tensor_n(cw.right(t[0], t[1]) - ccw.right(t[0], t[1]));
      },
      opts, kinds({"m", "a"})));
  return report;
}

}  // namespace epsalg
