#include "epsalg/quasitriangular.hpp"

#include "epsalg/double.hpp"

namespace epsalg {

std::vector<std::pair<Element, Element>> r_terms(const Tensor2& r) {
  std::vector<std::pair<Element, Element>> out;
  for (const auto& [k, c] : r) out.emplace_back(basis_element(k[0], c), basis_element(k[1]));
  return out;
}

Tensor3 aybe_residual(const FinAlgebra& A, const Tensor2& r) {
  Tensor3 res;
  const auto terms = r_terms(r);
  for (const auto& [ui, vi] : terms) {
    for (const auto& [uj, vj] : terms) {
      res += outer(outer(A.multiply(ui, uj), vj), vi);   // r13 r12
      res -= outer(outer(ui, A.multiply(vi, uj)), vj);   // r12 r23
      res += outer(outer(uj, ui), A.multiply(vi, vj));   // r23 r13
    }
  }
  return res;
}

Report check_aybe(const FinAlgebra& A, const Tensor2& r) {
  Report report("aybe");
  const Tensor3 res = aybe_residual(A, r);
  if (res.is_zero()) {
    report.add(passed_law("aybe"));
  } else {
    report.add(failed_law("aybe", Witness{{}, to_tensor_n(res), {}}));
  }
  return report;
}

EpsBialgebra principal_coproduct(const FinAlgebra& A, const Tensor2& r, std::string name) {
  require(check_aybe(A, r), "principal_coproduct: r does not satisfy the associative Yang-Baxter equation");
  const auto terms = r_terms(r);
  FinCoalgebra co = FinCoalgebra::from_rule(A.dim(), [&](Index i) {
    const Element a = basis_element(i);
    Tensor2 d;
    for (const auto& [u, v] : terms) {
      d += outer(u, A.multiply(v, a));
      d -= outer(A.multiply(a, u), v);
    }
    return d;
  });
  return EpsBialgebra::dense(A, std::move(co), std::move(name));
}

EpsBialgebra principal_coproduct(const QuasiTriangular& Q) {
  return principal_coproduct(Q.base, Q.r, Q.name);
}

Tensor3 delta_on_r_residual(const EpsBialgebra& A, const Tensor2& r) {
  Tensor3 res;
  const auto terms = r_terms(r);
  for (const auto& [u, v] : terms) res += outer(A.comultiply(u), v);
  for (const auto& [ui, vi] : terms) {
    for (const auto& [uj, vj] : terms) res -= outer(outer(uj, ui), A.multiply(vi, vj));
  }
  return res;
}

Report check_delta_on_r(const EpsBialgebra& A, const Tensor2& r) {
  Report report("delta-on-r");
  const Tensor3 res = delta_on_r_residual(A, r);
  if (res.is_zero()) {
    report.add(passed_law("delta-on-r"));
  } else {
    report.add(failed_law("delta-on-r", Witness{{}, to_tensor_n(res), {}}));
  }
  return report;
}

BaxterOp baxter_from_r(const FinAlgebra& A, const Tensor2& r) {
  require(check_aybe(A, r), "baxter_from_r: r does not satisfy the associative Yang-Baxter equation");
  const auto terms = r_terms(r);
  LinearMap beta = LinearMap::from_rule(
      [&](Index j) {
        const Element x = basis_element(j);
        Element out;
        for (const auto& [u, v] : terms) out += A.multiply(A.multiply(u, x), v);
        return out;
      },
      A.dim(), A.dim());
  return BaxterOp{A, std::move(beta)};
}

Report check_baxter(const BaxterOp& b, const CheckOptions& opts) {
  Report report("baxter");
  const FinAlgebra& A = b.carrier;
  const Probe p = Probe::all(A.dim());
  report.add(run_law(
      "baxter", {p.indices, p.indices},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        const Element x = basis_element(t[0]);
        const Element y = basis_element(t[1]);
        const Element bx = b.beta(t[0]);
        const Element by = b.beta(t[1]);
        const Element lhs = A.multiply(bx, by);
        const Element rhs = b.beta.apply(A.multiply(x, by) + A.multiply(bx, y));
        return to_tensor_n(lhs - rhs);
      },
      opts,
      [&](std::span<const Index> t) {
        return std::vector<std::string>{A.label(t[0]), A.label(t[1])};
      }));
  return report;
}

BaxterOp end_baxter(const EpsBialgebra& A) {
  const DoubleAlgebra D = build_double(A, A.dim());
  const DoubleLayout L = D.layout;
  const std::size_t n = L.n;
  LinearMap beta = LinearMap::from_rule(
      [&](Index x) -> Element {
        Element out;
        switch (L.part(x)) {
          case DoubleLayout::Part::base: {
            // R_a(e_j) = e_j a
            for (std::size_t j = 0; j < n; ++j) {
              for (const auto& [i, c] : A.product(static_cast<Index>(j), x)) {
                out.add(L.tensor(i, static_cast<Index>(j)), c);
              }
            }
            break;
          }
          case DoubleLayout::Part::dual: {
            // L_f(e_j) = f(x_2) x_1
            const Index f = x - static_cast<Index>(n);
            for (std::size_t j = 0; j < n; ++j) {
              for (const auto& [pq, c] : A.coproduct(static_cast<Index>(j))) {
                if (pq[1] == f) out.add(L.tensor(pq[0], static_cast<Index>(j)), c);
              }
            }
            break;
          }
          case DoubleLayout::Part::tensor: {
            // (id*T)(e_j) = sum e_p T(e_q), T = E_kl
            const auto [k, l] = L.split(x);
            for (std::size_t j = 0; j < n; ++j) {
              for (const auto& [pq, c] : A.coproduct(static_cast<Index>(j))) {
                if (pq[1] != l) continue;
                for (const auto& [i, d] : A.product(pq[0], k)) {
                  out.add(L.tensor(i, static_cast<Index>(j)), c * d);
                }
              }
            }
            break;
          }
        }
        return out;
      },
      L.dim(), L.dim());
  return BaxterOp{D.algebra.algebra(), std::move(beta)};
}

LinearMap pi_projection(const QuasiTriangular& Q) {
  const std::size_t n = Q.base.dim();
  const DoubleLayout L{n};
  const auto terms = r_terms(Q.r);
  return LinearMap::from_rule(
      [&](Index x) -> Element {
        Element out;
        switch (L.part(x)) {
          case DoubleLayout::Part::base:
            out = basis_element(x);
            break;
          case DoubleLayout::Part::dual: {
            const Index f = x - static_cast<Index>(n);
            for (const auto& [u, v] : terms) out.add_scaled(v, u.coeff(f));
            break;
          }
          case DoubleLayout::Part::tensor: {
            // E_kl(u) = u_l e_k
            const auto [k, l] = L.split(x);
            for (const auto& [u, v] : terms) {
              out.add_scaled(Q.base.multiply(basis_element(k), v), u.coeff(l));
            }
            break;
          }
        }
        return out;
      },
      L.dim(), n);
}

}  // namespace epsalg
