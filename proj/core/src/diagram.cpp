#include "epsalg/diagram.hpp"

#include "epsalg/prelie.hpp"

namespace epsalg {

namespace {

LawResult compare(const std::string& law, const BilinearOp& a, const BilinearOp& b, const Probe& p,
                  const CheckOptions& opts) {
  return run_law(
      law, {p.indices, p.indices},
      [&](std::span<const Index> t) -> std::optional<TensorN> { return to_tensor_n(a(t[0], t[1]) - b(t[0], t[1])); },
      opts);
}

}  // namespace

Report check_quasi_diagram(const QuasiTriangular& Q, const CheckOptions& opts) {
  Report report("quasi-diagram" + (Q.name.empty() ? std::string() : " " + Q.name));
  const std::size_t n = Q.base.dim();
  const Probe all = Probe::all(n);
  const EpsBialgebra A = principal_coproduct(Q);
  const BilinearOp clockwise = prelie_from_eps(A);
  const Dendriform d = quasi_dendriform(Q);
  report.add(compare("prelie-square", clockwise, dendriform_to_prelie(d), all, opts));

  const BraceStructure B = brace_from_eps(A, 1);
  const BilinearOp first = BilinearOp::on(n, [&](Index a, Index b) {
    const Index x[] = {a};
    return B(x, b);
  });
  report.add(compare("brace-prelie", first, clockwise, all, opts));

  const BilinearOp dot = dendriform_to_assoc(d);
  const BilinearOp from_circ = lie_from_prelie(clockwise);
  const BilinearOp from_dot = BilinearOp::on(n, [&](Index a, Index b) { return dot(a, b) - dot(b, a); });
  report.add(compare("lie-brackets", from_circ, from_dot, all, opts));
  return report;
}

}  // namespace epsalg
