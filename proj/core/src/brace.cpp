#include "epsalg/brace.hpp"

#include <stdexcept>

namespace epsalg {

BraceStructure::BraceStructure(Evaluator eval, std::size_t max_arity, Probe probe)
    : eval_(std::move(eval)), max_arity_(max_arity), probe_(std::move(probe)) {}

Element BraceStructure::operator()(std::span<const Index> xs, Index z) const {
  if (xs.size() > max_arity_) {
    throw std::out_of_range("brace of arity " + std::to_string(xs.size()) + " exceeds the bound " +
                            std::to_string(max_arity_));
  }
  return eval_(xs, z);
}

Element BraceStructure::apply(std::span<const Element> xs, const Element& z) const {
  Element out;
  std::vector<Index> idx(xs.size());
  // odometer over the supports of the inputs
  auto rec = [&](auto&& self, std::size_t pos, const Scalar& coef) -> void {
    if (pos == xs.size()) {
      for (const auto& [k, c] : z) out.add_scaled((*this)(idx, k), coef * c);
      return;
    }
    for (const auto& [k, c] : xs[pos]) {
      idx[pos] = k;
      self(self, pos + 1, coef * c);
    }
  };
  rec(rec, 0, Scalar(1));
  return out;
}

BraceStructure brace_from_eps(const EpsBialgebra& A, std::size_t max_arity, const BasisWindow& window) {
  const Probe probe = window.resolve(A);
  // Δ^(k)(b) for probe basis b and k <= max_arity, keyed (b, k)
  auto memo = std::make_shared<std::map<std::pair<Index, std::size_t>, TensorN>>();
  for (Index b : probe.indices) {
    for (std::size_t k = 1; k <= max_arity; ++k) {
      memo->emplace(std::pair{b, k}, iterated_coproduct(A, basis_element(b), static_cast<int>(k)));
    }
  }
  auto eval = [A, memo](std::span<const Index> xs, Index z) -> Element {
    const std::size_t n = xs.size();
    if (n == 0) return basis_element(z);
    const auto it = memo->find({z, n});
    const TensorN fresh = it == memo->end() ? iterated_coproduct(A, basis_element(z), static_cast<int>(n)) : TensorN{};
    const TensorN& d = it == memo->end() ? fresh : it->second;
    Element out;
    for (const auto& [key, c] : d) {
      Element acc = basis_element(key[0]);
      for (std::size_t i = 0; i < n && !acc.is_zero(); ++i) {
        acc = A.multiply(A.multiply(acc, basis_element(xs[i])), basis_element(key[i + 1]));
      }
      out.add_scaled(acc, c);
    }
    return out;
  };
  return BraceStructure(std::move(eval), max_arity, probe);
}

BraceStructure commutative_derivation_brace(const EpsBialgebra& A, const LinearMap& D, std::size_t max_arity,
                                            const BasisWindow& window) {
  const Probe probe = window.resolve(A);
  const auto& ix = probe.indices;
  Report pre("commutative-derivation");
  pre.add(run_law("commutative", {ix, ix}, [&](std::span<const Index> t) -> std::optional<TensorN> {
    return to_tensor_n(A.product(t[0], t[1]) - A.product(t[1], t[0]));
  }));
  pre.add(run_law("derivation", {ix, ix}, [&](std::span<const Index> t) -> std::optional<TensorN> {
    const Element a = basis_element(t[0]), b = basis_element(t[1]);
    return to_tensor_n(D.apply(A.product(t[0], t[1])) - A.multiply(a, D(t[1])) - A.multiply(D(t[0]), b));
  }));
  require(pre, "commutative_derivation_brace: needs a commutative algebra and a derivation");

  auto eval = [A, D](std::span<const Index> xs, Index z) -> Element {
    Element dz = basis_element(z);
    Scalar fact = 1;
    for (std::size_t k = 1; k <= xs.size(); ++k) {
      dz = D.apply(dz);
      fact *= static_cast<long>(k);
    }
    Element prod = dz;
    for (Index x : xs) prod = A.multiply(basis_element(x), prod);
    Element out;
    out.add_scaled(prod, 1 / fact);
    return out;
  };
  return BraceStructure(std::move(eval), max_arity, probe);
}

Scalar binomial(Index r, std::size_t n) {
  if (r < 0) {
    const Scalar b = binomial(-r + static_cast<Index>(n) - 1, n);
    return n % 2 == 0 ? b : Scalar(-b);
  }
  if (static_cast<std::size_t>(r) < n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(n));
  return Scalar(out);
}

std::vector<std::vector<std::size_t>> interval_partitions(std::size_t n, std::size_t parts) {
  std::vector<std::vector<std::size_t>> out;
  if (parts == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<std::size_t> cur(parts, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == parts) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      cur[pos] = k;
      self(self, pos + 1, left - k);
    }
  };
  rec(rec, 0, n);
  return out;
}

Report check_brace(const BraceStructure& B, std::size_t n, std::size_t m, const Probe& probe,
                   const CheckOptions& opts) {
  if (m == 0) throw std::invalid_argument("check_brace: the axiom needs m >= 1");
  if (n + m > B.max_arity()) {
    throw std::out_of_range("check_brace: n + m = " + std::to_string(n + m) + " exceeds the arity bound " +
                            std::to_string(B.max_arity()));
  }
  const auto partitions = interval_partitions(n, 2 * m + 1);
  std::vector<std::vector<Index>> axes(n + m + 1, probe.indices);
  Report report("brace");
  report.add(run_law(
      "brace(" + std::to_string(n) + "," + std::to_string(m) + ")", axes,
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        WindowGuard g(probe);
        const std::span<const Index> xs = t.subspan(0, n);
        const std::span<const Index> ys = t.subspan(n, m);
        const Index z = t[n + m];
        const Element inner = g(B(ys, z));
        std::vector<Element> xe;
        for (Index x : xs) xe.push_back(basis_element(x));
        const Element lhs = B.apply(xe, inner);

        Element rhs;
        for (const auto& lens : partitions) {
          std::vector<Element> args;
          std::size_t pos = 0;
          for (std::size_t part = 0; part < lens.size(); ++part) {
            const std::size_t len = lens[part];
            if (part % 2 == 0) {
              for (std::size_t k = 0; k < len; ++k) args.push_back(xe[pos + k]);
            } else {
              args.push_back(g(B(xs.subspan(pos, len), ys[part / 2])));
            }
            pos += len;
          }
          rhs += B.apply(args, basis_element(z));
        }
        g(lhs);
        g(rhs);
        if (!g.ok()) return std::nullopt;
        return to_tensor_n(lhs - rhs);
      },
      opts));
  return report;
}

Report check_brace_up_to(const BraceStructure& B, std::size_t max_n, std::size_t max_m, const Probe& probe,
                         const CheckOptions& opts) {
  Report report("brace");
  report.add(run_law(
      "brace-identity", {probe.indices},
      [&](std::span<const Index> t) -> std::optional<TensorN> {
        return to_tensor_n(B({}, t[0]) - basis_element(t[0]));
      },
      opts));
  for (std::size_t m = 1; m <= max_m; ++m) {
    for (std::size_t n = 0; n <= max_n; ++n) report.append(check_brace(B, n, m, probe, opts));
  }
  return report;
}

}  // namespace epsalg
