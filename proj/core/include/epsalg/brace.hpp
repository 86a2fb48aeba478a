#pragma once

#include <map>

#include "epsalg/structures.hpp"

namespace epsalg {

/// Multilinear operations <x_1, ..., x_n; z> for 0 <= n <= max_arity, given
/// on basis inputs and extended multilinearly.
class BraceStructure {
 public:
  using Evaluator = std::function<Element(std::span<const Index> xs, Index z)>;

  BraceStructure(Evaluator eval, std::size_t max_arity, Probe probe);

  std::size_t max_arity() const { return max_arity_; }
  const Probe& probe() const { return probe_; }

  /// Throws std::out_of_range when xs.size() > max_arity().
  Element operator()(std::span<const Index> xs, Index z) const;
  Element apply(std::span<const Element> xs, const Element& z) const;

 private:
  Evaluator eval_;
  std::size_t max_arity_;
  Probe probe_;
};

/// <a_1, ..., a_n; b> = sum b_(1) a_1 b_(2) ... a_n b_(n+1). The iterated
/// coproducts of the probe basis are computed once at construction.
BraceStructure brace_from_eps(const EpsBialgebra& A, std::size_t max_arity = 5, const BasisWindow& window = {});

/// <x_1, ..., x_n; z> = x_1 ... x_n D^n(z) / n! for a commutative algebra and a
/// derivation D. Both conditions are checked on the probe basis and a
/// LawViolation is thrown when either fails.
BraceStructure commutative_derivation_brace(const EpsBialgebra& A, const LinearMap& D, std::size_t max_arity = 5,
                                            const BasisWindow& window = {});

/// C(r, n) for r in Z, with C(r, n) = (-1)^n C(-r + n - 1, n) when r < 0.
Scalar binomial(Index r, std::size_t n);

/// Every split of {0, ..., n-1} into `parts` consecutive, possibly empty
/// intervals, as the list of interval lengths.
std::vector<std::vector<std::size_t>> interval_partitions(std::size_t n, std::size_t parts);

/// The brace axiom for n outer and m inner inputs, over all basis tuples of
/// the probe. Throws std::out_of_range when n + m exceeds the arity bound.
Report check_brace(const BraceStructure& B, std::size_t n, std::size_t m, const Probe& probe,
                   const CheckOptions& opts = {});
/// check_brace for all 0 <= n <= max_n, 1 <= m <= max_m, plus <z> = z.
Report check_brace_up_to(const BraceStructure& B, std::size_t max_n, std::size_t max_m, const Probe& probe,
                         const CheckOptions& opts = {});

}  // namespace epsalg
