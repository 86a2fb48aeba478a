#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "epsalg/tensor.hpp"

namespace epsalg {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A linear map given by its values on basis vectors. When both dimensions are
/// known the columns are materialized once at construction; otherwise the map
/// is a closed-form rule on a Z-indexed basis (d/dx on Laurent polynomials).
class LinearMap {
 public:
  using Rule = std::function<Element(Index)>;

  LinearMap();

  static LinearMap from_columns(std::size_t codomain_dim, std::vector<Element> columns);
  static LinearMap from_rule(Rule rule, std::optional<std::size_t> domain_dim,
                             std::optional<std::size_t> codomain_dim);
  /// Dense row-major matrix: rows[i][j] is the coefficient of e_i in f(e_j).
  static LinearMap from_matrix(const std::vector<std::vector<Scalar>>& rows,
                               std::size_t domain_dim);
  static LinearMap identity(std::size_t n);
  static LinearMap identity_rule();
  static LinearMap zero(std::size_t domain_dim, std::size_t codomain_dim);

  std::optional<std::size_t> domain_dim() const { return dom_; }
  std::optional<std::size_t> codomain_dim() const { return cod_; }
  bool is_finite() const { return columns_ != nullptr; }

  Element operator()(Index j) const;
  Element apply(const Element& x) const;
  Scalar entry(Index row, Index col) const { return (*this)(col).coeff(row); }
  const std::vector<Element>& columns() const;

  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  friend LinearMap operator*(const Scalar& s, const LinearMap& f);

  /// Structural equality; both maps must be finite.
  friend bool operator==(const LinearMap& a, const LinearMap& b);

 private:
  std::optional<std::size_t> dom_;
  std::optional<std::size_t> cod_;
  std::shared_ptr<const std::vector<Element>> columns_;
  Rule rule_;
};

/// after o before.
LinearMap compose(const LinearMap& after, const LinearMap& before);

/// (f (x) g) applied to every term of t.
Tensor2 contract(const Tensor2& t, const LinearMap& f, const LinearMap& g);

/// A bilinear operation V x W -> U given on basis pairs. Finite operations are
/// tabulated eagerly, so every value is immutable after construction.
class BilinearOp {
 public:
  using Rule = std::function<Element(Index, Index)>;

  BilinearOp();

  static BilinearOp from_rule(Rule rule, std::optional<std::size_t> left_dim,
                              std::optional<std::size_t> right_dim,
                              std::optional<std::size_t> out_dim);
  static BilinearOp zero(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim);
  /// Square operation on a single carrier.
  static BilinearOp on(std::size_t dim, Rule rule) {
    return from_rule(std::move(rule), dim, dim, dim);
  }

  std::optional<std::size_t> left_dim() const { return left_; }
  std::optional<std::size_t> right_dim() const { return right_; }
  std::optional<std::size_t> out_dim() const { return out_; }
  bool is_finite() const { return table_ != nullptr; }

  Element operator()(Index i, Index j) const;
  Element apply(const Element& x, const Element& y) const;

  BilinearOp operator+(const BilinearOp& o) const;
  BilinearOp operator-(const BilinearOp& o) const;
  friend BilinearOp operator*(const Scalar& s, const BilinearOp& op);
  /// (x, y) -> op(y, x); only for square operations.
  BilinearOp transposed() const;

  friend bool operator==(const BilinearOp& a, const BilinearOp& b);

 private:
  std::optional<std::size_t> left_, right_, out_;
  std::shared_ptr<const std::vector<Element>> table_;
  Rule rule_;
};

/// A linear map V -> X (x) Y given on basis vectors (coproducts, coactions,
/// pre-Lie co-operations). Finite maps are tabulated at construction.
class CoMap {
 public:
  using Rule = std::function<Tensor2(Index)>;

  CoMap();
  static CoMap from_rule(Rule rule, std::optional<std::size_t> domain_dim);
  static CoMap from_table(std::vector<Tensor2> table);
  static CoMap zero(std::size_t domain_dim) { return from_table(std::vector<Tensor2>(domain_dim)); }

  std::optional<std::size_t> domain_dim() const { return dom_; }
  bool is_finite() const { return table_ != nullptr; }
  Tensor2 operator()(Index i) const;
  Tensor2 apply(const Element& x) const;
  const std::vector<Tensor2>& table() const;

  friend bool operator==(const CoMap& a, const CoMap& b);

 private:
  std::optional<std::size_t> dom_;
  std::shared_ptr<const std::vector<Tensor2>> table_;
  Rule rule_;
};

/// Compares two operations on the given basis indices. Works for rule-based
/// operations, where operator== is unavailable.
bool equal_on(const BilinearOp& a, const BilinearOp& b, std::span<const Index> left,
              std::span<const Index> right);

}  // namespace epsalg
