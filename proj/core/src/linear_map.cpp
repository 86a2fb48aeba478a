#include "epsalg/linear_map.hpp"

#include <string>

namespace epsalg {

namespace {

void check_codomain(const Element& v, std::size_t cod) {
  for (const auto& [i, c] : v) {
    if (i < 0 || static_cast<std::size_t>(i) >= cod) {
      throw DimensionError("value has index " + std::to_string(i) + " outside codomain of dimension " +
                           std::to_string(cod));
    }
  }
}

void check_domain(Index i, const std::optional<std::size_t>& dom) {
  if (dom && (i < 0 || static_cast<std::size_t>(i) >= *dom)) {
    throw DimensionError("index " + std::to_string(i) + " outside domain of dimension " +
                         std::to_string(*dom));
  }
}

}  // namespace

// --- LinearMap --------------------------------------------------------------

LinearMap::LinearMap() : dom_(0), cod_(0), columns_(std::make_shared<std::vector<Element>>()) {}

LinearMap LinearMap::from_columns(std::size_t codomain_dim, std::vector<Element> columns) {
  for (const auto& c : columns) check_codomain(c, codomain_dim);
  LinearMap f;
  f.dom_ = columns.size();
  f.cod_ = codomain_dim;
  f.columns_ = std::make_shared<const std::vector<Element>>(std::move(columns));
  return f;
}

LinearMap LinearMap::from_rule(Rule rule, std::optional<std::size_t> domain_dim,
                               std::optional<std::size_t> codomain_dim) {
  if (domain_dim && codomain_dim) {
    std::vector<Element> cols;
    cols.reserve(*domain_dim);
    for (std::size_t j = 0; j < *domain_dim; ++j) cols.push_back(rule(static_cast<Index>(j)));
    return from_columns(*codomain_dim, std::move(cols));
  }
  LinearMap f;
  f.dom_ = domain_dim;
  f.cod_ = codomain_dim;
  f.columns_ = nullptr;
  f.rule_ = std::move(rule);
  return f;
}

LinearMap LinearMap::from_matrix(const std::vector<std::vector<Scalar>>& rows,
                                 std::size_t domain_dim) {
  std::vector<Element> cols(domain_dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != domain_dim) throw DimensionError("ragged matrix");
    for (std::size_t j = 0; j < domain_dim; ++j) cols[j].add(static_cast<Index>(i), rows[i][j]);
  }
  return from_columns(rows.size(), std::move(cols));
}

LinearMap LinearMap::identity(std::size_t n) {
  return from_rule([](Index j) { return basis_element(j); }, n, n);
}

LinearMap LinearMap::identity_rule() {
  return from_rule([](Index j) { return basis_element(j); }, std::nullopt, std::nullopt);
}

LinearMap LinearMap::zero(std::size_t domain_dim, std::size_t codomain_dim) {
  return from_columns(codomain_dim, std::vector<Element>(domain_dim));
}

Element LinearMap::operator()(Index j) const {
  check_domain(j, dom_);
  if (columns_) return (*columns_)[static_cast<std::size_t>(j)];
  return rule_(j);
}

Element LinearMap::apply(const Element& x) const {
  Element out;
  for (const auto& [j, c] : x) {
    check_domain(j, dom_);
    if (columns_) {
      out.add_scaled((*columns_)[static_cast<std::size_t>(j)], c);
    } else {
      out.add_scaled(rule_(j), c);
    }
  }
  return out;
}

const std::vector<Element>& LinearMap::columns() const {
  if (!columns_) throw std::logic_error("columns() on a rule-based linear map");
  return *columns_;
}

namespace {

LinearMap combine(const LinearMap& a, const LinearMap& b, const Scalar& sb) {
  if (a.domain_dim() != b.domain_dim() || a.codomain_dim() != b.codomain_dim()) {
    throw DimensionError("adding linear maps of different shapes");
  }
  return LinearMap::from_rule(
      [a, b, sb](Index j) {
        Element v = a(j);
        v.add_scaled(b(j), sb);
        return v;
      },
      a.domain_dim(), a.codomain_dim());
}

}  // namespace

LinearMap LinearMap::operator+(const LinearMap& o) const { return combine(*this, o, 1); }
LinearMap LinearMap::operator-(const LinearMap& o) const { return combine(*this, o, -1); }

LinearMap operator*(const Scalar& s, const LinearMap& f) {
  return LinearMap::from_rule([f, s](Index j) { return s * f(j); }, f.domain_dim(), f.codomain_dim());
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  if (!a.is_finite() || !b.is_finite()) {
    throw std::logic_error("equality of rule-based linear maps is undecidable; use a window");
  }
  return a.dom_ == b.dom_ && a.cod_ == b.cod_ && *a.columns_ == *b.columns_;
}

LinearMap compose(const LinearMap& after, const LinearMap& before) {
  if (before.codomain_dim() && after.domain_dim() && before.codomain_dim() != after.domain_dim()) {
    throw DimensionError("composition: codomain " + std::to_string(*before.codomain_dim()) +
                         " does not match domain " + std::to_string(*after.domain_dim()));
  }
  return LinearMap::from_rule([after, before](Index j) { return after.apply(before(j)); },
                              before.domain_dim(), after.codomain_dim());
}

Tensor2 contract(const Tensor2& t, const LinearMap& f, const LinearMap& g) {
  Tensor2 out;
  for (const auto& [k, c] : t) {
    Element x = f(k[0]);
    if (x.is_zero()) continue;
    Element y = g(k[1]);
    out.add_scaled(outer(x, y), c);
  }
  return out;
}

// --- BilinearOp -------------------------------------------------------------

BilinearOp::BilinearOp()
    : left_(0), right_(0), out_(0), table_(std::make_shared<std::vector<Element>>()) {}

BilinearOp BilinearOp::from_rule(Rule rule, std::optional<std::size_t> left_dim,
                                 std::optional<std::size_t> right_dim,
                                 std::optional<std::size_t> out_dim) {
  BilinearOp op;
  op.left_ = left_dim;
  op.right_ = right_dim;
  op.out_ = out_dim;
  if (left_dim && right_dim && out_dim) {
    auto table = std::make_shared<std::vector<Element>>();
    table->reserve(*left_dim * *right_dim);
    for (std::size_t i = 0; i < *left_dim; ++i) {
      for (std::size_t j = 0; j < *right_dim; ++j) {
        Element v = rule(static_cast<Index>(i), static_cast<Index>(j));
        check_codomain(v, *out_dim);
        table->push_back(std::move(v));
      }
    }
    op.table_ = std::move(table);
  } else {
    op.table_ = nullptr;
    op.rule_ = std::move(rule);
  }
  return op;
}

BilinearOp BilinearOp::zero(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim) {
  return from_rule([](Index, Index) { return Element{}; }, left_dim, right_dim, out_dim);
}

Element BilinearOp::operator()(Index i, Index j) const {
  check_domain(i, left_);
  check_domain(j, right_);
  if (table_) return (*table_)[static_cast<std::size_t>(i) * *right_ + static_cast<std::size_t>(j)];
  return rule_(i, j);
}

Element BilinearOp::apply(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [i, a] : x) {
    check_domain(i, left_);
    for (const auto& [j, b] : y) {
      check_domain(j, right_);
      if (table_) {
        out.add_scaled((*table_)[static_cast<std::size_t>(i) * *right_ + static_cast<std::size_t>(j)],
                       a * b);
      } else {
        out.add_scaled(rule_(i, j), a * b);
      }
    }
  }
  return out;
}

namespace {

BilinearOp combine(const BilinearOp& a, const BilinearOp& b, const Scalar& sb) {
  if (a.left_dim() != b.left_dim() || a.right_dim() != b.right_dim() || a.out_dim() != b.out_dim()) {
    throw DimensionError("adding bilinear operations of different shapes");
  }
  return BilinearOp::from_rule(
      [a, b, sb](Index i, Index j) {
        Element v = a(i, j);
        v.add_scaled(b(i, j), sb);
        return v;
      },
      a.left_dim(), a.right_dim(), a.out_dim());
}

}  // namespace

BilinearOp BilinearOp::operator+(const BilinearOp& o) const { return combine(*this, o, 1); }
BilinearOp BilinearOp::operator-(const BilinearOp& o) const { return combine(*this, o, -1); }

BilinearOp operator*(const Scalar& s, const BilinearOp& op) {
  return BilinearOp::from_rule([op, s](Index i, Index j) { return s * op(i, j); }, op.left_dim(),
                               op.right_dim(), op.out_dim());
}

BilinearOp BilinearOp::transposed() const {
  if (left_ != right_) throw DimensionError("transpose of a non-square operation");
  BilinearOp self = *this;
  return from_rule([self](Index i, Index j) { return self(j, i); }, left_, right_, out_);
}

bool operator==(const BilinearOp& a, const BilinearOp& b) {
  if (!a.is_finite() || !b.is_finite()) {
    throw std::logic_error("equality of rule-based operations is undecidable; use equal_on");
  }
  return a.left_ == b.left_ && a.right_ == b.right_ && a.out_ == b.out_ && *a.table_ == *b.table_;
}

bool equal_on(const BilinearOp& a, const BilinearOp& b, std::span<const Index> left,
              std::span<const Index> right) {
  for (Index i : left) {
    for (Index j : right) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

// --- CoMap ------------------------------------------------------------------

CoMap::CoMap() : dom_(0), table_(std::make_shared<std::vector<Tensor2>>()) {}

CoMap CoMap::from_rule(Rule rule, std::optional<std::size_t> domain_dim) {
  if (domain_dim) {
    std::vector<Tensor2> table;
    table.reserve(*domain_dim);
    for (std::size_t i = 0; i < *domain_dim; ++i) table.push_back(rule(static_cast<Index>(i)));
    return from_table(std::move(table));
  }
  CoMap m;
  m.dom_ = std::nullopt;
  m.table_ = nullptr;
  m.rule_ = std::move(rule);
  return m;
}

CoMap CoMap::from_table(std::vector<Tensor2> table) {
  CoMap m;
  m.dom_ = table.size();
  m.table_ = std::make_shared<const std::vector<Tensor2>>(std::move(table));
  return m;
}

Tensor2 CoMap::operator()(Index i) const {
  check_domain(i, dom_);
  if (table_) return (*table_)[static_cast<std::size_t>(i)];
  return rule_(i);
}

Tensor2 CoMap::apply(const Element& x) const {
  Tensor2 out;
  for (const auto& [i, c] : x) out.add_scaled((*this)(i), c);
  return out;
}

const std::vector<Tensor2>& CoMap::table() const {
  if (!table_) throw std::logic_error("table() on a rule-based map");
  return *table_;
}

bool operator==(const CoMap& a, const CoMap& b) {
  if (!a.is_finite() || !b.is_finite()) {
    throw std::logic_error("equality of rule-based maps is undecidable");
  }
  return *a.table_ == *b.table_;
}

}  // namespace epsalg
