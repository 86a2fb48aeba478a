#include "epsalg/structures.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace epsalg {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

void check_range(const Element& v, std::size_t dim, const char* what) {
  for (const auto& [i, c] : v) {
    if (i < 0 || static_cast<std::size_t>(i) >= dim) {
      throw DimensionError(std::string(what) + " refers to basis index " + std::to_string(i) +
                           " outside dimension " + std::to_string(dim));
    }
  }
}

}  // namespace

// --- FinAlgebra -------------------------------------------------------------

FinAlgebra::FinAlgebra(std::size_t dim, std::vector<Element> table, std::optional<Element> unit,
                       std::vector<std::string> labels)
    : dim_(dim), unit_(std::move(unit)), labels_(std::move(labels)) {
  if (table.empty()) table.resize(dim * dim);
  if (table.size() != dim * dim) throw DimensionError("multiplication table has wrong size");
  for (const auto& v : table) check_range(v, dim, "product");
  if (unit_) check_range(*unit_, dim, "unit");
  if (labels_.empty()) labels_ = default_labels(dim);
  if (labels_.size() != dim) throw DimensionError("label count does not match dimension");
  table_ = std::make_shared<const std::vector<Element>>(std::move(table));
}

FinAlgebra FinAlgebra::from_rule(std::size_t dim, const std::function<Element(Index, Index)>& rule,
                                 std::optional<Element> unit, std::vector<std::string> labels) {
  std::vector<Element> table;
  table.reserve(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) table.push_back(rule(static_cast<Index>(i), static_cast<Index>(j)));
  }
  return FinAlgebra(dim, std::move(table), std::move(unit), std::move(labels));
}

void FinAlgebra::check_index(Index i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= dim_) {
    throw DimensionError("basis index " + std::to_string(i) + " outside algebra of dimension " +
                         std::to_string(dim_));
  }
}

const Element& FinAlgebra::product(Index i, Index j) const {
  check_index(i);
  check_index(j);
  return (*table_)[static_cast<std::size_t>(i) * dim_ + static_cast<std::size_t>(j)];
}

Element FinAlgebra::multiply(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) out.add_scaled(product(i, j), a * b);
  }
  return out;
}

Tensor2 FinAlgebra::multiply_left(const Element& a, const Tensor2& t) const {
  Tensor2 out;
  for (const auto& [k, c] : t) {
    for (const auto& [i, s] : a) {
      for (const auto& [p, d] : product(i, k[0])) out.add({p, k[1]}, c * s * d);
    }
  }
  return out;
}

Tensor2 FinAlgebra::multiply_right(const Tensor2& t, const Element& b) const {
  Tensor2 out;
  for (const auto& [k, c] : t) {
    for (const auto& [j, s] : b) {
      for (const auto& [q, d] : product(k[1], j)) out.add({k[0], q}, c * s * d);
    }
  }
  return out;
}

Tensor2 FinAlgebra::multiply(const Tensor2& s, const Tensor2& t) const {
  Tensor2 out;
  for (const auto& [k, a] : s) {
    for (const auto& [l, b] : t) {
      const Element& x = product(k[0], l[0]);
      if (x.is_zero()) continue;
      const Element& y = product(k[1], l[1]);
      for (const auto& [p, c] : x) {
        for (const auto& [q, d] : y) out.add({p, q}, a * b * c * d);
      }
    }
  }
  return out;
}

Tensor3 FinAlgebra::multiply(const Tensor3& s, const Tensor3& t) const {
  Tensor3 out;
  for (const auto& [k, a] : s) {
    for (const auto& [l, b] : t) {
      const Element& x = product(k[0], l[0]);
      if (x.is_zero()) continue;
      const Element& y = product(k[1], l[1]);
      if (y.is_zero()) continue;
      const Element& z = product(k[2], l[2]);
      for (const auto& [p, c] : x) {
        for (const auto& [q, d] : y) {
          for (const auto& [u, e] : z) out.add({p, q, u}, a * b * c * d * e);
        }
      }
    }
  }
  return out;
}

std::string FinAlgebra::label(Index i) const {
  check_index(i);
  return labels_[static_cast<std::size_t>(i)];
}

BilinearOp FinAlgebra::op() const {
  FinAlgebra self = *this;
  return BilinearOp::on(dim_, [self](Index i, Index j) { return self.product(i, j); });
}

LinearMap FinAlgebra::left_multiplication(const Element& a) const {
  FinAlgebra self = *this;
  return LinearMap::from_rule([self, a](Index j) { return self.multiply(a, basis_element(j)); }, dim_, dim_);
}

LinearMap FinAlgebra::right_multiplication(const Element& a) const {
  FinAlgebra self = *this;
  return LinearMap::from_rule([self, a](Index j) { return self.multiply(basis_element(j), a); }, dim_, dim_);
}

bool operator==(const FinAlgebra& a, const FinAlgebra& b) {
  return a.dim_ == b.dim_ && *a.table_ == *b.table_ && a.unit_ == b.unit_;
}

// --- FinCoalgebra -----------------------------------------------------------

FinCoalgebra::FinCoalgebra(std::size_t dim, std::vector<Tensor2> table, std::optional<Element> counit)
    : dim_(dim), counit_(std::move(counit)) {
  if (table.empty()) table.resize(dim);
  if (table.size() != dim) throw DimensionError("comultiplication table has wrong size");
  for (const auto& t : table) {
    for (const auto& [k, c] : t) {
      for (Index i : k) {
        if (i < 0 || static_cast<std::size_t>(i) >= dim) {
          throw DimensionError("coproduct refers to basis index " + std::to_string(i) +
                               " outside dimension " + std::to_string(dim));
        }
      }
    }
  }
  if (counit_) check_range(*counit_, dim, "counit");
  table_ = std::make_shared<const std::vector<Tensor2>>(std::move(table));
}

FinCoalgebra FinCoalgebra::from_rule(std::size_t dim, const std::function<Tensor2(Index)>& rule,
                                     std::optional<Element> counit) {
  std::vector<Tensor2> table;
  table.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) table.push_back(rule(static_cast<Index>(i)));
  return FinCoalgebra(dim, std::move(table), std::move(counit));
}

const Tensor2& FinCoalgebra::coproduct(Index i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= dim_) {
    throw DimensionError("basis index " + std::to_string(i) + " outside coalgebra of dimension " +
                         std::to_string(dim_));
  }
  return (*table_)[static_cast<std::size_t>(i)];
}

Tensor2 FinCoalgebra::comultiply(const Element& x) const {
  Tensor2 out;
  for (const auto& [i, c] : x) out.add_scaled(coproduct(i), c);
  return out;
}

bool operator==(const FinCoalgebra& a, const FinCoalgebra& b) {
  return a.dim_ == b.dim_ && *a.table_ == *b.table_ && a.counit_ == b.counit_;
}

// --- EpsBialgebra -----------------------------------------------------------

std::string EpsBialgebra::Rules::label(Index i) const { return "e" + std::to_string(i); }

EpsBialgebra::EpsBialgebra()
    : algebra_(std::make_shared<const FinAlgebra>()), coalgebra_(std::make_shared<const FinCoalgebra>()) {}

EpsBialgebra EpsBialgebra::dense(FinAlgebra algebra, FinCoalgebra coalgebra, std::string name) {
  if (algebra.dim() != coalgebra.dim()) {
    throw DimensionError("algebra and coalgebra dimensions differ");
  }
  EpsBialgebra A;
  A.name_ = std::move(name);
  A.algebra_ = std::make_shared<const FinAlgebra>(std::move(algebra));
  A.coalgebra_ = std::make_shared<const FinCoalgebra>(std::move(coalgebra));
  return A;
}

EpsBialgebra EpsBialgebra::from_rules(std::shared_ptr<const Rules> rules, std::string name) {
  EpsBialgebra A;
  A.name_ = std::move(name);
  A.algebra_.reset();
  A.coalgebra_.reset();
  A.rules_ = std::move(rules);
  return A;
}

Backend EpsBialgebra::backend() const { return rules_ ? rules_->backend() : Backend::dense; }

std::size_t EpsBialgebra::dim() const {
  if (rules_) throw std::logic_error("dimension of a Z-indexed ε-bialgebra is infinite");
  return algebra_->dim();
}

void EpsBialgebra::check_index(Index i) const {
  if (rules_ && !rules_->valid(i)) {
    throw DimensionError("index " + std::to_string(i) + " is not a basis index of " + name_);
  }
}

Element EpsBialgebra::product(Index i, Index j) const {
  if (!rules_) return algebra_->product(i, j);
  check_index(i);
  check_index(j);
  return rules_->product(i, j);
}

Tensor2 EpsBialgebra::coproduct(Index i) const {
  if (!rules_) return coalgebra_->coproduct(i);
  check_index(i);
  return rules_->coproduct(i);
}

Element EpsBialgebra::multiply(const Element& x, const Element& y) const {
  if (!rules_) return algebra_->multiply(x, y);
  Element out;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) out.add_scaled(product(i, j), a * b);
  }
  return out;
}

Tensor2 EpsBialgebra::comultiply(const Element& x) const {
  if (!rules_) return coalgebra_->comultiply(x);
  Tensor2 out;
  for (const auto& [i, c] : x) out.add_scaled(coproduct(i), c);
  return out;
}

Tensor2 EpsBialgebra::multiply_left(const Element& a, const Tensor2& t) const {
  if (!rules_) return algebra_->multiply_left(a, t);
  Tensor2 out;
  for (const auto& [k, c] : t) {
    for (const auto& [p, d] : multiply(a, basis_element(k[0]))) out.add({p, k[1]}, c * d);
  }
  return out;
}

Tensor2 EpsBialgebra::multiply_right(const Tensor2& t, const Element& b) const {
  if (!rules_) return algebra_->multiply_right(t, b);
  Tensor2 out;
  for (const auto& [k, c] : t) {
    for (const auto& [q, d] : multiply(basis_element(k[1]), b)) out.add({k[0], q}, c * d);
  }
  return out;
}

std::optional<Element> EpsBialgebra::unit() const {
  return rules_ ? rules_->unit() : algebra_->unit();
}

std::optional<Element> EpsBialgebra::counit() const {
  return rules_ ? std::nullopt : coalgebra_->counit();
}

std::string EpsBialgebra::label(Index i) const {
  if (!rules_) return algebra_->label(i);
  check_index(i);
  return rules_->label(i);
}

std::vector<std::string> EpsBialgebra::labels() const { return algebra().labels(); }

std::vector<Index> EpsBialgebra::probe_basis() const {
  if (rules_) return rules_->probe_basis();
  std::vector<Index> out(algebra_->dim());
  std::iota(out.begin(), out.end(), Index{0});
  return out;
}

bool EpsBialgebra::covers(Index i) const { return !rules_ || rules_->covers(i); }

bool EpsBialgebra::covers(const Element& x) const {
  if (!rules_) return true;
  for (const auto& [i, c] : x) {
    if (!rules_->covers(i)) return false;
  }
  return true;
}

bool EpsBialgebra::covers(const Tensor2& t) const {
  if (!rules_) return true;
  for (const auto& [k, c] : t) {
    if (!rules_->covers(k[0]) || !rules_->covers(k[1])) return false;
  }
  return true;
}

bool EpsBialgebra::covers(const Tensor3& t) const {
  if (!rules_) return true;
  for (const auto& [k, c] : t) {
    for (Index i : k) {
      if (!rules_->covers(i)) return false;
    }
  }
  return true;
}

bool EpsBialgebra::covers(const TensorN& t) const {
  if (!rules_) return true;
  for (const auto& [k, c] : t) {
    for (Index i : k) {
      if (!rules_->covers(i)) return false;
    }
  }
  return true;
}

const FinAlgebra& EpsBialgebra::algebra() const {
  if (rules_) throw std::logic_error(name_ + " has no finite structure tensors");
  return *algebra_;
}

const FinCoalgebra& EpsBialgebra::coalgebra() const {
  if (rules_) throw std::logic_error(name_ + " has no finite structure tensors");
  return *coalgebra_;
}

EpsBialgebra EpsBialgebra::renamed(std::string name) const {
  EpsBialgebra A = *this;
  A.name_ = std::move(name);
  return A;
}

bool operator==(const EpsBialgebra& a, const EpsBialgebra& b) {
  if (a.rules_ || b.rules_) return a.rules_ == b.rules_;
  return *a.algebra_ == *b.algebra_ && *a.coalgebra_ == *b.coalgebra_;
}

// --- probes -----------------------------------------------------------------

Probe Probe::of(const EpsBialgebra& A) {
  Probe p;
  p.indices = A.probe_basis();
  if (!A.is_finite()) p.covers = [A](Index i) { return A.covers(i); };
  return p;
}

Probe Probe::all(std::size_t dim) {
  Probe p;
  p.indices.resize(dim);
  std::iota(p.indices.begin(), p.indices.end(), Index{0});
  return p;
}

Probe Probe::range(Index lo, Index hi) {
  Probe p;
  for (Index i = lo; i <= hi; ++i) p.indices.push_back(i);
  p.covers = [lo, hi](Index i) { return lo <= i && i <= hi; };
  return p;
}

BasisWindow BasisWindow::range(Index lo, Index hi) {
  BasisWindow w;
  for (Index i = lo; i <= hi; ++i) w.indices.push_back(i);
  return w;
}

Probe BasisWindow::resolve(const EpsBialgebra& A) const {
  Probe p = Probe::of(A);
  if (!indices.empty()) p.indices = indices;
  return p;
}

// --- derived structures -----------------------------------------------------

EpsBialgebra dual_eps(const EpsBialgebra& A) {
  if (!A.is_finite()) throw std::logic_error("dual_eps: the dual of a Z-indexed backend is not supported");
  const std::size_t n = A.dim();
  std::vector<Element> mul(n * n);
  std::vector<Tensor2> comul(n);
  for (std::size_t k = 0; k < n; ++k) {
    // (f_q f_p)(e_k) = f_p(e_k1) f_q(e_k2)
    for (const auto& [pq, c] : A.coproduct(static_cast<Index>(k))) {
      mul[static_cast<std::size_t>(pq[1]) * n + static_cast<std::size_t>(pq[0])].add(static_cast<Index>(k), c);
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t p = 0; p < n; ++p) {
      // f_k(e_q e_p) = -(f_k)_2(e_q) (f_k)_1(e_p)
      for (const auto& [k, c] : A.product(static_cast<Index>(q), static_cast<Index>(p))) {
        comul[static_cast<std::size_t>(k)].add({static_cast<Index>(p), static_cast<Index>(q)}, -c);
      }
    }
  }
  std::optional<Element> unit = A.counit();
  std::optional<Element> counit;
  if (A.unit()) counit = -*A.unit();
  std::vector<std::string> labels;
  for (const auto& l : A.labels()) labels.push_back(l + "*");
  return EpsBialgebra::dense(FinAlgebra(n, std::move(mul), std::move(unit), std::move(labels)),
                             FinCoalgebra(n, std::move(comul), std::move(counit)),
                             A.name().empty() ? std::string("dual") : A.name() + "'");
}

EpsBialgebra op_cop(const EpsBialgebra& A) {
  if (!A.is_finite()) throw std::logic_error("op_cop needs a finite-dimensional ε-bialgebra");
  const std::size_t n = A.dim();
  const FinAlgebra& alg = A.algebra();
  const FinCoalgebra& co = A.coalgebra();
  return EpsBialgebra::dense(
      FinAlgebra::from_rule(n, [&](Index i, Index j) { return alg.product(j, i); }, alg.unit(), alg.labels()),
      FinCoalgebra::from_rule(n, [&](Index i) { return flip(co.coproduct(i)); }, co.counit()),
      A.name() + "^op,cop");
}

LinearMap convolution_of_maps(const LinearMap& T, const LinearMap& S, const EpsBialgebra& A) {
  std::optional<std::size_t> n;
  if (A.is_finite()) n = A.dim();
  for (const LinearMap* f : {&T, &S}) {
    if (f->domain_dim() != n || f->codomain_dim() != n) {
      throw DimensionError("convolution: maps must be endomorphisms of the ε-bialgebra");
    }
  }
  return LinearMap::from_rule(
      [T, S, A](Index j) {
        Element out;
        for (const auto& [k, c] : A.coproduct(j)) {
          Element x = T(k[0]);
          if (x.is_zero()) continue;
          out.add_scaled(A.multiply(x, S(k[1])), c);
        }
        return out;
      },
      n, n);
}

TensorN iterated_coproduct(const EpsBialgebra& A, const Element& x, int n) {
  if (n < 0) throw std::invalid_argument("iterated_coproduct: negative order");
  TensorN cur = to_tensor_n(x);
  for (int step = 0; step < n; ++step) {
    TensorN next;
    for (const auto& [key, c] : cur) {
      for (const auto& [pq, d] : A.coproduct(key.back())) {
        KeyN k(key.begin(), key.end() - 1);
        k.push_back(pq[0]);
        k.push_back(pq[1]);
        next.add(k, c * d);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Element multiply_all(const EpsBialgebra& A, std::span<const Element> factors) {
  if (factors.empty()) throw std::invalid_argument("multiply_all: empty product in a non-unital algebra");
  Element acc = factors[0];
  for (std::size_t i = 1; i < factors.size() && !acc.is_zero(); ++i) acc = A.multiply(acc, factors[i]);
  return acc;
}

}  // namespace epsalg
