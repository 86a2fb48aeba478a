#pragma once

#include <functional>
#include <memory>
#include <type_traits>
#include <optional>
#include <string>
#include <vector>

#include "epsalg/linear_map.hpp"
#include "epsalg/report.hpp"

namespace epsalg {

/// Finite-dimensional algebra by structure constants: product(i, j) = e_i e_j.
/// Laws are not checked here; see check_eps_axioms and check_associativity.
class FinAlgebra {
 public:
  FinAlgebra() : FinAlgebra(0, {}) {}
  FinAlgebra(std::size_t dim, std::vector<Element> table, std::optional<Element> unit = std::nullopt,
             std::vector<std::string> labels = {});
  static FinAlgebra from_rule(std::size_t dim, const std::function<Element(Index, Index)>& rule,
                              std::optional<Element> unit = std::nullopt,
                              std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const Element& product(Index i, Index j) const;
  Element multiply(const Element& x, const Element& y) const;
  Tensor2 multiply_left(const Element& a, const Tensor2& t) const;   // a(x (x) y) = ax (x) y
  Tensor2 multiply_right(const Tensor2& t, const Element& b) const;  // (x (x) y)b = x (x) yb
  /// Componentwise product in A (x) A.
  Tensor2 multiply(const Tensor2& s, const Tensor2& t) const;
  Tensor3 multiply(const Tensor3& s, const Tensor3& t) const;

  const std::optional<Element>& unit() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Index i) const;

  BilinearOp op() const;
  LinearMap left_multiplication(const Element& a) const;
  LinearMap right_multiplication(const Element& a) const;

  /// Tables and unit; labels are ignored.
  friend bool operator==(const FinAlgebra& a, const FinAlgebra& b);

 private:
  void check_index(Index i) const;

  std::size_t dim_ = 0;
  std::shared_ptr<const std::vector<Element>> table_;
  std::optional<Element> unit_;
  std::vector<std::string> labels_;
};

/// Finite-dimensional coalgebra: coproduct(i) = Delta(e_i).
class FinCoalgebra {
 public:
  FinCoalgebra() : FinCoalgebra(0, {}) {}
  FinCoalgebra(std::size_t dim, std::vector<Tensor2> table,
               std::optional<Element> counit = std::nullopt);
  static FinCoalgebra from_rule(std::size_t dim, const std::function<Tensor2(Index)>& rule,
                                std::optional<Element> counit = std::nullopt);
  static FinCoalgebra zero(std::size_t dim) { return FinCoalgebra(dim, std::vector<Tensor2>(dim)); }

  std::size_t dim() const { return dim_; }
  const Tensor2& coproduct(Index i) const;
  Tensor2 comultiply(const Element& x) const;
  const std::optional<Element>& counit() const { return counit_; }

  friend bool operator==(const FinCoalgebra& a, const FinCoalgebra& b);

 private:
  std::size_t dim_ = 0;
  std::shared_ptr<const std::vector<Tensor2>> table_;
  std::optional<Element> counit_;
};

enum class Backend { dense, laurent, path };

/// An algebra with comultiplication on a shared basis: either dense structure
/// constants or closed-form rules on a Z-indexed basis. Construction never
/// checks the compatibility law.
class EpsBialgebra {
 public:
  /// Closed-form backend. `covers` is the probe window: laws are asserted
  /// only on tuples whose intermediates stay inside it.
  class Rules {
   public:
    virtual ~Rules() = default;
    virtual Backend backend() const = 0;
    virtual Element product(Index i, Index j) const = 0;
    virtual Tensor2 coproduct(Index i) const = 0;
    virtual std::optional<Element> unit() const { return std::nullopt; }
    virtual std::string label(Index i) const;
    virtual std::vector<Index> probe_basis() const = 0;
    virtual bool covers(Index i) const = 0;
    virtual bool valid(Index i) const = 0;
  };

  EpsBialgebra();
  static EpsBialgebra dense(FinAlgebra algebra, FinCoalgebra coalgebra, std::string name = {});
  static EpsBialgebra from_rules(std::shared_ptr<const Rules> rules, std::string name);

  Backend backend() const;
  const std::string& name() const { return name_; }
  bool is_finite() const { return backend() == Backend::dense; }
  /// Throws std::logic_error on Z-indexed backends.
  std::size_t dim() const;

  Element product(Index i, Index j) const;
  Tensor2 coproduct(Index i) const;
  Element multiply(const Element& x, const Element& y) const;
  Tensor2 comultiply(const Element& x) const;
  Tensor2 multiply_left(const Element& a, const Tensor2& t) const;
  Tensor2 multiply_right(const Tensor2& t, const Element& b) const;

  std::optional<Element> unit() const;
  std::optional<Element> counit() const;
  std::string label(Index i) const;
  std::vector<std::string> labels() const;  // dense only

  std::vector<Index> probe_basis() const;
  bool covers(Index i) const;
  bool covers(const Element& x) const;
  bool covers(const Tensor2& t) const;
  bool covers(const Tensor3& t) const;
  bool covers(const TensorN& t) const;

  const FinAlgebra& algebra() const;      // dense only
  const FinCoalgebra& coalgebra() const;  // dense only
  EpsBialgebra renamed(std::string name) const;

  /// Dense structures compare by tensors; rule backends by identity.
  friend bool operator==(const EpsBialgebra& a, const EpsBialgebra& b);

 private:
  void check_index(Index i) const;

  std::string name_;
  std::shared_ptr<const FinAlgebra> algebra_;
  std::shared_ptr<const FinCoalgebra> coalgebra_;
  std::shared_ptr<const Rules> rules_;
};

/// Basis indices to enumerate plus the window inside which intermediates must
/// stay for an instance to count as probed. An empty predicate covers all.
struct Probe {
  std::vector<Index> indices;
  std::function<bool(Index)> covers;

  static Probe of(const EpsBialgebra& A);
  static Probe all(std::size_t dim);
  static Probe range(Index lo, Index hi);
  bool contains(Index i) const { return !covers || covers(i); }
};

/// Tracks whether every intermediate of a law instance lies in the probe
/// window.
class WindowGuard {
 public:
  explicit WindowGuard(const Probe& p) : covers_(p.covers ? &p.covers : nullptr) {}

  template <class Key>
  const SparseTensor<Key>& operator()(const SparseTensor<Key>& value) {
    if (covers_ && ok_) {
      for (const auto& [k, c] : value) {
        if constexpr (std::is_same_v<Key, Index>) {
          if (!(*covers_)(k)) ok_ = false;
        } else {
          for (Index i : k) {
            if (!(*covers_)(i)) ok_ = false;
          }
        }
      }
    }
    return value;
  }
  /// Temporaries are returned by value so range-for over g(f(x)) is safe.
  template <class Key>
  SparseTensor<Key> operator()(SparseTensor<Key>&& value) {
    (*this)(static_cast<const SparseTensor<Key>&>(value));
    return std::move(value);
  }
  bool ok() const { return ok_; }

 private:
  const std::function<bool(Index)>* covers_;
  bool ok_ = true;
};

/// Selection of basis indices to probe; empty means the algebra's default.
struct BasisWindow {
  std::vector<Index> indices;

  static BasisWindow range(Index lo, Index hi);
  Probe resolve(const EpsBialgebra& A) const;
};

// --- law checkers -----------------------------------------------------------

Report check_eps_axioms(const EpsBialgebra& A, const BasisWindow& probe = {},
                        const CheckOptions& opts = {});
Report check_associativity(const FinAlgebra& A, const CheckOptions& opts = {});
Report check_unital_counital_zero(const EpsBialgebra& A);

/// A' = (A*, Delta*^op, -mu*^cop) on the dual basis f_i.
EpsBialgebra dual_eps(const EpsBialgebra& A);

/// mu o (T (x) S) o Delta.
LinearMap convolution_of_maps(const LinearMap& T, const LinearMap& S, const EpsBialgebra& A);

/// Opposite-coopposite structure: mu'(a, b) = mu(b, a), Delta' = flip o Delta.
EpsBialgebra op_cop(const EpsBialgebra& A);

/// Delta^(n): A -> A^(x)(n+1); n = 0 gives the element itself.
TensorN iterated_coproduct(const EpsBialgebra& A, const Element& x, int n);
/// Product of the factors of a pure tensor, left to right.
Element multiply_all(const EpsBialgebra& A, std::span<const Element> factors);

}  // namespace epsalg
