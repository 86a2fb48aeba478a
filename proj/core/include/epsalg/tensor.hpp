#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "epsalg/scalar.hpp"

namespace epsalg {

using Index = std::int64_t;

/// Finitely supported map from basis keys to scalars. Zero coefficients are
/// never stored, so structural equality is mathematical equality.
template <class Key>
class SparseTensor {
 public:
  using key_type = Key;
  using container_type = std::map<Key, Scalar>;
  using const_iterator = typename container_type::const_iterator;

  SparseTensor() = default;

  static SparseTensor basis(const Key& key, const Scalar& coeff = 1) {
    SparseTensor t;
    t.add(key, coeff);
    return t;
  }

  void add(const Key& key, const Scalar& coeff) {
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  /// this += coeff * other
  void add_scaled(const SparseTensor& other, const Scalar& coeff) {
    if (sgn(coeff) == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * coeff);
  }

  Scalar coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const container_type& terms() const { return terms_; }

  SparseTensor& operator+=(const SparseTensor& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  SparseTensor& operator-=(const SparseTensor& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  SparseTensor& operator*=(const Scalar& s) {
    if (sgn(s) == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend SparseTensor operator+(SparseTensor a, const SparseTensor& b) { return a += b; }
  friend SparseTensor operator-(SparseTensor a, const SparseTensor& b) { return a -= b; }
  friend SparseTensor operator-(SparseTensor a) { return a *= Scalar(-1); }
  friend SparseTensor operator*(const Scalar& s, SparseTensor a) { return a *= s; }
  friend SparseTensor operator*(SparseTensor a, const Scalar& s) { return a *= s; }
  friend bool operator==(const SparseTensor& a, const SparseTensor& b) {
    return a.terms_ == b.terms_;
  }

 private:
  container_type terms_;
};

using Key2 = std::array<Index, 2>;
using Key3 = std::array<Index, 3>;
using KeyN = std::vector<Index>;

using Element = SparseTensor<Index>;
using Tensor2 = SparseTensor<Key2>;
using Tensor3 = SparseTensor<Key3>;
using TensorN = SparseTensor<KeyN>;

inline Element basis_element(Index i, const Scalar& c = 1) { return Element::basis(i, c); }

Tensor2 outer(const Element& x, const Element& y);
Tensor3 outer(const Tensor2& xy, const Element& z);
Tensor3 outer(const Element& x, const Tensor2& yz);

/// Swaps the two tensor factors.
Tensor2 flip(const Tensor2& t);

TensorN to_tensor_n(const Element& x);
TensorN to_tensor_n(const Tensor2& t);
TensorN to_tensor_n(const Tensor3& t);
inline TensorN to_tensor_n(const TensorN& t) { return t; }

/// Sum of c * f(k) over the terms of x, for f returning another SparseTensor.
template <class Key, class F>
auto linear_extend(const SparseTensor<Key>& x, F&& f) {
  using Result = std::decay_t<decltype(f(std::declval<const Key&>()))>;
  Result out;
  for (const auto& [k, c] : x) out.add_scaled(f(k), c);
  return out;
}

/// Coefficient pairing sum_i f_i x_i between a covector and a vector.
Scalar pair(const Element& covector, const Element& x);

std::ostream& operator<<(std::ostream& os, const Element& x);
std::ostream& operator<<(std::ostream& os, const Tensor2& t);
std::ostream& operator<<(std::ostream& os, const Tensor3& t);
std::ostream& operator<<(std::ostream& os, const TensorN& t);

}  // namespace epsalg
