#include "epsalg/tensor.hpp"

namespace epsalg {

Tensor2 outer(const Element& x, const Element& y) {
  Tensor2 t;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) t.add({i, j}, a * b);
  }
  return t;
}

Tensor3 outer(const Tensor2& xy, const Element& z) {
  Tensor3 t;
  for (const auto& [k, a] : xy) {
    for (const auto& [j, b] : z) t.add({k[0], k[1], j}, a * b);
  }
  return t;
}

Tensor3 outer(const Element& x, const Tensor2& yz) {
  Tensor3 t;
  for (const auto& [i, a] : x) {
    for (const auto& [k, b] : yz) t.add({i, k[0], k[1]}, a * b);
  }
  return t;
}

Tensor2 flip(const Tensor2& t) {
  Tensor2 out;
  for (const auto& [k, c] : t) out.add({k[1], k[0]}, c);
  return out;
}

TensorN to_tensor_n(const Element& x) {
  TensorN out;
  for (const auto& [i, c] : x) out.add({i}, c);
  return out;
}

TensorN to_tensor_n(const Tensor2& t) {
  TensorN out;
  for (const auto& [k, c] : t) out.add({k[0], k[1]}, c);
  return out;
}

TensorN to_tensor_n(const Tensor3& t) {
  TensorN out;
  for (const auto& [k, c] : t) out.add({k[0], k[1], k[2]}, c);
  return out;
}

Scalar pair(const Element& covector, const Element& x) {
  Scalar s = 0;
  for (const auto& [i, c] : x) s += covector.coeff(i) * c;
  return s;
}

namespace {

template <class Key, class KeyWriter>
std::ostream& write_terms(std::ostream& os, const SparseTensor<Key>& t, KeyWriter&& key) {
  if (t.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [k, c] : t) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Scalar mag = abs(c);
    if (mag != 1) os << mag.get_str() << "*";
    key(k);
  }
  return os;
}

template <class Seq>
void write_tuple(std::ostream& os, const Seq& k) {
  os << "[";
  for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  os << "]";
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Element& x) {
  return write_terms(os, x, [&](Index i) { os << "e" << i; });
}
std::ostream& operator<<(std::ostream& os, const Tensor2& t) {
  return write_terms(os, t, [&](const Key2& k) { write_tuple(os, k); });
}
std::ostream& operator<<(std::ostream& os, const Tensor3& t) {
  return write_terms(os, t, [&](const Key3& k) { write_tuple(os, k); });
}
std::ostream& operator<<(std::ostream& os, const TensorN& t) {
  return write_terms(os, t, [&](const KeyN& k) { write_tuple(os, k); });
}

}  // namespace epsalg
