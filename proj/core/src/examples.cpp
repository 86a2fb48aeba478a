#include "epsalg/examples.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "epsalg/double.hpp"
#include "epsalg/prelie.hpp"

namespace epsalg {

// --- Laurent ----------------------------------------------------------------

namespace {

class LaurentRules final : public EpsBialgebra::Rules {
 public:
  explicit LaurentRules(Index N) : N_(N) {}

  Backend backend() const override { return Backend::laurent; }
  Element product(Index i, Index j) const override { return basis_element(i + j); }
  Tensor2 coproduct(Index n) const override {
    Tensor2 out;
    if (n > 0) {
      for (Index i = 0; i < n; ++i) out.add({i, n - 1 - i}, 1);
    } else if (n < 0) {
      const Index k = -n;
      for (Index i = 1; i <= k; ++i) out.add({-i, -(k + 1 - i)}, -1);
    }
    return out;
  }
  std::optional<Element> unit() const override { return basis_element(0); }
  std::string label(Index i) const override { return "x^" + std::to_string(i); }
  std::vector<Index> probe_basis() const override {
    std::vector<Index> out;
    for (Index i = -N_; i <= N_; ++i) out.push_back(i);
    return out;
  }
  bool covers(Index i) const override { return i >= -N_ && i <= N_; }
  bool valid(Index) const override { return true; }

 private:
  Index N_;
};

}  // namespace

EpsBialgebra divided_differences(Index N) {
  if (N < 1) throw std::invalid_argument("divided_differences: window must be at least 1");
  return EpsBialgebra::from_rules(std::make_shared<LaurentRules>(N), "divided-differences");
}

LinearMap laurent_derivative() {
  return LinearMap::from_rule(
      [](Index n) { return n == 0 ? Element{} : basis_element(n - 1, Scalar(n)); }, std::nullopt, std::nullopt);
}

// --- quivers ----------------------------------------------------------------

bool Quiver::acyclic() const {
  // Kahn's algorithm
  std::vector<std::size_t> indeg(vertices.size(), 0);
  for (const auto& a : arrows) ++indeg[a.target];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : arrows) {
      if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
    }
  }
  return seen == vertices.size();
}

PathBasis::PathBasis(Quiver q, std::size_t max_length) : q_(std::move(q)), max_len_(max_length) {
  const std::size_t V = q_.vertices.size();
  for (const auto& a : q_.arrows) {
    if (a.source >= V || a.target >= V) throw std::invalid_argument("arrow " + a.name + " has an unknown endpoint");
  }
  sorted_ = q_.arrows;
  std::stable_sort(sorted_.begin(), sorted_.end(), [](const Arrow& x, const Arrow& y) { return x.name < y.name; });
  from_.assign(V, {});
  for (std::size_t id = 0; id < sorted_.size(); ++id) from_[sorted_[id].source].push_back(id);
  count_.assign(max_len_ + 1, std::vector<std::size_t>(V, 0));
  for (std::size_t v = 0; v < V; ++v) count_[0][v] = 1;
  for (std::size_t len = 1; len <= max_len_; ++len) {
    for (std::size_t v = 0; v < V; ++v) {
      for (std::size_t id : from_[v]) count_[len][v] += count_[len - 1][sorted_[id].target];
    }
  }
  offset_.assign(max_len_ + 2, 0);
  offset_[1] = V;
  for (std::size_t len = 1; len <= max_len_; ++len) {
    std::size_t total = 0;
    for (std::size_t v = 0; v < V; ++v) total += count_[len][v];
    offset_[len + 1] = offset_[len] + total;
  }
}

std::size_t PathBasis::count_up_to(std::size_t len) const {
  if (len > max_len_) throw DimensionError("path length beyond the basis cap");
  return offset_[len + 1];
}

std::size_t PathBasis::source(const Path& p) const {
  return p.is_vertex() ? p.vertex : sorted_[p.arrows.front()].source;
}

std::size_t PathBasis::target(const Path& p) const {
  return p.is_vertex() ? p.vertex : sorted_[p.arrows.back()].target;
}

Index PathBasis::rank(const Path& p) const {
  if (p.is_vertex()) {
    if (p.vertex >= q_.vertices.size()) throw DimensionError("unknown vertex");
    return static_cast<Index>(p.vertex);
  }
  const std::size_t len = p.arrows.size();
  if (len > max_len_) throw DimensionError("path of length " + std::to_string(len) + " exceeds the basis cap");
  std::size_t r = offset_[len];
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t id = p.arrows[k];
    if (id >= sorted_.size()) throw DimensionError("unknown arrow");
    if (k > 0 && sorted_[p.arrows[k - 1]].target != sorted_[id].source) {
      throw std::invalid_argument("arrows do not compose");
    }
    auto consider = [&](std::size_t b) {
      if (b < id) r += count_[len - 1 - k][sorted_[b].target];
    };
    if (k == 0) {
      for (std::size_t b = 0; b < sorted_.size(); ++b) consider(b);
    } else {
      for (std::size_t b : from_[sorted_[p.arrows[k - 1]].target]) consider(b);
    }
  }
  return static_cast<Index>(r);
}

Path PathBasis::unrank(Index i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= offset_.back()) throw DimensionError("path index out of range");
  const auto u = static_cast<std::size_t>(i);
  if (u < q_.vertices.size()) return Path{u, {}};
  std::size_t len = 1;
  while (offset_[len + 1] <= u) ++len;
  std::size_t rem = u - offset_[len];
  Path p;
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<std::size_t> cands;
    if (k == 0) {
      cands.resize(sorted_.size());
      std::iota(cands.begin(), cands.end(), std::size_t{0});
    } else {
      cands = from_[sorted_[p.arrows.back()].target];
    }
    for (std::size_t b : cands) {
      const std::size_t c = count_[len - 1 - k][sorted_[b].target];
      if (rem < c) {
        p.arrows.push_back(b);
        break;
      }
      rem -= c;
    }
  }
  p.vertex = sorted_[p.arrows.front()].source;
  return p;
}

std::string PathBasis::label(const Path& p) const {
  if (p.is_vertex()) return q_.vertices[p.vertex];
  std::string out;
  for (std::size_t id : p.arrows) out += sorted_[id].name;
  return out;
}

Element PathBasis::multiply(const Path& p, const Path& q) const {
  if (p.is_vertex() && q.is_vertex()) return p.vertex == q.vertex ? basis_element(rank(p)) : Element{};
  if (p.is_vertex()) return p.vertex == source(q) ? basis_element(rank(q)) : Element{};
  if (q.is_vertex()) return target(p) == q.vertex ? basis_element(rank(p)) : Element{};
  if (target(p) != source(q)) return {};
  Path pq = p;
  pq.arrows.insert(pq.arrows.end(), q.arrows.begin(), q.arrows.end());
  return basis_element(rank(pq));
}

Tensor2 PathBasis::comultiply(const Path& p) const {
  Tensor2 out;
  const std::size_t n = p.arrows.size();
  for (std::size_t i = 0; i < n; ++i) {
    Path pre{sorted_[p.arrows[i]].source, {p.arrows.begin(), p.arrows.begin() + static_cast<std::ptrdiff_t>(i)}};
    Path suf{sorted_[p.arrows[i]].target, {p.arrows.begin() + static_cast<std::ptrdiff_t>(i + 1), p.arrows.end()}};
    if (!pre.is_vertex()) pre.vertex = source(pre);
    if (!suf.is_vertex()) suf.vertex = source(suf);
    out.add({rank(pre), rank(suf)}, 1);
  }
  return out;
}

namespace {

class PathRules final : public EpsBialgebra::Rules {
 public:
  PathRules(PathBasis basis, std::size_t L) : basis_(std::move(basis)), window_(basis_.count_up_to(L)) {}

  Backend backend() const override { return Backend::path; }
  Element product(Index i, Index j) const override {
    return basis_.multiply(basis_.unrank(i), basis_.unrank(j));
  }
  Tensor2 coproduct(Index i) const override { return basis_.comultiply(basis_.unrank(i)); }
  std::optional<Element> unit() const override {
    Element u;
    for (std::size_t v = 0; v < basis_.quiver().vertices.size(); ++v) u.add(static_cast<Index>(v), 1);
    return u;
  }
  std::string label(Index i) const override { return basis_.label(basis_.unrank(i)); }
  std::vector<Index> probe_basis() const override {
    std::vector<Index> out(window_);
    std::iota(out.begin(), out.end(), Index{0});
    return out;
  }
  bool covers(Index i) const override { return i >= 0 && static_cast<std::size_t>(i) < window_; }
  bool valid(Index i) const override { return i >= 0; }

 private:
  PathBasis basis_;
  std::size_t window_;
};

}  // namespace

EpsBialgebra quiver_path_algebra(const Quiver& q, std::string name) {
  if (name.empty()) name = "kQ";
  const std::size_t V = q.vertices.size();
  if (q.acyclic() && !q.truncation) {
    const PathBasis basis(q, V == 0 ? 0 : V - 1);
    const std::size_t n = basis.count_up_to(basis.max_length());
    std::vector<std::string> labels;
    Element unit;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(basis.label(basis.unrank(static_cast<Index>(i))));
    for (std::size_t v = 0; v < V; ++v) unit.add(static_cast<Index>(v), 1);
    FinAlgebra alg = FinAlgebra::from_rule(
        n, [&](Index i, Index j) { return basis.multiply(basis.unrank(i), basis.unrank(j)); },
        V > 0 ? std::optional<Element>(unit) : std::nullopt, labels);
    FinCoalgebra co = FinCoalgebra::from_rule(n, [&](Index i) { return basis.comultiply(basis.unrank(i)); });
    return EpsBialgebra::dense(std::move(alg), std::move(co), std::move(name));
  }
  if (!q.truncation) throw std::invalid_argument("a quiver with a cycle needs a truncation length");
  const std::size_t L = *q.truncation;
  return EpsBialgebra::from_rules(std::make_shared<PathRules>(PathBasis(q, 8 * L + 8), L), std::move(name));
}

Quiver single_arrow_quiver() { return Quiver{{"e0", "e1"}, {{"a", 0, 1}}, std::nullopt}; }

Quiver chain_quiver() {
  return Quiver{{"e0", "e1", "e2", "e3"}, {{"a1", 0, 1}, {"a2", 1, 2}, {"a3", 2, 3}}, std::nullopt};
}

Quiver triangle_quiver() {
  return Quiver{{"e0", "e1", "e2"}, {{"a", 0, 1}, {"b", 1, 2}, {"c", 0, 2}}, std::nullopt};
}

Quiver loop_quiver(std::size_t L) { return Quiver{{"e0"}, {{"x", 0, 0}}, L}; }

Quiver two_cycle_quiver(std::size_t L) { return Quiver{{"e0", "e1"}, {{"a", 0, 1}, {"b", 1, 0}}, L}; }

EpsBialgebra a3() { return quiver_path_algebra(single_arrow_quiver(), "A3"); }

Element shortcut_prelie_oracle(const PathBasis& basis, const Path& alpha, const Path& beta) {
  Element out;
  for (std::size_t i = 0; i < beta.arrows.size(); ++i) {
    const Arrow& b = basis.arrow(beta.arrows[i]);
    if (b.source != basis.source(alpha) || b.target != basis.target(alpha)) continue;
    Path p;
    p.arrows.assign(beta.arrows.begin(), beta.arrows.begin() + static_cast<std::ptrdiff_t>(i));
    p.arrows.insert(p.arrows.end(), alpha.arrows.begin(), alpha.arrows.end());
    p.arrows.insert(p.arrows.end(), beta.arrows.begin() + static_cast<std::ptrdiff_t>(i + 1), beta.arrows.end());
    p.vertex = p.arrows.empty() ? b.source : basis.source(Path{0, p.arrows});
    out.add(basis.rank(p), 1);
  }
  return out;
}

// --- small algebras ---------------------------------------------------------

FinAlgebra truncated_polynomial() {
  return FinAlgebra::from_rule(
      2, [](Index i, Index j) { return i + j < 2 ? basis_element(i + j) : Element{}; }, basis_element(0),
      {"1", "t"});
}

FinAlgebra upper_triangular() {
  // E11, E12, E22 as (row, col) pairs
  static const std::array<std::pair<int, int>, 3> rc{{{1, 1}, {1, 2}, {2, 2}}};
  return FinAlgebra::from_rule(
      3,
      [](Index i, Index j) {
        const auto [a, b] = rc[static_cast<std::size_t>(i)];
        const auto [c, d] = rc[static_cast<std::size_t>(j)];
        if (b != c) return Element{};
        for (std::size_t k = 0; k < rc.size(); ++k) {
          if (rc[k] == std::pair<int, int>{a, d}) return basis_element(static_cast<Index>(k));
        }
        return Element{};
      },
      basis_element(0) + basis_element(2), {"E11", "E12", "E22"});
}

FinAlgebra matrix_algebra(std::size_t k) {
  const FinAlgebra E = endomorphism_algebra(k);
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= k; ++j) labels.push_back("E" + std::to_string(i) + std::to_string(j));
  }
  return FinAlgebra::from_rule(
      k * k, [&](Index i, Index j) { return E.product(i, j); }, E.unit(), labels);
}

M2Example m2_example() {
  const FinAlgebra M2 = matrix_algebra(2);
  // basis E11, E12, E21, E22
  Tensor2 displayed;
  displayed.add({1, 1}, -1);
  Tensor2 r;
  r.add({0, 1}, 1);
  r.add({1, 0}, -1);
  return M2Example{principal_coproduct(M2, displayed, "M2"), QuasiTriangular{M2, r, "M2"}};
}

QuasiTriangular nilpotent_r_example(const FinAlgebra& A, const Element& b, std::string name) {
  if (!A.unit()) throw std::invalid_argument("nilpotent_r_example: the algebra needs a unit");
  const Element bb = A.multiply(b, b);
  Report report("nilpotent");
  if (bb.is_zero()) {
    report.add(passed_law("b-squared-zero"));
  } else {
    report.add(failed_law("b-squared-zero", Witness{{}, to_tensor_n(bb), {}}));
  }
  require(report, "nilpotent_r_example: b^2 != 0");
  Tensor2 r = outer(*A.unit(), b);
  return QuasiTriangular{A, std::move(r), name.empty() ? "nilpotent-b" : std::move(name)};
}

Report check_m2_heisenberg(const EpsBialgebra& m2) {
  Report report("heisenberg");
  const BilinearOp bracket = lie_from_prelie(prelie_from_eps(m2));
  // x = E21, y = E11, z = E12, i = I
  const std::array<Element, 4> basis{basis_element(2), basis_element(0), basis_element(1),
                                     basis_element(0) + basis_element(3)};
  const std::array<std::string, 4> names{"x", "y", "z", "i"};
  LawResult law;
  law.law = "heisenberg-plus-centre";
  for (std::size_t p = 0; p < 4; ++p) {
    for (std::size_t q = 0; q < 4; ++q) {
      Element expected;
      if (p == 0 && q == 1) expected = basis[2];
      if (p == 1 && q == 0) expected = -basis[2];
      const Element res = bracket.apply(basis[p], basis[q]) - expected;
      ++law.checked;
      if (!res.is_zero()) {
        ++law.violations;
        law.status = Status::fail;
        if (law.witnesses.size() < 4) {
          law.witnesses.push_back(Witness{{static_cast<Index>(p), static_cast<Index>(q)}, to_tensor_n(res),
                                          {names[p], names[q]}});
        }
      }
    }
  }
  report.add(std::move(law));
  return report;
}

HopfModuleData counital_hopf_fixture(const EpsBialgebra& A, const ModuleData& N) {
  if (!A.is_finite() || !A.counit()) throw std::invalid_argument("counital_hopf_fixture needs a counital ε-bialgebra");
  if (!N.dim) throw DimensionError("counital_hopf_fixture needs a finite module");
  const std::size_t n = A.dim();
  const auto dn = static_cast<Index>(*N.dim);
  const Element eta = *A.counit();
  HopfModuleData M;
  M.dim = n * *N.dim;
  M.left = BilinearOp::from_rule(
      [&](Index a, Index x) {
        const Index ap = x / dn;
        const Index v = x % dn;
        Element out;
        for (const auto& [k, c] : A.product(a, ap)) out.add(k * dn + v, c);
        const Scalar e = eta.coeff(ap);
        if (sgn(e) != 0) {
          for (const auto& [pq, c] : A.coproduct(a)) {
            for (const auto& [w, d] : N.left(pq[1], v)) out.add(pq[0] * dn + w, e * c * d);
          }
        }
        return out;
      },
      n, M.dim, M.dim);
  M.left_coaction = CoMap::from_rule(
      [&](Index x) {
        Tensor2 out;
        for (const auto& [pq, c] : A.coproduct(x / dn)) out.add({pq[0], pq[1] * dn + x % dn}, c);
        return out;
      },
      M.dim);
  return M;
}

}  // namespace epsalg
