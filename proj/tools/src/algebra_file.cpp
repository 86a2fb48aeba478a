#include "epsalg_cli/algebra_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "epsalg/bimodules.hpp"
#include "epsalg/categorical.hpp"

namespace epsalg::cli {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

FileError::FileError(std::string src, std::string w, const std::string& what)
    : std::runtime_error(src + ": " + w + ": " + what), source(std::move(src)), where(std::move(w)) {}

std::string_view to_string(FileBackend b) {
  switch (b) {
    case FileBackend::dense: return "dense";
    case FileBackend::laurent: return "laurent";
    case FileBackend::quiver: return "quiver";
  }
  return "?";
}

ModuleData ModuleSection::module() const { return ModuleData{dim, lambda, xi, {}}; }

HopfModuleData ModuleSection::hopf() const {
  HopfModuleData H;
  H.dim = dim;
  H.left = lambda;
  H.left_coaction = Lambda ? *Lambda : CoMap::zero(dim);
  H.right = xi;
  if (xi || Xi) H.right_coaction = Xi ? *Xi : CoMap::zero(dim);
  return H;
}

std::optional<QuasiTriangular> AlgebraFile::quasi() const {
  if (!r) return std::nullopt;
  return QuasiTriangular{algebra.algebra(), *r, name};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string source) : src_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& where, const std::string& what) const {
    throw FileError(src_, where.empty() ? "/" : where, what);
  }

  const json& field(const json& obj, const std::string& path, const char* key) const {
    if (!obj.contains(key)) fail(path, std::string("missing field \"") + key + "\"");
    return obj.at(key);
  }

  std::size_t count(const json& j, const std::string& path) const {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer");
    return j.get<std::size_t>();
  }

  Index index(const json& j, const std::string& path, std::size_t bound, const char* what) const {
    if (!j.is_number_integer()) fail(path, std::string("expected an integer ") + what + " index");
    const auto v = j.get<long long>();
    if (v < 0 || static_cast<std::size_t>(v) >= bound) {
      fail(path, std::string(what) + " index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
    }
    return static_cast<Index>(v);
  }

  Scalar coeff(const json& j, const std::string& path) const {
    if (!j.is_string()) fail(path, "coefficients must be strings like \"3\" or \"-1/2\"");
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(path, e.what());
    }
  }

  // Rows [i0, ..., i_{n-1}, "c"] with per-position bounds; rejects repeated index tuples.
  template <class F>
  void rows(const json& arr, const std::string& path, const std::vector<std::pair<std::size_t, const char*>>& axes,
            F&& sink) const {
    if (!arr.is_array()) fail(path, "expected an array of entries");
    std::set<std::vector<Index>> seen;
    for (std::size_t n = 0; n < arr.size(); ++n) {
      const std::string p = path + "/" + std::to_string(n);
      const json& row = arr[n];
      if (!row.is_array() || row.size() != axes.size() + 1) {
        fail(p, "expected [" + std::to_string(axes.size()) + " indices, \"coefficient\"]");
      }
      std::vector<Index> key;
      for (std::size_t a = 0; a < axes.size(); ++a) {
        key.push_back(index(row[a], p + "/" + std::to_string(a), axes[a].first, axes[a].second));
      }
      const Scalar c = coeff(row[axes.size()], p + "/" + std::to_string(axes.size()));
      if (!seen.insert(key).second) {
        std::string t = "(";
        for (std::size_t a = 0; a < key.size(); ++a) t += (a ? ", " : "") + std::to_string(key[a]);
        fail(p, "duplicate entry " + t + ")");
      }
      if (sgn(c) != 0) sink(key, c);
    }
  }

  Element vector_of(const json& arr, const std::string& path, std::size_t dim) const {
    Element out;
    rows(arr, path, {{dim, "basis"}}, [&](const std::vector<Index>& k, const Scalar& c) { out.add(k[0], c); });
    return out;
  }

  BilinearOp action(const json& arr, const std::string& path, std::size_t l, const char* ln, std::size_t r,
                    const char* rn, std::size_t out) const {
    std::vector<Element> table(l * r);
    rows(arr, path, {{l, ln}, {r, rn}, {out, "module"}}, [&](const std::vector<Index>& k, const Scalar& c) {
      table[static_cast<std::size_t>(k[0]) * r + static_cast<std::size_t>(k[1])].add(k[2], c);
    });
    return BilinearOp::from_rule(
        [t = std::move(table), r](Index i, Index j) { return t[static_cast<std::size_t>(i) * r + static_cast<std::size_t>(j)]; },
        l, r, out);
  }

  CoMap coaction(const json& arr, const std::string& path, std::size_t dom, std::size_t a, const char* an,
                 std::size_t b, const char* bn) const {
    std::vector<Tensor2> table(dom);
    rows(arr, path, {{dom, "module"}, {a, an}, {b, bn}}, [&](const std::vector<Index>& k, const Scalar& c) {
      table[static_cast<std::size_t>(k[0])].add({k[1], k[2]}, c);
    });
    return CoMap::from_table(std::move(table));
  }

  void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) const {
    for (const auto& [k, v] : obj.items()) {
      bool known = false;
      for (const char* key : keys) known = known || k == key;
      if (!known) fail(path + "/" + k, "unknown field");
    }
  }

  Quiver quiver(const json& q, const std::string& path) const {
    if (!q.is_object()) fail(path, "expected an object");
    only_keys(q, path, {"vertices", "arrows", "truncation"});
    Quiver out;
    const json& vs = field(q, path, "vertices");
    if (!vs.is_array()) fail(path + "/vertices", "expected an array of names");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (!vs[i].is_string()) fail(path + "/vertices/" + std::to_string(i), "expected a vertex name");
      out.vertices.push_back(vs[i].get<std::string>());
    }
    auto vertex = [&](const json& j, const std::string& p) -> std::size_t {
      if (!j.is_string()) fail(p, "expected a vertex name");
      for (std::size_t i = 0; i < out.vertices.size(); ++i) {
        if (out.vertices[i] == j.get<std::string>()) return i;
      }
      fail(p, "unknown vertex \"" + j.get<std::string>() + "\"");
    };
    const json& as = field(q, path, "arrows");
    if (!as.is_array()) fail(path + "/arrows", "expected an array");
    std::set<std::string> names;
    for (std::size_t i = 0; i < as.size(); ++i) {
      const std::string p = path + "/arrows/" + std::to_string(i);
      if (!as[i].is_object()) fail(p, "expected {name, source, target}");
      only_keys(as[i], p, {"name", "source", "target"});
      const json& nm = field(as[i], p, "name");
      if (!nm.is_string()) fail(p + "/name", "expected a string");
      if (!names.insert(nm.get<std::string>()).second) fail(p + "/name", "duplicate arrow name");
      out.arrows.push_back(
          {nm.get<std::string>(), vertex(field(as[i], p, "source"), p + "/source"), vertex(field(as[i], p, "target"), p + "/target")});
    }
    if (q.contains("truncation") && !q["truncation"].is_null()) out.truncation = count(q["truncation"], path + "/truncation");
    if (!out.acyclic() && !out.truncation) fail(path, "a quiver with a cycle needs \"truncation\"");
    return out;
  }

  AlgebraFile parse(const json& doc) const {
    if (!doc.is_object()) fail("", "expected a JSON object");
    only_keys(doc, "", {"name", "backend", "dim", "window", "quiver", "basis", "mul", "comul", "unit", "counit", "r",
                        "module"});
    AlgebraFile f;
    if (doc.contains("name")) {
      if (!doc["name"].is_string()) fail("/name", "expected a string");
      f.name = doc["name"].get<std::string>();
    }
    const json& be = field(doc, "", "backend");
    const std::string b = be.is_string() ? be.get<std::string>() : std::string();
    if (b == "dense") {
      f.backend = FileBackend::dense;
    } else if (b == "laurent") {
      f.backend = FileBackend::laurent;
    } else if (b == "quiver") {
      f.backend = FileBackend::quiver;
    } else {
      fail("/backend", "expected \"dense\", \"laurent\" or \"quiver\"");
    }

    auto forbid = [&](std::initializer_list<const char*> keys) {
      for (const char* k : keys) {
        if (doc.contains(k)) fail(std::string("/") + k, "not allowed with backend \"" + b + "\"");
      }
    };

    if (f.backend == FileBackend::laurent) {
      forbid({"dim", "quiver", "basis", "mul", "comul", "unit", "counit", "r", "module"});
      const std::size_t w = count(field(doc, "", "window"), "/window");
      if (w == 0) fail("/window", "window must be positive");
      f.window = static_cast<Index>(w);
      f.algebra = divided_differences(*f.window);
      if (f.name.empty()) f.name = "laurent";
      f.algebra = f.algebra.renamed(f.name);
      return f;
    }
    if (f.backend == FileBackend::quiver) {
      forbid({"dim", "window", "basis", "mul", "comul", "unit", "counit", "r", "module"});
      f.quiver = quiver(field(doc, "", "quiver"), "/quiver");
      f.algebra = quiver_path_algebra(*f.quiver, f.name);
      return f;
    }

    forbid({"window", "quiver"});
    const std::size_t n = count(field(doc, "", "dim"), "/dim");
    std::vector<std::string> labels;
    if (doc.contains("basis")) {
      const json& bl = doc["basis"];
      if (!bl.is_array() || bl.size() != n) fail("/basis", "expected " + std::to_string(n) + " labels");
      std::set<std::string> seen;
      for (std::size_t i = 0; i < n; ++i) {
        if (!bl[i].is_string()) fail("/basis/" + std::to_string(i), "expected a string");
        if (!seen.insert(bl[i].get<std::string>()).second) fail("/basis/" + std::to_string(i), "duplicate label");
        labels.push_back(bl[i].get<std::string>());
      }
    }
    std::vector<Element> mul(n * n);
    rows(field(doc, "", "mul"), "/mul", {{n, "basis"}, {n, "basis"}, {n, "basis"}},
         [&](const std::vector<Index>& k, const Scalar& c) {
           mul[static_cast<std::size_t>(k[0]) * n + static_cast<std::size_t>(k[1])].add(k[2], c);
         });
    std::vector<Tensor2> comul(n);
    rows(field(doc, "", "comul"), "/comul", {{n, "basis"}, {n, "basis"}, {n, "basis"}},
         [&](const std::vector<Index>& k, const Scalar& c) { comul[static_cast<std::size_t>(k[0])].add({k[1], k[2]}, c); });
    std::optional<Element> unit, counit;
    if (doc.contains("unit")) unit = vector_of(doc["unit"], "/unit", n);
    if (doc.contains("counit")) counit = vector_of(doc["counit"], "/counit", n);
    f.algebra = EpsBialgebra::dense(FinAlgebra(n, std::move(mul), unit, labels),
                                    FinCoalgebra(n, std::move(comul), counit), f.name);
    if (doc.contains("r")) {
      Tensor2 r;
      rows(doc["r"], "/r", {{n, "basis"}, {n, "basis"}},
           [&](const std::vector<Index>& k, const Scalar& c) { r.add({k[0], k[1]}, c); });
      f.r = std::move(r);
    }
    if (doc.contains("module")) {
      const json& m = doc["module"];
      if (!m.is_object()) fail("/module", "expected an object");
      only_keys(m, "/module", {"dim", "lambda", "Lambda", "xi", "Xi"});
      ModuleSection s;
      s.dim = count(field(m, "/module", "dim"), "/module/dim");
      s.lambda = action(field(m, "/module", "lambda"), "/module/lambda", n, "algebra", s.dim, "module", s.dim);
      if (m.contains("Lambda")) s.Lambda = coaction(m["Lambda"], "/module/Lambda", s.dim, n, "algebra", s.dim, "module");
      if (m.contains("xi")) s.xi = action(m["xi"], "/module/xi", s.dim, "module", n, "algebra", s.dim);
      if (m.contains("Xi")) s.Xi = coaction(m["Xi"], "/module/Xi", s.dim, s.dim, "module", n, "algebra");
      f.module = std::move(s);
    }
    return f;
  }

 private:
  std::string src_;
};

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

ojson row(std::initializer_list<Index> idx, const Scalar& c) {
  ojson r = ojson::array();
  for (Index i : idx) r.push_back(i);
  r.push_back(epsalg::to_string(c));
  return r;
}

ojson vector_rows(const Element& x) {
  ojson out = ojson::array();
  for (const auto& [k, c] : x) out.push_back(row({k}, c));
  return out;
}

ojson action_rows(const BilinearOp& op) {
  ojson out = ojson::array();
  for (Index i = 0; i < static_cast<Index>(*op.left_dim()); ++i) {
    for (Index j = 0; j < static_cast<Index>(*op.right_dim()); ++j) {
      for (const auto& [k, c] : op(i, j)) out.push_back(row({i, j, k}, c));
    }
  }
  return out;
}

ojson coaction_rows(const CoMap& m) {
  ojson out = ojson::array();
  for (Index i = 0; i < static_cast<Index>(*m.domain_dim()); ++i) {
    for (const auto& [k, c] : m(i)) out.push_back(row({i, k[0], k[1]}, c));
  }
  return out;
}

// Objects indented; arrays of scalars and entry rows kept on one line each.
void pretty(std::ostream& os, const ojson& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    std::size_t n = 0;
    for (const auto& [k, v] : j.items()) {
      os << inner << ojson(k).dump() << ": ";
      pretty(os, v, indent + 2);
      os << (++n < j.size() ? ",\n" : "\n");
    }
    os << pad << "}";
  } else if (j.is_array() && !j.empty() && (j.front().is_array() || j.front().is_object())) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << inner;
      if (j[i].is_object()) {
        pretty(os, j[i], indent + 2);
      } else {
        os << j[i].dump();
      }
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "]";
  } else {
    os << j.dump();
  }
}

bool same_op(const BilinearOp& a, const BilinearOp& b) { return a == b; }
bool same_co(const CoMap& a, const CoMap& b) { return a == b; }

template <class T, class F>
bool same_opt(const std::optional<T>& a, const std::optional<T>& b, F&& eq) {
  if (a.has_value() != b.has_value()) return false;
  return !a || eq(*a, *b);
}

}  // namespace

AlgebraFile parse_algebra_json(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    if (const auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw FileError(source, "line " + std::to_string(line) + ", column " + std::to_string(col), what);
  }
  try {
    return Parser(source).parse(doc);
  } catch (const FileError&) {
    throw;
  } catch (const std::exception& e) {
    // constructor-level rejections (e.g. an invalid quiver)
    throw FileError(source, "/", e.what());
  }
}

AlgebraFile parse_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError(path.string(), "/", "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra_json(ss.str(), path.string());
}

ojson to_json(const AlgebraFile& f) {
  ojson j;
  if (!f.name.empty()) j["name"] = f.name;
  j["backend"] = std::string(to_string(f.backend));
  if (f.backend == FileBackend::laurent) {
    j["window"] = *f.window;
    return j;
  }
  if (f.backend == FileBackend::quiver) {
    const Quiver& q = *f.quiver;
    ojson qj;
    qj["vertices"] = q.vertices;
    qj["arrows"] = ojson::array();
    for (const auto& a : q.arrows) {
      ojson aj;
      aj["name"] = a.name;
      aj["source"] = q.vertices[a.source];
      aj["target"] = q.vertices[a.target];
      qj["arrows"].push_back(aj);
    }
    if (q.truncation) qj["truncation"] = *q.truncation;
    j["quiver"] = qj;
    return j;
  }
  const EpsBialgebra& A = f.algebra;
  const auto n = static_cast<Index>(A.dim());
  j["dim"] = A.dim();
  if (!A.algebra().labels().empty()) j["basis"] = A.algebra().labels();
  ojson mul = ojson::array(), comul = ojson::array();
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) {
      for (const auto& [p, c] : A.product(i, k)) mul.push_back(row({i, k, p}, c));
    }
    for (const auto& [p, c] : A.coproduct(i)) comul.push_back(row({i, p[0], p[1]}, c));
  }
  j["mul"] = mul;
  j["comul"] = comul;
  if (const auto u = A.unit()) j["unit"] = vector_rows(*u);
  if (const auto e = A.counit()) j["counit"] = vector_rows(*e);
  if (f.r) {
    ojson r = ojson::array();
    for (const auto& [k, c] : *f.r) r.push_back(row({k[0], k[1]}, c));
    j["r"] = r;
  }
  if (f.module) {
    const ModuleSection& m = *f.module;
    ojson mj;
    mj["dim"] = m.dim;
    mj["lambda"] = action_rows(m.lambda);
    if (m.Lambda) mj["Lambda"] = coaction_rows(*m.Lambda);
    if (m.xi) mj["xi"] = action_rows(*m.xi);
    if (m.Xi) mj["Xi"] = coaction_rows(*m.Xi);
    j["module"] = mj;
  }
  return j;
}

std::string emit_algebra_json(const AlgebraFile& f) {
  std::ostringstream os;
  pretty(os, to_json(f), 0);
  os << "\n";
  return os.str();
}

void emit_algebra_file(const AlgebraFile& f, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << emit_algebra_json(f);
}

AlgebraFile dense_file(const EpsBialgebra& A, std::optional<Tensor2> r, std::optional<ModuleSection> module) {
  AlgebraFile f;
  f.name = A.name();
  f.backend = FileBackend::dense;
  f.algebra = A;
  f.r = std::move(r);
  f.module = std::move(module);
  return f;
}

AlgebraFile laurent_file(Index window) {
  AlgebraFile f;
  f.name = "laurent";
  f.backend = FileBackend::laurent;
  f.window = window;
  f.algebra = divided_differences(window).renamed(f.name);
  return f;
}

AlgebraFile quiver_file(const Quiver& q, std::string name) {
  AlgebraFile f;
  f.name = std::move(name);
  f.backend = FileBackend::quiver;
  f.quiver = q;
  f.algebra = quiver_path_algebra(q, f.name);
  return f;
}

ModuleSection module_section(const HopfModuleData& M) {
  ModuleSection s;
  s.dim = M.dim.value();
  s.lambda = M.left;
  s.Lambda = M.left_coaction;
  s.xi = M.right;
  s.Xi = M.right_coaction;
  return s;
}

ModuleSection module_section(const ModuleData& M) {
  ModuleSection s;
  s.dim = M.dim.value();
  s.lambda = M.left;
  s.xi = M.right;
  return s;
}

bool semantically_equal(const AlgebraFile& a, const AlgebraFile& b) {
  if (a.name != b.name || a.backend != b.backend) return false;
  switch (a.backend) {
    case FileBackend::laurent:
      return a.window == b.window;
    case FileBackend::quiver: {
      const Quiver &p = *a.quiver, &q = *b.quiver;
      if (p.vertices != q.vertices || p.truncation != q.truncation || p.arrows.size() != q.arrows.size()) return false;
      for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        const auto &x = p.arrows[i], &y = q.arrows[i];
        if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
      }
      const auto basis = a.algebra.probe_basis();
      if (basis != b.algebra.probe_basis()) return false;
      for (Index i : basis) {
        if (a.algebra.coproduct(i) != b.algebra.coproduct(i)) return false;
        for (Index j : basis) {
          if (a.algebra.product(i, j) != b.algebra.product(i, j)) return false;
        }
      }
      return true;
    }
    case FileBackend::dense:
      break;
  }
  if (!(a.algebra == b.algebra) || a.r != b.r) return false;
  if (a.module.has_value() != b.module.has_value()) return false;
  if (!a.module) return true;
  const ModuleSection &m = *a.module, &n = *b.module;
  return m.dim == n.dim && same_op(m.lambda, n.lambda) && same_opt(m.Lambda, n.Lambda, same_co) &&
         same_opt(m.xi, n.xi, same_op) && same_opt(m.Xi, n.Xi, same_co);
}

std::vector<std::string> example_names() {
  return {"a3", "a3-plus", "chain", "triangle", "loop", "laurent", "m2", "m2-quasi", "nilpotent", "truncated"};
}

AlgebraFile example_file(const std::string& name) {
  if (name == "a3") return dense_file(a3());
  if (name == "a3-plus") {
    const EpsBialgebra P = augment_plus(a3()).renamed("A3+");
    return dense_file(P, std::nullopt, module_section(counital_hopf_fixture(P, regular_module(P.algebra()))));
  }
  if (name == "chain") return quiver_file(chain_quiver(), "chain");
  if (name == "triangle") return quiver_file(triangle_quiver(), "triangle");
  if (name == "loop") return quiver_file(loop_quiver(), "loop");
  if (name == "laurent") return laurent_file(5);
  if (name == "m2") return dense_file(m2_example().bialgebra.renamed("M2"));
  if (name == "m2-quasi") {
    const QuasiTriangular Q = m2_example().quasi;
    ModuleSection s = module_section(matrix_column_module(2));
    s.xi = BilinearOp::zero(2, 4, 2);
    return dense_file(principal_coproduct(Q).renamed("M2-quasi"), Q.r, s);
  }
  if (name == "nilpotent") {
    const QuasiTriangular Q = nilpotent_r_example(upper_triangular(), basis_element(1), "nilpotent");
    return dense_file(principal_coproduct(Q).renamed("nilpotent"), Q.r,
                      module_section(hopf_bimodule_from_quasi(Q, regular_bimodule(Q.base))));
  }
  if (name == "truncated") {
    const QuasiTriangular Q = nilpotent_r_example(truncated_polynomial(), basis_element(1), "truncated");
    return dense_file(principal_coproduct(Q).renamed("truncated"), Q.r,
                      module_section(hopf_bimodule_from_quasi(Q, regular_bimodule(Q.base))));
  }
  throw std::out_of_range("unknown example \"" + name + "\"");
}

}  // namespace epsalg::cli
