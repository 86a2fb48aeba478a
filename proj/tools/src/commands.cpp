#include "epsalg_cli/commands.hpp"

#include <charconv>
#include <cstdlib>
#include <thread>

#include "CLI11.hpp"
#include "epsalg/bimodules.hpp"
#include "epsalg/brace.hpp"
#include "epsalg/categorical.hpp"
#include "epsalg/dendriform.hpp"
#include "epsalg/diagram.hpp"
#include "epsalg/double.hpp"
#include "epsalg_cli/algebra_file.hpp"
#include "epsalg_cli/render.hpp"

namespace epsalg::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string file;
  bool json = false;
  std::optional<std::size_t> probe;
};

void add_common(CLI::App* cmd, Common& c, bool with_file = true) {
  if (with_file) cmd->add_option("file", c.file, "algebra file (JSON)")->required();
  cmd->add_flag("--json", c.json, "emit JSON lines");
  cmd->add_option("--probe", c.probe, "probe window: exponents in [-N, N] (laurent) or path length N (quiver)");
}

AlgebraFile load(const Common& c, std::ostream& err) {
  AlgebraFile f = parse_algebra_file(c.file);
  if (c.probe) {
    if (*c.probe == 0) throw UsageError("--probe must be positive");
    switch (f.backend) {
      case FileBackend::laurent:
        f.window = static_cast<Index>(*c.probe);
        f.algebra = divided_differences(*f.window).renamed(f.name);
        break;
      case FileBackend::quiver:
        if (f.quiver->acyclic()) {
          err << "note: --probe has no effect on an acyclic quiver\n";
        } else {
          f.quiver->truncation = *c.probe;
          f.algebra = quiver_path_algebra(*f.quiver, f.name);
        }
        break;
      case FileBackend::dense:
        err << "note: --probe has no effect on a dense algebra\n";
        break;
    }
  }
  return f;
}

void require_dense(const AlgebraFile& f, std::string_view what) {
  if (!f.algebra.is_finite()) {
    throw UsageError(std::string(what) + " needs a finite-dimensional algebra; \"" + f.name + "\" uses the " +
                     std::string(to_string(f.backend)) + " backend");
  }
}

QuasiTriangular require_r(const AlgebraFile& f, std::string_view what) {
  require_dense(f, what);
  if (!f.r) throw UsageError(std::string(what) + " needs an \"r\" section");
  return *f.quasi();
}

Labeler labeler(const EpsBialgebra& A) {
  return [A](Index i) { return A.label(i); };
}

Table op_table(std::string title, const BilinearOp& op, const std::vector<Index>& basis) {
  Table t{std::move(title), {}};
  for (Index i : basis) {
    for (Index j : basis) {
      Element v = op(i, j);
      if (!v.is_zero()) t.rows.push_back({{i, j}, std::move(v)});
    }
  }
  return t;
}

std::pair<std::size_t, std::size_t> parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  std::size_t n = 0, m = 0;
  auto num = [&](std::string_view part, std::size_t& v) {
    const auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    return ec == std::errc{} && p == part.data() + part.size() && !part.empty();
  };
  if (comma == std::string::npos || !num(std::string_view(s).substr(0, comma), n) ||
      !num(std::string_view(s).substr(comma + 1), m) || m == 0) {
    throw UsageError("--max-brace expects n,m with m >= 1, got \"" + s + "\"");
  }
  return {n, m};
}

EpsBialgebra counital(const AlgebraFile& f, bool plus, std::string_view what) {
  require_dense(f, what);
  const EpsBialgebra A = plus ? augment_plus(f.algebra).renamed(f.name + "+") : f.algebra;
  if (!A.counit()) throw UsageError(std::string(what) + " needs a counit; add \"counit\" or pass --plus");
  return A;
}

}  // namespace

unsigned thread_budget() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("EPSALG_THREADS")) {
    unsigned cap = 0;
    const std::string_view s(env);
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (ec == std::errc{} && p == s.data() + s.size() && cap > 0) n = std::min(n, cap);
  }
  return n;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for infinitesimal bialgebras and their derived structures", "epsalg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;

  auto* check = app.add_subcommand("check", "check the eps-bialgebra axioms, r and the module section");
  add_common(check, common);
  bool hopf = false;
  check->add_flag("--hopf-module", hopf, "check the module section as an eps-Hopf (bi)module");

  auto* derive = app.add_subcommand("derive", "derived structures and their laws");
  add_common(derive, common);
  bool d_prelie = false, d_lie = false, d_coalg = false, d_dendri = false, d_baxter = false, d_brace = false;
  std::string max_brace = "2,1";
  derive->add_flag("--prelie", d_prelie, "pre-Lie product, its axiom and the L-map derivation property");
  derive->add_flag("--lie", d_lie, "commutator bracket of the pre-Lie product");
  derive->add_flag("--prelie-coalgebra", d_coalg, "pre-Lie coalgebra");
  derive->add_flag("--dendriform", d_dendri, "dendriform structure from r");
  derive->add_flag("--baxter", d_baxter, "Baxter operator from r");
  derive->add_flag("--brace", d_brace, "brace structure");
  derive->add_option("--max-brace", max_brace, "largest (n,m) for the brace axiom")->capture_default_str();

  auto* dbl = app.add_subcommand("double", "build the double of a finite-dimensional algebra");
  add_common(dbl, common);
  std::string emit;
  dbl->add_option("--emit", emit, "write the double as an algebra file");

  auto* diagram = app.add_subcommand("diagram", "commuting squares of a quasitriangular algebra");
  add_common(diagram, common);
  bool bimod = false;
  diagram->add_flag("--bimodule", bimod, "also the square for the module section (needs xi)");

  auto* example = app.add_subcommand("example", "write a shipped example");
  std::string example_name;
  bool list = false;
  example->add_option("name", example_name, "example name");
  example->add_flag("--list", list, "list example names");
  example->add_option("--emit", emit, "output file (default stdout)");

  auto* appendix = app.add_subcommand("appendix", "circular and augmented constructions");
  add_common(appendix, common);
  bool a_circ = false, a_aug = false, a_a4 = false, a_b5 = false, a_b10 = false, a_plus = false;
  appendix->add_flag("--circ", a_circ, "circular product, wrapped monoid and comonoid");
  appendix->add_flag("--augmented", a_aug, "augmented tensor product and the plus comparison");
  appendix->add_flag("--equiv-a4", a_a4, "axioms vs comonoid in the circular category");
  appendix->add_flag("--equiv-b5", a_b5, "counital axioms vs comonoid over the augmented tensor");
  appendix->add_flag("--b10", a_b10, "no counital solution of Delta(a) = r.a - a.r");
  appendix->add_flag("--plus", a_plus, "replace the algebra by its plus extension first");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "epsalg: " << e.what() << "\n";
    if (app.get_subcommands().empty()) err << "run 'epsalg --help' for usage\n";
    return kUsage;
  }

  CheckOptions opts;
  opts.threads = thread_budget();

  try {
    if (example->parsed()) {
      if (list) {
        for (const auto& n : example_names()) out << n << "\n";
        return kPass;
      }
      if (example_name.empty()) throw UsageError("example needs a name (see --list)");
      AlgebraFile f;
      try {
        f = example_file(example_name);
      } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
      }
      if (emit.empty()) {
        out << emit_algebra_json(f);
      } else {
        emit_algebra_file(f, emit);
      }
      return kPass;
    }

    const AlgebraFile f = load(common, err);
    const EpsBialgebra& A = f.algebra;
    Emitter em(out, common.json, labeler(A));

    if (check->parsed()) {
      em.report(check_eps_axioms(A, {}, opts));
      if (f.r) em.report(check_aybe(A.algebra(), *f.r));
      if (f.module) {
        if (hopf) {
          em.report(check_hopf_module(A, f.module->hopf(), {}, opts));
        } else {
          em.report(check_module(A.algebra(), f.module->module(), nullptr, opts));
        }
      } else if (hopf) {
        throw UsageError("--hopf-module needs a \"module\" section");
      }
    } else if (derive->parsed()) {
      if (!(d_prelie || d_lie || d_coalg || d_dendri || d_baxter || d_brace)) {
        throw UsageError("derive needs at least one of --prelie, --lie, --prelie-coalgebra, --dendriform, --baxter, --brace");
      }
      const Probe probe = Probe::of(A);
      const BilinearOp pl = prelie_from_eps(A);
      if (d_prelie) {
        em.table(op_table("prelie " + A.name(), pl, probe.indices));
        em.report(check_prelie(pl, probe, opts));
        em.report(check_L_derivation(A, {}, opts));
      }
      if (d_lie) {
        const BilinearOp br = lie_from_prelie(pl);
        em.table(op_table("lie " + A.name(), br, probe.indices));
        em.report(check_lie(br, probe, opts));
      }
      if (d_coalg) em.report(check_prelie_coalgebra(A, {}, opts));
      if (d_dendri) {
        const QuasiTriangular Q = require_r(f, "--dendriform");
        const Dendriform d = quasi_dendriform(Q);
        em.table(op_table("succ " + A.name(), d.succ, probe.indices));
        em.table(op_table("prec " + A.name(), d.prec, probe.indices));
        em.report(check_dendriform(d, probe, opts));
        em.report(check_quasi_dendriform(Q, opts));
      }
      if (d_baxter) {
        const QuasiTriangular Q = require_r(f, "--baxter");
        em.report(check_baxter(baxter_from_r(Q.base, Q.r), opts));
      }
      if (d_brace) {
        const auto [n, m] = parse_pair(max_brace);
        const BraceStructure B = brace_from_eps(A, n + m);
        em.report(check_brace_up_to(B, n, m, probe, opts));
      }
    } else if (dbl->parsed()) {
      require_dense(f, "double");
      const DoubleAlgebra D = build_double(A);
      em.report(check_double_consistency(D, opts));
      em.report(check_eps_axioms(D.algebra, {}, opts));
      em.report(check_aybe(D.algebra.algebra(), D.r));
      if (!emit.empty()) {
        emit_algebra_file(dense_file(D.algebra.renamed("D(" + f.name + ")"), D.r), emit);
        em.note("wrote " + emit);
      }
    } else if (diagram->parsed()) {
      const QuasiTriangular Q = require_r(f, "diagram");
      em.report(check_quasi_diagram(Q, opts));
      const bool has_right = f.module && f.module->xi;
      if (bimod && !has_right) throw UsageError("--bimodule needs a module section with \"xi\"");
      if (has_right) em.report(check_bimod_diagram(Q, f.module->module(), opts));
    } else if (appendix->parsed()) {
      if (!(a_circ || a_aug || a_a4 || a_b5 || a_b10)) {
        throw UsageError("appendix needs at least one of --circ, --augmented, --equiv-a4, --equiv-b5, --b10");
      }
      require_dense(f, "appendix");
      const EpsBialgebra B = a_plus ? augment_plus(A).renamed(f.name + "+") : A;
      if (a_circ) {
        em.report(check_associativity(circ_algebra(B.algebra(), B.algebra()), opts));
        em.report(check_circ_monoid(B.algebra(), opts));
        em.report(check_circ_comonoid(B.coalgebra(), opts));
      }
      if (a_a4) em.report(check_comonoid_alg_equiv(B, opts).combined());
      if (a_aug) {
        const EpsBialgebra C = counital(f, a_plus, "--augmented");
        const AugmentedAlgebra aug{C.algebra(), *C.counit()};
        const AugmentedAlgebra T = eps_tensor_algebra(aug, aug);
        em.report(check_augmented(aug, opts));
        em.report(check_associativity(T.algebra, opts));
        em.report(check_algebra_morphism(T.algebra, circ_algebra(aug.algebra, aug.algebra), infcir_map(aug, aug),
                                         "infcir-morphism", opts));
        em.report(check_plus_iso(C.algebra(), C.algebra(), opts));
      }
      if (a_b5) em.report(check_counital_comonoid_equiv(counital(f, a_plus, "--equiv-b5"), opts).combined());
      if (a_b10) em.report(check_counital_quasi_zero(counital(f, a_plus, "--b10")).report);
    }
    return em.ok() ? kPass : kLawFailure;
  } catch (const FileError& e) {
    err << "epsalg: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "epsalg: " << e.what() << "\n";
    return kUsage;
  } catch (const LawViolation& e) {
    err << "epsalg: precondition failed: " << e.what() << "\n";
    return kLawFailure;
  } catch (const std::invalid_argument& e) {
    err << "epsalg: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "epsalg: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "epsalg: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace epsalg::cli
