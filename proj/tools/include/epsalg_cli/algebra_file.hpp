#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "epsalg/examples.hpp"
#include "json.hpp"

namespace epsalg::cli {

/// Schema or syntax problem in an algebra file. `where` is a JSON pointer
/// ("/mul/3/2") or "line L, column C" for syntax errors.
struct FileError : std::runtime_error {
  FileError(std::string source, std::string where, const std::string& what);
  std::string source;
  std::string where;
};

enum class FileBackend { dense, laurent, quiver };
std::string_view to_string(FileBackend b);

/// Module section. lambda: a.m, Lambda: left coaction, xi: m.a, Xi: right coaction.
struct ModuleSection {
  std::size_t dim = 0;
  BilinearOp lambda;
  std::optional<CoMap> Lambda;
  std::optional<BilinearOp> xi;
  std::optional<CoMap> Xi;

  ModuleData module() const;
  /// Missing coactions become zero maps.
  HopfModuleData hopf() const;
};

struct AlgebraFile {
  std::string name;
  FileBackend backend = FileBackend::dense;
  std::optional<Index> window;   // laurent
  std::optional<Quiver> quiver;  // quiver
  EpsBialgebra algebra;
  std::optional<Tensor2> r;
  std::optional<ModuleSection> module;

  std::optional<QuasiTriangular> quasi() const;
};

AlgebraFile parse_algebra_json(const std::string& text, const std::string& source = "<input>");
AlgebraFile parse_algebra_file(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const AlgebraFile& f);
std::string emit_algebra_json(const AlgebraFile& f);
void emit_algebra_file(const AlgebraFile& f, const std::filesystem::path& path);

AlgebraFile dense_file(const EpsBialgebra& A, std::optional<Tensor2> r = std::nullopt,
                       std::optional<ModuleSection> module = std::nullopt);
AlgebraFile laurent_file(Index window);
AlgebraFile quiver_file(const Quiver& q, std::string name);
ModuleSection module_section(const HopfModuleData& M);
ModuleSection module_section(const ModuleData& M);

/// Same backend and tensor-equal structure on the probed basis (all of it
/// for dense files), same r and module.
bool semantically_equal(const AlgebraFile& a, const AlgebraFile& b);

/// Names accepted by `example`.
std::vector<std::string> example_names();
/// Throws std::out_of_range for unknown names.
AlgebraFile example_file(const std::string& name);

}  // namespace epsalg::cli
