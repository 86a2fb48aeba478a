#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "epsalg/tensor.hpp"

namespace epsalg {

enum class Status { pass, fail, unprobed };

std::string_view to_string(Status s);

struct Witness {
  std::vector<Index> tuple;
  TensorN residual;
  /// Human-readable names for the tuple entries, when the checker knows them.
  std::vector<std::string> labels;
};

struct LawResult {
  std::string law;
  Status status = Status::pass;
  std::vector<Witness> witnesses;  // first entry is the first violation in tuple order
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::size_t unprobed = 0;
  double seconds = 0;
  std::string note;

  bool ok() const { return status != Status::fail; }
};

LawResult passed_law(std::string law, std::string note = {});
LawResult failed_law(std::string law, Witness w, std::string note = {});

class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  void add(LawResult law) { laws_.push_back(std::move(law)); }
  void append(const Report& other);

  const std::string& title() const { return title_; }
  const std::vector<LawResult>& laws() const { return laws_; }
  const LawResult* find(std::string_view law) const;
  bool passed() const;
  /// Status of the named law; throws std::out_of_range if absent.
  Status status(std::string_view law) const;

 private:
  std::string title_;
  std::vector<LawResult> laws_;
};

/// Thrown when a precondition law fails; carries the failing report.
class LawViolation : public std::runtime_error {
 public:
  LawViolation(const std::string& what, Report report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// Throws LawViolation with `what` unless the report passed.
void require(const Report& report, const std::string& what);

struct CheckOptions {
  unsigned threads = 1;
  std::size_t max_witnesses = 4;
};

/// Residual of one law instance: nullopt means the instance could not be
/// probed exactly (an intermediate left the probe window); zero means it holds.
using TupleCheck = std::function<std::optional<TensorN>(std::span<const Index>)>;
using TupleLabeler = std::function<std::vector<std::string>(std::span<const Index>)>;

/// Evaluates `check` on every tuple of the cartesian product of `axes`, in
/// lexicographic order. Witnesses are collected in that order regardless of
/// how many threads run.
LawResult run_law(std::string law, const std::vector<std::vector<Index>>& axes,
                  const TupleCheck& check, const CheckOptions& opts = {},
                  const TupleLabeler& labeler = {});

}  // namespace epsalg
