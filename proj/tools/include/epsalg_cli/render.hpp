#pragma once

#include <functional>
#include <mutex>
#include <ostream>
#include <string>

#include "epsalg/report.hpp"
#include "json.hpp"

namespace epsalg::cli {

using Labeler = std::function<std::string(Index)>;

nlohmann::ordered_json report_json(const Report& r);
std::string format_element(const Element& x, const Labeler& label);

/// A named table of values of an operation on basis tuples.
struct Table {
  struct Row {
    std::vector<Index> args;
    Element value;
  };
  std::string title;
  std::vector<Row> rows;
};

/// Serializes reports and tables to one stream as they arrive: JSON lines
/// with --json, indented text otherwise.
class Emitter {
 public:
  Emitter(std::ostream& out, bool json, Labeler label = {});

  void report(const Report& r);
  void table(const Table& t);
  void note(const std::string& text);
  /// true while every report so far passed
  bool ok() const { return ok_; }

 private:
  std::ostream& out_;
  bool json_;
  Labeler label_;
  bool ok_ = true;
  std::mutex mu_;
};

}  // namespace epsalg::cli
