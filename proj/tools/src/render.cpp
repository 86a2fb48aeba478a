#include "epsalg_cli/render.hpp"

#include <iomanip>
#include <sstream>

namespace epsalg::cli {

using ojson = nlohmann::ordered_json;

namespace {

ojson element_rows(const Element& x) {
  ojson out = ojson::array();
  for (const auto& [k, c] : x) out.push_back(ojson::array({k, epsalg::to_string(c)}));
  return out;
}

ojson tensor_rows(const TensorN& t) {
  ojson out = ojson::array();
  for (const auto& [k, c] : t) {
    ojson row = ojson::array();
    for (Index i : k) row.push_back(i);
    out.push_back(ojson::array({row, epsalg::to_string(c)}));
  }
  return out;
}

std::string tuple_text(const Witness& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.tuple.size(); ++i) {
    if (i) s += ", ";
    s += i < w.labels.size() ? w.labels[i] : std::to_string(w.tuple[i]);
  }
  return s + ")";
}

}  // namespace

ojson report_json(const Report& r) {
  ojson j;
  j["report"] = r.title();
  j["passed"] = r.passed();
  j["laws"] = ojson::array();
  for (const auto& l : r.laws()) {
    ojson lj;
    lj["law"] = l.law;
    lj["status"] = std::string(to_string(l.status));
    lj["checked"] = l.checked;
    lj["violations"] = l.violations;
    lj["unprobed"] = l.unprobed;
    lj["seconds"] = l.seconds;
    if (!l.note.empty()) lj["note"] = l.note;
    lj["witnesses"] = ojson::array();
    for (const auto& w : l.witnesses) {
      ojson wj;
      wj["tuple"] = w.tuple;
      if (!w.labels.empty()) wj["labels"] = w.labels;
      wj["residual"] = tensor_rows(w.residual);
      lj["witnesses"].push_back(wj);
    }
    j["laws"].push_back(lj);
  }
  return j;
}

std::string format_element(const Element& x, const Labeler& label) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : x) {
    const std::string name = label ? label(k) : "e" + std::to_string(k);
    if (!first) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += "-";
    first = false;
    const Scalar a = abs(c);
    if (a != 1) s += epsalg::to_string(a) + " ";
    s += name;
  }
  return s;
}

Emitter::Emitter(std::ostream& out, bool json, Labeler label)
    : out_(out), json_(json), label_(std::move(label)) {}

void Emitter::report(const Report& r) {
  std::lock_guard lock(mu_);
  ok_ = ok_ && r.passed();
  if (json_) {
    out_ << report_json(r).dump() << std::endl;
    return;
  }
  out_ << "== " << r.title() << (r.passed() ? "  [pass]" : "  [FAIL]") << "\n";
  for (const auto& l : r.laws()) {
    out_ << "  " << std::left << std::setw(34) << l.law << " " << std::setw(8)
         << (l.status == Status::fail ? "FAIL" : std::string(to_string(l.status))) << " checked " << l.checked;
    if (l.violations) out_ << ", violations " << l.violations;
    if (l.unprobed) out_ << ", unprobed " << l.unprobed;
    out_ << "\n";
    if (!l.note.empty()) out_ << "      " << l.note << "\n";
    for (const auto& w : l.witnesses) {
      std::ostringstream res;
      res << w.residual;
      out_ << "      at " << tuple_text(w) << ": residual " << res.str() << "\n";
    }
  }
  out_.flush();
}

void Emitter::table(const Table& t) {
  std::lock_guard lock(mu_);
  if (json_) {
    ojson j;
    j["table"] = t.title;
    j["rows"] = ojson::array();
    for (const auto& row : t.rows) {
      ojson rj;
      rj["args"] = row.args;
      rj["value"] = element_rows(row.value);
      j["rows"].push_back(rj);
    }
    out_ << j.dump() << std::endl;
    return;
  }
  out_ << "-- " << t.title << "\n";
  for (const auto& row : t.rows) {
    out_ << "  ";
    for (std::size_t i = 0; i < row.args.size(); ++i) {
      out_ << (i ? ", " : "") << (label_ ? label_(row.args[i]) : std::to_string(row.args[i]));
    }
    out_ << " -> " << format_element(row.value, label_) << "\n";
  }
  out_.flush();
}

void Emitter::note(const std::string& text) {
  std::lock_guard lock(mu_);
  if (json_) {
    out_ << ojson{{"note", text}}.dump() << std::endl;
  } else {
    out_ << text << std::endl;
  }
}

}  // namespace epsalg::cli
