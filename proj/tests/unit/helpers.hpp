#pragma once

#include <sstream>
#include <string>

#include "doctest.h"
#include "epsalg/report.hpp"
#include "epsalg/tensor.hpp"

namespace testing {

inline std::string describe(const epsalg::Report& r) {
  std::ostringstream os;
  os << r.title() << ":";
  for (const auto& law : r.laws()) {
    os << " " << law.law << "=" << epsalg::to_string(law.status);
    if (!law.witnesses.empty()) {
      os << " [";
      for (auto i : law.witnesses.front().tuple) os << i << " ";
      os << "-> " << law.witnesses.front().residual << "]";
    }
  }
  return os.str();
}

inline epsalg::Element el(std::initializer_list<std::pair<epsalg::Index, long>> terms) {
  epsalg::Element x;
  for (auto [i, c] : terms) x.add(i, c);
  return x;
}

}  // namespace testing

#define CHECK_PASSES(report)                          \
  do {                                                \
    const auto& r_ = (report);                        \
    INFO(testing::describe(r_));                      \
    CHECK(r_.passed());                               \
  } while (0)

#define CHECK_FAILS(report)                           \
  do {                                                \
    const auto& r_ = (report);                        \
    INFO(testing::describe(r_));                      \
    CHECK_FALSE(r_.passed());                         \
  } while (0)
