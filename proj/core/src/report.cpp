#include "epsalg/report.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace epsalg {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::unprobed:
      return "unprobed";
  }
  return "?";
}

LawResult passed_law(std::string law, std::string note) {
  LawResult r;
  r.law = std::move(law);
  r.checked = 1;
  r.note = std::move(note);
  return r;
}

LawResult failed_law(std::string law, Witness w, std::string note) {
  LawResult r;
  r.law = std::move(law);
  r.status = Status::fail;
  r.checked = 1;
  r.violations = 1;
  r.witnesses.push_back(std::move(w));
  r.note = std::move(note);
  return r;
}

void Report::append(const Report& other) {
  laws_.insert(laws_.end(), other.laws_.begin(), other.laws_.end());
}

const LawResult* Report::find(std::string_view law) const {
  for (const auto& l : laws_) {
    if (l.law == law) return &l;
  }
  return nullptr;
}

bool Report::passed() const {
  return std::all_of(laws_.begin(), laws_.end(), [](const LawResult& l) { return l.ok(); });
}

void require(const Report& report, const std::string& what) {
  if (!report.passed()) throw LawViolation(what, report);
}

Status Report::status(std::string_view law) const {
  const LawResult* l = find(law);
  if (!l) throw std::out_of_range("no law named " + std::string(law) + " in report");
  return l->status;
}

namespace {

struct Chunk {
  std::size_t checked = 0, violations = 0, unprobed = 0;
  std::vector<Witness> witnesses;
};

void decode(std::size_t flat, const std::vector<std::vector<Index>>& axes, std::vector<Index>& tuple) {
  for (std::size_t a = axes.size(); a-- > 0;) {
    const std::size_t len = axes[a].size();
    tuple[a] = axes[a][flat % len];
    flat /= len;
  }
}

void run_chunk(std::size_t begin, std::size_t end, const std::vector<std::vector<Index>>& axes,
               const TupleCheck& check, const CheckOptions& opts, const TupleLabeler& labeler,
               Chunk& out) {
  std::vector<Index> tuple(axes.size());
  for (std::size_t flat = begin; flat < end; ++flat) {
    decode(flat, axes, tuple);
    std::optional<TensorN> residual = check(tuple);
    if (!residual) {
      ++out.unprobed;
      continue;
    }
    ++out.checked;
    if (residual->is_zero()) continue;
    ++out.violations;
    if (out.witnesses.size() < opts.max_witnesses) {
      Witness w{tuple, std::move(*residual), {}};
      if (labeler) w.labels = labeler(tuple);
      out.witnesses.push_back(std::move(w));
    }
  }
}

}  // namespace

LawResult run_law(std::string law, const std::vector<std::vector<Index>>& axes,
                  const TupleCheck& check, const CheckOptions& opts, const TupleLabeler& labeler) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t total = 1;
  for (const auto& axis : axes) total *= axis.size();

  const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(opts.threads, total / 64 + 1));
  std::vector<Chunk> chunks(threads);
  if (threads == 1) {
    run_chunk(0, total, axes, check, opts, labeler, chunks[0]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t step = (total + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t b = std::min(total, t * step);
      const std::size_t e = std::min(total, b + step);
      pool.emplace_back([&, b, e, t] { run_chunk(b, e, axes, check, opts, labeler, chunks[t]); });
    }
    for (auto& th : pool) th.join();
  }

  LawResult r;
  r.law = std::move(law);
  for (auto& c : chunks) {
    r.checked += c.checked;
    r.violations += c.violations;
    r.unprobed += c.unprobed;
    for (auto& w : c.witnesses) {
      if (r.witnesses.size() < opts.max_witnesses) r.witnesses.push_back(std::move(w));
    }
  }
  if (r.violations > 0) {
    r.status = Status::fail;
  } else if (r.checked == 0 && r.unprobed > 0) {
    r.status = Status::unprobed;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace epsalg
