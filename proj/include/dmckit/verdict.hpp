#pragma once

#include "dmckit/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace dmckit {

// A violated inequality lhs >= rhs at the pair (x, y).
struct Witness {
  LatticePoint x, y;
  ExtValue lhs, rhs;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  std::uint64_t pairs_checked = 0;

  static Verdict fail(Witness w, std::uint64_t pairs) { return Verdict{false, std::move(w), pairs}; }
  static Verdict pass(std::uint64_t pairs) { return Verdict{true, std::nullopt, pairs}; }
};

// Worker count from DMC_KIT_JOBS, default 1.
inline unsigned default_jobs() {
  const char* env = std::getenv("DMC_KIT_JOBS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw Error(std::string("DMC_KIT_JOBS must be a positive integer, got '") + env + "'");
  return static_cast<unsigned>(v);
}

struct RowOutcome {
  std::uint64_t pairs = 0;
  std::optional<Witness> witness;
};

// Runs row(0..rows-1) and returns the verdict of the sequential scan that stops
// at the first row with a witness. With jobs > 1 rows are handed out in index
// order and rows past the earliest known witness are skipped, so the result is
// identical to the sequential one.
template <class Row>
Verdict scan_rows(std::size_t rows, unsigned jobs, Row&& row) {
  if (jobs <= 1 || rows < 2) {
    std::uint64_t pairs = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      RowOutcome r = row(i);
      pairs += r.pairs;
      if (r.witness) return Verdict::fail(std::move(*r.witness), pairs);
    }
    return Verdict::pass(pairs);
  }
  std::vector<RowOutcome> out(rows);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> stop{rows};
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= rows || i > stop.load()) return;
      out[i] = row(i);
      if (out[i].witness) {
        std::size_t cur = stop.load();
        while (i < cur && !stop.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, rows); ++t) pool.emplace_back(work);
  }
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    pairs += out[i].pairs;
    if (out[i].witness) return Verdict::fail(std::move(*out[i].witness), pairs);
  }
  return Verdict::pass(pairs);
}

// Applies fn to every index in [0, count) across workers.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, count); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
    });
}

}  // namespace dmckit
