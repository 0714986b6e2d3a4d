#pragma once

#include <cstdint>
#include <type_traits>
#include <utility>

#include "rsd/error.hpp"

namespace rsd {

/// A sequence that is non-decreasing up to a peak and non-increasing after it
/// on [lo, hi], where any two equal values bracket a maximiser. Concave
/// sequences and log-concave positive sequences qualify.
template <class Eval>
struct UnimodalSequence {
  Eval eval;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

template <class Eval>
UnimodalSequence(Eval, std::int64_t, std::int64_t) -> UnimodalSequence<Eval>;

template <class T>
struct TernaryResult {
  std::int64_t index = 0;
  T value{};
  std::uint64_t rounds = 0;
  std::uint64_t evaluations = 0;
};

/// Maximum of a unimodal sequence. Values only need operator<. Narrows with
/// two probes per round, then sweeps the last four or fewer indices and returns
/// the smallest index attaining the maximum among them.
template <class Eval>
auto ternary_search_max(const UnimodalSequence<Eval>& seq)
    -> TernaryResult<std::decay_t<std::invoke_result_t<const Eval&, std::int64_t>>> {
  using Value = std::decay_t<std::invoke_result_t<const Eval&, std::int64_t>>;
  if (seq.hi < seq.lo) throw Error(Errc::EmptyRange, "ccs", "ternary search over an empty range");

  TernaryResult<Value> out;
  std::int64_t lo = seq.lo;
  std::int64_t hi = seq.hi;
  while (hi - lo > 3) {
    const std::int64_t third = (hi - lo) / 3;
    const std::int64_t m1 = lo + third;
    const std::int64_t m2 = hi - third;
    const Value v1 = seq.eval(m1);
    const Value v2 = seq.eval(m2);
    out.evaluations += 2;
    ++out.rounds;
    if (v1 < v2) {
      lo = m1 + 1;
    } else if (v2 < v1) {
      hi = m2 - 1;
    } else {
      lo = m1;
      hi = m2;
    }
  }
  out.index = lo;
  out.value = seq.eval(lo);
  ++out.evaluations;
  for (std::int64_t k = lo + 1; k <= hi; ++k) {
    Value v = seq.eval(k);
    ++out.evaluations;
    if (out.value < v) {
      out.index = k;
      out.value = std::move(v);
    }
  }
  return out;
}

}  // namespace rsd
