#pragma once

#include <cstdint>

namespace peakdec {

/// Elementary-operation tallies used to check the per-peak linear cost.
/// Every routine that accepts an `OpCounters*` treats nullptr as "don't count".
struct OpCounters {
  std::uint64_t isotonic_merges = 0;
  std::uint64_t detector_window_evals = 0;
  std::uint64_t subtraction_bin_updates = 0;

  std::uint64_t total() const {
    return isotonic_merges + detector_window_evals + subtraction_bin_updates;
  }
};

}  // namespace peakdec
