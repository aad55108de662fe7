#pragma once

// Band reduction by fill-free Gaussian row operations: heptadiagonal to
// pentadiagonal and pentadiagonal to tridiagonal.
//
// Sweep 1 walks upward and clears offset +w of row i using row i+1; sweep 2
// walks downward and clears offset -w of row i using row i-1. Each update
// stays inside the target row's band. Every rational +, -, *, / executed is
// counted; an elimination whose target entry is already zero is skipped and
// costs nothing.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "symband/band.hpp"

namespace symband {

struct RowOp {
    int sweep = 0;               // 1 clears +w, 2 clears -w
    std::size_t target = 0;      // 0-based row updated
    std::size_t pivot = 0;       // 0-based row subtracted
    Rational multiplier;
};

struct ReductionReport {
    ExactSystem reduced;
    int w_from = 0;
    int w_to = 0;
    std::size_t n = 0;
    std::uint64_t ops_counted = 0;
    long long reference_ops = 0;  // reference count for the same reduction
    std::vector<RowOp> row_ops;   // in execution order
};

/// Reference operation counts: 35N - 122 for HD -> PD, 23N - 52 for PD -> TD.
long long reference_ops(int w_from, std::size_t n);

/// One step, w -> w - 1, for w in {2, 3}. Throws SizeError (n < 2w + 2),
/// ReductionPivotZero, or ShapeError for other bandwidths.
ReductionReport reduce_band(const ExactSystem& sys);

/// Repeated reduce_band until the half-bandwidth is target_w; counts summed.
ReductionReport reduce_chain(const ExactSystem& sys, int target_w);

}  // namespace symband
