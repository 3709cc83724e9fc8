#pragma once

// Random dense test instances and initialization points.

#include <cstdint>

#include "linsup/core.hpp"
#include "linsup/rng.hpp"

namespace linsup {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct GenSpec {
    std::size_t rows = 80;
    std::size_t cols = 100;
    Interval a_range{-1.0, 2.0};
    Interval c_range{-2.0, 3.0};
    // b = A*1 + slack*1, which puts the all-ones vector strictly inside M.
    double slack = 10.0;
    std::uint64_t seed = 0;

    void validate() const;
};

// Entries drawn on half-open intervals [lo, hi), A row-major first, then c.
Problem generate(const GenSpec& spec);

// Number of 10-fold escalations tried before giving up.
inline constexpr int kMaxEscalations = 64;

// AllTens: 10*1.  RandomEscalated: uniform [0,1)^J scaled by 10 until the
// proximity is nonzero.  Explicit: the user's point, unchecked beyond length.
Vector initial_point(const Problem& problem, const Initialization& init, CounterRng& rng);

}  // namespace linsup
