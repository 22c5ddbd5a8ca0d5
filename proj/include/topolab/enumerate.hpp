#pragma once

#include <functional>
#include <vector>

#include "topolab/space.hpp"

namespace topolab {

// Yields every labeled topology on n points exactly once, in ascending
// order of the open-family encoding (the same order the naive powerset
// filter produces). Single consumer; parallel sweeps should materialize
// with all_spaces and partition by index range.
//
// Counts: 1, 4, 29, 355, 6942 for n = 1..5. Intended for n <= 5; n = 6 is
// allowed but expensive (209527 topologies). Throws CapacityExceeded
// outside [1, 6].
void enumerate_spaces(int n, const std::function<void(const Space&)>& yield);

std::vector<Space> all_spaces(int n);

}  // namespace topolab
