#pragma once

#include "chordal.hpp"
#include "forbidden.hpp"

namespace chordext {

/// Chordal and free of induced k-suns for every k >= 3 (Farber's
/// characterisation). Exponential in the worst case; intended for small graphs.
inline bool is_strongly_chordal(const Graph& g) { return is_chordal(g) && !find_sun(g); }

} // namespace chordext
