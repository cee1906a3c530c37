#pragma once

#include "cantor/ladder.hpp"

namespace fixtures {

inline cantor::Ladder classical() { return cantor::Ladder({{0.0, 1.0 / 3}, {2.0 / 3, 1.0}}, {0.5, 0.5}); }

inline cantor::Ladder cantor3() {
    return cantor::Ladder({{0.0, 1.0 / 9}, {2.0 / 9, 1.0 / 3}, {2.0 / 3, 1.0}}, {0.25, 0.25, 0.5});
}

inline cantor::Ladder rho13_23() { return cantor::Ladder({{0.0, 1.0 / 3}, {2.0 / 3, 1.0}}, {1.0 / 3, 2.0 / 3}); }

// widths 1/4, 1/4, 1/2
inline cantor::Ladder asymmetric() { return cantor::Ladder({{0.0, 0.25}, {0.5, 1.0}}, {1.0 / 3, 2.0 / 3}); }

inline cantor::Ladder degenerate() { return cantor::Ladder({{0.0, 1.0}}, {1.0}); }

inline cantor::Ladder regular3() { return cantor::Ladder({{0.0, 0.2}, {0.4, 0.6}, {0.8, 1.0}}, {1.0 / 3, 1.0 / 3, 1.0 / 3}); }

// half weights with unequal widths 0.2, 0.3, 0.5
inline cantor::Ladder uneven_half() { return cantor::Ladder({{0.0, 0.2}, {0.5, 1.0}}, {0.5, 0.5}); }

// rho_m is the strict minimum
inline cantor::Ladder descending3() {
    return cantor::Ladder({{0.0, 0.3}, {0.4, 0.6}, {0.75, 1.0}}, {0.4, 0.35, 0.25});
}

}  // namespace fixtures
