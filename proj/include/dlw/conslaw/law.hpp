#pragma once

#include "dlw/jet/poly.hpp"

#include <string>

namespace dlw {

enum class Family { physical, potential };

/// D_t density + D_x flux = 0 on solutions of the family's system.
struct ConservationLaw {
    JetPoly density;
    JetPoly flux;
    Family family = Family::physical;
    std::string label;
};

} // namespace dlw
