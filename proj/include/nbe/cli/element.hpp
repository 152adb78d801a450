#pragma once

#include <string_view>

#include "nbe/ncalg/pbw_ring.hpp"

namespace nbe::cli {

/// Parses sums of products like "2*g1^2*g2 - g3 + 1" or "(u + v)^2" in the
/// presentation's generator names. Products need an explicit '*'. Negative
/// powers are accepted only for the invertible generator. Throws ConfigError
/// with the column of the offending character.
NCPoly parse_element(std::string_view text, PbwRing& ring);

}  // namespace nbe::cli
