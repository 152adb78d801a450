#pragma once

#include <cstdint>

#include "nbe/ncalg/presentation.hpp"

namespace oracle {

/// Reduces a free element by repeatedly applying a single rewrite rule at a
/// randomly chosen position of a randomly chosen reducible word. Knows
/// nothing about the engine's memoized left-multiplication strategy.
nbe::NCPoly reduce_random_order(const nbe::FreeElement& x, const nbe::AlgebraPresentation& P,
                                std::uint64_t seed);

}  // namespace oracle
