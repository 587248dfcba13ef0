#pragma once

// Seeded random draws of hyperfield elements. The distributions deliberately put
// mass on small, structured values (integer lengths, multiples of pi/4, repeated
// tropical magnitudes) so that boundary cases such as ties and antipodal angles
// are exercised, not just generic positions.

#include <cstdint>
#include <random>

#include "hfm/hyperfield.hpp"

namespace hfm {

using Rng = std::mt19937_64;

Element random_element(const Hyperfield& field, Rng& rng, double zero_probability = 0.2);
Element random_unit(const Hyperfield& field, Rng& rng);

}  // namespace hfm
