#ifndef SEJC_RANDOMGEN_HPP
#define SEJC_RANDOMGEN_HPP

#include "sejc/types.hpp"
#include "sejc/value.hpp"

#include <random>

namespace sejc {

// A random value inhabiting the given type; depth bounds nesting of
// conses. Used for directive validation sampling and differential
// fuzzing. The distribution favors small numbers and short structures
// but occasionally produces big integers.
Value random_value_of_type(SrcType t, std::mt19937& rng, int depth = 3);

} // namespace sejc

#endif
