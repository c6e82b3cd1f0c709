#pragma once

#include <random>

#include "hart/rep.hpp"

namespace hart {

// Random module: a quotient of a sum of one or two projectives by the
// submodule generated by random elements or, on a coin flip, the submodule
// of a sum of injectives generated by random elements. Never zero.
Representation random_module(const AlgebraPtr& a, std::mt19937& rng);

}  // namespace hart
