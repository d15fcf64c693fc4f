#pragma once

#include "polysieve/rational.hpp"
#include "polysieve/arith.hpp"
#include "polysieve/polygonal.hpp"
#include "polysieve/localdensity.hpp"
#include "polysieve/eisenstein.hpp"
#include "polysieve/beta.hpp"
#include "polysieve/spinor.hpp"
#include "polysieve/sieve.hpp"
#include "polysieve/experiments.hpp"
