#pragma once

// Umbrella header: exact arithmetic, pythagorean pairs, curve group law,
// witness derivation, bounded search, and the built-in verification suite.

#include "pythapotent/curve.hpp"
#include "pythapotent/derivation.hpp"
#include "pythapotent/exact.hpp"
#include "pythapotent/fixtures.hpp"
#include "pythapotent/pythagorean.hpp"
#include "pythapotent/reproduce.hpp"
#include "pythapotent/search.hpp"
