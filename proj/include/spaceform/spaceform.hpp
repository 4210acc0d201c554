#ifndef SPACEFORM_SPACEFORM_HPP
#define SPACEFORM_SPACEFORM_HPP

// Umbrella header for the whole library.

#include "spaceform/errors.hpp"
#include "spaceform/isoperimetric.hpp"
#include "spaceform/kappa.hpp"
#include "spaceform/polygon.hpp"
#include "spaceform/regular.hpp"
#include "spaceform/rng.hpp"
#include "spaceform/sampling.hpp"
#include "spaceform/surface.hpp"
#include "spaceform/triangle.hpp"
#include "spaceform/vec3.hpp"

#endif  // SPACEFORM_SPACEFORM_HPP
