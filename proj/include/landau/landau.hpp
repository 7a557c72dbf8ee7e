#ifndef LANDAU_LANDAU_HPP
#define LANDAU_LANDAU_HPP

#include "landau/critical_field.hpp"
#include "landau/errors.hpp"
#include "landau/groundstate.hpp"
#include "landau/potentials.hpp"
#include "landau/sturm_liouville.hpp"
#include "landau/trial_bounds.hpp"
#include "landau/tridiagonal.hpp"
#include "landau/units.hpp"

#endif  // LANDAU_LANDAU_HPP
