#pragma once

// Umbrella header: optimal relative backward error analysis of one-step ODE
// methods on the linear test problem, region classification and contouring,
// and the brute-force optimality oracles.

#include "backerr/backward_error.hpp"
#include "backerr/contour.hpp"
#include "backerr/errors.hpp"
#include "backerr/field.hpp"
#include "backerr/io.hpp"
#include "backerr/methods.hpp"
#include "backerr/oracle.hpp"
#include "backerr/pade.hpp"
#include "backerr/polynomial.hpp"
#include "backerr/presets.hpp"
#include "backerr/rational.hpp"
#include "backerr/tableau.hpp"
#include "backerr/tau.hpp"
