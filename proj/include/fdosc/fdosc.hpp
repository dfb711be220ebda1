#pragma once

// Everything: special functions, operator algebra, the two oscillator models,
// plane waves and the verification harness.

#include "fdosc/analytic_function.hpp"
#include "fdosc/difference_operator.hpp"
#include "fdosc/differential_operator.hpp"
#include "fdosc/errors.hpp"
#include "fdosc/harness/report.hpp"
#include "fdosc/harness/suite.hpp"
#include "fdosc/harness/tables.hpp"
#include "fdosc/nonrel.hpp"
#include "fdosc/planewave.hpp"
#include "fdosc/rel.hpp"
#include "fdosc/sample_grid.hpp"
#include "fdosc/specfun.hpp"
#include "fdosc/taylor.hpp"
