#pragma once

#include "cdiff/rational.hpp"
#include "cdiff/triangle.hpp"
#include "cdiff/polynomial.hpp"
#include "cdiff/power_series.hpp"
#include "cdiff/central_factorials.hpp"
#include "cdiff/gcoeff_stern.hpp"
#include "cdiff/euler_numbers.hpp"
#include "cdiff/gen_euler.hpp"
#include "cdiff/verification.hpp"
#include "cdiff/identities.hpp"
#include "cdiff/table_io.hpp"
