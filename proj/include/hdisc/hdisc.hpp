#pragma once

#include "hdisc/errors.hpp"
#include "hdisc/harmonic_series.hpp"
#include "hdisc/kernel.hpp"
#include "hdisc/quadrature.hpp"
#include "hdisc/space_ops.hpp"
