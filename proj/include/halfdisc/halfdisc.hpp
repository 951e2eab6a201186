#pragma once

#include "halfdisc/exact/errors.hpp"
#include "halfdisc/exact/integer.hpp"
#include "halfdisc/exact/rational.hpp"
#include "halfdisc/exact/poly.hpp"
#include "halfdisc/exact/resultant.hpp"
#include "halfdisc/exact/quotient_ring.hpp"
#include "halfdisc/exact/mod_poly.hpp"
#include "halfdisc/exact/factor.hpp"
#include "halfdisc/curve/curve.hpp"
#include "halfdisc/curve/reduction.hpp"
#include "halfdisc/torsion/division_poly.hpp"
#include "halfdisc/torsion/torsion_divisor.hpp"
#include "halfdisc/local/intersection.hpp"
#include "halfdisc/fiber/fiber_model.hpp"
#include "halfdisc/arch/roots.hpp"
#include "halfdisc/arch/periods.hpp"
#include "halfdisc/arch/theta.hpp"
#include "halfdisc/arch/torsion_sum.hpp"
#include "halfdisc/arch/mahler.hpp"
#include "halfdisc/arch/global.hpp"
#include "halfdisc/io/format.hpp"
#include "halfdisc/util/parallel.hpp"
