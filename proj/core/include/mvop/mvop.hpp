#pragma once

#include "mvop/errors.hpp"
#include "mvop/family.hpp"
#include "mvop/hyper_operator.hpp"
#include "mvop/hypergeom.hpp"
#include "mvop/matrix2.hpp"
#include "mvop/matrix_polynomial.hpp"
#include "mvop/mop.hpp"
#include "mvop/verify.hpp"
