#pragma once

#include "semideriv/axioms.hpp"
#include "semideriv/checks.hpp"
#include "semideriv/decompose.hpp"
#include "semideriv/errors.hpp"
#include "semideriv/mask.hpp"
#include "semideriv/matrix.hpp"
#include "semideriv/matrix_io.hpp"
#include "semideriv/oracle.hpp"
#include "semideriv/rational.hpp"
#include "semideriv/semiring.hpp"
#include "semideriv/shift.hpp"
