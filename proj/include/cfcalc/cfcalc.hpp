#pragma once

#include "cfcalc/calculus.hpp"
#include "cfcalc/complex.hpp"
#include "cfcalc/dmodule.hpp"
#include "cfcalc/errors.hpp"
#include "cfcalc/format.hpp"
#include "cfcalc/function.hpp"
#include "cfcalc/maps.hpp"
#include "cfcalc/models.hpp"
#include "cfcalc/scene.hpp"
#include "cfcalc/simplex.hpp"
#include "cfcalc/values.hpp"
#include "cfcalc/verify.hpp"
