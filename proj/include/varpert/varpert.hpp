#pragma once

#include "varpert/anharmonic.hpp"
#include "varpert/constants.hpp"
#include "varpert/errors.hpp"
#include "varpert/exact.hpp"
#include "varpert/helium.hpp"
#include "varpert/ho_matrix.hpp"
#include "varpert/model.hpp"
#include "varpert/polyexp.hpp"
#include "varpert/rkf45.hpp"
