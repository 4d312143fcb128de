#pragma once

#include "qslice/error.hpp"
#include "qslice/ideals.hpp"
#include "qslice/parser.hpp"
#include "qslice/poly.hpp"
#include "qslice/quaternion.hpp"
#include "qslice/rational.hpp"
#include "qslice/split.hpp"
#include "qslice/verify.hpp"
#include "qslice/zeros.hpp"
