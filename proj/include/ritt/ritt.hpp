#pragma once

// Umbrella header.

#include "ritt/error.hpp"
#include "ritt/numfield.hpp"
#include "ritt/poly.hpp"
#include "ritt/factor.hpp"
#include "ritt/ratfunc.hpp"
#include "ritt/moebius.hpp"
#include "ritt/decompose.hpp"
#include "ritt/galois.hpp"
#include "ritt/format.hpp"
#include "ritt/parse.hpp"
#include "ritt/casebook.hpp"
