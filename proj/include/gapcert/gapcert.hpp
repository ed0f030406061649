#pragma once

#include "errors.hpp"
#include "exact_compare.hpp"
#include "factored.hpp"
#include "gaps.hpp"
#include "json_io.hpp"
#include "multigen.hpp"
#include "projgeom.hpp"
#include "semigroup.hpp"
#include "sequences.hpp"
