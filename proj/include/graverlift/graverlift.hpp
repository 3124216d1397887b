#pragma once

// Umbrella header: exact integer linear algebra, block-matrix assembly,
// Graver bases, primitive relations, the lifting construction and the
// lower-bound formulas, plus file formats.

#include "graverlift/errors.hpp"
#include "graverlift/exact.hpp"
#include "graverlift/graver.hpp"
#include "graverlift/io.hpp"
#include "graverlift/lift.hpp"
#include "graverlift/nfold.hpp"
#include "graverlift/relation.hpp"
