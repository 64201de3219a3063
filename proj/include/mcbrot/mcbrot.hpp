#pragma once

// Multicomplex Multibrot toolkit: exact M(n) arithmetic, idempotent
// decomposition, escape-time membership, iterate-subspace classification,
// slice equivalence and voxel rendering of principal 3D slices.

#include "mcbrot/classifier.hpp"
#include "mcbrot/dynamics.hpp"
#include "mcbrot/equivalence.hpp"
#include "mcbrot/idempotent.hpp"
#include "mcbrot/literal.hpp"
#include "mcbrot/multicomplex.hpp"
#include "mcbrot/numeric.hpp"
#include "mcbrot/rng.hpp"
#include "mcbrot/unit.hpp"
#include "mcbrot/verify.hpp"
#include "mcbrot/voxel.hpp"
