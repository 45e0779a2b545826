#pragma once

// Umbrella header: exact preradical calculus on type-A quiver
// representations over prime fields, with Galois connections from
// explicit adjoint pairs and lattice tooling.

#include "preradicals/adjunction.hpp"
#include "preradicals/field.hpp"
#include "preradicals/intervals.hpp"
#include "preradicals/json_io.hpp"
#include "preradicals/labels.hpp"
#include "preradicals/lattice.hpp"
#include "preradicals/limits.hpp"
#include "preradicals/matrix.hpp"
#include "preradicals/preradical.hpp"
#include "preradicals/quiver.hpp"
#include "preradicals/rep.hpp"
#include "preradicals/report.hpp"
#include "preradicals/subspace.hpp"
#include "preradicals/verify.hpp"
