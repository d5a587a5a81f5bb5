#pragma once

// Umbrella header for the mvharm library: exact Fischer decomposition of
// polynomials in several vector variables, the invariant operator algebra,
// harmonic and simplicial bases, and generalized-Verma diagnostics.

#include "mvharm/fischer.hpp"
#include "mvharm/harmonics.hpp"
#include "mvharm/linalg.hpp"
#include "mvharm/parallel.hpp"
#include "mvharm/partitions.hpp"
#include "mvharm/polynomial.hpp"
#include "mvharm/rational.hpp"
#include "mvharm/verma.hpp"
#include "mvharm/weyl.hpp"
