#pragma once

// Umbrella header.

#include "opcurve/analyze.hpp"
#include "opcurve/classical.hpp"
#include "opcurve/errors.hpp"
#include "opcurve/extended_nat.hpp"
#include "opcurve/geometry.hpp"
#include "opcurve/groebner.hpp"
#include "opcurve/instance_gen.hpp"
#include "opcurve/io.hpp"
#include "opcurve/madic.hpp"
#include "opcurve/matrix_polynomial.hpp"
#include "opcurve/monomial.hpp"
#include "opcurve/multipoly.hpp"
#include "opcurve/projective.hpp"
#include "opcurve/rational.hpp"
#include "opcurve/rational_matrix.hpp"
#include "opcurve/unipoly.hpp"
