#pragma once

// Umbrella header: conformal capacity of compact sets in the hyperbolic
// unit disk, with exact elliptic-integral formulas for the symmetric
// families, Fekete-point estimation for everything else, the set
// transformations (polarization, symmetrizations, contraction, dispersion),
// and the inequality-verification harness.

#include "hypcap/boundary_chart.hpp"
#include "hypcap/capacity.hpp"
#include "hypcap/closed_forms.hpp"
#include "hypcap/diameter_set.hpp"
#include "hypcap/disk.hpp"
#include "hypcap/elliptic.hpp"
#include "hypcap/errors.hpp"
#include "hypcap/fekete.hpp"
#include "hypcap/fekete_grid.hpp"
#include "hypcap/geodesic.hpp"
#include "hypcap/grid_set.hpp"
#include "hypcap/hedgehog.hpp"
#include "hypcap/mobius.hpp"
#include "hypcap/motion.hpp"
#include "hypcap/polarize.hpp"
#include "hypcap/symmetrize.hpp"
#include "hypcap/transform_report.hpp"
#include "hypcap/verify.hpp"
