#pragma once

#include <vector>

#include "hypcap/diameter_set.hpp"
#include "hypcap/geodesic.hpp"
#include "hypcap/grid_set.hpp"
#include "hypcap/transform_report.hpp"

namespace hypcap {

// Polarization across an oriented geodesic gamma:
//   P(E) = ((E u R(E)) n closure(H+)) u ((E n R(E)) n H-).
//
// Two realizations: exact interval algebra on the diameter for geodesics
// orthogonal to it (the only case the diameter theory needs), and a discrete
// cell-pair version for grids and arbitrary geodesics.

// Exact polarization of a diameter set across the geodesic orthogonal to
// (-1,1) at foot point c (Euclidean).  With origin_positive (the default
// orientation used by all the monotonicity arguments) H+ = {u < u(c)}.
inline DiameterSet polarize_diameter(const DiameterSet& e, double c,
                                     bool origin_positive = true,
                                     TransformReport* report = nullptr) {
    if (!(c > -1.0 && c < 1.0))
        throw domain_error("polarize_diameter: foot point must lie in (-1,1)");
    const double u0 = u_of_x(c);
    const DiameterSet refl = e.reflected(u0);
    const DiameterSet uni = set_union(e, refl);
    const DiameterSet inter = set_intersection(e, refl);
    DiameterSet out = origin_positive
        ? set_union(uni.clipped_below(u0), inter.clipped_above(u0))
        : set_union(uni.clipped_above(u0), inter.clipped_below(u0));
    if (report) {
        report->transform = "polarize_diameter";
        report->parameters = {{"c", c}, {"origin_positive", origin_positive ? 1.0 : 0.0}};
        report->record("hyp_length", e.hyp_length(), out.hyp_length());
    }
    return out;
}

// Discrete polarization on a polar grid.  Cells are paired through reflected
// cell centers with nearest-cell snapping; only mutual pairs take part, so
// the occupied-cell count is conserved exactly.  Unpaired cells (snapping
// failures near the geodesic or the grid rim) are left unchanged.
inline GridSet polarize_grid(const GridSet& e, const Geodesic& gamma,
                             TransformReport* report = nullptr) {
    GridSet out = e;
    const int nr = e.n_r(), nt = e.n_theta();
    auto flat = [nt](int i, int j) { return i * nt + j; };
    for (int i = 0; i < nr; ++i) {
        for (int j = 0; j < nt; ++j) {
            const HypPoint z{e.cell_center(i, j)};
            if (gamma.side_value(z) <= side_tolerance) continue; // visit pairs from H+
            int ri, rj;
            if (!e.locate(gamma.reflect(z).value(), ri, rj)) continue;
            const HypPoint w{e.cell_center(ri, rj)};
            if (gamma.side_value(w) >= -side_tolerance) continue;
            int bi, bj;
            if (!e.locate(gamma.reflect(w).value(), bi, bj) || flat(bi, bj) != flat(i, j))
                continue; // not a mutual pair
            const bool p = e.occupied(i, j), q = e.occupied(ri, rj);
            if (p != q) { // exactly one occupied: occupancy moves to H+
                out.set(i, j, true);
                out.set(ri, rj, false);
            }
        }
    }
    if (report) {
        report->transform = "polarize_grid";
        report->record("occupied_cells", double(e.occupied_count()), double(out.occupied_count()));
    }
    return out;
}

} // namespace hypcap
