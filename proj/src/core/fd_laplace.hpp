#ifndef PLANARCALC_FD_LAPLACE_HPP
#define PLANARCALC_FD_LAPLACE_HPP

#include <vector>

#include "dirichlet.hpp"
#include "geometry.hpp"

namespace planarcalc {

/** Finite-difference solution on a regular grid clipped to the domain.
 * Nodes outside the domain hold NaN. */
struct fd_grid {
    double x0 = 0, y0 = 0, h = 0;
    int nx = 0, ny = 0;
    std::vector<double> values;          // ny * nx, row-major
    std::vector<std::uint8_t> interior;  // 1 for solved unknowns
    double residual = 0;                 // scaled linear-system residual

    double value(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }
    cplx node(int i, int j) const { return {x0 + i * h, y0 + j * h}; }
    /** Bilinear interpolation using interior nodes only; NaN off-domain. */
    double sample(cplx z) const;
};

/** 5-point Laplace solve with legs cut at the boundary (second order);
 * Dirichlet values taken from f at the cut points. Factors once and solves
 * all right-hand sides, one per data function. */
std::vector<fd_grid> fd_laplace_solve_many(const compact_set& domain,
                                           const std::vector<boundary_fn>& fs, double h);

fd_grid fd_laplace_solve(const compact_set& domain, const boundary_fn& f, double h);

}  // namespace planarcalc

#endif
