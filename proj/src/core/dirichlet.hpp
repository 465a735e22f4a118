#ifndef PLANARCALC_DIRICHLET_HPP
#define PLANARCALC_DIRICHLET_HPP

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "disk_harmonics.hpp"
#include "geometry.hpp"

namespace planarcalc {

/** Boundary data as a plane function; solvers take its trace. */
using boundary_fn = std::function<cplx(cplx)>;

struct solve_options {
    int n_max = 4096;
    double tol = 1e-6;
    int samples = 1024;   // per-circle sample count (power of two)
    bool seam_lift = true;  // subtract a harmonic lift when data misses the seam condition
};

/** Low-degree harmonic polynomial; the seam lift is drawn from this family.
 * Basis: 1, x, y, x^2 - y^2, xy, x^3 - 3xy^2, 3x^2 y - y^3. */
struct harmonic_poly {
    static constexpr int basis_size = 7;
    std::array<cplx, basis_size> coef{};
    cplx operator()(cplx z) const;
    bool nonzero() const;
    static std::array<double, basis_size> basis_at(cplx z);
};

/** Result of a Dirichlet solve on a disk union: per-circle Cesaro-averaged
 * boundary data plus the lift. Evaluation picks the most interior covering
 * disk; pieces agree on overlaps up to the recorded discrepancy. */
class harmonic_solution {
  public:
    harmonic_solution(compact_set domain, std::vector<disk> circles,
                      std::vector<std::vector<cplx>> data, harmonic_poly lift,
                      int iterations, double overlap_discrepancy, double sup_norm);

    cplx evaluate(cplx z) const;
    const compact_set& domain() const { return domain_; }
    int iterations_used() const { return iterations_; }
    double overlap_discrepancy() const { return overlap_discrepancy_; }
    double sup_norm() const { return sup_norm_; }
    /** Solution trace on each piece circle (exchanged data plus lift). */
    std::vector<boundary_samples> boundary_trace() const;

  private:
    compact_set domain_;
    std::vector<disk> circles_;
    std::vector<std::vector<cplx>> data_;  // per circle, M samples
    harmonic_poly lift_;
    int iterations_ = 0;
    double overlap_discrepancy_ = 0;
    double sup_norm_ = 0;
};

/** Per-iteration record of the alternating exchange, for bound checking:
 * max over the overlap of |cesaro_piece1 - cesaro_piece2| after N sweeps,
 * and the sup norm of each generation's exchanged data. */
struct alternating_trace {
    std::vector<double> overlap_discrepancy;  // index N-1
    std::vector<double> data_sup_norm;        // index N-1
};

/** Alternating two-piece (or cyclic multi-piece) harmonic extension on a
 * union of closed disks with Cesaro averaging of the exchanged boundary
 * data. Data must vanish at circle-circle seam corners unless the lift is
 * enabled. The returned solution is always the Cesaro mean. */
harmonic_solution alternating_solve(const compact_set& domain, const boundary_fn& f,
                                    const solve_options& opts = {},
                                    alternating_trace* trace = nullptr);

/** Splits data into even and odd parts under reflection at the real axis
 * and extends each by the transcription iteration (odd part with sign
 * flip); domain must be symmetric under the reflection. */
harmonic_solution symmetrization_solve(const compact_set& domain, const boundary_fn& f,
                                       const solve_options& opts = {});

/** Dispatch: single disk goes to the Poisson integral, disk unions to the
 * alternating solver. */
harmonic_solution solve_dirichlet(const compact_set& domain, const boundary_fn& f,
                                  const solve_options& opts = {},
                                  alternating_trace* trace = nullptr);

/** Seam corners delta X_i intersect delta X_j of a disk-union domain. */
std::vector<cplx> seam_corners(const std::vector<disk>& disks);

/** Least-norm harmonic interpolant of the values at the given points. */
harmonic_poly fit_harmonic_lift(const std::vector<cplx>& points,
                                const std::vector<cplx>& values);

}  // namespace planarcalc

#endif
