#ifndef PLANARCALC_DISK_HARMONICS_HPP
#define PLANARCALC_DISK_HARMONICS_HPP

#include <functional>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace planarcalc {

/** Complex-valued function sampled at M equispaced angles of a circle,
 * theta_j = 2 pi j / M. M must be a power of two, at least 4. */
class boundary_samples {
  public:
    boundary_samples(disk circle, std::vector<cplx> values);

    const disk& circle() const { return circle_; }
    const std::vector<cplx>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double angle(std::size_t j) const;
    cplx point(std::size_t j) const;

    bool is_real(double tol = 1e-12) const;
    double max_abs() const;
    cplx mean() const;

    /** Value at an arbitrary angle by trigonometric interpolation. */
    cplx interpolate(double theta) const;

  private:
    disk circle_;
    std::vector<cplx> values_;
};

/** Fourier-split boundary data u = f + conj(g): holo holds a_n for
 * n = 0..M/2 (f coefficients, Nyquist included), antiholo holds b_n for
 * n = 1..M/2 (g coefficients; b_{M/2} is structurally zero). On the circle,
 * u(theta) = sum a_n e^{i n theta} + sum conj(b_n) e^{-i n theta}. */
struct fourier_split {
    std::vector<cplx> holo;      // index n = 0..M/2
    std::vector<cplx> antiholo;  // index n-1 for n = 1..M/2
};

/** Poisson integral of the sampled data at an interior point, by the
 * trapezoidal rule with the discrete kernel normalized to unit mass
 * (positive weights, so the maximum principle holds exactly). */
cplx poisson_eval(const boundary_samples& bd, cplx z);

/** Normalized Poisson weight row for evaluating circle data at z. */
std::vector<double> poisson_weights(const disk& circle, std::size_t m, cplx z);

/** Boundary trace of the harmonic conjugate, normalized to vanish at the
 * disk center (zero boundary mean); circle Hilbert transform on modes. */
boundary_samples conjugate_harmonic(const boundary_samples& bd);

fourier_split fourier_split_of(const boundary_samples& bd);

/** Reconstructs samples from a split (inverse of fourier_split_of). */
std::vector<cplx> split_reconstruct(const fourier_split& split, std::size_t m);

/** Completes data given on the closed upper half-circle (indices 0..M/2)
 * to hermitian-symmetric full-circle data, u(conj point) = conj(u). */
boundary_samples schwarz_reflect(const disk& circle, const std::vector<cplx>& upper_values);

/** Named boundary data generators used by the CLI: const, cos, sin, abs_z,
 * super_abs; all are restrictions of fixed plane functions. */
cplx generator_value(const std::string& name, cplx z);
boundary_samples generate_samples(const std::string& name, const disk& circle, std::size_t m);

}  // namespace planarcalc

#endif
