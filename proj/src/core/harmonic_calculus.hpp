#ifndef PLANARCALC_HARMONIC_CALCULUS_HPP
#define PLANARCALC_HARMONIC_CALCULUS_HPP

#include <optional>
#include <utility>

#include "calculus.hpp"
#include "disk_harmonics.hpp"

namespace planarcalc {

/** Matrix together with a grading symmetry gamma (unitary, gamma^2 = I). */
struct graded_matrix {
    cmatrix x;
    cmatrix gamma;
    graded_matrix(cmatrix x_, cmatrix gamma_);
};

/** Even/odd parts x0 = (x + gamma x gamma)/2, x1 = (x - gamma x gamma)/2. */
std::pair<cmatrix, cmatrix> graded_parts(const graded_matrix& gx);

/** Continuous boundary symbol on the circle |z| = radius (centered at 0),
 * carried as samples plus their holomorphic/antiholomorphic split. */
class harmonic_symbol {
  public:
    harmonic_symbol(double radius, std::vector<cplx> samples);

    double radius() const { return radius_; }
    const boundary_samples& boundary() const { return boundary_; }
    const fourier_split& split() const { return split_; }
    std::size_t modes() const { return boundary_.size(); }

    /** Band-limited value at angle theta (the represented symbol). */
    cplx value_at_angle(double theta) const;

  private:
    double radius_;
    boundary_samples boundary_;
    fourier_split split_;
};

/** Symbol of the superpositive absolute value on a circle of the given
 * radius: r (max(|cos t|,|sin t|) + i sign(sin t) min(|cos t|,|sin t|)).
 * Continuous; imaginary part vanishes on the real axis. */
harmonic_symbol super_abs_symbol(double radius, std::size_t modes = (1u << 18));

/** Constant-modulus symbol u == radius (the ordinary absolute value of the
 * identity function restricted to the circle). */
harmonic_symbol const_abs_symbol(double radius, std::size_t modes = 64);

harmonic_symbol symbol_from_function(double radius, const std::function<cplx(cplx)>& u,
                                     std::size_t modes);

struct harmonic_calc_report {
    cmatrix result;
    std::size_t modes_used = 0;     // series terms actually summed per part
    double truncation_bound = 0;    // bound on the dropped tail
};

/** Unique positive extension of the holomorphic calculus to continuous
 * boundary symbols: u = f + conj(g) maps to f(x) + g(x)^*, each part summed
 * as a power series in x / radius with the split coefficients. Requires a
 * *-normal matrix unless waive_normality is set, and spectral radius within
 * the symbol circle. */
harmonic_calc_report harmonic_calc(const cmatrix& x, const harmonic_symbol& u,
                                   bool waive_normality = false);

/** True when every spectrum point satisfies Re z >= 0 and |Im z| <= Re z
 * (within 1e-10 ||x|| slack). */
bool superpositive_check(const cmatrix& x);

struct abs_report {
    cmatrix result;
    double radius = 0;
    std::size_t modes = 0;
    double truncation_bound = 0;
};

/** Superpositive absolute value: harmonic calculus with the super-abs
 * symbol on the circle of radius ||x|| (or an explicit radius >= spectral
 * radius). */
abs_report superpositive_abs(const cmatrix& x, std::optional<double> radius = std::nullopt,
                             std::optional<std::size_t> modes = std::nullopt,
                             bool waive_normality = false);

/** Ordinary absolute value by harmonic calculus: the symbol |z| == r on the
 * circle extends harmonically to the constant r, so the result is r I. */
abs_report ordinary_abs(const cmatrix& x, std::optional<double> radius = std::nullopt,
                        bool waive_normality = false);

}  // namespace planarcalc

#endif
