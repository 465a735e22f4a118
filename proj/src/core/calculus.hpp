#ifndef PLANARCALC_CALCULUS_HPP
#define PLANARCALC_CALCULUS_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

namespace planarcalc {

using cmatrix = Eigen::MatrixXcd;
using cplx = std::complex<double>;
using holo_fn = std::function<cplx(cplx)>;

/** Eigenvalues clustered at tolerance 1e-8 * ||x||; members of a cluster are
 * replaced by the cluster mean, repeated with algebraic multiplicity. */
struct spectrum_t {
    std::vector<cplx> points;
    double radius() const;  // max |lambda|
};

struct cluster {
    cplx center;
    double radius = 0;
    int multiplicity = 0;
};

struct calc_contour {
    struct circle {
        cplx center;
        double radius = 0;
    };
    std::vector<circle> circles;
    int nodes_per_circle = 32;
};

double operator_norm(const cmatrix& x);  // largest singular value

spectrum_t spectrum(const cmatrix& x);
std::vector<cluster> spectrum_clusters(const cmatrix& x);

double spectral_radius(const cmatrix& x);

/** Solves (zI - x) R = I; z must keep distance > 1e-10 * ||x|| from the
 * spectrum. */
cmatrix resolvent(const cmatrix& x, cplx z);

/** Default contour: one circle per spectrum cluster with a 0.1 * scale
 * margin, shrunk and merged until the circles are pairwise disjoint and
 * each encloses exactly its own cluster. */
calc_contour default_contour(const cmatrix& x, double margin_factor = 0.1);

/** Cauchy-integral function calculus: (1/2 pi i) times the contour integral
 * of f(z) (zI - x)^{-1}, by the trapezoidal rule with node doubling until
 * the result changes by less than 1e-11 relative. The caller guarantees f
 * analytic on and strictly inside every circle. */
cmatrix holo_calc(const cmatrix& x, const holo_fn& f, const calc_contour& contour);
cmatrix holo_calc(const cmatrix& x, const holo_fn& f);  // default contour

struct sqrt_report {
    cmatrix root;
    double epsilon = 0;        // final shift used
    double defect = 0;         // ||root^2 - x|| / max(1, ||x||)
    bool root_superpositive = false;
};

/** Square root of a superpositive matrix via the shifted calculus
 * sqrt(z + eps) with eps decreasing until the iterates settle; keeps
 * refining while the squared-defect improves. */
sqrt_report sqrt_superpositive(const cmatrix& x);

struct normality_report {
    bool normal = false;
    double defect = 0;  // ||x* x - x x*|| / ||x||^2
};

normality_report is_star_normal(const cmatrix& x);

void check_finite(const cmatrix& x);

}  // namespace planarcalc

#endif
