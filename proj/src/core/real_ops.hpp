#ifndef PLANARCALC_REAL_OPS_HPP
#define PLANARCALC_REAL_OPS_HPP

#include "calculus.hpp"
#include "rng.hpp"

namespace planarcalc {

using rmatrix = Eigen::MatrixXd;

/** Real and imaginary parts: x = x0 + i x1 exactly. */
struct real_pair {
    rmatrix x0, x1;
};

real_pair decompose_real(const cmatrix& x);

/** Block embedding [[x0, x1], [-x1, x0]] of x = x0 + i x1; real-linear and
 * isometric for the operator norm. */
rmatrix real_embed(const cmatrix& x);

/** Conjugation by kappa = diag(I, iI) of a 2x2-block complex matrix;
 * applied to the rotated form [[x0, i x1], [i x1, x0]] it produces the
 * block embedding. */
cmatrix kappa_conjugate(const cmatrix& y);

struct isometry_report {
    int level = 1;
    int trials = 0;
    double max_defect = 0;
};

/** Samples random k x k coefficient matrices A and compares the operator
 * norm of A (x) kron against the norm of the blockwise-embedded amplification;
 * reports the worst relative defect. Statistical evidence at small k, not a
 * proof. */
isometry_report isometry_check(const cmatrix& x, int level, int trials, rng& gen);

}  // namespace planarcalc

#endif
