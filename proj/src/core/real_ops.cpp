#include "real_ops.hpp"

#include "error.hpp"

namespace planarcalc {

real_pair decompose_real(const cmatrix& x) {
    check_finite(x);
    return {x.real(), x.imag()};
}

rmatrix real_embed(const cmatrix& x) {
    auto [x0, x1] = decompose_real(x);
    const long n = x.rows();
    rmatrix out(2 * n, 2 * n);
    out.topLeftCorner(n, n) = x0;
    out.topRightCorner(n, n) = x1;
    out.bottomLeftCorner(n, n) = -x1;
    out.bottomRightCorner(n, n) = x0;
    return out;
}

cmatrix kappa_conjugate(const cmatrix& y) {
    check_finite(y);
    if (y.rows() % 2 != 0) fail(errc::invalid_input, "kappa conjugation needs an even size");
    const long n = y.rows() / 2;
    cmatrix out(2 * n, 2 * n);
    const cplx i(0, 1);
    // kappa y kappa^* with kappa = diag(I, iI)
    out.topLeftCorner(n, n) = y.topLeftCorner(n, n);
    out.topRightCorner(n, n) = -i * y.topRightCorner(n, n);
    out.bottomLeftCorner(n, n) = i * y.bottomLeftCorner(n, n);
    out.bottomRightCorner(n, n) = y.bottomRightCorner(n, n);
    return out;
}

isometry_report isometry_check(const cmatrix& x, int level, int trials, rng& gen) {
    check_finite(x);
    if (level < 1 || level > 4)
        fail(errc::invalid_input, "amplification level must be between 1 and 4");
    const long n = x.rows();
    isometry_report rep;
    rep.level = level;
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        cmatrix A(level, level);
        for (long i = 0; i < level; ++i)
            for (long j = 0; j < level; ++j) A(i, j) = gen.normal_complex();
        if (level == 1) A(0, 0) = 1.0;  // level 1 is the plain isometry
        cmatrix amp(level * n, level * n);
        rmatrix emb(2 * n * level, 2 * n * level);
        for (long i = 0; i < level; ++i)
            for (long j = 0; j < level; ++j) {
                amp.block(i * n, j * n, n, n) = A(i, j) * x;
                emb.block(i * 2 * n, j * 2 * n, 2 * n, 2 * n) = real_embed(A(i, j) * x);
            }
        double lhs = operator_norm(amp);
        double rhs = emb.jacobiSvd().singularValues()(0);
        double defect = std::abs(lhs - rhs) / std::max(lhs, 1e-300);
        rep.max_defect = std::max(rep.max_defect, defect);
    }
    return rep;
}

}  // namespace planarcalc
