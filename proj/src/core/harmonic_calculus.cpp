#include "harmonic_calculus.hpp"

#include <cmath>

#include "error.hpp"

namespace planarcalc {

graded_matrix::graded_matrix(cmatrix x_, cmatrix gamma_) : x(std::move(x_)), gamma(std::move(gamma_)) {
    check_finite(x);
    check_finite(gamma);
    if (x.rows() != gamma.rows()) fail(errc::invalid_input, "grading must match the matrix size");
    const long n = gamma.rows();
    if ((gamma * gamma - cmatrix::Identity(n, n)).norm() > 1e-12 * n)
        fail(errc::precondition, "grading symmetry must square to the identity");
    if ((gamma.adjoint() * gamma - cmatrix::Identity(n, n)).norm() > 1e-12 * n)
        fail(errc::precondition, "grading symmetry must be unitary");
}

std::pair<cmatrix, cmatrix> graded_parts(const graded_matrix& gx) {
    cmatrix conj = gx.gamma * gx.x * gx.gamma;
    cmatrix even = 0.5 * (gx.x + conj);
    cmatrix odd = gx.x - even;  // keeps x0 + x1 = x exact
    return {even, odd};
}

harmonic_symbol::harmonic_symbol(double radius, std::vector<cplx> samples)
    : radius_(radius),
      boundary_(disk{cplx(0, 0), radius}, std::move(samples)),
      split_(fourier_split_of(boundary_)) {
    if (!(radius > 0)) fail(errc::invalid_input, "symbol radius must be positive");
}

cplx harmonic_symbol::value_at_angle(double theta) const {
    cplx s = 0;
    for (std::size_t n = 0; n < split_.holo.size(); ++n)
        s += split_.holo[n] * std::polar(1.0, static_cast<double>(n) * theta);
    for (std::size_t k = 0; k < split_.antiholo.size(); ++k)
        s += std::conj(split_.antiholo[k]) * std::polar(1.0, -static_cast<double>(k + 1) * theta);
    return s;
}

harmonic_symbol symbol_from_function(double radius, const std::function<cplx(cplx)>& u,
                                     std::size_t modes) {
    std::vector<cplx> vals(modes);
    for (std::size_t j = 0; j < modes; ++j) {
        double t = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(modes);
        vals[j] = u(radius * cplx(std::cos(t), std::sin(t)));
    }
    return harmonic_symbol(radius, std::move(vals));
}

harmonic_symbol super_abs_symbol(double radius, std::size_t modes) {
    return symbol_from_function(
        radius, [](cplx z) { return generator_value("super_abs", z); }, modes);
}

harmonic_symbol const_abs_symbol(double radius, std::size_t modes) {
    return symbol_from_function(
        radius, [radius](cplx) { return cplx(radius, 0); }, modes);
}

bool superpositive_check(const cmatrix& x) {
    check_finite(x);
    const double slack = 1e-10 * std::max(operator_norm(x), 1e-300);
    for (const auto& z : spectrum(x).points) {
        if (z.real() < -slack) return false;
        if (std::abs(z.imag()) > z.real() + slack) return false;
    }
    return true;
}

namespace {

/** Power series sum_n c_n (x/r)^n with per-term norm monitoring; used once
 * for the holomorphic and once for the antiholomorphic part. */
struct series_eval {
    cmatrix value;
    std::size_t terms = 0;
    double tail_bound = 0;
};

series_eval sum_series(const cmatrix& xr, const std::vector<cplx>& coef, double coef_tail_tol) {
    const long n = xr.rows();
    series_eval out;
    out.value = cmatrix::Zero(n, n);
    // suffix coefficient mass for the early-exit rule
    std::vector<double> suffix(coef.size() + 1, 0.0);
    for (std::size_t k = coef.size(); k-- > 0;) suffix[k] = suffix[k + 1] + std::abs(coef[k]);

    const bool diagonal = xr.isDiagonal(1e-300);
    double pow_norm_cap = 1.0;  // max ||(x/r)^k|| seen, for the tail bound
    if (diagonal) {
        Eigen::VectorXcd d = xr.diagonal();
        Eigen::VectorXcd pw = Eigen::VectorXcd::Ones(n);
        Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(n);
        double dmax = d.cwiseAbs().maxCoeff();
        for (std::size_t k = 0; k < coef.size(); ++k) {
            if (suffix[k] * std::max(1.0, std::pow(dmax, static_cast<double>(k))) < coef_tail_tol) {
                out.tail_bound = suffix[k] * std::max(1.0, std::pow(dmax, static_cast<double>(k)));
                break;
            }
            acc += coef[k] * pw;
            pw = pw.cwiseProduct(d);
            out.terms = k + 1;
        }
        out.value = acc.asDiagonal();
        return out;
    }
    cmatrix pw = cmatrix::Identity(n, n);
    for (std::size_t k = 0; k < coef.size(); ++k) {
        double pn = pw.norm();  // Frobenius bound on the power norm
        pow_norm_cap = std::max(pow_norm_cap, pn);
        if (suffix[k] * pow_norm_cap < coef_tail_tol) {
            out.tail_bound = suffix[k] * pow_norm_cap;
            break;
        }
        if (pn > 1e12)
            fail(errc::truncation_failure,
                 "series in x/r diverges; achieved tail bound " + std::to_string(suffix[k] * pn));
        out.value += coef[k] * pw;
        if (k + 1 < coef.size()) pw = xr * pw;
        out.terms = k + 1;
    }
    return out;
}

}  // namespace

harmonic_calc_report harmonic_calc(const cmatrix& x, const harmonic_symbol& u,
                                   bool waive_normality) {
    check_finite(x);
    if (!waive_normality) {
        auto nr = is_star_normal(x);
        if (!nr.normal)
            fail(errc::precondition, "matrix is not *-normal (defect " + std::to_string(nr.defect) +
                                         "); pass the waiver to proceed");
    }
    const double r = u.radius();
    double rho = spectral_radius(x);
    if (rho > r * (1.0 + 1e-9))
        fail(errc::symbol_domain, "spectral radius " + std::to_string(rho) +
                                      " exceeds the symbol circle radius " + std::to_string(r));
    const cmatrix xr = x / r;
    const double tail_tol = 1e-11 * std::max(1.0, u.boundary().max_abs());

    series_eval holo = sum_series(xr, u.split().holo, tail_tol);
    // antiholomorphic part: coefficients b_n for n >= 1
    std::vector<cplx> bc(u.split().antiholo.size() + 1, cplx(0));
    for (std::size_t k = 0; k < u.split().antiholo.size(); ++k) bc[k + 1] = u.split().antiholo[k];
    series_eval anti = sum_series(xr, bc, tail_tol);

    harmonic_calc_report rep;
    rep.result = holo.value + anti.value.adjoint();
    rep.modes_used = std::max(holo.terms, anti.terms);
    rep.truncation_bound = holo.tail_bound + anti.tail_bound;
    return rep;
}

abs_report superpositive_abs(const cmatrix& x, std::optional<double> radius,
                             std::optional<std::size_t> modes, bool waive_normality) {
    check_finite(x);
    double r = radius.value_or(operator_norm(x));
    if (!(r > 0)) fail(errc::invalid_input, "radius must be positive (zero matrix has no circle)");
    std::size_t m = modes.value_or(1u << 18);
    auto u = super_abs_symbol(r, m);
    auto rep = harmonic_calc(x, u, waive_normality);
    return {rep.result, r, m, rep.truncation_bound};
}

abs_report ordinary_abs(const cmatrix& x, std::optional<double> radius, bool waive_normality) {
    check_finite(x);
    double r = radius.value_or(operator_norm(x));
    if (!(r > 0)) fail(errc::invalid_input, "radius must be positive (zero matrix has no circle)");
    auto u = const_abs_symbol(r);
    auto rep = harmonic_calc(x, u, waive_normality);
    return {rep.result, r, u.modes(), rep.truncation_bound};
}

}  // namespace planarcalc
