#include "disk_harmonics.hpp"

#include <cmath>

#include "error.hpp"
#include "fft.hpp"

namespace planarcalc {

boundary_samples::boundary_samples(disk circle, std::vector<cplx> values)
    : circle_(circle), values_(std::move(values)) {
    if (values_.size() < 4 || !is_pow2(values_.size()))
        fail(errc::invalid_input, "sample count must be a power of two, at least 4");
    if (!(circle_.radius > 0)) fail(errc::invalid_input, "circle radius must be positive");
    for (const auto& v : values_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            fail(errc::invalid_input, "boundary samples must be finite");
}

double boundary_samples::angle(std::size_t j) const {
    return 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(values_.size());
}

cplx boundary_samples::point(std::size_t j) const {
    double t = angle(j);
    return circle_.center + circle_.radius * cplx(std::cos(t), std::sin(t));
}

bool boundary_samples::is_real(double tol) const {
    double scale = std::max(1.0, max_abs());
    for (const auto& v : values_)
        if (std::abs(v.imag()) > tol * scale) return false;
    return true;
}

double boundary_samples::max_abs() const {
    double m = 0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
}

cplx boundary_samples::mean() const {
    cplx s = 0;
    for (const auto& v : values_) s += v;
    return s / static_cast<double>(values_.size());
}

cplx boundary_samples::interpolate(double theta) const {
    auto split = fourier_split_of(*this);
    cplx s = 0;
    for (std::size_t n = 0; n < split.holo.size(); ++n)
        s += split.holo[n] * std::polar(1.0, static_cast<double>(n) * theta);
    for (std::size_t k = 0; k < split.antiholo.size(); ++k)
        s += std::conj(split.antiholo[k]) * std::polar(1.0, -static_cast<double>(k + 1) * theta);
    return s;
}

std::vector<double> poisson_weights(const disk& circle, std::size_t m, cplx z) {
    cplx w = (z - circle.center) / circle.radius;
    double rho = std::abs(w);
    if (rho >= 1.0 - 1e-12)
        fail(errc::domain, "poisson evaluation point must be strictly inside the circle");
    double phi = std::arg(w);
    std::vector<double> weights(m);
    double sum = 0;
    for (std::size_t j = 0; j < m; ++j) {
        double th = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(m);
        double den = 1.0 - 2.0 * rho * std::cos(phi - th) + rho * rho;
        weights[j] = (1.0 - rho * rho) / den;
        sum += weights[j];
    }
    for (auto& x : weights) x /= sum;
    return weights;
}

cplx poisson_eval(const boundary_samples& bd, cplx z) {
    auto w = poisson_weights(bd.circle(), bd.size(), z);
    cplx s = 0;
    for (std::size_t j = 0; j < bd.size(); ++j) s += w[j] * bd.values()[j];
    return s;
}

boundary_samples conjugate_harmonic(const boundary_samples& bd) {
    if (!bd.is_real()) fail(errc::invalid_input, "conjugate_harmonic expects real boundary data");
    const std::size_t m = bd.size();
    std::vector<cplx> a(bd.values());
    fft_inplace(a, false);
    // Hilbert multiplier: hat v_n = -i sign(n) hat u_n; zero mean and Nyquist
    a[0] = 0;
    for (std::size_t k = 1; k < m / 2; ++k) {
        a[k] *= cplx(0, -1);
        a[m - k] *= cplx(0, 1);
    }
    a[m / 2] = 0;
    fft_inplace(a, true);
    std::vector<cplx> out(m);
    for (std::size_t j = 0; j < m; ++j) out[j] = a[j].real();
    return boundary_samples(bd.circle(), std::move(out));
}

fourier_split fourier_split_of(const boundary_samples& bd) {
    const std::size_t m = bd.size();
    std::vector<cplx> a(bd.values());
    fft_inplace(a, false);
    for (auto& x : a) x /= static_cast<double>(m);
    fourier_split sp;
    sp.holo.resize(m / 2 + 1);
    for (std::size_t n = 0; n <= m / 2; ++n) sp.holo[n] = a[n];
    sp.antiholo.resize(m / 2);
    for (std::size_t n = 1; n < m / 2; ++n) sp.antiholo[n - 1] = std::conj(a[m - n]);
    sp.antiholo[m / 2 - 1] = 0;  // Nyquist mode assigned to the holomorphic part
    return sp;
}

std::vector<cplx> split_reconstruct(const fourier_split& split, std::size_t m) {
    std::vector<cplx> a(m, 0);
    for (std::size_t n = 0; n < split.holo.size() && n <= m / 2; ++n) a[n] = split.holo[n];
    for (std::size_t k = 0; k < split.antiholo.size(); ++k) {
        std::size_t n = k + 1;
        if (n < m / 2) a[m - n] += std::conj(split.antiholo[k]);
    }
    for (auto& x : a) x *= static_cast<double>(m);
    fft_inplace(a, true);
    return a;
}

boundary_samples schwarz_reflect(const disk& circle, const std::vector<cplx>& upper_values) {
    if (upper_values.size() < 3)
        fail(errc::invalid_input, "need at least 3 upper half-circle samples");
    const std::size_t m = 2 * (upper_values.size() - 1);
    if (!is_pow2(m)) fail(errc::invalid_input, "upper sample count must be 2^k + 1");
    double scale = 1.0;
    for (const auto& v : upper_values) scale = std::max(scale, std::abs(v));
    if (std::abs(upper_values.front().imag()) > 1e-9 * scale ||
        std::abs(upper_values.back().imag()) > 1e-9 * scale)
        fail(errc::reflection_incompatible,
             "data must be real at the two real-axis endpoints");
    std::vector<cplx> full(m);
    for (std::size_t j = 0; j <= m / 2; ++j) full[j] = upper_values[j];
    for (std::size_t j = m / 2 + 1; j < m; ++j) full[j] = std::conj(upper_values[m - j]);
    return boundary_samples(circle, std::move(full));
}

cplx generator_value(const std::string& name, cplx z) {
    if (name == "const") return 1.0;
    if (name == "cos") return z.real();
    if (name == "sin") return z.imag();
    if (name == "abs_z") return std::abs(z);
    if (name == "re_z2") return (z * z).real();
    if (name == "super_abs") {
        double ax = std::abs(z.real()), ay = std::abs(z.imag());
        double sgn = z.imag() > 0 ? 1.0 : (z.imag() < 0 ? -1.0 : 0.0);
        return cplx(std::max(ax, ay), sgn * std::min(ax, ay));
    }
    fail(errc::invalid_input, "unknown generator '" + name + "'");
}

boundary_samples generate_samples(const std::string& name, const disk& circle, std::size_t m) {
    std::vector<cplx> vals(m);
    for (std::size_t j = 0; j < m; ++j) {
        double t = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(m);
        vals[j] = generator_value(name, circle.center + circle.radius * cplx(std::cos(t), std::sin(t)));
    }
    return boundary_samples(circle, std::move(vals));
}

}  // namespace planarcalc
