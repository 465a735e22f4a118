#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "calculus.hpp"
#include "error.hpp"
#include "harmonic_calculus.hpp"
#include "rng.hpp"

using namespace planarcalc;

namespace {

cmatrix paper_example() {
    cmatrix x(2, 2);
    x << cplx(3, 0), cplx(1, 0), cplx(-1, 0), cplx(1, 0);
    return x;
}

cmatrix nilpotent_generator() {
    cmatrix e(2, 2);
    e << cplx(1, 0), cplx(1, 0), cplx(-1, 0), cplx(-1, 0);
    return e;
}

cmatrix random_matrix(rng& gen, long n, double norm_target) {
    cmatrix x(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) x(i, j) = gen.normal_complex();
    x *= norm_target / operator_norm(x);
    return x;
}

double hausdorff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double h = 0;
    for (const auto& x : a) {
        double d = 1e300;
        for (const auto& y : b) d = std::min(d, std::abs(x - y));
        h = std::max(h, d);
    }
    for (const auto& y : b) {
        double d = 1e300;
        for (const auto& x : a) d = std::min(d, std::abs(x - y));
        h = std::max(h, d);
    }
    return h;
}

// characteristic polynomial coefficients by Faddeev-LeVerrier, then the
// companion matrix; an independent route to the spectrum
std::vector<cplx> companion_roots(const cmatrix& x) {
    const long n = x.rows();
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1.0;
    cmatrix m = cmatrix::Zero(n, n);
    for (long k = 1; k <= n; ++k) {
        m = x * m + c[static_cast<std::size_t>(n - k + 1)] * cmatrix::Identity(n, n);
        c[static_cast<std::size_t>(n - k)] = -(x * m).trace() / static_cast<double>(k);
    }
    cmatrix comp = cmatrix::Zero(n, n);
    for (long i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (long i = 0; i < n; ++i) comp(i, n - 1) = -c[static_cast<std::size_t>(i)];
    Eigen::ComplexEigenSolver<cmatrix> es(comp, false);
    return {es.eigenvalues().data(), es.eigenvalues().data() + n};
}

}  // namespace

TEST_SUITE("calculus") {

TEST_CASE("spectrum of a diagonal matrix") {
    cmatrix x = cmatrix::Zero(2, 2);
    x(0, 0) = 1.0;
    x(1, 1) = 2.0;
    auto sp = spectrum(x);
    CHECK(hausdorff(sp.points, {cplx(1, 0), cplx(2, 0)}) <= 1e-12);
}

TEST_CASE("spectrum of the square-zero generator collusters at zero") {
    cmatrix e = nilpotent_generator();
    CHECK((e * e).norm() == 0.0);  // exactly nilpotent
    auto sp = spectrum(e);
    REQUIRE(sp.points.size() == 2);
    CHECK(hausdorff(sp.points, {cplx(0, 0), cplx(0, 0)}) <= 1e-10);
}

TEST_CASE("spectrum matches the companion-matrix oracle") {
    rng gen(71);
    for (int t = 0; t < 5; ++t) {
        cmatrix x = random_matrix(gen, 6, 1.0);
        CHECK(hausdorff(spectrum(x).points, companion_roots(x)) <= 1e-6);
    }
}

TEST_CASE("spectrum is invariant under unitary conjugation") {
    rng gen(72);
    cmatrix x = random_matrix(gen, 5, 1.0);
    cmatrix g = random_matrix(gen, 5, 1.0);
    Eigen::HouseholderQR<cmatrix> qr(g);
    cmatrix q = qr.householderQ();
    CHECK(hausdorff(spectrum(x).points, spectrum(cmatrix(q * x * q.adjoint())).points) <= 1e-8);
}

TEST_CASE("resolvent basics and defect") {
    cmatrix zero = cmatrix::Zero(2, 2);
    CHECK((resolvent(zero, cplx(1, 0)) - cmatrix::Identity(2, 2)).norm() <= 1e-14);

    cmatrix d = cmatrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    cmatrix r = resolvent(d, cplx(3, 0));
    CHECK(std::abs(r(0, 0) - cplx(0.5, 0)) <= 1e-14);
    CHECK(std::abs(r(1, 1) - cplx(1.0, 0)) <= 1e-14);

    rng gen(73);
    cmatrix x = random_matrix(gen, 6, 1.0);
    cplx z(1.7, 0.9);
    cmatrix rr = resolvent(x, z);
    CHECK(((z * cmatrix::Identity(6, 6) - x) * rr - cmatrix::Identity(6, 6)).norm() <= 1e-10);
}

TEST_CASE("resolvent refuses points near the spectrum") {
    cmatrix d = cmatrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    CHECK_THROWS_AS(resolvent(d, cplx(1.0 + 1e-13, 0)), error);
}

TEST_CASE("contour calculus is unital and maps id to x") {
    rng gen(74);
    for (int t = 0; t < 3; ++t) {
        cmatrix x = random_matrix(gen, 5, 1.3);
        cmatrix one = holo_calc(x, [](cplx) { return cplx(1, 0); });
        cmatrix idx = holo_calc(x, [](cplx z) { return z; });
        CHECK(operator_norm(one - cmatrix::Identity(5, 5)) <= 1e-11);
        CHECK(operator_norm(idx - x) <= 1e-11);
    }
}

TEST_CASE("contour square root of the worked 2x2 superpositive matrix") {
    cmatrix x = paper_example();
    cmatrix y = holo_calc(x, [](cplx z) { return std::sqrt(z); });
    cmatrix expect(2, 2);
    const double s = 1.0 / (2.0 * std::sqrt(2.0));
    expect << cplx(5 * s, 0), cplx(s, 0), cplx(-s, 0), cplx(3 * s, 0);
    CHECK((y - expect).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("shifted square root: identity and the worked matrix") {
    auto rep_id = sqrt_superpositive(cmatrix::Identity(3, 3));
    CHECK(operator_norm(rep_id.root - cmatrix::Identity(3, 3)) <= 1e-10);

    cmatrix x = paper_example();
    auto rep = sqrt_superpositive(x);
    cmatrix expect(2, 2);
    const double s = 1.0 / (2.0 * std::sqrt(2.0));
    expect << cplx(5 * s, 0), cplx(s, 0), cplx(-s, 0), cplx(3 * s, 0);
    CHECK((rep.root - expect).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(operator_norm(rep.root * rep.root - x) <= 1e-10);
    CHECK(rep.root_superpositive);
}

TEST_CASE("shifted square root matches the eigendecomposition on hermitian PD matrices") {
    rng gen(75);
    for (int t = 0; t < 3; ++t) {
        cmatrix g = random_matrix(gen, 4, 1.0);
        Eigen::HouseholderQR<cmatrix> qr(g);
        cmatrix q = qr.householderQ();
        Eigen::VectorXd ev(4);
        for (int i = 0; i < 4; ++i) ev(i) = gen.uniform(0.5, 2.0);
        cmatrix x = q * ev.asDiagonal() * q.adjoint();
        x = 0.5 * (x + cmatrix(x.adjoint()));  // hermitian to rounding
        auto rep = sqrt_superpositive(x);
        Eigen::SelfAdjointEigenSolver<cmatrix> es(x);
        cmatrix oracle = es.eigenvectors() *
                         es.eigenvalues().cwiseSqrt().asDiagonal() *
                         es.eigenvectors().adjoint();
        CHECK(operator_norm(rep.root - oracle) <= 1e-9);
    }
}

TEST_CASE("square root preconditions and failure modes") {
    cmatrix neg = -cmatrix::Identity(2, 2);
    CHECK_THROWS_AS(sqrt_superpositive(neg), error);
    try {
        sqrt_superpositive(neg);
    } catch (const error& e) {
        CHECK(e.code() == errc::precondition);
    }
    // the square-zero generator is superpositive but has no square root
    CHECK(superpositive_check(nilpotent_generator()));
    CHECK_THROWS_AS(sqrt_superpositive(nilpotent_generator()), error);
    try {
        sqrt_superpositive(nilpotent_generator());
    } catch (const error& e) {
        CHECK(e.code() == errc::convergence_failure);
    }
}

TEST_CASE("star-normality certificate") {
    cmatrix h(2, 2);
    h << cplx(1, 0), cplx(0, 2), cplx(0, -2), cplx(-3, 0);
    CHECK(is_star_normal(h).normal);

    auto rep = is_star_normal(nilpotent_generator());
    CHECK_FALSE(rep.normal);
    CHECK(rep.defect == doctest::Approx(1.0).epsilon(1e-12));  // ||[[0,4],[4,0]]|| / 4

    rng gen(76);
    cmatrix g = random_matrix(gen, 4, 1.0);
    Eigen::HouseholderQR<cmatrix> qr(g);
    cmatrix q = qr.householderQ();
    CHECK(is_star_normal(q).normal);
}

TEST_CASE("spectral radius versus norm") {
    cmatrix d = cmatrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = -3.0;
    CHECK(spectral_radius(d) == doctest::Approx(3.0).epsilon(1e-12));

    cmatrix e = nilpotent_generator();
    CHECK(spectral_radius(e) <= 1e-10);
    CHECK(operator_norm(e) == doctest::Approx(2.0).epsilon(1e-12));  // singular-value oracle

    rng gen(77);
    cmatrix g = random_matrix(gen, 4, 1.0);
    Eigen::HouseholderQR<cmatrix> qr(g);
    cmatrix q = qr.householderQ();
    CHECK(spectral_radius(q) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("quadrature failure surfaces when analyticity is violated") {
    cmatrix x = cmatrix::Identity(2, 2);
    calc_contour ct;
    ct.circles.push_back({cplx(1, 0), 0.5});
    // branch point just outside the circle: geometric rate too slow to settle
    auto f = [](cplx z) { return std::sqrt(z - cplx(1.5000001, 0)); };
    CHECK_THROWS_AS(holo_calc(x, f, ct), error);
}

TEST_CASE("default contours separate clusters and enclose the spectrum") {
    rng gen(78);
    cmatrix x = random_matrix(gen, 6, 1.0);
    auto ct = default_contour(x);
    auto pts = spectrum(x).points;
    for (const auto& p : pts) {
        int enclosing = 0;
        for (const auto& c : ct.circles)
            if (std::abs(p - c.center) < c.radius - 1e-9) ++enclosing;
        CHECK(enclosing == 1);
    }
    for (std::size_t i = 0; i < ct.circles.size(); ++i)
        for (std::size_t j = i + 1; j < ct.circles.size(); ++j)
            CHECK(std::abs(ct.circles[i].center - ct.circles[j].center) >
                  ct.circles[i].radius + ct.circles[j].radius);
}

}  // TEST_SUITE
