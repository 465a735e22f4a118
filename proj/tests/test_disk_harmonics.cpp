#include <doctest.h>

#include <cmath>

#include "disk_harmonics.hpp"
#include "error.hpp"
#include "fd_laplace.hpp"
#include "rng.hpp"

using namespace planarcalc;

namespace {

std::vector<cplx> sample_fn(const disk& c, std::size_t m, const std::function<cplx(double)>& f) {
    std::vector<cplx> v(m);
    for (std::size_t j = 0; j < m; ++j) v[j] = f(2.0 * M_PI * j / static_cast<double>(m));
    return v;
}

std::vector<cplx> random_smooth(rng& gen, std::size_t m, int deg) {
    std::vector<cplx> v(m, 0);
    for (int n = 1; n <= deg; ++n) {
        double a = gen.uniform(-1, 1) * std::pow(0.6, n);
        double b = gen.uniform(-1, 1) * std::pow(0.6, n);
        for (std::size_t j = 0; j < m; ++j) {
            double t = 2.0 * M_PI * j / static_cast<double>(m);
            v[j] += a * std::cos(n * t) + b * std::sin(n * t);
        }
    }
    return v;
}

}  // namespace

TEST_SUITE("disk_harmonics") {

TEST_CASE("sample counts must be powers of two, at least 4") {
    disk c{cplx(0, 0), 1.0};
    CHECK_THROWS_AS(boundary_samples(c, std::vector<cplx>(3, 0.0)), error);
    CHECK_THROWS_AS(boundary_samples(c, std::vector<cplx>(48, 0.0)), error);
    CHECK_NOTHROW(boundary_samples(c, std::vector<cplx>(64, 0.0)));
}

TEST_CASE("poisson integral of constant data is the constant") {
    disk c{cplx(0.3, -0.1), 2.0};
    boundary_samples bd(c, std::vector<cplx>(128, cplx(1, 0)));
    rng gen(3);
    for (int i = 0; i < 50; ++i) {
        cplx z = c.center + c.radius * gen.uniform(0, 0.99) * gen.unit_circle();
        CHECK(std::abs(poisson_eval(bd, z) - cplx(1, 0)) <= 1e-12);
    }
}

TEST_CASE("poisson integral of cos theta is Re z") {
    disk c{cplx(0, 0), 1.0};
    boundary_samples bd(c, sample_fn(c, 256, [](double t) { return std::cos(t); }));
    cplx z(0.3, 0.2);
    CHECK(std::abs(poisson_eval(bd, z) - cplx(0.3, 0)) <= 1e-12);
}

TEST_CASE("poisson values match the finite-difference oracle") {
    disk c{cplx(0, 0), 1.0};
    rng gen(5);
    auto vals = random_smooth(gen, 256, 6);
    boundary_samples bd(c, vals);
    auto dom = compact_set::disk_union({c});
    boundary_fn f = [&](cplx z) { return bd.interpolate(std::arg(z - c.center)); };
    auto grid = fd_laplace_solve(dom, f, 1.0 / 128.0);
    double worst = 0;
    for (cplx z : {cplx(0.3, 0.2), cplx(-0.4, 0.1), cplx(0.0, -0.5), cplx(0.6, 0.3)}) {
        double fd = grid.sample(z);
        worst = std::max(worst, std::abs(poisson_eval(bd, z).real() - fd));
    }
    CHECK(worst <= 2e-3);
}

TEST_CASE("evaluation outside the disk is a domain error") {
    disk c{cplx(0, 0), 1.0};
    boundary_samples bd(c, std::vector<cplx>(64, 0.0));
    CHECK_THROWS_AS(poisson_eval(bd, cplx(1.5, 0)), error);
    CHECK_THROWS_AS(poisson_eval(bd, cplx(1.0, 0)), error);
}

TEST_CASE("mean value and maximum principle") {
    disk c{cplx(-0.2, 0.4), 1.7};
    rng gen(7);
    boundary_samples bd(c, random_smooth(gen, 128, 10));
    CHECK(std::abs(poisson_eval(bd, c.center) - bd.mean()) <= 1e-12);
    for (int i = 0; i < 300; ++i) {
        cplx z = c.center + c.radius * gen.uniform(0, 0.9999) * gen.unit_circle();
        CHECK(std::abs(poisson_eval(bd, z)) <= bd.max_abs() + 1e-14);
    }
}

TEST_CASE("conjugate of a constant vanishes, conjugate of cos is sin") {
    disk c{cplx(0, 0), 1.0};
    boundary_samples ones(c, std::vector<cplx>(64, cplx(1, 0)));
    auto v = conjugate_harmonic(ones);
    CHECK(v.max_abs() <= 1e-13);

    boundary_samples cosd(c, sample_fn(c, 128, [](double t) { return std::cos(t); }));
    auto s = conjugate_harmonic(cosd);
    for (std::size_t j = 0; j < s.size(); ++j)
        CHECK(std::abs(s.values()[j] - std::sin(s.angle(j))) <= 1e-12);
}

TEST_CASE("conjugate rejects complex data") {
    disk c{cplx(0, 0), 1.0};
    boundary_samples bd(c, std::vector<cplx>(64, cplx(0, 1)));
    CHECK_THROWS_AS(conjugate_harmonic(bd), error);
}

TEST_CASE("u + i H(u) satisfies the Cauchy-Riemann equations") {
    disk c{cplx(0, 0), 1.0};
    rng gen(9);
    boundary_samples u(c, random_smooth(gen, 256, 12));
    auto v = conjugate_harmonic(u);
    auto w = [&](cplx z) {
        return poisson_eval(u, z) + cplx(0, 1) * poisson_eval(v, z);
    };
    const double h = 1e-5;
    double worst = 0;
    for (int i = 0; i < 25; ++i) {
        cplx z = 0.6 * gen.uniform() * gen.unit_circle();
        cplx dx = (w(z + h) - w(z - h)) / (2 * h);
        cplx dy = (w(z + cplx(0, h)) - w(z - cplx(0, h))) / (2 * h);
        worst = std::max(worst, std::abs(dx + cplx(0, 1) * dy));
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("hilbert transform involution") {
    disk c{cplx(0, 0), 1.0};
    rng gen(13);
    boundary_samples u(c, random_smooth(gen, 128, 20));
    auto hh = conjugate_harmonic(conjugate_harmonic(u));
    for (std::size_t j = 0; j < u.size(); ++j) {
        cplx expect = -(u.values()[j] - u.mean());
        CHECK(std::abs(hh.values()[j] - expect) <= 1e-10);
    }
}

TEST_CASE("fourier split of simple data") {
    disk c{cplx(0, 0), 1.0};
    boundary_samples ones(c, std::vector<cplx>(64, cplx(1, 0)));
    auto sp1 = fourier_split_of(ones);
    CHECK(std::abs(sp1.holo[0] - cplx(1, 0)) <= 1e-14);
    for (std::size_t n = 1; n < sp1.holo.size(); ++n) CHECK(std::abs(sp1.holo[n]) <= 1e-14);
    for (const auto& b : sp1.antiholo) CHECK(std::abs(b) <= 1e-14);

    boundary_samples cosd(c, sample_fn(c, 64, [](double t) { return std::cos(t); }));
    auto sp2 = fourier_split_of(cosd);
    CHECK(std::abs(sp2.holo[1] - cplx(0.5, 0)) <= 1e-14);
    CHECK(std::abs(sp2.antiholo[0] - cplx(0.5, 0)) <= 1e-14);
}

TEST_CASE("fourier split reconstructs random data") {
    disk c{cplx(0, 0), 1.0};
    rng gen(17);
    std::vector<cplx> vals(256);
    for (auto& v : vals) v = gen.normal_complex();
    boundary_samples bd(c, vals);
    auto rec = split_reconstruct(fourier_split_of(bd), 256);
    for (std::size_t j = 0; j < vals.size(); ++j) CHECK(std::abs(rec[j] - vals[j]) <= 1e-10);
}

TEST_CASE("schwarz reflection of real-coefficient polynomials") {
    disk c{cplx(0, 0), 1.0};
    const std::size_t m = 128;
    rng gen(19);
    std::vector<double> coef(9);
    for (auto& x : coef) x = gen.uniform(-1, 1);
    auto poly = [&](cplx z) {
        cplx s = 0;
        for (std::size_t k = coef.size(); k-- > 0;) s = s * z + coef[k];
        return s;
    };
    std::vector<cplx> upper(m / 2 + 1);
    for (std::size_t j = 0; j <= m / 2; ++j)
        upper[j] = poly(std::polar(1.0, 2.0 * M_PI * j / static_cast<double>(m)));
    auto full = schwarz_reflect(c, upper);
    for (std::size_t j = 0; j < m; ++j) {
        cplx z = std::polar(1.0, 2.0 * M_PI * j / static_cast<double>(m));
        CHECK(std::abs(full.values()[j] - poly(z)) <= 1e-12);
    }

    // identity and z^2 + 1 are covered by the polynomial family; check id
    std::vector<cplx> upper_id(m / 2 + 1);
    for (std::size_t j = 0; j <= m / 2; ++j)
        upper_id[j] = std::polar(1.0, 2.0 * M_PI * j / static_cast<double>(m));
    auto full_id = schwarz_reflect(c, upper_id);
    for (std::size_t j = 0; j < m; ++j)
        CHECK(std::abs(full_id.values()[j] - std::polar(1.0, 2.0 * M_PI * j / static_cast<double>(m))) <= 1e-12);
}

TEST_CASE("schwarz reflection demands real endpoints") {
    disk c{cplx(0, 0), 1.0};
    std::vector<cplx> upper(33, cplx(0, 1));
    CHECK_THROWS_AS(schwarz_reflect(c, upper), error);
}

TEST_CASE("doubling the sample count is self-consistent") {
    disk c{cplx(0, 0), 1.0};
    rng gen(23);
    auto coarse_vals = random_smooth(gen, 1024, 16);
    boundary_samples coarse(c, coarse_vals);
    std::vector<cplx> fine_vals(2048);
    for (std::size_t j = 0; j < 2048; ++j)
        fine_vals[j] = coarse.interpolate(2.0 * M_PI * j / 2048.0);
    boundary_samples fine(c, fine_vals);
    for (int i = 0; i < 20; ++i) {
        cplx z = 0.8 * gen.uniform() * gen.unit_circle();
        CHECK(std::abs(poisson_eval(coarse, z) - poisson_eval(fine, z)) <= 1e-10);
    }
}

}  // TEST_SUITE
