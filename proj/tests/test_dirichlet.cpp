#include <doctest.h>

#include <cmath>

#include "dirichlet.hpp"
#include "error.hpp"
#include "fd_laplace.hpp"
#include "rng.hpp"

using namespace planarcalc;

namespace {

compact_set two_disks() {
    return compact_set::disk_union({{cplx(0, 0), 1.0}, {cplx(0.5, 0), 1.0}});
}

std::vector<cplx> interior_probes(const compact_set& dom, int count, std::uint64_t seed,
                                  double min_depth = 0.05) {
    rng gen(seed);
    auto [lo, hi] = dom.bounding_box();
    std::vector<cplx> out;
    while (static_cast<int>(out.size()) < count) {
        cplx z(gen.uniform(lo.real(), hi.real()), gen.uniform(lo.imag(), hi.imag()));
        bool deep = false;
        for (const auto& d : dom.plain_disks())
            if (d.radius - std::abs(z - d.center) > min_depth) deep = true;
        if (deep) out.push_back(z);
    }
    return out;
}

}  // namespace

TEST_SUITE("dirichlet") {

TEST_CASE("zero data gives the zero solution in one sweep") {
    auto dom = two_disks();
    solve_options opts;
    opts.samples = 256;
    auto sol = alternating_solve(dom, [](cplx) { return cplx(0, 0); }, opts);
    CHECK(sol.iterations_used() == 1);
    CHECK(sol.overlap_discrepancy() == 0.0);
    for (cplx z : interior_probes(dom, 10, 61)) CHECK(std::abs(sol.evaluate(z)) <= 1e-14);
}

TEST_CASE("harmonic data is reconstructed: Re(z^2) on the two-disk union") {
    auto dom = two_disks();
    boundary_fn f = [](cplx z) { return cplx((z * z).real(), 0); };
    solve_options opts;
    opts.samples = 512;
    opts.n_max = 4096;
    opts.tol = 0;
    auto sol = alternating_solve(dom, f, opts);
    double worst = 0;
    for (cplx z : interior_probes(dom, 20, 62))
        worst = std::max(worst, std::abs(sol.evaluate(z) - cplx((z * z).real(), 0)));
    CHECK(worst <= 1e-3);
}

TEST_CASE("cesaro overlap discrepancy sits under 2||f||/N") {
    auto dom = two_disks();
    auto corners = seam_corners(dom.plain_disks());
    REQUIRE(corners.size() == 2);
    rng gen(63);
    boundary_fn raw = [&, a = gen.uniform(-1, 1), b = gen.uniform(-1, 1)](cplx z) {
        double w = 1.0;
        for (cplx c : corners) w *= std::norm(z - c) / 4.0;
        return cplx(w * (a * std::cos(std::arg(z)) + b * std::sin(2 * std::arg(z))), 0);
    };
    solve_options opts;
    opts.samples = 512;
    opts.n_max = 64;
    opts.tol = 0;
    alternating_trace trace;
    auto sol = alternating_solve(dom, raw, opts, &trace);
    REQUIRE(trace.overlap_discrepancy.size() == 64);
    double fsup = trace.data_sup_norm[0];
    for (std::size_t k = 0; k < 64; ++k)
        CHECK(trace.overlap_discrepancy[k] <= 2.0 * fsup / static_cast<double>(k + 1));
    CHECK(sol.sup_norm() <= fsup + 1e-12);
}

TEST_CASE("seam-violating data errors out when the lift is disabled") {
    auto dom = two_disks();
    solve_options opts;
    opts.seam_lift = false;
    opts.samples = 256;
    CHECK_THROWS_AS(alternating_solve(dom, [](cplx z) { return cplx((z * z).real(), 0); }, opts),
                    error);
    try {
        alternating_solve(dom, [](cplx z) { return cplx((z * z).real(), 0); }, opts);
    } catch (const error& e) {
        CHECK(e.code() == errc::seam_condition);
    }
}

TEST_CASE("disjoint pieces are an invalid decomposition") {
    auto dom = compact_set::disk_union({{cplx(0, 0), 1.0}, {cplx(5, 0), 1.0}});
    CHECK_THROWS_AS(alternating_solve(dom, [](cplx) { return cplx(0, 0); }, {}), error);
    try {
        alternating_solve(dom, [](cplx) { return cplx(0, 0); }, {});
    } catch (const error& e) {
        CHECK(e.code() == errc::invalid_decomposition);
    }
}

TEST_CASE("three overlapping disks extend a global harmonic") {
    auto dom = compact_set::disk_union(
        {{cplx(0, 0), 1.0}, {cplx(0.6, 0), 1.0}, {cplx(1.2, 0), 1.0}});
    boundary_fn f = [](cplx z) { return cplx((z * z).real(), 0); };
    solve_options opts;
    opts.samples = 256;
    opts.n_max = 4096;
    opts.tol = 0;
    auto sol = alternating_solve(dom, f, opts);
    double worst = 0;
    for (cplx z : interior_probes(dom, 15, 64, 0.1))
        worst = std::max(worst, std::abs(sol.evaluate(z) - cplx((z * z).real(), 0)));
    CHECK(worst <= 5e-3);
}

TEST_CASE("symmetrization solve: odd data extends to Im z") {
    auto dom = compact_set::disk_union({{cplx(0, 0), 1.0}});
    auto sol = symmetrization_solve(dom, [](cplx z) { return cplx(z.imag(), 0); });
    rng gen(65);
    for (int i = 0; i < 20; ++i) {
        cplx z = 0.9 * gen.uniform() * gen.unit_circle();
        CHECK(std::abs(sol.evaluate(z) - cplx(z.imag(), 0)) <= 1e-6);
    }
    // vanishes on the real segment
    for (double x = -0.9; x <= 0.9; x += 0.15)
        CHECK(std::abs(sol.evaluate(cplx(x, 0))) <= 1e-6);
}

TEST_CASE("symmetrization solve: even data extends to Re z") {
    auto dom = compact_set::disk_union({{cplx(0, 0), 1.0}});
    auto sol = symmetrization_solve(dom, [](cplx z) { return cplx(z.real(), 0); });
    rng gen(66);
    for (int i = 0; i < 20; ++i) {
        cplx z = 0.9 * gen.uniform() * gen.unit_circle();
        CHECK(std::abs(sol.evaluate(z) - cplx(z.real(), 0)) <= 1e-6);
    }
}

TEST_CASE("symmetrization solve matches the Poisson integral on random data") {
    auto dom = compact_set::disk_union({{cplx(0, 0), 1.0}});
    rng gen(67);
    std::vector<cplx> vals(512);
    for (std::size_t j = 0; j < vals.size(); ++j) {
        double t = 2.0 * M_PI * j / 512.0;
        vals[j] = 0.4 * std::cos(t) - 0.7 * std::sin(3 * t) + 0.2 * std::cos(5 * t);
    }
    boundary_samples bd(disk{cplx(0, 0), 1.0}, vals);
    boundary_fn f = [&](cplx z) { return bd.interpolate(std::arg(z)); };
    auto sol = symmetrization_solve(dom, f);
    for (int i = 0; i < 20; ++i) {
        cplx z = 0.85 * gen.uniform() * gen.unit_circle();
        CHECK(std::abs(sol.evaluate(z) - poisson_eval(bd, z)) <= 1e-4);
    }
}

TEST_CASE("symmetrization needs a symmetric domain") {
    auto dom = compact_set::disk_union({{cplx(0, 0.4), 1.0}});
    CHECK_THROWS_AS(symmetrization_solve(dom, [](cplx) { return cplx(0, 0); }), error);
}

TEST_CASE("fd oracle: constant and linear data are exact") {
    auto dom = compact_set::disk_union({{cplx(0, 0), 1.0}});
    auto cgrid = fd_laplace_solve(dom, [](cplx) { return cplx(3.5, 0); }, 1.0 / 64.0);
    auto lgrid = fd_laplace_solve(dom, [](cplx z) { return cplx(z.real(), 0); }, 1.0 / 128.0);
    double worst_c = 0, worst_l = 0;
    for (int j = 0; j < cgrid.ny; ++j)
        for (int i = 0; i < cgrid.nx; ++i)
            if (cgrid.interior[static_cast<std::size_t>(j) * cgrid.nx + i])
                worst_c = std::max(worst_c, std::abs(cgrid.value(i, j) - 3.5));
    for (int j = 0; j < lgrid.ny; ++j)
        for (int i = 0; i < lgrid.nx; ++i)
            if (lgrid.interior[static_cast<std::size_t>(j) * lgrid.nx + i])
                worst_l = std::max(worst_l, std::abs(lgrid.value(i, j) - lgrid.node(i, j).real()));
    CHECK(worst_c <= 1e-10);
    CHECK(worst_l <= 1e-3);
    CHECK(cgrid.residual <= 1e-10);
}

TEST_CASE("fd oracle cross-validates the alternating solver") {
    auto dom = two_disks();
    auto corners = seam_corners(dom.plain_disks());
    boundary_fn f = [&](cplx z) {
        double w = 1.0;
        for (cplx c : corners) w *= std::norm(z - c) / 4.0;
        return cplx(w * std::cos(2 * std::arg(z)), 0);
    };
    solve_options opts;
    opts.samples = 256;
    opts.n_max = 2048;
    opts.tol = 0;
    auto sol = alternating_solve(dom, f, opts);
    auto grid = fd_laplace_solve(dom, f, 1.0 / 64.0);
    double worst = 0;
    for (cplx z : interior_probes(dom, 25, 68, 0.1))
        worst = std::max(worst, std::abs(sol.evaluate(z).real() - grid.sample(z)));
    CHECK(worst <= 5e-3);
}

TEST_CASE("fd oracle rejects an under-resolved grid") {
    auto dom = compact_set::disk_union({{cplx(0, 0), 1.0}});
    CHECK_THROWS_AS(fd_laplace_solve(dom, [](cplx) { return cplx(0, 0); }, 0.9), error);
}

TEST_CASE("boundary traces expose the exchanged circle data") {
    auto dom = two_disks();
    boundary_fn f = [](cplx z) { return cplx((z * z).real(), 0); };
    solve_options opts;
    opts.samples = 256;
    opts.n_max = 512;
    opts.tol = 0;
    auto sol = alternating_solve(dom, f, opts);
    auto traces = sol.boundary_trace();
    REQUIRE(traces.size() == 2);
    // on the exposed part of circle 1 the trace equals the data
    double worst = 0;
    for (std::size_t j = 0; j < traces[0].size(); ++j) {
        cplx z = traces[0].point(j);
        if (std::abs(z - cplx(0.5, 0)) > 1.0 + 1e-6)
            worst = std::max(worst, std::abs(traces[0].values()[j] - f(z)));
    }
    CHECK(worst <= 1e-9);
}

}  // TEST_SUITE
