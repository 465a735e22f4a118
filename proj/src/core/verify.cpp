#include "verify.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "dirichlet.hpp"
#include "disk_harmonics.hpp"
#include "error.hpp"
#include "fd_laplace.hpp"
#include "geometry.hpp"
#include "harmonic_calculus.hpp"
#include "real_ops.hpp"
#include "rng.hpp"
#include "triholo.hpp"

namespace planarcalc {

namespace {

void check(suite_result& sr, const std::string& name, double defect, double bound) {
    sr.checks.push_back({name, defect <= bound, defect});
}

void check_flag(suite_result& sr, const std::string& name, bool pass, double defect = 0) {
    sr.checks.push_back({name, pass, defect});
}

// random band-limited real data on a circle, max degree deg, decaying modes
std::vector<cplx> random_bandlimited(rng& gen, std::size_t m, int deg, double decay = 0.6) {
    std::vector<cplx> vals(m, 0);
    for (int n = 1; n <= deg; ++n) {
        double an = gen.uniform(-1, 1) * std::pow(decay, n - 1);
        double bn = gen.uniform(-1, 1) * std::pow(decay, n - 1);
        for (std::size_t j = 0; j < m; ++j) {
            double t = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(m);
            vals[j] += an * std::cos(n * t) + bn * std::sin(n * t);
        }
    }
    double c0 = gen.uniform(-1, 1);
    double sup = 0;
    for (auto& v : vals) sup = std::max(sup, std::abs(v + c0));
    for (auto& v : vals) v = (v + c0) / std::max(sup, 1e-12);
    return vals;
}

cmatrix random_matrix(rng& gen, long n, double norm_target = 1.0) {
    cmatrix x(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) x(i, j) = gen.normal_complex();
    double s = operator_norm(x);
    if (s > 0) x *= norm_target / s;
    return x;
}

cmatrix random_unitary(rng& gen, long n) {
    cmatrix x = random_matrix(gen, n);
    Eigen::HouseholderQR<cmatrix> qr(x);
    cmatrix q = qr.householderQ();
    cmatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (long i = 0; i < n; ++i) {
        cplx d = r(i, i);
        q.col(i) *= (d == cplx(0)) ? 1.0 : d / std::abs(d);
    }
    return q;
}

// ---------------------------------------------------------------------------

suite_result verify_geometry(std::uint64_t seed) {
    suite_result sr{"geometry", {}};
    rng gen(seed);

    // ring of disks with a center hole
    std::vector<disk> ring;
    for (int k = 0; k < 8; ++k) {
        double t = 2.0 * M_PI * k / 8.0;
        ring.push_back({1.5 * cplx(std::cos(t), std::sin(t)), 0.85});
    }
    compact_set annular = compact_set::disk_union(ring);
    compact_set filled1 = annular.filled();
    compact_set filled2 = filled1.filled();
    auto probe_agree = [&](const compact_set& a, const compact_set& b) {
        int bad = 0;
        for (int i = 0; i < 10000; ++i) {
            cplx z(gen.uniform(-2.6, 2.6), gen.uniform(-2.6, 2.6));
            if (a.contains(z) != b.contains(z)) ++bad;
        }
        return bad;
    };
    check_flag(sr, "fill idempotence on 1e4 probes", probe_agree(filled1, filled2) == 0);

    compact_set tilted = compact_set::disk_union({{cplx(0, 1), 1.0}});
    oriented_line axis{cplx(0, 0), cplx(1, 0)};
    compact_set sym1 = tilted.symmetrized(axis);
    compact_set sym2 = sym1.symmetrized(axis);
    check_flag(sr, "symmetrize idempotence on 1e4 probes", probe_agree(sym1, sym2) == 0);

    int viol = 0;
    for (int i = 0; i < 10000; ++i) {
        cplx z(gen.uniform(-2.6, 2.6), gen.uniform(-2.6, 2.6));
        if (annular.contains(z) && !filled1.contains(z)) ++viol;
    }
    check_flag(sr, "monotonicity: S inside fill(S)", viol == 0);

    compact_set two = compact_set::disk_union({{cplx(0, 0), 1.0}, {cplx(0.5, 0), 1.0}});
    compact_set cut = two.cut({cplx(0, 0), cplx(0, 1), true});  // keep x <= 0
    viol = 0;
    for (int i = 0; i < 10000; ++i) {
        cplx z(gen.uniform(-1.2, 1.7), gen.uniform(-1.2, 1.2));
        if (cut.contains(z) && !two.contains(z)) ++viol;
    }
    check_flag(sr, "monotonicity: cut(S) inside S", viol == 0);

    // boundary points separate inside from outside at tiny offsets
    double worst = 0;
    for (const auto& ct : two.boundary()) {
        double L = ct.length();
        for (int i = 0; i < 200; ++i) {
            double s = L * gen.uniform();
            cplx z = ct.point_at(s);
            cplx n = ct.outward_normal_at(s);
            double eps = 1e-9 * 3.0;
            bool inside = two.contains(z - eps * n);
            bool outside = !two.contains(z + eps * n);
            if (!inside || !outside) worst = std::max(worst, 1.0);
        }
    }
    check(sr, "boundary separates set and complement at 3e-9", worst, 0.5);
    return sr;
}

suite_result verify_disk(std::uint64_t seed) {
    suite_result sr{"disk", {}};
    rng gen(seed);
    disk circle{cplx(0.1, -0.2), 1.3};
    const std::size_t m = 256;

    double worst_mean = 0, worst_max = 0, worst_inv = 0, worst_cr = 0, worst_rec = 0;
    for (int trial = 0; trial < 5; ++trial) {
        boundary_samples bd(circle, random_bandlimited(gen, m, 12));
        worst_mean = std::max(worst_mean,
                              std::abs(poisson_eval(bd, circle.center) - bd.mean()));
        for (int i = 0; i < 200; ++i) {
            double rho = gen.uniform(0, 0.999);
            cplx z = circle.center + circle.radius * rho * gen.unit_circle();
            double v = std::abs(poisson_eval(bd, z));
            worst_max = std::max(worst_max, v - bd.max_abs());
        }
        auto v = conjugate_harmonic(bd);
        auto vv = conjugate_harmonic(v);
        for (std::size_t j = 0; j < m; ++j) {
            cplx expect = -(bd.values()[j] - bd.mean());
            worst_inv = std::max(worst_inv, std::abs(vv.values()[j] - expect));
        }
        auto split = fourier_split_of(bd);
        auto rec = split_reconstruct(split, m);
        for (std::size_t j = 0; j < m; ++j)
            worst_rec = std::max(worst_rec, std::abs(rec[j] - bd.values()[j]));
        // holomorphic part satisfies the Cauchy-Riemann equations
        auto F = [&](cplx z) {
            cplx w = (z - circle.center) / circle.radius;
            cplx s = 0, p = 1;
            for (std::size_t n = 0; n < split.holo.size(); ++n) {
                s += split.holo[n] * p;
                p *= w;
            }
            return s;
        };
        const double h = 1e-5;
        for (int i = 0; i < 20; ++i) {
            cplx z = circle.center + 0.5 * circle.radius * gen.uniform() * gen.unit_circle();
            cplx dx = (F(z + h) - F(z - h)) / (2 * h);
            cplx dy = (F(z + cplx(0, h)) - F(z - cplx(0, h))) / (2 * h);
            worst_cr = std::max(worst_cr, std::abs(dx + cplx(0, 1) * dy));
        }
    }
    check(sr, "mean value at the center", worst_mean, 1e-12);
    check(sr, "maximum principle over interior points", worst_max, 0.0);
    check(sr, "conjugate involution H(H u) = -(u - mean u)", worst_inv, 1e-10);
    check(sr, "split reconstruction round trip", worst_rec, 1e-10);
    check(sr, "holomorphic part has zero CR residual", worst_cr, 1e-6);
    return sr;
}

suite_result verify_schwarz(std::uint64_t seed) {
    suite_result sr{"schwarz", {}};
    rng gen(seed);
    compact_set two = compact_set::disk_union({{cplx(0, 0), 1.0}, {cplx(0.5, 0), 1.0}});
    auto corners = seam_corners(two.plain_disks());

    // seam-vanishing window data of sup norm 1
    auto window_data = [&](double a1, double b1, double a2) {
        return [=](cplx z) -> cplx {
            double w = 1.0;
            for (cplx c : corners) w *= std::norm(z - c) / 4.0;
            double t = std::arg(z);
            return w * (a1 * std::cos(t) + b1 * std::sin(2 * t) + a2 * std::cos(3 * t));
        };
    };

    double worst_cesaro = 0, worst_monotone = 0, worst_maxp = 0;
    for (int trial = 0; trial < 2; ++trial) {
        auto raw = window_data(gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1));
        double sup = 0;
        for (int i = 0; i < 512; ++i) {
            double t = 2 * M_PI * i / 512.0;
            sup = std::max(sup, std::abs(raw(std::polar(1.0, t))));
            sup = std::max(sup, std::abs(raw(cplx(0.5, 0) + std::polar(1.0, t))));
        }
        boundary_fn f = [=](cplx z) { return raw(z) / sup; };
        solve_options opts;
        opts.n_max = 64;
        opts.tol = 0.0;
        opts.samples = 512;
        alternating_trace trace;
        auto sol = alternating_solve(two, f, opts, &trace);
        for (std::size_t k = 0; k < trace.overlap_discrepancy.size(); ++k) {
            double bound = 2.0 / static_cast<double>(k + 1);
            worst_cesaro = std::max(worst_cesaro, trace.overlap_discrepancy[k] - bound);
        }
        for (std::size_t k = 1; k < trace.data_sup_norm.size(); ++k)
            worst_monotone =
                std::max(worst_monotone, trace.data_sup_norm[k] - trace.data_sup_norm[k - 1]);
        for (int i = 0; i < 50; ++i) {
            cplx z(gen.uniform(-1, 1.5), gen.uniform(-1, 1));
            if (!two.contains(z)) continue;
            if (std::min(std::abs(z), std::abs(z - cplx(0.5, 0))) > 0.98) continue;
            worst_maxp = std::max(worst_maxp, std::abs(sol.evaluate(z)) - 1.0);
        }
    }
    check(sr, "cesaro overlap bound 2||f||/N for N <= 64", worst_cesaro, 0.0);
    check(sr, "monotone sup norms along the iteration", worst_monotone, 1e-12);
    check(sr, "maximum principle on the solution", worst_maxp, 1e-9);

    // linearity at fixed iteration count
    {
        auto f1 = window_data(0.7, -0.3, 0.2);
        auto f2 = window_data(-0.4, 0.8, -0.6);
        double a = 0.6, b = -1.2;
        boundary_fn fc = [=](cplx z) { return a * f1(z) + b * f2(z); };
        solve_options opts;
        opts.n_max = 128;
        opts.tol = 0.0;
        opts.samples = 256;
        auto s1 = alternating_solve(two, f1, opts);
        auto s2 = alternating_solve(two, f2, opts);
        auto sc = alternating_solve(two, fc, opts);
        double worst = 0;
        for (int i = 0; i < 20; ++i) {
            cplx z(gen.uniform(-0.8, 1.3), gen.uniform(-0.8, 0.8));
            if (!two.contains(z)) continue;
            if (std::min(std::abs(z), std::abs(z - cplx(0.5, 0))) > 0.95) continue;
            worst = std::max(worst,
                             std::abs(sc.evaluate(z) - a * s1.evaluate(z) - b * s2.evaluate(z)));
        }
        check(sr, "linearity of the solve at probe points", worst, 1e-8);
    }

    // symmetrization solve against the Poisson oracle on the disk
    {
        compact_set unit = compact_set::disk_union({{cplx(0, 0), 1.0}});
        auto vals = random_bandlimited(gen, 256, 8);
        boundary_samples bd(disk{cplx(0, 0), 1.0}, vals);
        boundary_fn f = [&](cplx z) { return bd.interpolate(std::arg(z)); };
        auto sol = symmetrization_solve(unit, f);
        double worst = 0;
        for (int i = 0; i < 20; ++i) {
            cplx z = 0.8 * gen.uniform() * gen.unit_circle();
            worst = std::max(worst, std::abs(sol.evaluate(z) - poisson_eval(bd, z)));
        }
        check(sr, "symmetrization solve matches the Poisson integral", worst, 1e-4);
    }
    return sr;
}

suite_result verify_calculus(std::uint64_t seed) {
    suite_result sr{"calculus", {}};
    rng gen(seed);

    auto rand_poly = [&](int deg) {
        std::vector<cplx> c(static_cast<std::size_t>(deg) + 1);
        for (auto& v : c) v = gen.normal_complex();
        return c;
    };
    auto poly_fn = [](const std::vector<cplx>& c) {
        return [c](cplx z) {
            cplx s = 0;
            for (std::size_t k = c.size(); k-- > 0;) s = s * z + c[k];
            return s;
        };
    };
    auto poly_mul = [](const std::vector<cplx>& a, const std::vector<cplx>& b) {
        std::vector<cplx> c(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        return c;
    };

    double worst_hom = 0, worst_map = 0;
    for (int trial = 0; trial < 10; ++trial) {
        long n = 2 + static_cast<long>(gen.uniform_int(0, 6));
        cmatrix x = random_matrix(gen, n, 1.5);
        auto ca = rand_poly(gen.uniform_int(1, 8));
        auto cb = rand_poly(gen.uniform_int(1, 8));
        auto contour = default_contour(x);
        cmatrix fa = holo_calc(x, poly_fn(ca), contour);
        cmatrix fb = holo_calc(x, poly_fn(cb), contour);
        cmatrix fab = holo_calc(x, poly_fn(poly_mul(ca, cb)), contour);
        double scale = 1.0 + operator_norm(fa) * operator_norm(fb) + operator_norm(fab);
        worst_hom = std::max(worst_hom, operator_norm(fab - fa * fb) / scale);

        auto sp = spectrum(x).points;
        auto spf = spectrum(fab).points;
        double hd = 0;
        for (const auto& z : sp) {
            double dmin = 1e300;
            cplx fz = poly_fn(poly_mul(ca, cb))(z);
            for (const auto& w : spf) dmin = std::min(dmin, std::abs(fz - w));
            hd = std::max(hd, dmin);
        }
        for (const auto& w : spf) {
            double dmin = 1e300;
            for (const auto& z : sp) dmin = std::min(dmin, std::abs(poly_fn(poly_mul(ca, cb))(z) - w));
            hd = std::max(hd, dmin);
        }
        worst_map = std::max(worst_map, hd);
    }
    check(sr, "homomorphism on polynomial pairs", worst_hom, 1e-8);
    check(sr, "spectral mapping for polynomials", worst_map, 1e-7);

    double worst_exp = 0;
    for (int trial = 0; trial < 5; ++trial) {
        long n = 2 + static_cast<long>(gen.uniform_int(0, 4));
        cmatrix x = random_matrix(gen, n, 2.0);
        cmatrix via_contour = holo_calc(x, [](cplx z) { return std::exp(z); });
        cmatrix taylor = cmatrix::Identity(n, n);
        cmatrix term = cmatrix::Identity(n, n);
        for (int k = 1; k <= 50; ++k) {
            term = term * x / static_cast<double>(k);
            taylor += term;
        }
        worst_exp = std::max(worst_exp, operator_norm(via_contour - taylor));
    }
    check(sr, "exp via contour matches the 50-term series", worst_exp, 1e-9);

    double worst_contract = 0;
    for (int trial = 0; trial < 5; ++trial) {
        long n = 2 + static_cast<long>(gen.uniform_int(0, 4));
        cmatrix u = random_unitary(gen, n);
        Eigen::VectorXcd d(n);
        for (long i = 0; i < n; ++i) d(i) = gen.normal_complex();
        cmatrix x = u * d.asDiagonal() * u.adjoint();
        auto c = rand_poly(6);
        cmatrix fx = holo_calc(x, poly_fn(c));
        double sup = 0;
        for (const auto& z : spectrum(x).points) sup = std::max(sup, std::abs(poly_fn(c)(z)));
        worst_contract = std::max(worst_contract, operator_norm(fx) - sup);
    }
    check(sr, "contractivity against the spectral sup for normal x", worst_contract, 1e-8);
    return sr;
}

suite_result verify_harmonic(std::uint64_t seed) {
    suite_result sr{"harmonic", {}};
    rng gen(seed);

    double worst_eig = 0, worst_pos = 0, worst_holo = 0, worst_norm = 0;
    for (int trial = 0; trial < 5; ++trial) {
        long n = 2 + static_cast<long>(gen.uniform_int(0, 6));
        cmatrix u = random_unitary(gen, n);
        Eigen::VectorXcd lam(n);
        for (long i = 0; i < n; ++i) lam(i) = gen.unit_circle();
        cmatrix x = u * lam.asDiagonal() * u.adjoint();

        const std::size_t m = 1024;
        auto vals = random_bandlimited(gen, m, 16);
        harmonic_symbol sym(1.0, vals);
        auto rep = harmonic_calc(x, sym);
        Eigen::VectorXcd diag(n);
        for (long i = 0; i < n; ++i) diag(i) = sym.value_at_angle(std::arg(lam(i)));
        cmatrix oracle = u * diag.asDiagonal() * u.adjoint();
        worst_eig = std::max(worst_eig, (rep.result - oracle).norm());

        // nonnegative symbol: shift above the minimum
        double vmin = 1e300;
        for (const auto& v : vals) vmin = std::min(vmin, v.real());
        std::vector<cplx> pos_vals = vals;
        for (auto& v : pos_vals) v = v.real() - vmin + 0.05;
        harmonic_symbol pos_sym(1.0, pos_vals);
        auto posr = harmonic_calc(x, pos_sym);
        Eigen::SelfAdjointEigenSolver<cmatrix> es(
            cmatrix(0.5 * (posr.result + posr.result.adjoint())));
        worst_pos = std::max(worst_pos, -es.eigenvalues().minCoeff());

        // antiholomorphic part zero: agree with the contour calculus
        std::vector<cplx> hv(m, 0);
        std::vector<cplx> coefs(7);
        for (auto& c : coefs) c = gen.normal_complex() * 0.4;
        for (std::size_t j = 0; j < m; ++j) {
            double t = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(m);
            cplx z = std::polar(1.0, t), p = 1, s = 0;
            for (const auto& c : coefs) {
                s += c * p;
                p *= z;
            }
            hv[j] = s;
        }
        harmonic_symbol holo_sym(1.0, hv);
        auto hrep = harmonic_calc(x, holo_sym);
        cmatrix direct = holo_calc(x, [&](cplx z) {
            cplx s = 0, p = 1;
            for (const auto& c : coefs) {
                s += c * p;
                p *= z;
            }
            return s;
        });
        worst_holo = std::max(worst_holo, operator_norm(hrep.result - direct));

        // norm identity for diagonal unimodular matrices
        cmatrix dm = cmatrix::Zero(n, n);
        for (long i = 0; i < n; ++i) dm(i, i) = gen.unit_circle();
        auto sa = superpositive_abs(dm);
        worst_norm = std::max(worst_norm, std::abs(operator_norm(sa.result) - 1.0));
    }
    check(sr, "eigen-oracle equivalence for circle-spectrum normals", worst_eig, 1e-8);
    check(sr, "positivity: nonnegative symbols give PSD results", worst_pos, 1e-8);
    check(sr, "holomorphic symbols reproduce the contour calculus", worst_holo, 1e-9);
    check(sr, "norm identity for the superpositive absolute value", worst_norm, 1e-6);
    return sr;
}

suite_result verify_realops(std::uint64_t seed, const verify_options& opts) {
    suite_result sr{"realops", {}};
    rng gen(seed);
    double worst_iso = 0, worst_adj = 0, worst_lin = 0, worst_kappa = 0;
    for (int trial = 0; trial < 20; ++trial) {
        long n = 2 + static_cast<long>(gen.uniform_int(0, 4));
        cmatrix x = random_matrix(gen, n, gen.uniform(0.5, 2.0));
        worst_iso = std::max(
            worst_iso, std::abs(operator_norm(x) -
                                real_embed(x).jacobiSvd().singularValues()(0)) /
                           std::max(operator_norm(x), 1e-300));
        worst_adj = std::max(
            worst_adj,
            (real_embed(x.adjoint().eval()) - real_embed(x).transpose().eval()).cwiseAbs().maxCoeff());
        cmatrix y = random_matrix(gen, n, 1.0);
        double a = gen.uniform(-2, 2), b = gen.uniform(-2, 2);
        worst_lin = std::max(worst_lin, (real_embed(a * x + b * y) -
                                         (a * real_embed(x) + b * real_embed(y)))
                                            .cwiseAbs()
                                            .maxCoeff());
        auto [x0, x1] = decompose_real(x);
        cmatrix rot(2 * n, 2 * n);
        const cplx i(0, 1);
        rot.topLeftCorner(n, n) = x0.cast<cplx>();
        rot.topRightCorner(n, n) = i * x1.cast<cplx>();
        rot.bottomLeftCorner(n, n) = i * x1.cast<cplx>();
        rot.bottomRightCorner(n, n) = x0.cast<cplx>();
        worst_kappa = std::max(worst_kappa,
                               (kappa_conjugate(rot) - real_embed(x).cast<cplx>()).norm());
    }
    check(sr, "level-1 isometry of the block embedding", worst_iso, 1e-9);
    check(sr, "adjoint maps to the block transpose", worst_adj, 1e-14);
    check(sr, "real-linearity of the embedding", worst_lin, 1e-13);
    check(sr, "kappa conjugation reproduces the embedding", worst_kappa, 1e-12);

    rng gen2(seed + 1);
    cmatrix x = random_matrix(gen2, 3, 1.0);
    auto rep = isometry_check(x, opts.isometry_level, opts.isometry_trials, gen2);
    check(sr, "level-" + std::to_string(opts.isometry_level) + " amplified isometry over " +
                  std::to_string(opts.isometry_trials) + " trials",
          rep.max_defect, 1e-8);
    return sr;
}

suite_result verify_triholo(std::uint64_t seed) {
    suite_result sr{"triholo", {}};
    rng gen(seed);
    auto basis = triholo_basis(2);

    bool closure = true;
    bool lap_ok = true;
    for (const auto& a : basis)
        for (const auto& b : basis) {
            auto p = triholo_product(a, b);
            if (!triholo_check(p).exact_zero) closure = false;
            auto lr = laplacian_report(p);
            if (!lr.componentwise_identity || !lr.complex_combination_zero) lap_ok = false;
        }
    check_flag(sr, "closure of products over the degree-2 basis", closure);
    check_flag(sr, "laplacian identities lap f = lap h = -lap g", lap_ok);

    // random rational combinations stay in the algebra
    bool combo_ok = true;
    for (int t = 0; t < 100; ++t) {
        trifield u, v;
        for (const auto& e : basis) {
            rational cu(gen.uniform_int(-3, 3), 1 + gen.uniform_int(0, 2));
            rational cv(gen.uniform_int(-3, 3), 1 + gen.uniform_int(0, 2));
            u.f = u.f + e.f.scaled(cu);
            u.g = u.g + e.g.scaled(cu);
            u.h = u.h + e.h.scaled(cu);
            v.f = v.f + e.f.scaled(cv);
            v.g = v.g + e.g.scaled(cv);
            v.h = v.h + e.h.scaled(cv);
        }
        if (!triholo_check(triholo_product(u, v)).exact_zero) combo_ok = false;
    }
    check_flag(sr, "closure on random rational combinations", combo_ok);

    // evaluation homomorphism, exact in Q[s] and to 1e-10 in floats
    bool exact_hom = true;
    double worst_float = 0;
    for (int t = 0; t < 20; ++t) {
        const trifield& a = basis[static_cast<std::size_t>(gen.uniform_int(0, static_cast<int>(basis.size()) - 1))];
        const trifield& b = basis[static_cast<std::size_t>(gen.uniform_int(0, static_cast<int>(basis.size()) - 1))];
        auto p = triholo_product(a, b);
        rational x(gen.uniform_int(-8, 8), 3), y(gen.uniform_int(-8, 8), 5), z(gen.uniform_int(-8, 8), 7);
        auto lhs = evaluate_qs(p, x, y, z);
        auto rhs = evaluate_qs(a, x, y, z) * evaluate_qs(b, x, y, z);
        if (!(lhs == rhs)) exact_hom = false;
        double xd = coef_to_double(rational(x)), yd = coef_to_double(rational(y)),
               zd = coef_to_double(rational(z));
        auto cl = complex_evaluate(p, xd, yd, zd);
        auto cr = complex_evaluate(a, xd, yd, zd) * complex_evaluate(b, xd, yd, zd);
        worst_float = std::max(worst_float, std::abs(cl - cr));
    }
    check_flag(sr, "evaluation homomorphism exact in Q[s]", exact_hom);
    check(sr, "evaluation homomorphism in floats", worst_float, 1e-10);

    // dimensions against the dense rank oracle
    bool dims_ok = true;
    for (int d = 0; d <= 2; ++d) {
        auto A = constraint_matrix_dense(d);
        std::size_t cols = coefficient_count(d);
        Eigen::MatrixXd M(A.size(), cols);
        for (std::size_t r = 0; r < A.size(); ++r)
            for (std::size_t c = 0; c < cols; ++c) M(static_cast<long>(r), static_cast<long>(c)) = A[r][c];
        long rank = A.empty() ? 0 : Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(M).rank();
        std::size_t nullity = cols - static_cast<std::size_t>(rank);
        if (nullity != triholo_basis(d).size()) dims_ok = false;
    }
    check_flag(sr, "basis dimension equals the nullspace oracle (d <= 2)", dims_ok);
    return sr;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"geometry", "disk", "schwarz", "calculus", "harmonic", "realops", "triholo"};
}

suite_result run_verify_suite(const std::string& name, std::uint64_t seed,
                              const verify_options& opts) {
    if (name == "geometry") return verify_geometry(seed);
    if (name == "disk") return verify_disk(seed);
    if (name == "schwarz") return verify_schwarz(seed);
    if (name == "calculus") return verify_calculus(seed);
    if (name == "harmonic") return verify_harmonic(seed);
    if (name == "realops") return verify_realops(seed, opts);
    if (name == "triholo") return verify_triholo(seed);
    fail(errc::invalid_input, "unknown verify suite '" + name + "'");
}

std::vector<suite_result> run_verify(const std::string& only, std::uint64_t seed,
                                     const verify_options& opts) {
    std::string want = only == "real-iso" ? "realops" : only;
    std::vector<suite_result> out;
    for (const auto& name : verify_suite_names()) {
        if (!want.empty() && name != want) continue;
        out.push_back(run_verify_suite(name, seed, opts));
    }
    if (out.empty()) fail(errc::invalid_input, "unknown verify suite '" + only + "'");
    return out;
}

}  // namespace planarcalc
