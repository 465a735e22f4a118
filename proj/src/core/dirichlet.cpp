#include "dirichlet.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "error.hpp"

namespace planarcalc {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

struct piece_grid {
    std::vector<disk> circles;
    std::vector<std::vector<cplx>> points;  // [circle][sample]
    // covered[i][j]: sample strictly interior to another disk; src[i][j] is
    // the most interior covering disk, rows[i][j] its normalized Poisson row
    std::vector<std::vector<bool>> covered;
    std::vector<std::vector<int>> src;
    std::vector<std::vector<std::vector<double>>> rows;
    std::size_t m = 0;
};

piece_grid build_grid(const std::vector<disk>& circles, std::size_t m, double scale) {
    piece_grid g;
    g.circles = circles;
    g.m = m;
    const std::size_t k = circles.size();
    g.points.resize(k);
    g.covered.resize(k);
    g.src.resize(k);
    g.rows.resize(k);
    const double eps = 1e-9 * scale;
    for (std::size_t i = 0; i < k; ++i) {
        g.points[i].resize(m);
        g.covered[i].assign(m, false);
        g.src[i].assign(m, -1);
        g.rows[i].resize(m);
        for (std::size_t j = 0; j < m; ++j) {
            double t = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
            cplx z = circles[i].center + circles[i].radius * cplx(std::cos(t), std::sin(t));
            g.points[i][j] = z;
            double best_depth = eps;
            int best = -1;
            for (std::size_t o = 0; o < k; ++o) {
                if (o == i) continue;
                double depth = circles[o].radius - std::abs(z - circles[o].center);
                if (depth > best_depth) {
                    best_depth = depth;
                    best = static_cast<int>(o);
                }
            }
            if (best >= 0) {
                g.covered[i][j] = true;
                g.src[i][j] = best;
                g.rows[i][j] = poisson_weights(circles[best], m, z);
            }
        }
    }
    return g;
}

cplx apply_row(const std::vector<double>& row, const std::vector<cplx>& data) {
    cplx s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * data[j];
    return s;
}

double sup_abs(const std::vector<std::vector<cplx>>& data) {
    double s = 0;
    for (const auto& d : data)
        for (const auto& v : d) s = std::max(s, std::abs(v));
    return s;
}

/** Core alternating loop on prescribed per-circle data (exposed part) with
 * zeros on covered parts as the trivial extension. */
harmonic_solution solve_on_disks(const compact_set& domain, const piece_grid& g,
                                 const std::vector<std::vector<cplx>>& exposed,
                                 const harmonic_poly& lift, const solve_options& opts,
                                 alternating_trace* trace) {
    const std::size_t k = g.circles.size();
    const std::size_t m = g.m;
    // trivial extensions
    std::vector<std::vector<cplx>> cur(k), cesaro(k);
    for (std::size_t i = 0; i < k; ++i) {
        cur[i] = exposed[i];
        for (std::size_t j = 0; j < m; ++j)
            if (g.covered[i][j]) cur[i][j] = 0;
        cesaro[i].assign(m, 0);
    }
    if (k == 1) {
        return harmonic_solution(domain, g.circles, cur, lift, 1, 0.0, sup_abs(cur));
    }

    int iterations = 0;
    double discrepancy = 0;
    std::vector<std::vector<cplx>> next(k);
    for (int n = 1; n <= opts.n_max; ++n) {
        // one Jacobi sweep of the exchange
        for (std::size_t i = 0; i < k; ++i) {
            next[i] = exposed[i];
            for (std::size_t j = 0; j < m; ++j)
                if (g.covered[i][j])
                    next[i][j] = apply_row(g.rows[i][j], cur[static_cast<std::size_t>(g.src[i][j])]);
        }
        cur.swap(next);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < m; ++j) cesaro[i][j] += cur[i][j];
        iterations = n;
        // overlap discrepancy of the Cesaro means, measured on the seam arcs
        discrepancy = 0;
        const double inv_n = 1.0 / n;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (g.covered[i][j]) {
                    cplx own = cesaro[i][j] * inv_n;
                    cplx other = 0;
                    const auto& src_data = cesaro[static_cast<std::size_t>(g.src[i][j])];
                    for (std::size_t l = 0; l < m; ++l)
                        other += g.rows[i][j][l] * src_data[l];
                    other *= inv_n;
                    discrepancy = std::max(discrepancy, std::abs(own - other));
                }
        if (trace) {
            trace->overlap_discrepancy.push_back(discrepancy);
            trace->data_sup_norm.push_back(sup_abs(cur));
        }
        if (discrepancy < opts.tol) break;
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m; ++j) cesaro[i][j] /= static_cast<double>(iterations);
    double sup = sup_abs(cesaro);
    return harmonic_solution(domain, g.circles, std::move(cesaro), lift, iterations, discrepancy,
                             sup);
}

void check_connected_overlap(const std::vector<disk>& disks, double scale) {
    const std::size_t k = disks.size();
    std::vector<std::size_t> parent(k);
    for (std::size_t i = 0; i < k; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (std::abs(disks[i].center - disks[j].center) <
                disks[i].radius + disks[j].radius - 1e-9 * scale)
                parent[find(i)] = find(j);
    for (std::size_t i = 0; i < k; ++i)
        if (find(i) != find(0))
            fail(errc::invalid_decomposition,
                 "alternating solve needs pieces with overlapping interiors");
}

}  // namespace

// ---------------------------------------------------------------------------

cplx harmonic_poly::operator()(cplx z) const {
    auto b = basis_at(z);
    cplx s = 0;
    for (int i = 0; i < basis_size; ++i) s += coef[i] * b[i];
    return s;
}

bool harmonic_poly::nonzero() const {
    for (const auto& c : coef)
        if (c != cplx(0)) return true;
    return false;
}

std::array<double, harmonic_poly::basis_size> harmonic_poly::basis_at(cplx z) {
    double x = z.real(), y = z.imag();
    return {1.0, x, y, x * x - y * y, x * y, x * x * x - 3 * x * y * y, 3 * x * x * y - y * y * y};
}

harmonic_poly fit_harmonic_lift(const std::vector<cplx>& points, const std::vector<cplx>& values) {
    const int n = static_cast<int>(points.size());
    Eigen::MatrixXd A(n, harmonic_poly::basis_size);
    Eigen::VectorXd br(n), bi(n);
    for (int i = 0; i < n; ++i) {
        auto basis = harmonic_poly::basis_at(points[static_cast<std::size_t>(i)]);
        for (int j = 0; j < harmonic_poly::basis_size; ++j) A(i, j) = basis[static_cast<std::size_t>(j)];
        br(i) = values[static_cast<std::size_t>(i)].real();
        bi(i) = values[static_cast<std::size_t>(i)].imag();
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::VectorXd xr = svd.solve(br), xi = svd.solve(bi);
    harmonic_poly p;
    for (int j = 0; j < harmonic_poly::basis_size; ++j) p.coef[static_cast<std::size_t>(j)] = cplx(xr(j), xi(j));
    return p;
}

std::vector<cplx> seam_corners(const std::vector<disk>& disks) {
    std::vector<cplx> corners;
    const std::size_t k = disks.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            cplx d = disks[j].center - disks[i].center;
            double dist = std::abs(d);
            if (dist < 1e-15 || dist > disks[i].radius + disks[j].radius ||
                dist < std::abs(disks[i].radius - disks[j].radius))
                continue;
            double x = (dist * dist + disks[i].radius * disks[i].radius -
                        disks[j].radius * disks[j].radius) /
                       (2 * dist);
            double h2 = disks[i].radius * disks[i].radius - x * x;
            double h = std::sqrt(std::max(0.0, h2));
            cplx u = d / dist;
            for (cplx p : {disks[i].center + x * u + h * cplx(0, 1) * u,
                           disks[i].center + x * u - h * cplx(0, 1) * u}) {
                bool interior = false;
                for (std::size_t o = 0; o < k && !interior; ++o)
                    if (o != i && o != j &&
                        std::abs(p - disks[o].center) < disks[o].radius - 1e-12)
                        interior = true;
                bool dup = false;
                for (cplx q : corners)
                    if (std::abs(p - q) < 1e-12) dup = true;
                if (!interior && !dup) corners.push_back(p);
            }
        }
    return corners;
}

harmonic_solution::harmonic_solution(compact_set domain, std::vector<disk> circles,
                                     std::vector<std::vector<cplx>> data, harmonic_poly lift,
                                     int iterations, double overlap_discrepancy, double sup_norm)
    : domain_(std::move(domain)),
      circles_(std::move(circles)),
      data_(std::move(data)),
      lift_(lift),
      iterations_(iterations),
      overlap_discrepancy_(overlap_discrepancy),
      sup_norm_(sup_norm) {}

cplx harmonic_solution::evaluate(cplx z) const {
    int best = -1;
    double best_depth = 0;
    for (std::size_t i = 0; i < circles_.size(); ++i) {
        double depth = circles_[i].radius - std::abs(z - circles_[i].center);
        if (depth > best_depth) {
            best_depth = depth;
            best = static_cast<int>(i);
        }
    }
    const double m = static_cast<double>(data_[0].size());
    if (best < 0) {
        // boundary fallback: linear interpolation of the nearest circle trace
        double best_gap = 1e300;
        std::size_t bi = 0;
        for (std::size_t i = 0; i < circles_.size(); ++i) {
            double gap = std::abs(std::abs(z - circles_[i].center) - circles_[i].radius);
            if (gap < best_gap) {
                best_gap = gap;
                bi = i;
            }
        }
        if (best_gap > 1e-6 * domain_.scale())
            fail(errc::domain, "evaluation point lies outside the domain");
        double t = std::arg(z - circles_[bi].center);
        if (t < 0) t += kTwoPi;
        double u = t / kTwoPi * m;
        std::size_t j0 = static_cast<std::size_t>(std::floor(u)) % data_[bi].size();
        std::size_t j1 = (j0 + 1) % data_[bi].size();
        double w = u - std::floor(u);
        return (1 - w) * data_[bi][j0] + w * data_[bi][j1] + lift_(z);
    }
    double depth_eps = 1e-12 * domain_.scale();
    if (best_depth <= depth_eps) {
        // on the circle itself: return the trace
        double t = std::arg(z - circles_[static_cast<std::size_t>(best)].center);
        if (t < 0) t += kTwoPi;
        double u = t / kTwoPi * m;
        std::size_t j0 = static_cast<std::size_t>(std::floor(u)) % data_[static_cast<std::size_t>(best)].size();
        return data_[static_cast<std::size_t>(best)][j0] + lift_(z);
    }
    auto row = poisson_weights(circles_[static_cast<std::size_t>(best)],
                               data_[static_cast<std::size_t>(best)].size(), z);
    return apply_row(row, data_[static_cast<std::size_t>(best)]) + lift_(z);
}

std::vector<boundary_samples> harmonic_solution::boundary_trace() const {
    std::vector<boundary_samples> out;
    for (std::size_t i = 0; i < circles_.size(); ++i) {
        std::vector<cplx> vals = data_[i];
        if (lift_.nonzero()) {
            for (std::size_t j = 0; j < vals.size(); ++j) {
                double t = kTwoPi * static_cast<double>(j) / static_cast<double>(vals.size());
                vals[j] += lift_(circles_[i].center +
                                 circles_[i].radius * cplx(std::cos(t), std::sin(t)));
            }
        }
        out.emplace_back(circles_[i], std::move(vals));
    }
    return out;
}

// ---------------------------------------------------------------------------

harmonic_solution alternating_solve(const compact_set& domain, const boundary_fn& f,
                                    const solve_options& opts, alternating_trace* trace) {
    auto disks = domain.plain_disks();
    if (disks.size() < 2)
        fail(errc::invalid_decomposition,
             "alternating solve needs a union of at least two disks");
    check_connected_overlap(disks, domain.scale());
    piece_grid g = build_grid(disks, static_cast<std::size_t>(opts.samples), domain.scale());

    // data trace and seam handling
    std::vector<std::vector<cplx>> exposed(disks.size());
    double fsup = 0;
    for (std::size_t i = 0; i < disks.size(); ++i) {
        exposed[i].resize(g.m);
        for (std::size_t j = 0; j < g.m; ++j) {
            exposed[i][j] = f(g.points[i][j]);
            if (!g.covered[i][j]) fsup = std::max(fsup, std::abs(exposed[i][j]));
        }
    }
    auto corners = seam_corners(disks);
    harmonic_poly lift;
    double seam_tol = 1e-9 * std::max(1.0, fsup);
    double worst = 0;
    for (cplx c : corners) worst = std::max(worst, std::abs(f(c)));
    if (worst > seam_tol) {
        if (!opts.seam_lift)
            fail(errc::seam_condition,
                 "boundary data must vanish at the seam corners (lift disabled)");
        std::vector<cplx> vals;
        for (cplx c : corners) vals.push_back(f(c));
        lift = fit_harmonic_lift(corners, vals);
        double resid = 0;
        for (std::size_t i = 0; i < corners.size(); ++i)
            resid = std::max(resid, std::abs(vals[i] - lift(corners[i])));
        if (resid > seam_tol)
            fail(errc::seam_condition,
                 "seam values are not matched by a harmonic lift; residual " +
                     std::to_string(resid));
        for (std::size_t i = 0; i < disks.size(); ++i)
            for (std::size_t j = 0; j < g.m; ++j) exposed[i][j] -= lift(g.points[i][j]);
    }
    return solve_on_disks(domain, g, exposed, lift, opts, trace);
}

harmonic_solution solve_dirichlet(const compact_set& domain, const boundary_fn& f,
                                  const solve_options& opts, alternating_trace* trace) {
    auto disks = domain.plain_disks();
    if (disks.empty())
        fail(errc::invalid_input,
             "dirichlet solver supports disk and disk-union domains (no cuts or fill)");
    if (disks.size() == 1) {
        piece_grid g = build_grid(disks, static_cast<std::size_t>(opts.samples), domain.scale());
        std::vector<std::vector<cplx>> exposed(1);
        exposed[0].resize(g.m);
        for (std::size_t j = 0; j < g.m; ++j) exposed[0][j] = f(g.points[0][j]);
        return solve_on_disks(domain, g, exposed, harmonic_poly{}, opts, trace);
    }
    return alternating_solve(domain, f, opts, trace);
}

harmonic_solution symmetrization_solve(const compact_set& domain, const boundary_fn& f,
                                       const solve_options& opts) {
    const oriented_line axis{cplx(0, 0), cplx(1, 0)};
    if (!domain.symmetric_under(axis))
        fail(errc::invalid_decomposition,
             "symmetrization solve needs a domain symmetric about the real axis");
    auto disks = domain.plain_disks();
    if (disks.empty())
        fail(errc::invalid_input,
             "symmetrization solver supports disk and disk-union domains");
    // reflection permutation of the circles
    std::vector<std::size_t> perm(disks.size());
    for (std::size_t i = 0; i < disks.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < disks.size(); ++j)
            if (std::abs(std::conj(disks[i].center) - disks[j].center) < 1e-9 * domain.scale() &&
                std::abs(disks[i].radius - disks[j].radius) < 1e-9 * domain.scale()) {
                perm[i] = j;
                found = true;
                break;
            }
        if (!found)
            fail(errc::invalid_decomposition, "disk list is not closed under reflection");
    }
    piece_grid g = build_grid(disks, static_cast<std::size_t>(opts.samples), domain.scale());
    const std::size_t m = g.m;

    std::vector<std::vector<cplx>> data(disks.size());
    double fsup = 0;
    for (std::size_t i = 0; i < disks.size(); ++i) {
        data[i].resize(m);
        for (std::size_t j = 0; j < m; ++j) {
            data[i][j] = f(g.points[i][j]);
            fsup = std::max(fsup, std::abs(data[i][j]));
        }
    }
    // seam lift first so both parity parts vanish at the corners
    auto corners = seam_corners(disks);
    harmonic_poly lift;
    double seam_tol = 1e-9 * std::max(1.0, fsup);
    double worst = 0;
    for (cplx c : corners) worst = std::max(worst, std::abs(f(c)));
    if (worst > seam_tol) {
        if (!opts.seam_lift)
            fail(errc::seam_condition,
                 "boundary data must vanish at the seam corners (lift disabled)");
        std::vector<cplx> vals;
        for (cplx c : corners) vals.push_back(f(c));
        lift = fit_harmonic_lift(corners, vals);
        double resid = 0;
        for (std::size_t i = 0; i < corners.size(); ++i)
            resid = std::max(resid, std::abs(vals[i] - lift(corners[i])));
        if (resid > seam_tol)
            fail(errc::seam_condition, "seam values are not matched by a harmonic lift");
        for (std::size_t i = 0; i < disks.size(); ++i)
            for (std::size_t j = 0; j < m; ++j) data[i][j] -= lift(g.points[i][j]);
    }

    // reflected copy of the data: value at the mirror point
    auto reflected = [&](const std::vector<std::vector<cplx>>& d) {
        std::vector<std::vector<cplx>> r(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) {
            r[i].resize(m);
            for (std::size_t j = 0; j < m; ++j) r[i][j] = d[perm[i]][(m - j) % m];
        }
        return r;
    };

    // transcription iterations with Cesaro means; each parity part is a
    // fixed point after one pass, which the loop verifies
    auto transcribe = [&](const std::vector<std::vector<cplx>>& part, double sign) {
        std::vector<std::vector<cplx>> cur = part, cesaro(part.size());
        for (std::size_t i = 0; i < part.size(); ++i) cesaro[i].assign(m, 0);
        int its = 0;
        double change = 0;
        for (int n = 1; n <= 64; ++n) {
            auto refl = reflected(cur);
            std::vector<std::vector<cplx>> next = cur;
            change = 0;
            for (std::size_t i = 0; i < part.size(); ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    if (g.points[i][j].imag() < -1e-12 * domain.scale()) {
                        next[i][j] = sign * refl[i][j];
                        change = std::max(change, std::abs(next[i][j] - cur[i][j]));
                    }
                }
            cur.swap(next);
            for (std::size_t i = 0; i < part.size(); ++i)
                for (std::size_t j = 0; j < m; ++j) cesaro[i][j] += cur[i][j];
            its = n;
            if (change < 1e-12 * std::max(1.0, fsup)) break;
        }
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = 0; j < m; ++j) cesaro[i][j] /= static_cast<double>(its);
        return std::pair{cesaro, its};
    };

    auto refl0 = reflected(data);
    std::vector<std::vector<cplx>> even(disks.size()), odd(disks.size());
    for (std::size_t i = 0; i < disks.size(); ++i) {
        even[i].resize(m);
        odd[i].resize(m);
        for (std::size_t j = 0; j < m; ++j) {
            even[i][j] = 0.5 * (data[i][j] + refl0[i][j]);
            odd[i][j] = 0.5 * (data[i][j] - refl0[i][j]);
        }
    }
    auto [even_fixed, its_even] = transcribe(even, +1.0);
    auto [odd_fixed, its_odd] = transcribe(odd, -1.0);

    solve_options inner = opts;
    alternating_trace tr;
    auto solve_part = [&](const std::vector<std::vector<cplx>>& part) {
        return solve_on_disks(domain, g, part, harmonic_poly{}, inner, &tr);
    };
    harmonic_solution se = solve_part(even_fixed);
    harmonic_solution so = solve_part(odd_fixed);

    // combine: the exchanged data of the two parity solves add linearly
    std::vector<std::vector<cplx>> combined(disks.size());
    auto te = se.boundary_trace();
    auto to = so.boundary_trace();
    for (std::size_t i = 0; i < disks.size(); ++i) {
        combined[i].resize(m);
        for (std::size_t j = 0; j < m; ++j)
            combined[i][j] = te[i].values()[j] + to[i].values()[j];
    }
    int its = std::max(se.iterations_used(), so.iterations_used()) + its_even + its_odd;
    double disc = std::max(se.overlap_discrepancy(), so.overlap_discrepancy());
    double sup = 0;
    for (const auto& d : combined)
        for (const auto& v : d) sup = std::max(sup, std::abs(v));
    return harmonic_solution(domain, disks, std::move(combined), lift, its, disc, sup);
}

}  // namespace planarcalc
