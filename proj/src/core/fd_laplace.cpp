#include "fd_laplace.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>
#include <limits>

#include "error.hpp"
#include "parallel.hpp"

namespace planarcalc {

namespace {

/** Fraction t in (0, 1] of the leg from an inside point a to an outside
 * point b at which the boundary is crossed, by bisection on membership. */
double crossing_fraction(const compact_set& dom, cplx a, cplx b) {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 48; ++it) {
        double mid = 0.5 * (lo + hi);
        if (dom.contains(a + mid * (b - a)))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double fd_grid::sample(cplx z) const {
    double fx = (z.real() - x0) / h, fy = (z.imag() - y0) / h;
    int i = static_cast<int>(std::floor(fx)), j = static_cast<int>(std::floor(fy));
    if (i < 0 || j < 0 || i + 1 >= nx || j + 1 >= ny)
        return std::numeric_limits<double>::quiet_NaN();
    double wx = fx - i, wy = fy - j;
    double v00 = value(i, j), v10 = value(i + 1, j), v01 = value(i, j + 1),
           v11 = value(i + 1, j + 1);
    return (1 - wx) * (1 - wy) * v00 + wx * (1 - wy) * v10 + (1 - wx) * wy * v01 + wx * wy * v11;
}

std::vector<fd_grid> fd_laplace_solve_many(const compact_set& domain,
                                           const std::vector<boundary_fn>& fs, double h) {
    if (!(h > 0)) fail(errc::invalid_input, "grid step must be positive");
    auto [lo, hi] = domain.bounding_box();
    const double pad = 2.0 * h;
    double x0 = lo.real() - pad, y0 = lo.imag() - pad;
    int nx = static_cast<int>(std::ceil((hi.real() + pad - x0) / h)) + 1;
    int ny = static_cast<int>(std::ceil((hi.imag() + pad - y0) / h)) + 1;
    if (static_cast<long>(nx) * ny > 40'000'000)
        fail(errc::resolution, "grid too large for the finite-difference oracle");

    std::vector<std::uint8_t> inside(static_cast<std::size_t>(nx) * ny, 0);
    auto at = [&](int i, int j) { return static_cast<std::size_t>(j) * nx + i; };
    parallel_for(ny, [&](long j0, long j1) {
        for (long j = j0; j < j1; ++j)
            for (int i = 0; i < nx; ++i)
                inside[at(i, static_cast<int>(j))] =
                    domain.contains(cplx(x0 + i * h, y0 + j * h)) ? 1 : 0;
    });

    // unknown numbering; nodes with a severely clipped leg become Dirichlet
    const double theta_min = 1e-6;
    std::vector<int> index(inside.size(), -1);
    struct leg {
        double theta[4];  // E W N S leg fractions (1 for interior legs)
        cplx cut[4];      // boundary point when theta < 1
        bool dirichlet[4];
    };
    std::vector<leg> legs;
    std::vector<std::pair<int, int>> unknown_nodes;
    const int di[4] = {1, -1, 0, 0};
    const int dj[4] = {0, 0, 1, -1};  // E W N S
    for (int j = 1; j + 1 < ny; ++j)
        for (int i = 1; i + 1 < nx; ++i) {
            if (!inside[at(i, j)]) continue;
            cplx z(x0 + i * h, y0 + j * h);
            leg L{};
            bool degenerate = false;
            for (int d = 0; d < 4; ++d) {
                int ii = i + di[d], jj = j + dj[d];
                L.theta[d] = 1.0;
                L.dirichlet[d] = false;
                if (!inside[at(ii, jj)]) {
                    cplx zb(x0 + ii * h, y0 + jj * h);
                    double t = crossing_fraction(domain, z, zb);
                    if (t < theta_min) degenerate = true;
                    L.theta[d] = t;
                    L.cut[d] = z + t * (zb - z);
                    L.dirichlet[d] = true;
                }
            }
            if (degenerate) continue;  // effectively on the boundary
            index[at(i, j)] = static_cast<int>(unknown_nodes.size());
            unknown_nodes.emplace_back(i, j);
            legs.push_back(L);
        }
    const int n_unknown = static_cast<int>(unknown_nodes.size());
    if (n_unknown < 10)
        fail(errc::resolution, "domain is under-resolved at this grid step");

    // assemble the cut-leg 5-point stencil, scaled by h^2
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(n_unknown) * 5);
    Eigen::MatrixXd B(n_unknown, static_cast<int>(fs.size()));
    B.setZero();
    for (int r = 0; r < n_unknown; ++r) {
        auto [i, j] = unknown_nodes[static_cast<std::size_t>(r)];
        const leg& L = legs[static_cast<std::size_t>(r)];
        double diag = 0;
        for (int axis = 0; axis < 2; ++axis) {
            int dp = axis == 0 ? 0 : 2;  // E/W or N/S pair
            double tp = L.theta[dp], tm = L.theta[dp + 1];
            double cp = 2.0 / (tp * (tp + tm));
            double cm = 2.0 / (tm * (tp + tm));
            diag += cp + cm;
            for (int s = 0; s < 2; ++s) {
                int d = dp + s;
                double c = s == 0 ? cp : cm;
                int ii = i + di[d], jj = j + dj[d];
                if (L.dirichlet[d]) {
                    for (int q = 0; q < static_cast<int>(fs.size()); ++q)
                        B(r, q) += c * fs[static_cast<std::size_t>(q)](L.cut[d]).real();
                } else if (index[at(ii, jj)] >= 0) {
                    trips.emplace_back(r, index[at(ii, jj)], -c);
                } else {
                    // neighbor sits essentially on the boundary: pin to data
                    cplx zb(x0 + ii * h, y0 + jj * h);
                    for (int q = 0; q < static_cast<int>(fs.size()); ++q)
                        B(r, q) += c * fs[static_cast<std::size_t>(q)](zb).real();
                }
            }
        }
        trips.emplace_back(r, r, diag);
    }
    Eigen::SparseMatrix<double> A(n_unknown, n_unknown);
    A.setFromTriplets(trips.begin(), trips.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success)
        fail(errc::resolution, "finite-difference system is singular on this grid");
    Eigen::MatrixXd X(n_unknown, static_cast<int>(fs.size()));
    for (int q = 0; q < static_cast<int>(fs.size()); ++q)
        X.col(q) = lu.solve(Eigen::VectorXd(B.col(q)));

    std::vector<fd_grid> out;
    for (int q = 0; q < static_cast<int>(fs.size()); ++q) {
        fd_grid gq;
        gq.x0 = x0;
        gq.y0 = y0;
        gq.h = h;
        gq.nx = nx;
        gq.ny = ny;
        gq.values.assign(static_cast<std::size_t>(nx) * ny,
                         std::numeric_limits<double>::quiet_NaN());
        gq.interior.assign(static_cast<std::size_t>(nx) * ny, 0);
        for (int r = 0; r < n_unknown; ++r) {
            auto [i, j] = unknown_nodes[static_cast<std::size_t>(r)];
            gq.values[at(i, j)] = X(r, q);
            gq.interior[at(i, j)] = 1;
        }
        // boundary-pinned inside nodes get the data value for interpolation
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                if (inside[at(i, j)] && index[at(i, j)] < 0)
                    gq.values[at(i, j)] = fs[static_cast<std::size_t>(q)](cplx(x0 + i * h, y0 + j * h)).real();
        Eigen::VectorXd resid = A * X.col(q) - B.col(q);
        double scale = std::max(1.0, B.col(q).cwiseAbs().maxCoeff());
        gq.residual = resid.cwiseAbs().maxCoeff() / scale;
        if (gq.residual > 1e-10)
            fail(errc::resolution, "finite-difference residual exceeded 1e-10");
        out.push_back(std::move(gq));
    }
    return out;
}

fd_grid fd_laplace_solve(const compact_set& domain, const boundary_fn& f, double h) {
    return fd_laplace_solve_many(domain, {f}, h).front();
}

}  // namespace planarcalc
