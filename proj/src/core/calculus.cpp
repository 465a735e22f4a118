#include "calculus.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "harmonic_calculus.hpp"

namespace planarcalc {

void check_finite(const cmatrix& x) {
    if (x.rows() != x.cols() || x.rows() == 0)
        fail(errc::invalid_input, "matrix must be square and nonempty");
    if (!x.allFinite()) fail(errc::invalid_input, "matrix entries must be finite");
}

double operator_norm(const cmatrix& x) {
    if (x.size() == 0) return 0;
    return x.jacobiSvd().singularValues()(0);
}

double spectrum_t::radius() const {
    double r = 0;
    for (const auto& p : points) r = std::max(r, std::abs(p));
    return r;
}

std::vector<cluster> spectrum_clusters(const cmatrix& x) {
    check_finite(x);
    Eigen::ComplexEigenSolver<cmatrix> es(x, false);
    if (es.info() != Eigen::Success) fail(errc::internal, "eigenvalue iteration failed");
    std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + x.rows());
    std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    const double tol = 1e-8 * std::max(operator_norm(x), 1e-300);

    // union-find at the clustering tolerance
    const std::size_t n = ev.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(ev[i] - ev[j]) <= tol) parent[find(i)] = find(j);

    std::vector<cluster> clusters;
    std::vector<int> label(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find(i);
        if (label[r] < 0) {
            label[r] = static_cast<int>(clusters.size());
            clusters.push_back({});
        }
        auto& c = clusters[static_cast<std::size_t>(label[r])];
        c.center += ev[i];
        c.multiplicity += 1;
    }
    for (auto& c : clusters) c.center /= static_cast<double>(c.multiplicity);
    // one reassignment pass: nearest center, distance ties to the lower index
    std::vector<cluster> out(clusters.size());
    for (std::size_t k = 0; k < clusters.size(); ++k) out[k].center = clusters[k].center;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = 0;
        double bd = 1e300;
        for (std::size_t k = 0; k < clusters.size(); ++k) {
            double d = std::abs(ev[i] - clusters[k].center);
            if (d < bd - 1e-30) {
                bd = d;
                best = k;
            }
        }
        out[best].multiplicity += 1;
        out[best].radius = std::max(out[best].radius, bd);
    }
    std::vector<cluster> nonempty;
    for (auto& c : out)
        if (c.multiplicity > 0) nonempty.push_back(c);
    return nonempty;
}

spectrum_t spectrum(const cmatrix& x) {
    spectrum_t sp;
    for (const auto& c : spectrum_clusters(x))
        for (int i = 0; i < c.multiplicity; ++i) sp.points.push_back(c.center);
    return sp;
}

double spectral_radius(const cmatrix& x) { return spectrum(x).radius(); }

cmatrix resolvent(const cmatrix& x, cplx z) {
    check_finite(x);
    const double scale = std::max(operator_norm(x), 1e-300);
    double dist = 1e300;
    for (const auto& p : spectrum(x).points) dist = std::min(dist, std::abs(z - p));
    if (dist <= 1e-10 * scale)
        fail(errc::near_singular, "resolvent point is within " + std::to_string(dist) +
                                      " of the spectrum (scale " + std::to_string(scale) + ")");
    const long n = x.rows();
    cmatrix A = z * cmatrix::Identity(n, n) - x;
    return A.partialPivLu().solve(cmatrix::Identity(n, n));
}

calc_contour default_contour(const cmatrix& x, double margin_factor) {
    auto clusters = spectrum_clusters(x);
    const double scale = std::max(operator_norm(x), 1.0);
    // merge clusters that cannot be separated by disjoint circles
    bool merged = true;
    while (merged && clusters.size() > 1) {
        merged = false;
        for (std::size_t i = 0; i < clusters.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < clusters.size() && !merged; ++j) {
                double gap = std::abs(clusters[i].center - clusters[j].center);
                double need = std::max(clusters[i].radius, clusters[j].radius) + 1e-6 * scale;
                if (0.45 * gap > need) continue;
                cluster m;
                m.multiplicity = clusters[i].multiplicity + clusters[j].multiplicity;
                m.center = (clusters[i].center * double(clusters[i].multiplicity) +
                            clusters[j].center * double(clusters[j].multiplicity)) /
                           double(m.multiplicity);
                m.radius = std::max(std::abs(clusters[i].center - m.center) + clusters[i].radius,
                                    std::abs(clusters[j].center - m.center) + clusters[j].radius);
                clusters[i] = m;
                clusters.erase(clusters.begin() + static_cast<long>(j));
                merged = true;
            }
    }
    calc_contour ct;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        double r = clusters[i].radius + std::max(margin_factor * scale, 10.0 * clusters[i].radius);
        for (std::size_t j = 0; j < clusters.size(); ++j) {
            if (j == i) continue;
            r = std::min(r, 0.45 * std::abs(clusters[i].center - clusters[j].center));
        }
        r = std::max(r, clusters[i].radius + 1e-6 * scale);
        ct.circles.push_back({clusters[i].center, r});
    }
    return ct;
}

namespace {

cmatrix contour_sum(const cmatrix& x, const holo_fn& f, const calc_contour::circle& c, int nodes,
                    int offset, int stride) {
    // trapezoidal nodes theta_j = 2 pi (offset + j*stride) / nodes
    const long n = x.rows();
    cmatrix acc = cmatrix::Zero(n, n);
    cmatrix id = cmatrix::Identity(n, n);
    for (int j = offset; j < nodes; j += stride) {
        double t = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(nodes);
        cplx w = std::polar(1.0, t);
        cplx zeta = c.center + c.radius * w;
        cmatrix R = (zeta * id - x).partialPivLu().solve(id);
        acc += f(zeta) * (c.radius * w) * R;
    }
    return acc;
}

}  // namespace

cmatrix holo_calc(const cmatrix& x, const holo_fn& f, const calc_contour& contour) {
    check_finite(x);
    if (contour.circles.empty()) fail(errc::invalid_input, "contour needs at least one circle");
    const long n = x.rows();
    cmatrix total = cmatrix::Zero(n, n);
    for (const auto& c : contour.circles) {
        int nodes = std::max(8, contour.nodes_per_circle);
        cmatrix sum = contour_sum(x, f, c, nodes, 0, 1);
        cmatrix approx = sum / static_cast<double>(nodes);
        double prev_change = 1e300;
        int stagnant = 0;
        while (true) {
            // doubling reuses the previous nodes as the even half
            cmatrix odd = contour_sum(x, f, c, 2 * nodes, 1, 2);
            cmatrix next = (sum + odd) / static_cast<double>(2 * nodes);
            double change = (next - approx).norm();
            double scale = std::max(next.norm(), 1e-30);
            nodes *= 2;
            sum += odd;
            approx = next;
            if (change <= 1e-11 * scale) break;
            // rounding floor of ill-conditioned resolvents: small but no
            // longer improving means more nodes cannot help
            if (change <= 1e-7 * scale && change >= 0.1 * prev_change) {
                if (++stagnant >= 2) break;
            } else {
                stagnant = 0;
            }
            prev_change = change;
            if (nodes >= (1 << 16))
                fail(errc::quadrature_failure,
                     "contour quadrature did not settle within 2^16 nodes (change " +
                         std::to_string(change / scale) + " relative)");
        }
        total += approx;
    }
    return total;
}

cmatrix holo_calc(const cmatrix& x, const holo_fn& f) {
    return holo_calc(x, f, default_contour(x));
}

normality_report is_star_normal(const cmatrix& x) {
    check_finite(x);
    double nx = operator_norm(x);
    if (nx == 0) return {true, 0.0};
    normality_report r;
    r.defect = operator_norm(x.adjoint() * x - x * x.adjoint()) / (nx * nx);
    r.normal = r.defect <= 1e-10;
    return r;
}

sqrt_report sqrt_superpositive(const cmatrix& x) {
    check_finite(x);
    if (!superpositive_check(x))
        fail(errc::precondition,
             "matrix is not superpositive: spectrum leaves the cone Re z >= 0, |Im z| <= Re z");
    const double scale = std::max(operator_norm(x), 1.0);
    const long n = x.rows();
    const cmatrix id = cmatrix::Identity(n, n);
    auto principal_sqrt = [](cplx z) { return std::sqrt(z); };

    // contour for the shifted matrix x + eps: the default circles, shrunk
    // where needed to stay clear of the branch cut (-inf, 0]
    auto shifted_contour = [&](const cmatrix& xs) {
        calc_contour ct = default_contour(xs);
        auto pts = spectrum(xs).points;
        for (auto& c : ct.circles) {
            double d_cut = c.center.real() >= 0 ? std::abs(c.center) : std::abs(c.center.imag());
            double cap = 0.9 * d_cut;
            double enclosed = 0;
            for (const auto& p : pts)
                if (std::abs(p - c.center) < c.radius)
                    enclosed = std::max(enclosed, std::abs(p - c.center));
            double r = std::min(c.radius, cap);
            double rmin = enclosed * 1.2 + 1e-13 * scale;
            if (r < rmin) {
                r = rmin;
                if (r > cap)
                    fail(errc::convergence_failure,
                         "cannot separate a spectral cluster from the square-root branch cut");
            }
            c.radius = r;
        }
        return ct;
    };

    sqrt_report best;
    bool have_prev = false, converged = false;
    cmatrix prev;
    double prev_step = 0;
    const double conv_tol = 1e-8 * std::max(1.0, operator_norm(x));
    int extra = 0;
    for (double eps = 1e-2; eps > 1e-40; eps *= 1e-2) {
        cmatrix xs = x + eps * id;
        cmatrix y;
        try {
            y = holo_calc(xs, principal_sqrt, shifted_contour(xs));
        } catch (const error& e) {
            if (e.code() != errc::quadrature_failure) throw;
            // the shifted calculus degenerates before the iterates settle
            fail(errc::convergence_failure,
                 "shifted square roots did not settle before the calculus became "
                 "numerically singular; no superpositive square root was reached");
        }
        double defect = operator_norm(y * y - x) / std::max(1.0, operator_norm(x));
        if (!y.allFinite())
            fail(errc::convergence_failure, "shifted square-root iterates diverged");
        if (have_prev) {
            double step = operator_norm(y - prev);
            if (step > 4.0 * std::max(prev_step, conv_tol) && prev_step > 0)
                fail(errc::convergence_failure,
                     "shifted square roots diverge as the shift decreases; "
                     "the matrix has no superpositive square root");
            if (step < conv_tol) converged = true;
            prev_step = step;
        }
        prev = y;
        have_prev = true;
        if (!best.root.size() || defect < best.defect) {
            best.root = y;
            best.defect = defect;
            best.epsilon = eps;
        } else if (converged) {
            // defect stopped improving
            break;
        }
        if (converged && ++extra >= 3) break;
    }
    if (!converged)
        fail(errc::convergence_failure,
             "shifted square roots did not settle before the shift underflowed");
    best.root_superpositive = superpositive_check(best.root);
    return best;
}

}  // namespace planarcalc
