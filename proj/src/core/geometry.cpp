#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

#include "error.hpp"
#include "parallel.hpp"

namespace planarcalc {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double norm_angle(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0) t += kTwoPi;
    return t;
}

struct line_key {
    // canonical (angle mod pi, signed offset) pair for deduplication
    double ang;
    double off;
};

line_key canon_line(cplx point, cplx dir) {
    cplx u = dir / std::abs(dir);
    double ang = std::atan2(u.imag(), u.real());
    if (ang < -M_PI / 2 || ang >= M_PI / 2) {
        u = -u;
        ang = std::atan2(u.imag(), u.real());
    }
    return {ang, cross(u, point)};
}

}  // namespace

// ---------------------------------------------------------------------------
// contour pieces

double contour_piece::length() const {
    if (is_arc) return radius * (t1 - t0);
    return std::abs(end - start);
}

cplx contour_piece::point_at(double s) const {
    if (!is_arc) {
        double f = length() > 0 ? s / length() : 0.0;
        return start + f * (end - start);
    }
    double t = ccw ? t0 + s / radius : t1 - s / radius;
    return center + radius * cplx(std::cos(t), std::sin(t));
}

cplx contour_piece::tangent_at(double s) const {
    if (!is_arc) {
        cplx d = end - start;
        return d / std::abs(d);
    }
    double t = ccw ? t0 + s / radius : t1 - s / radius;
    cplx rad(std::cos(t), std::sin(t));
    return ccw ? cplx(0, 1) * rad : cplx(0, -1) * rad;
}

double contour::length() const {
    double L = 0;
    for (const auto& p : pieces) L += p.length();
    return L;
}

cplx contour::point_at(double s) const {
    double L = length();
    s = std::fmod(s, L);
    if (s < 0) s += L;
    for (const auto& p : pieces) {
        if (s <= p.length()) return p.point_at(s);
        s -= p.length();
    }
    return pieces.back().end;
}

cplx contour::outward_normal_at(double s) const {
    double L = length();
    s = std::fmod(s, L);
    if (s < 0) s += L;
    for (const auto& p : pieces) {
        if (s <= p.length()) {
            cplx tau = p.tangent_at(s);
            return cplx(0, -1) * tau;  // set on the left, outward to the right
        }
        s -= p.length();
    }
    return {1, 0};
}

double contour::signed_area() const {
    // Green's theorem: A = 1/2 integral (x dy - y dx); exact per piece.
    double A = 0;
    for (const auto& p : pieces) {
        if (!p.is_arc) {
            A += 0.5 * cross(p.start, p.end);
        } else {
            // chord triangle plus circular segment
            double span = p.ccw ? (p.t1 - p.t0) : -(p.t1 - p.t0);
            A += 0.5 * cross(p.start, p.end);
            A += 0.5 * p.radius * p.radius * (span - std::sin(span));
        }
    }
    return A;
}

std::optional<disk> contour::as_circle() const {
    if (pieces.size() != 1 || !pieces.front().is_arc) return std::nullopt;
    const auto& p = pieces.front();
    if (std::abs(p.t1 - p.t0 - kTwoPi) > 1e-9) return std::nullopt;
    return disk{p.center, p.radius};
}

// ---------------------------------------------------------------------------
// hole grid

int hole_grid::lookup(cplx z) const {
    int i = static_cast<int>(std::floor((z.real() - x0) / hx));
    int j = static_cast<int>(std::floor((z.imag() - y0) / hy));
    if (i < 0 || j < 0 || i >= nx || j >= ny) return -1;
    return kind[static_cast<std::size_t>(j) * nx + i];
}

// ---------------------------------------------------------------------------
// compact_set construction

compact_set compact_set::disk_union(const std::vector<disk>& disks) {
    if (disks.empty()) fail(errc::invalid_input, "disk union needs at least one disk");
    for (const auto& d : disks)
        if (!(d.radius > 0) || !std::isfinite(d.radius) || !std::isfinite(std::abs(d.center)))
            fail(errc::invalid_input, "disk radius must be positive and finite");
    compact_set s;
    s.cells_.push_back(cell{disks, {}});
    s.finish_construction();
    return s;
}

void compact_set::finish_construction() {
    auto [lo, hi] = bounding_box();
    scale_ = std::max(1.0, std::abs(hi - lo));
}

std::pair<cplx, cplx> compact_set::bounding_box() const {
    double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
    for (const auto& c : cells_)
        for (const auto& d : c.disks) {
            x0 = std::min(x0, d.center.real() - d.radius);
            x1 = std::max(x1, d.center.real() + d.radius);
            y0 = std::min(y0, d.center.imag() - d.radius);
            y1 = std::max(y1, d.center.imag() + d.radius);
        }
    return {cplx(x0, y0), cplx(x1, y1)};
}

bool compact_set::base_contains(cplx z, double tol) const {
    for (const auto& c : cells_) {
        bool in_disk = false;
        for (const auto& d : c.disks)
            if (d.contains(z, tol)) {
                in_disk = true;
                break;
            }
        if (!in_disk) continue;
        bool in_cuts = true;
        for (const auto& h : c.cuts)
            if (!h.contains(z, tol)) {
                in_cuts = false;
                break;
            }
        if (in_cuts) return true;
    }
    return false;
}

bool compact_set::contains(cplx z) const {
    double tol = 1e-12 * scale_;
    if (base_contains(z, tol)) return true;
    if (filled_ && holes_ && holes_->lookup(z) == 2) return true;
    return false;
}

compact_set compact_set::cut(const halfplane& hp) const {
    if (filled_)
        fail(errc::invalid_input, "cannot cut a hole-filled set; cut before filling");
    compact_set s = *this;
    for (auto& c : s.cells_) c.cuts.push_back(hp);
    // nonemptiness probe on a coarse grid
    auto [lo, hi] = s.bounding_box();
    bool nonempty = false;
    const int n = 512;
    for (int j = 0; j <= n && !nonempty; ++j)
        for (int i = 0; i <= n; ++i) {
            cplx z(lo.real() + (hi.real() - lo.real()) * i / n,
                   lo.imag() + (hi.imag() - lo.imag()) * j / n);
            if (s.base_contains(z, 0)) {
                nonempty = true;
                break;
            }
        }
    if (!nonempty) fail(errc::degenerate_geometry, "half-plane cut leaves an empty set");
    s.finish_construction();
    return s;
}

compact_set compact_set::symmetrized(const oriented_line& axis) const {
    if (filled_)
        fail(errc::invalid_input, "cannot symmetrize a hole-filled set; symmetrize before filling");
    compact_set s;
    s.cells_ = cells_;
    for (const auto& c : cells_) {
        cell rc;
        for (const auto& d : c.disks) rc.disks.push_back({axis.reflect(d.center), d.radius});
        for (const auto& h : c.cuts) {
            // reflect two points of the boundary line; reflection reverses
            // orientation, so the kept side flips
            cplx p = axis.reflect(h.point);
            cplx q = axis.reflect(h.point + h.dir);
            rc.cuts.push_back({p, q - p, !h.keep_left});
        }
        s.cells_.push_back(std::move(rc));
    }
    // drop mirrored cells that equal an original one (within tolerance)
    auto cell_eq = [](const cell& a, const cell& b) {
        if (a.disks.size() != b.disks.size() || a.cuts.size() != b.cuts.size()) return false;
        for (const auto& da : a.disks) {
            bool found = false;
            for (const auto& db : b.disks)
                if (std::abs(da.center - db.center) < 1e-9 && std::abs(da.radius - db.radius) < 1e-9)
                    found = true;
            if (!found) return false;
        }
        for (const auto& ha : a.cuts) {
            auto ka = canon_line(ha.point, ha.dir);
            bool found = false;
            for (const auto& hb : b.cuts) {
                auto kb = canon_line(hb.point, hb.dir);
                if (std::abs(ka.ang - kb.ang) < 1e-9 && std::abs(ka.off - kb.off) < 1e-9 &&
                    ha.signed_side(ha.point + cplx(0, 1)) * hb.signed_side(hb.point + cplx(0, 1)) >= 0)
                    found = true;
            }
            if (!found) return false;
        }
        return true;
    };
    std::vector<cell> dedup;
    for (const auto& c : s.cells_) {
        bool dup = false;
        for (const auto& e : dedup)
            if (cell_eq(c, e)) {
                dup = true;
                break;
            }
        if (!dup) dedup.push_back(c);
    }
    s.cells_ = std::move(dedup);
    // merge cut-free cells into one disk list
    bool all_plain = true;
    for (const auto& c : s.cells_)
        if (!c.cuts.empty()) all_plain = false;
    if (all_plain && s.cells_.size() > 1) {
        cell merged;
        for (const auto& c : s.cells_)
            merged.disks.insert(merged.disks.end(), c.disks.begin(), c.disks.end());
        s.cells_ = {merged};
    }
    s.finish_construction();
    return s;
}

bool compact_set::symmetric_under(const oriented_line& axis) const {
    // probe membership agreement under reflection
    auto [lo, hi] = bounding_box();
    const int n = 64;
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) {
            cplx z(lo.real() + (hi.real() - lo.real()) * i / n,
                   lo.imag() + (hi.imag() - lo.imag()) * j / n);
            if (contains(z) != contains(axis.reflect(z))) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// hole filling

std::shared_ptr<const hole_grid> compact_set::build_hole_grid(int resolution) const {
    auto [lo, hi] = bounding_box();
    cplx pad = 0.05 * (hi - lo) + cplx(1e-9, 1e-9);
    lo -= pad;
    hi += pad;
    auto g = std::make_shared<hole_grid>();
    g->nx = resolution;
    g->ny = resolution;
    g->x0 = lo.real();
    g->y0 = lo.imag();
    g->hx = (hi.real() - lo.real()) / resolution;
    g->hy = (hi.imag() - lo.imag()) / resolution;
    g->kind.assign(static_cast<std::size_t>(g->nx) * g->ny, 2);
    parallel_for(g->ny, [&](long j0, long j1) {
        for (long j = j0; j < j1; ++j)
            for (int i = 0; i < g->nx; ++i) {
                cplx z(g->x0 + (i + 0.5) * g->hx, g->y0 + (j + 0.5) * g->hy);
                if (base_contains(z, 0)) g->kind[static_cast<std::size_t>(j) * g->nx + i] = 0;
            }
    });
    // flood fill the unbounded complement from the border
    std::deque<std::pair<int, int>> queue;
    auto push = [&](int i, int j) {
        std::size_t k = static_cast<std::size_t>(j) * g->nx + i;
        if (g->kind[k] == 2) {
            g->kind[k] = 1;
            queue.emplace_back(i, j);
        }
    };
    for (int i = 0; i < g->nx; ++i) {
        push(i, 0);
        push(i, g->ny - 1);
    }
    for (int j = 0; j < g->ny; ++j) {
        push(0, j);
        push(g->nx - 1, j);
    }
    while (!queue.empty()) {
        auto [i, j] = queue.front();
        queue.pop_front();
        if (i > 0) push(i - 1, j);
        if (i + 1 < g->nx) push(i + 1, j);
        if (j > 0) push(i, j - 1);
        if (j + 1 < g->ny) push(i, j + 1);
    }
    return g;
}

compact_set compact_set::filled(int grid_resolution) const {
    compact_set s = *this;
    s.filled_ = true;
    s.holes_ = build_hole_grid(grid_resolution);
    s.finish_construction();
    return s;
}

std::vector<disk> compact_set::plain_disks() const {
    if (filled_ || cells_.size() != 1 || !cells_[0].cuts.empty()) return {};
    return cells_[0].disks;
}

// ---------------------------------------------------------------------------
// boundary extraction

namespace {

struct raw_piece {
    contour_piece geo;
};

// circle-circle intersection points
std::vector<cplx> circle_circle(const disk& a, const disk& b) {
    cplx d = b.center - a.center;
    double dist = std::abs(d);
    if (dist < 1e-15) return {};
    if (dist > a.radius + b.radius || dist < std::abs(a.radius - b.radius)) return {};
    double x = (dist * dist + a.radius * a.radius - b.radius * b.radius) / (2 * dist);
    double h2 = a.radius * a.radius - x * x;
    if (h2 < 0) h2 = 0;
    double h = std::sqrt(h2);
    cplx u = d / dist;
    cplx base = a.center + x * u;
    cplx perp = cplx(0, 1) * u;
    if (h == 0) return {base};
    return {base + h * perp, base - h * perp};
}

// circle-line intersection points
std::vector<cplx> circle_line(const disk& a, cplx p, cplx dir) {
    cplx u = dir / std::abs(dir);
    double t0 = ((a.center - p) / u).real();  // projection parameter of center
    cplx foot = p + t0 * u;
    double dist = std::abs(a.center - foot);
    if (dist > a.radius) return {};
    double h = std::sqrt(std::max(0.0, a.radius * a.radius - dist * dist));
    if (h == 0) return {foot};
    return {foot - h * u, foot + h * u};
}

std::optional<cplx> line_line(cplx p1, cplx d1, cplx p2, cplx d2) {
    double den = cross(d1, d2);
    if (std::abs(den) < 1e-14 * std::abs(d1) * std::abs(d2)) return std::nullopt;
    double t = cross(p2 - p1, d2) / den;
    return p1 + t * d1;
}

}  // namespace

std::vector<contour> compact_set::boundary() const {
    // candidate circles and lines across all cells, deduplicated
    std::vector<disk> circles;
    for (const auto& c : cells_)
        for (const auto& d : c.disks) {
            bool dup = false;
            for (const auto& e : circles)
                if (std::abs(e.center - d.center) < 1e-12 * scale_ &&
                    std::abs(e.radius - d.radius) < 1e-12 * scale_)
                    dup = true;
            if (!dup) circles.push_back(d);
        }
    struct line_cand {
        cplx point, dir;
    };
    std::vector<line_cand> lines;
    for (const auto& c : cells_)
        for (const auto& h : c.cuts) {
            auto k = canon_line(h.point, h.dir);
            bool dup = false;
            for (const auto& e : lines) {
                auto k2 = canon_line(e.point, e.dir);
                if (std::abs(k.ang - k2.ang) < 1e-12 && std::abs(k.off - k2.off) < 1e-12 * scale_)
                    dup = true;
            }
            if (!dup) lines.push_back({h.point, h.dir / std::abs(h.dir)});
        }

    const double delta = 1e-7 * scale_;
    std::vector<raw_piece> pieces;

    // arcs from circles
    for (std::size_t ci = 0; ci < circles.size(); ++ci) {
        const disk& d = circles[ci];
        std::vector<double> params;
        for (std::size_t cj = 0; cj < circles.size(); ++cj) {
            if (cj == ci) continue;
            for (cplx p : circle_circle(d, circles[cj]))
                params.push_back(norm_angle(std::arg(p - d.center)));
        }
        for (const auto& ln : lines)
            for (cplx p : circle_line(d, ln.point, ln.dir))
                params.push_back(norm_angle(std::arg(p - d.center)));
        std::sort(params.begin(), params.end());
        params.erase(std::unique(params.begin(), params.end(),
                                 [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                     params.end());
        if (!params.empty() && params.back() > kTwoPi - 1e-12 && params.front() < 1e-12)
            params.pop_back();

        auto probe_arc = [&](double ta, double tb) {
            double tm = 0.5 * (ta + tb);
            cplx m = d.center + d.radius * cplx(std::cos(tm), std::sin(tm));
            cplx n = (m - d.center) / d.radius;  // outward normal of the circle
            bool inner = base_contains(m - delta * n, 0);
            bool outer = base_contains(m + delta * n, 0);
            if (inner == outer) return;  // not a boundary arc
            if (!inner && outer) return;  // set outside its own circle: covered elsewhere
            raw_piece rp;
            rp.geo.is_arc = true;
            rp.geo.center = d.center;
            rp.geo.radius = d.radius;
            rp.geo.t0 = ta;
            rp.geo.t1 = tb;
            rp.geo.ccw = true;
            rp.geo.start = d.center + d.radius * cplx(std::cos(ta), std::sin(ta));
            rp.geo.end = d.center + d.radius * cplx(std::cos(tb), std::sin(tb));
            pieces.push_back(rp);
        };

        if (params.empty()) {
            probe_arc(0.0, kTwoPi);
        } else {
            for (std::size_t k = 0; k < params.size(); ++k) {
                double ta = params[k];
                double tb = (k + 1 < params.size()) ? params[k + 1] : params[0] + kTwoPi;
                if (tb - ta > 1e-12) probe_arc(ta, tb);
            }
        }
    }

    // straight segments from cut lines
    for (const auto& ln : lines) {
        std::vector<double> params;
        for (const auto& d : circles)
            for (cplx p : circle_line(d, ln.point, ln.dir))
                params.push_back(((p - ln.point) / ln.dir).real());
        for (const auto& ln2 : lines) {
            if (&ln2 == &ln) continue;
            if (auto p = line_line(ln.point, ln.dir, ln2.point, ln2.dir))
                params.push_back(((*p - ln.point) / ln.dir).real());
        }
        std::sort(params.begin(), params.end());
        params.erase(std::unique(params.begin(), params.end(),
                                 [&](double a, double b) { return std::abs(a - b) < 1e-12 * scale_; }),
                     params.end());
        cplx left_normal = cplx(0, 1) * ln.dir;
        for (std::size_t k = 0; k + 1 < params.size(); ++k) {
            cplx a = ln.point + params[k] * ln.dir;
            cplx b = ln.point + params[k + 1] * ln.dir;
            cplx m = 0.5 * (a + b);
            bool left = base_contains(m + delta * left_normal, 0);
            bool right = base_contains(m - delta * left_normal, 0);
            if (left == right) continue;
            raw_piece rp;
            rp.geo.is_arc = false;
            // set on the left of the traversal direction
            if (left) {
                rp.geo.start = a;
                rp.geo.end = b;
            } else {
                rp.geo.start = b;
                rp.geo.end = a;
            }
            pieces.push_back(rp);
        }
    }

    if (pieces.empty()) fail(errc::degenerate_geometry, "set has no extractable boundary");

    // stitch directed pieces into closed contours
    const double snap = 1e-9 * scale_;
    std::vector<bool> used(pieces.size(), false);
    std::vector<contour> contours;
    for (std::size_t s0 = 0; s0 < pieces.size(); ++s0) {
        if (used[s0]) continue;
        contour ct;
        std::size_t cur = s0;
        used[cur] = true;
        ct.pieces.push_back(pieces[cur].geo);
        while (true) {
            cplx tip = ct.pieces.back().end;
            if (std::abs(tip - ct.pieces.front().start) < snap && ct.pieces.size() > 0) {
                // closed (single full circles close immediately)
                if (ct.pieces.size() > 1 || ct.pieces.front().is_arc) break;
            }
            std::size_t next = pieces.size();
            double best = snap;
            for (std::size_t j = 0; j < pieces.size(); ++j) {
                if (used[j]) continue;
                double d = std::abs(pieces[j].geo.start - tip);
                if (d < best) {
                    best = d;
                    next = j;
                }
            }
            if (next == pieces.size()) {
                if (std::abs(tip - ct.pieces.front().start) < snap) break;
                fail(errc::internal, "boundary stitching found an open chain");
            }
            used[next] = true;
            ct.pieces.push_back(pieces[next].geo);
        }
        ct.orientation = ct.signed_area() >= 0 ? 1 : -1;
        contours.push_back(std::move(ct));
    }

    // filled sets keep only contours adjacent to the unbounded complement
    if (filled_ && holes_) {
        std::vector<contour> kept;
        for (auto& ct : contours) {
            const auto& p0 = ct.pieces.front();
            double mid = 0.5 * p0.length();
            cplx m = p0.point_at(mid);
            cplx n = cplx(0, -1) * p0.tangent_at(mid);  // away from the set
            cplx q = m + (3.0 * std::max(holes_->hx, holes_->hy)) * n;
            if (holes_->lookup(q) != 2) kept.push_back(std::move(ct));
        }
        contours = std::move(kept);
        if (contours.empty()) fail(errc::degenerate_geometry, "filled set lost all contours");
    }
    return contours;
}

}  // namespace planarcalc
