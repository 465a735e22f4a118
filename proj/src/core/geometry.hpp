#ifndef PLANARCALC_GEOMETRY_HPP
#define PLANARCALC_GEOMETRY_HPP

#include <complex>
#include <memory>
#include <optional>
#include <vector>

namespace planarcalc {

using cplx = std::complex<double>;

inline double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

struct disk {
    cplx center{};
    double radius = 0.0;
    bool contains(cplx z, double tol = 0.0) const { return std::abs(z - center) <= radius + tol; }
};

/** Closed half-plane bounded by the line through `point` along `dir`;
 * keep_left selects the side to the left of the direction of travel. */
struct halfplane {
    cplx point{};
    cplx dir{1.0, 0.0};
    bool keep_left = true;
    double signed_side(cplx z) const {
        double s = cross(dir / std::abs(dir), z - point);
        return keep_left ? s : -s;
    }
    bool contains(cplx z, double tol = 0.0) const { return signed_side(z) >= -tol; }
};

struct oriented_line {
    cplx point{};
    cplx dir{1.0, 0.0};
    /** Reflection across the line. */
    cplx reflect(cplx z) const {
        cplx u = dir / std::abs(dir);
        return point + u * std::conj((z - point) / u);
    }
};

/** One piece of a boundary contour: a circular arc (z = center + r e^{it},
 * t in [t0, t1], traversed with t increasing when ccw) or a straight segment.
 * Pieces are directed so that the set lies on the left. */
struct contour_piece {
    bool is_arc = false;
    // arc data
    cplx center{};
    double radius = 0.0;
    double t0 = 0.0, t1 = 0.0;
    bool ccw = true;
    // endpoints in traversal order (also set for arcs)
    cplx start{}, end{};

    double length() const;
    cplx point_at(double s) const;    // s in [0, length]
    cplx tangent_at(double s) const;  // unit tangent in traversal direction
};

struct contour {
    std::vector<contour_piece> pieces;
    /** +1 when the curve runs counterclockwise (encloses the set),
     * -1 for a clockwise hole boundary. */
    int orientation = 1;

    double length() const;
    cplx point_at(double s) const;
    /** Unit normal pointing away from the set (right of the tangent). */
    cplx outward_normal_at(double s) const;
    /** Signed area by Green's theorem (arcs handled exactly). */
    double signed_area() const;
    std::optional<disk> as_circle() const;
};

/** Occupancy grid used for hole detection: flood fill of the complement
 * from the bounding-box border. */
struct hole_grid {
    double x0 = 0, y0 = 0, hx = 0, hy = 0;
    int nx = 0, ny = 0;
    // 0 = in base set, 1 = unbounded complement, 2 = bounded complement (hole)
    std::vector<std::uint8_t> kind;
    int lookup(cplx z) const;  // -1 when outside the grid
};

/** Compact planar set built constructively from closed disks, half-plane
 * cuts and hole filling. The realized point set of one cell is
 * (union of its disks) intersected with its cuts; the set is the union of
 * its cells (several cells only arise from symmetrizing a cut set), with
 * bounded complementary components adjoined when hole-filled.
 * Immutable after construction. */
class compact_set {
  public:
    struct cell {
        std::vector<disk> disks;
        std::vector<halfplane> cuts;
    };

    static compact_set disk_union(const std::vector<disk>& disks);

    compact_set cut(const halfplane& hp) const;
    compact_set symmetrized(const oriented_line& axis) const;
    compact_set filled(int grid_resolution = 1024) const;

    bool contains(cplx z) const;
    std::vector<contour> boundary() const;

    bool is_filled() const { return filled_; }
    const std::vector<cell>& cells() const { return cells_; }
    /** Disk list when the set is a plain union of disks (single cell,
     * no cuts, not filled); empty otherwise. */
    std::vector<disk> plain_disks() const;

    /** Axis-aligned bounding box of the disk union, as (lo, hi) corners. */
    std::pair<cplx, cplx> bounding_box() const;
    double scale() const { return scale_; }

    /** True when reflection across the axis maps the set onto itself
     * (structural check on disks and cuts). */
    bool symmetric_under(const oriented_line& axis) const;

  private:
    compact_set() = default;
    void finish_construction();
    bool base_contains(cplx z, double tol) const;
    std::shared_ptr<const hole_grid> build_hole_grid(int resolution) const;

    std::vector<cell> cells_;
    bool filled_ = false;
    std::shared_ptr<const hole_grid> holes_;  // set when filled_
    double scale_ = 1.0;
};

}  // namespace planarcalc

#endif
