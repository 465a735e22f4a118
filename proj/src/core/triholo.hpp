#ifndef PLANARCALC_TRIHOLO_HPP
#define PLANARCALC_TRIHOLO_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <map>
#include <vector>

namespace planarcalc {

using rational = boost::multiprecision::cpp_rational;

template <typename C>
inline double coef_to_double(const C& c) {
    return static_cast<double>(c);
}
template <>
inline double coef_to_double<rational>(const rational& c) {
    return c.template convert_to<double>();
}

struct monomial {
    int ex = 0, ey = 0, ez = 0;
    int degree() const { return ex + ey + ez; }
    auto operator<=>(const monomial&) const = default;
};

/** Polynomial in (x, y, z) over a coefficient field C (exact rationals by
 * default, doubles in float mode). Zero coefficients are pruned. */
template <typename C>
class basic_tripoly {
  public:
    basic_tripoly() = default;

    void add_term(const monomial& m, const C& c) {
        if (c == C(0)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    const std::map<monomial, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    basic_tripoly operator+(const basic_tripoly& o) const {
        basic_tripoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    basic_tripoly operator-(const basic_tripoly& o) const {
        basic_tripoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, C(0) - c);
        return r;
    }
    basic_tripoly operator*(const basic_tripoly& o) const {
        basic_tripoly r;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_)
                r.add_term({m1.ex + m2.ex, m1.ey + m2.ey, m1.ez + m2.ez}, c1 * c2);
        return r;
    }
    basic_tripoly scaled(const C& s) const {
        basic_tripoly r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }

    /** Partial derivative; axis 0 = x, 1 = y, 2 = z. */
    basic_tripoly derivative(int axis) const {
        basic_tripoly r;
        for (const auto& [m, c] : terms_) {
            monomial d = m;
            int e = axis == 0 ? m.ex : axis == 1 ? m.ey : m.ez;
            if (e == 0) continue;
            (axis == 0 ? d.ex : axis == 1 ? d.ey : d.ez) -= 1;
            r.add_term(d, c * C(e));
        }
        return r;
    }

    basic_tripoly laplacian() const {
        basic_tripoly r;
        for (int a = 0; a < 3; ++a) r = r + derivative(a).derivative(a);
        return r;
    }

    double eval(double x, double y, double z) const {
        double s = 0;
        for (const auto& [m, c] : terms_)
            s += coef_to_double(c) * std::pow(x, m.ex) * std::pow(y, m.ey) * std::pow(z, m.ez);
        return s;
    }

    /** Largest coefficient magnitude, as a double. */
    double max_coef() const {
        double s = 0;
        for (const auto& [m, c] : terms_) s = std::max(s, std::abs(coef_to_double(c)));
        return s;
    }

  private:
    std::map<monomial, C> terms_;
};

using tripoly = basic_tripoly<rational>;
using tripoly_f = basic_tripoly<double>;

/** Triple (f, g, h) of real polynomial fields; the represented complex
 * field is f + s g + s^2 h with s = e^{i pi / 3} (so s^3 = -1 and
 * 1 - s + s^2 = 0). */
template <typename C>
struct basic_trifield {
    basic_tripoly<C> f, g, h;
    int degree() const { return std::max({f.degree(), g.degree(), h.degree()}); }
};

using trifield = basic_trifield<rational>;
using trifield_f = basic_trifield<double>;

trifield_f to_float(const trifield& t);

/** Residuals of the nine first-order relations, reduced to the six
 * independent differences; all identically zero exactly when the field is
 * triholomorphic. */
template <typename C>
std::vector<basic_tripoly<C>> constraint_residuals(const basic_trifield<C>& t) {
    auto fx = t.f.derivative(0), fy = t.f.derivative(1), fz = t.f.derivative(2);
    auto gx = t.g.derivative(0), gy = t.g.derivative(1), gz = t.g.derivative(2);
    auto hx = t.h.derivative(0), hy = t.h.derivative(1), hz = t.h.derivative(2);
    return {fx + gy, fx - hz, fy + gz, fy - hx, fz + gx, fz - hy};
}

struct check_report {
    double max_residual = 0;
    bool exact_zero = false;
};

template <typename C>
check_report triholo_check(const basic_trifield<C>& t) {
    check_report rep;
    rep.exact_zero = true;
    for (const auto& r : constraint_residuals(t)) {
        rep.max_residual = std::max(rep.max_residual, r.max_coef());
        if (!r.is_zero()) rep.exact_zero = false;
    }
    return rep;
}

/** Formal product with the reduction s^3 = -1:
 * F = f1 f2 - (g1 h2 + h1 g2), G = f1 g2 + g1 f2 - h1 h2,
 * H = f1 h2 + h1 f2 + g1 g2. */
template <typename C>
basic_trifield<C> triholo_product(const basic_trifield<C>& a, const basic_trifield<C>& b) {
    basic_trifield<C> r;
    r.f = a.f * b.f - (a.g * b.h + a.h * b.g);
    r.g = a.f * b.g + a.g * b.f - a.h * b.h;
    r.h = a.f * b.h + a.h * b.f + a.g * b.g;
    return r;
}

/** Value f(p) + s g(p) + s^2 h(p) with s = e^{i pi/3}. The map from triples
 * to complex values is not injective (1 = s - s^2), so fields are compared
 * as formal triples, never through this evaluation. */
std::complex<double> complex_evaluate(const trifield& t, double x, double y, double z);

/** Element p + q s of Q[s] / (s^2 - s + 1); exact evaluation companion. */
struct qs_value {
    rational p, q;
    qs_value operator*(const qs_value& o) const {
        // (p1 + q1 s)(p2 + q2 s) with s^2 = s - 1
        return {p * o.p - q * o.q, p * o.q + q * o.p + q * o.q};
    }
    qs_value operator-(const qs_value& o) const { return {p - o.p, q - o.q}; }
    bool operator==(const qs_value&) const = default;
};

qs_value evaluate_qs(const trifield& t, const rational& x, const rational& y, const rational& z);

struct laplacian_summary {
    tripoly lap_f, lap_g, lap_h;
    bool componentwise_identity = false;  // lap f = lap h = -lap g exactly
    bool complex_combination_zero = false;
};

/** Laplacians of a valid field; the complex combination (1 - s + s^2) lap f
 * vanishes identically. Rejects fields that fail triholo_check. */
laplacian_summary laplacian_report(const trifield& t);

/** Nullspace basis of the constraint system on coefficients of total degree
 * at most d. The system has two nonzero entries per row, so it is solved
 * exactly as a ratio-weighted union-find over the coefficient variables. */
std::vector<trifield> triholo_basis(int degree);

/** Dense double copy of the constraint matrix (rows: relation coefficients,
 * cols: f,g,h coefficient variables), for rank oracles. */
std::vector<std::vector<double>> constraint_matrix_dense(int degree);

/** Number of coefficient variables at total degree <= d (columns above). */
std::size_t coefficient_count(int degree);

}  // namespace planarcalc

#endif
