#include "triholo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "error.hpp"

namespace planarcalc {

namespace {

std::vector<monomial> monomials_up_to(int degree) {
    std::vector<monomial> out;
    for (int d = 0; d <= degree; ++d)
        for (int ex = d; ex >= 0; --ex)
            for (int ey = d - ex; ey >= 0; --ey) out.push_back({ex, ey, d - ex - ey});
    return out;
}

/** Constraint rows on the stacked coefficient vector (f block, g block,
 * h block): for every monomial mu of degree <= d-1 the six relations
 * f_x + g_y = 0, f_x - h_z = 0, f_y + g_z = 0, f_y - h_x = 0,
 * f_z + g_x = 0, f_z - h_y = 0. Every row has exactly two entries. */
struct two_term_row {
    std::size_t i, j;
    int ci, cj;
};

std::vector<two_term_row> constraint_rows(int degree, std::size_t nm,
                                          const std::map<monomial, std::size_t>& index) {
    auto var = [&](int field, const monomial& m) { return field * nm + index.at(m); };
    auto dcoef = [](const monomial& mu, int axis) {
        monomial up = mu;
        int c;
        if (axis == 0) c = ++up.ex;
        else if (axis == 1) c = ++up.ey;
        else c = ++up.ez;
        return std::pair{up, c};
    };
    std::vector<two_term_row> rows;
    for (const auto& mu : monomials_up_to(degree - 1)) {
        auto [mx, cx] = dcoef(mu, 0);
        auto [my, cy] = dcoef(mu, 1);
        auto [mz, cz] = dcoef(mu, 2);
        // (field, monomial, coefficient) pairs per relation
        rows.push_back({var(0, mx), var(1, my), cx, cy});    // f_x + g_y
        rows.push_back({var(0, mx), var(2, mz), cx, -cz});   // f_x - h_z
        rows.push_back({var(0, my), var(1, mz), cy, cz});    // f_y + g_z
        rows.push_back({var(0, my), var(2, mx), cy, -cx});   // f_y - h_x
        rows.push_back({var(0, mz), var(1, mx), cz, cx});    // f_z + g_x
        rows.push_back({var(0, mz), var(2, my), cz, -cy});   // f_z - h_y
    }
    return rows;
}

}  // namespace

std::size_t coefficient_count(int degree) { return 3 * monomials_up_to(degree).size(); }

std::vector<std::vector<double>> constraint_matrix_dense(int degree) {
    auto monos = monomials_up_to(degree);
    std::map<monomial, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
    auto rows = constraint_rows(degree, monos.size(), index);
    std::vector<std::vector<double>> A(rows.size(), std::vector<double>(3 * monos.size(), 0.0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        A[r][rows[r].i] += rows[r].ci;
        A[r][rows[r].j] += rows[r].cj;
    }
    return A;
}

std::vector<trifield> triholo_basis(int degree) {
    if (degree < 0 || degree > 12)
        fail(errc::invalid_input, "basis degree must be between 0 and 12");
    auto monos = monomials_up_to(degree);
    std::map<monomial, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
    const std::size_t nvar = 3 * monos.size();

    // ratio-weighted union-find: value(v) = weight(v) * value(root(v))
    std::vector<std::size_t> parent(nvar);
    std::vector<rational> weight(nvar, rational(1));
    std::vector<bool> zero_root(nvar, false);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
        if (parent[v] == v) return v;
        std::size_t r = find(parent[v]);
        weight[v] *= weight[parent[v]];
        parent[v] = r;
        return r;
    };
    for (const auto& row : constraint_rows(degree, monos.size(), index)) {
        // ci * u_i + cj * u_j = 0  =>  u_i = (-cj/ci) u_j
        rational ratio = rational(-row.cj) / rational(row.ci);
        std::size_t ri = find(row.i), rj = find(row.j);
        if (ri == rj) {
            if (weight[row.i] != ratio * weight[row.j]) zero_root[ri] = true;
        } else {
            // u_{ri} = (ratio * w_j / w_i) u_{rj}
            weight[ri] = ratio * weight[row.j] / weight[row.i];
            parent[ri] = rj;
            if (zero_root[ri]) zero_root[rj] = true;
        }
    }
    // one basis field per nonzero component
    std::map<std::size_t, std::vector<std::size_t>> components;
    for (std::size_t v = 0; v < nvar; ++v) {
        std::size_t r = find(v);
        if (!zero_root[r]) components[r].push_back(v);
    }
    std::vector<trifield> basis;
    for (const auto& [root, members] : components) {
        trifield t;
        // clear denominators, divide by the content, make the lead positive
        boost::multiprecision::cpp_int den(1);
        for (std::size_t v : members) den = lcm(den, denominator(weight[v]));
        boost::multiprecision::cpp_int g(0);
        for (std::size_t v : members) g = gcd(g, numerator(weight[v] * rational(den)));
        if (g == 0) g = 1;
        rational norm = rational(den) / rational(g);
        if (weight[members.front()] < 0) norm = -norm;
        for (std::size_t v : members) {
            rational c = weight[v] * norm;
            std::size_t field = v / monos.size();
            const monomial& m = monos[v % monos.size()];
            (field == 0 ? t.f : field == 1 ? t.g : t.h).add_term(m, c);
        }
        basis.push_back(std::move(t));
    }
    return basis;
}

trifield_f to_float(const trifield& t) {
    trifield_f r;
    for (const auto& [m, c] : t.f.terms()) r.f.add_term(m, coef_to_double(c));
    for (const auto& [m, c] : t.g.terms()) r.g.add_term(m, coef_to_double(c));
    for (const auto& [m, c] : t.h.terms()) r.h.add_term(m, coef_to_double(c));
    return r;
}

std::complex<double> complex_evaluate(const trifield& t, double x, double y, double z) {
    const std::complex<double> s(0.5, std::sqrt(3.0) / 2.0);
    return t.f.eval(x, y, z) + s * t.g.eval(x, y, z) + (s - 1.0) * t.h.eval(x, y, z);
}

qs_value evaluate_qs(const trifield& t, const rational& x, const rational& y, const rational& z) {
    auto eval_exact = [&](const tripoly& p) {
        rational s(0);
        for (const auto& [m, c] : p.terms()) {
            rational term = c;
            for (int i = 0; i < m.ex; ++i) term *= x;
            for (int i = 0; i < m.ey; ++i) term *= y;
            for (int i = 0; i < m.ez; ++i) term *= z;
            s += term;
        }
        return s;
    };
    rational fv = eval_exact(t.f), gv = eval_exact(t.g), hv = eval_exact(t.h);
    // f + g s + h s^2 with s^2 = s - 1
    return {fv - hv, gv + hv};
}

laplacian_summary laplacian_report(const trifield& t) {
    if (!triholo_check(t).exact_zero)
        fail(errc::precondition, "laplacian report requires a triholomorphic field");
    laplacian_summary rep;
    rep.lap_f = t.f.laplacian();
    rep.lap_g = t.g.laplacian();
    rep.lap_h = t.h.laplacian();
    rep.componentwise_identity =
        (rep.lap_f - rep.lap_h).is_zero() && (rep.lap_f + rep.lap_g).is_zero();
    rep.complex_combination_zero = rep.componentwise_identity;  // (1 - s + s^2) lap f = 0
    return rep;
}

}  // namespace planarcalc
