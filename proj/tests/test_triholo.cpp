#include <doctest.h>

#include <Eigen/Dense>
#include <complex>

#include "error.hpp"
#include "rng.hpp"
#include "triholo.hpp"

using namespace planarcalc;
using cplx = std::complex<double>;

namespace {

trifield linear_solution() {
    // (f, g, h) = (x, -y, z)
    trifield t;
    t.f.add_term({1, 0, 0}, rational(1));
    t.g.add_term({0, 1, 0}, rational(-1));
    t.h.add_term({0, 0, 1}, rational(1));
    return t;
}

std::size_t oracle_nullity(int degree) {
    auto A = constraint_matrix_dense(degree);
    std::size_t cols = coefficient_count(degree);
    if (A.empty()) return cols;
    Eigen::MatrixXd M(A.size(), cols);
    for (std::size_t r = 0; r < A.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            M(static_cast<long>(r), static_cast<long>(c)) = A[r][c];
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
    return cols - static_cast<std::size_t>(qr.rank());
}

}  // namespace

TEST_SUITE("triholo") {

TEST_CASE("degree-0 basis holds the three constants") {
    auto basis = triholo_basis(0);
    CHECK(basis.size() == 3);
    for (const auto& t : basis) CHECK(triholo_check(t).exact_zero);
}

TEST_CASE("degree-1 basis adds three linear fields") {
    auto basis = triholo_basis(1);
    CHECK(basis.size() == 6);
    int linear = 0;
    for (const auto& t : basis)
        if (t.degree() == 1) ++linear;
    CHECK(linear == 3);
    CHECK(triholo_check(linear_solution()).exact_zero);
}

TEST_CASE("basis dimensions agree exactly with the rank oracle") {
    for (int d = 0; d <= 3; ++d) CHECK(triholo_basis(d).size() == oracle_nullity(d));
}

TEST_CASE("every basis field passes the exact check") {
    for (const auto& t : triholo_basis(4)) {
        auto rep = triholo_check(t);
        CHECK(rep.exact_zero);
        CHECK(rep.max_residual == 0.0);
    }
}

TEST_CASE("constraint residuals flag non-solutions") {
    trifield bad;
    bad.f.add_term({1, 0, 0}, rational(1));
    bad.g.add_term({0, 1, 0}, rational(1));  // (x, y, z) breaks f_x = -g_y
    bad.h.add_term({0, 0, 1}, rational(1));
    auto rep = triholo_check(bad);
    CHECK_FALSE(rep.exact_zero);
    CHECK(rep.max_residual > 0.0);

    trifield zero;
    CHECK(triholo_check(zero).exact_zero);
}

TEST_CASE("the worked product of the linear solution with itself") {
    auto a = linear_solution();
    auto p = triholo_product(a, a);
    // (x^2 + 2yz, -2xy - z^2, 2xz + y^2)
    trifield expect;
    expect.f.add_term({2, 0, 0}, rational(1));
    expect.f.add_term({0, 1, 1}, rational(2));
    expect.g.add_term({1, 1, 0}, rational(-2));
    expect.g.add_term({0, 0, 2}, rational(-1));
    expect.h.add_term({1, 0, 1}, rational(2));
    expect.h.add_term({0, 2, 0}, rational(1));
    CHECK((p.f - expect.f).is_zero());
    CHECK((p.g - expect.g).is_zero());
    CHECK((p.h - expect.h).is_zero());
    CHECK(triholo_check(p).exact_zero);
}

TEST_CASE("the constant field (1,0,0) is the unit") {
    trifield one;
    one.f.add_term({0, 0, 0}, rational(1));
    auto a = linear_solution();
    auto p = triholo_product(one, a);
    CHECK((p.f - a.f).is_zero());
    CHECK((p.g - a.g).is_zero());
    CHECK((p.h - a.h).is_zero());
}

TEST_CASE("products of basis fields stay in the algebra") {
    auto basis = triholo_basis(2);
    for (const auto& a : basis)
        for (const auto& b : basis) CHECK(triholo_check(triholo_product(a, b)).exact_zero);
}

TEST_CASE("complex evaluation basics") {
    trifield one;
    one.f.add_term({0, 0, 0}, rational(1));
    CHECK(std::abs(complex_evaluate(one, 0.3, -2.0, 5.0) - cplx(1, 0)) <= 1e-15);

    auto a = linear_solution();
    CHECK(std::abs(complex_evaluate(a, 1, 1, 1)) <= 1e-15);  // 1 - s + s^2 = 0

    trifield es;
    es.g.add_term({0, 0, 0}, rational(1));
    cplx s = std::polar(1.0, M_PI / 3.0);
    CHECK(std::abs(complex_evaluate(es, 7, 8, 9) - s) <= 1e-15);
}

TEST_CASE("laplacian identities for the linear solution and its square") {
    auto a = linear_solution();
    auto la = laplacian_report(a);
    CHECK(la.lap_f.is_zero());
    CHECK(la.lap_g.is_zero());
    CHECK(la.lap_h.is_zero());
    CHECK(la.componentwise_identity);

    auto p = triholo_product(a, a);
    auto lp = laplacian_report(p);
    // lap f = 2, lap g = -2, lap h = 2; components are not harmonic alone
    CHECK(lp.lap_f.terms().size() == 1);
    CHECK(coef_to_double(lp.lap_f.terms().begin()->second) == 2.0);
    CHECK(coef_to_double(lp.lap_g.terms().begin()->second) == -2.0);
    CHECK(coef_to_double(lp.lap_h.terms().begin()->second) == 2.0);
    CHECK(lp.componentwise_identity);
    CHECK(lp.complex_combination_zero);
}

TEST_CASE("laplacian report requires a valid field") {
    trifield bad;
    bad.f.add_term({1, 0, 0}, rational(1));
    CHECK_THROWS_AS(laplacian_report(bad), error);
}

TEST_CASE("evaluation homomorphism is exact in Q[s]") {
    auto basis = triholo_basis(2);
    rng gen(101);
    for (int t = 0; t < 30; ++t) {
        const auto& a = basis[static_cast<std::size_t>(gen.uniform_int(0, static_cast<int>(basis.size()) - 1))];
        const auto& b = basis[static_cast<std::size_t>(gen.uniform_int(0, static_cast<int>(basis.size()) - 1))];
        rational x(gen.uniform_int(-9, 9), 2), y(gen.uniform_int(-9, 9), 3), z(gen.uniform_int(-9, 9), 5);
        auto lhs = evaluate_qs(triholo_product(a, b), x, y, z);
        auto rhs = evaluate_qs(a, x, y, z) * evaluate_qs(b, x, y, z);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("float mode reproduces the rational product to 1e-10") {
    auto basis = triholo_basis(2);
    rng gen(102);
    const auto& a = basis[1 % basis.size()];
    const auto& b = basis[basis.size() - 1];
    auto exact = triholo_product(a, b);
    auto approx = triholo_product(to_float(a), to_float(b));
    for (const auto& [m, c] : exact.f.terms()) {
        double got = 0;
        auto it = approx.f.terms().find(m);
        if (it != approx.f.terms().end()) got = it->second;
        CHECK(std::abs(coef_to_double(c) - got) <= 1e-10);
    }
}

TEST_CASE("degree bounds are enforced") {
    CHECK_THROWS_AS(triholo_basis(-1), error);
    CHECK_THROWS_AS(triholo_basis(13), error);
}

TEST_CASE("mid-degree basis sanity: degree 5 dimensions and validity") {
    auto basis = triholo_basis(5);
    CHECK(basis.size() == oracle_nullity(5));
    for (const auto& t : basis) CHECK(triholo_check(t).exact_zero);
}

}  // TEST_SUITE
