#include <doctest.h>

#include "error.hpp"
#include "real_ops.hpp"

using namespace planarcalc;

namespace {

cmatrix random_cmatrix(rng& gen, long n) {
    cmatrix x(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) x(i, j) = gen.normal_complex();
    return x;
}

}  // namespace

TEST_SUITE("real_ops") {

TEST_CASE("decomposition into real and imaginary parts is exact") {
    CHECK(decompose_real(cmatrix::Identity(3, 3)).x1.norm() == 0.0);
    cmatrix ii = cplx(0, 1) * cmatrix::Identity(3, 3);
    auto p = decompose_real(ii);
    CHECK(p.x0.norm() == 0.0);
    CHECK((p.x1 - Eigen::MatrixXd::Identity(3, 3)).norm() == 0.0);

    rng gen(91);
    cmatrix x = random_cmatrix(gen, 4);
    auto q = decompose_real(x);
    CHECK((q.x0.cast<cplx>() + cplx(0, 1) * q.x1.cast<cplx>() - x).norm() == 0.0);
}

TEST_CASE("embedding of the scalar i") {
    cmatrix x(1, 1);
    x(0, 0) = cplx(0, 1);
    rmatrix e = real_embed(x);
    CHECK(e(0, 0) == 0.0);
    CHECK(e(0, 1) == 1.0);
    CHECK(e(1, 0) == -1.0);
    CHECK(e(1, 1) == 0.0);
}

TEST_CASE("real matrices embed block-diagonally") {
    rng gen(92);
    cmatrix x(3, 3);
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j) x(i, j) = gen.uniform(-1, 1);
    rmatrix e = real_embed(x);
    CHECK(e.topRightCorner(3, 3).norm() == 0.0);
    CHECK(e.bottomLeftCorner(3, 3).norm() == 0.0);
    CHECK((e.topLeftCorner(3, 3) - x.real()).norm() == 0.0);
}

TEST_CASE("embedding preserves the operator norm") {
    rng gen(93);
    for (int t = 0; t < 10; ++t) {
        cmatrix x = random_cmatrix(gen, 4);
        double lhs = operator_norm(x);
        double rhs = real_embed(x).jacobiSvd().singularValues()(0);
        CHECK(std::abs(lhs - rhs) / lhs <= 1e-9);
    }
}

TEST_CASE("kappa conjugation turns the rotated form into the embedding") {
    rng gen(94);
    cmatrix x = random_cmatrix(gen, 3);
    auto [x0, x1] = decompose_real(x);
    const cplx i(0, 1);
    cmatrix rot(6, 6);
    rot.topLeftCorner(3, 3) = x0.cast<cplx>();
    rot.topRightCorner(3, 3) = i * x1.cast<cplx>();
    rot.bottomLeftCorner(3, 3) = i * x1.cast<cplx>();
    rot.bottomRightCorner(3, 3) = x0.cast<cplx>();
    CHECK((kappa_conjugate(rot) - real_embed(x).cast<cplx>()).norm() <= 1e-13);

    // identity blocks are preserved
    CHECK((kappa_conjugate(cmatrix::Identity(4, 4)) - cmatrix::Identity(4, 4)).norm() == 0.0);

    // for real x the chain is the diagonal embedding
    cmatrix xr = x.real().cast<cplx>();
    auto [r0, r1] = decompose_real(xr);
    cmatrix rot_r(6, 6);
    rot_r.setZero();
    rot_r.topLeftCorner(3, 3) = r0.cast<cplx>();
    rot_r.bottomRightCorner(3, 3) = r0.cast<cplx>();
    CHECK((kappa_conjugate(rot_r) - rot_r).norm() == 0.0);
    CHECK(r1.norm() == 0.0);
}

TEST_CASE("kappa conjugation needs an even dimension") {
    CHECK_THROWS_AS(kappa_conjugate(cmatrix::Identity(3, 3)), error);
}

TEST_CASE("amplified isometry defects") {
    rng gen(95);
    cmatrix x = random_cmatrix(gen, 3);
    auto r1 = isometry_check(x, 1, 5, gen);
    CHECK(r1.max_defect <= 1e-9);
    auto r2 = isometry_check(x, 2, 20, gen);
    CHECK(r2.max_defect <= 1e-8);

    cmatrix zero = cmatrix::Zero(2, 2);
    auto rz = isometry_check(zero, 1, 3, gen);
    CHECK(rz.max_defect == 0.0);

    CHECK_THROWS_AS(isometry_check(x, 5, 3, gen), error);
}

}  // TEST_SUITE
