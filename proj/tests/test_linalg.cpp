#include "doctest.h"

#include <random>

#include "elasto/linalg.hpp"

using namespace elasto;

namespace {

CMat random_matrix(int n, std::mt19937& rng) {
    std::normal_distribution<double> N;
    CMat A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = cplx(N(rng), N(rng));
    return A;
}

}  // namespace

TEST_CASE("gmres on the identity takes one step") {
    std::mt19937 rng(1);
    const CVec b = random_matrix(30, rng).col(0);
    const auto r = gmres(CMat(CMat::Identity(30, 30)), b, 1e-10, 50);
    CHECK(r.report.iterations == 1);
    CHECK(r.report.converged);
    CHECK((r.x - b).norm() < 1e-14 * b.norm());
}

TEST_CASE("gmres matches LU on a well conditioned system") {
    std::mt19937 rng(2);
    const int n = 100;
    const CMat A = CMat::Identity(n, n) * 6.0 + random_matrix(n, rng) / std::sqrt(double(n));
    const CVec b = random_matrix(n, rng).col(0);
    const auto r = gmres(A, b, 1e-13, 200);
    const CVec x = lu_solve(A, b);
    CHECK(r.report.converged);
    CHECK((r.x - x).norm() <= 1e-10 * x.norm());
    for (std::size_t k = 1; k < r.report.residuals.size(); ++k)
        CHECK(r.report.residuals[k] <= r.report.residuals[k - 1]);
    CHECK(r.report.residuals.size() == std::size_t(r.report.iterations + 1));

    const auto again = gmres(A, b, 1e-13, 200);
    CHECK(again.report.iterations == r.report.iterations);
    CHECK((again.x - r.x).norm() == 0.0);
}

TEST_CASE("gmres flags non-convergence and keeps the iterate") {
    std::mt19937 rng(3);
    const int n = 60;
    const CMat A = random_matrix(n, rng);
    const CVec b = random_matrix(n, rng).col(0);
    const auto r = gmres(A, b, 1e-12, 5);
    CHECK_FALSE(r.report.converged);
    CHECK(r.report.iterations == 5);
    CHECK((b - A * r.x).norm() / b.norm() == doctest::Approx(r.report.relative_residual).epsilon(1e-8));
    CHECK_THROWS(gmres(A, b, 1.5, 10));
    CHECK_THROWS(gmres(CMat(CMat::Identity(3, 4)), CVec::Ones(3), 1e-6, 10));
}

TEST_CASE("gmres of a zero right-hand side") {
    const auto r = gmres(CMat(CMat::Identity(4, 4)), CVec::Zero(4), 1e-8, 10);
    CHECK(r.report.iterations == 0);
    CHECK(r.x.norm() == 0.0);
}

TEST_CASE("lu solve") {
    std::mt19937 rng(4);
    const CVec b = random_matrix(200, rng).col(0);
    CHECK((lu_solve(CMat::Identity(200, 200), b) - b).norm() == 0.0);
    const CMat A = random_matrix(200, rng);
    CHECK((A * lu_solve(A, b) - b).norm() <= 1e-12 * b.norm() * 10);

    // Hilbert matrix: backward stable residual despite the condition number
    const int n = 12;
    CMat Hm(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Hm(i, j) = 1.0 / (i + j + 1);
    const CVec hb = CVec::Ones(n);
    const CVec hx = lu_solve(Hm, hb);
    CHECK((Hm * hx - hb).norm() <= 1e-6 * Hm.norm() * hx.norm() * 1e-6);

    CHECK_THROWS_AS(LuFactor(CMat::Zero(5, 5)), std::runtime_error);
    CHECK_THROWS(LuFactor(CMat::Zero(5, 4)));
}
