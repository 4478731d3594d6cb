#include "doctest.h"

#include <random>

#include "elasto/discretization.hpp"
#include "elasto/elastic_core.hpp"

using namespace elasto;

namespace {

// apply a circulant weight family to e^{ikt} and return the factor at node j
cplx weight_action(const QuadratureSet& q, char which, int k, int j) {
    cplx s = 0.0;
    for (int m = 0; m < 2 * q.n; ++m) {
        const double w = which == 'R' ? q.R(j, m) : (which == 'T' ? q.T(j, m) : q.C(j, m));
        s += w * std::exp(iu * double(k) * (m * pi / q.n));
    }
    return s / std::exp(iu * double(k) * (j * pi / q.n));
}

CVec mode_density(int n, int k, int comp) {
    CVec g = CVec::Zero(4 * n);
    for (int j = 0; j < 2 * n; ++j) g(2 * j + comp) = std::exp(iu * double(k) * (j * pi / n));
    return g;
}

}  // namespace

TEST_CASE("quadrature weights") {
    const QuadratureSet q = build_quadrature(16);
    for (int j : {0, 5, 31}) {
        double rs = 0.0, ts = 0.0;
        for (int m = 0; m < 32; ++m) {
            rs += q.R(j, m);
            ts += q.T(j, m);
        }
        CHECK(std::abs(rs) < 1e-14);
        CHECK(std::abs(ts) < 1e-13);
    }
    for (int k = -15; k <= 15; ++k) {
        if (k == 0) continue;
        for (int j : {0, 7}) {
            CHECK(std::abs(weight_action(q, 'R', k, j) + 1.0 / std::abs(k)) < 1e-13);
            CHECK(std::abs(weight_action(q, 'T', k, j) + double(std::abs(k))) < 1e-12);
            CHECK(std::abs(weight_action(q, 'C', k, j) - iu * double(k > 0 ? 1 : -1)) < 1e-12);
        }
    }
    CHECK(std::abs(weight_action(q, 'C', 0, 3)) < 1e-13);
    CHECK(std::abs(weight_action(q, 'C', 16, 3)) < 1e-12);
    CHECK_THROWS(build_quadrature(1));
}

TEST_CASE("shift interpolation is exact on band-limited data") {
    const int n = 8;
    const auto row = shift_interpolation_row(n);
    for (int k = -n + 1; k < n; ++k)
        for (int p : {0, 3}) {
            cplx v = 0.0;
            for (int m = 0; m < 2 * n; ++m) v += row[((m - p) % (2 * n) + 2 * n) % (2 * n)] * std::exp(iu * double(k) * (m * pi / n));
            CHECK(std::abs(v - std::exp(iu * double(k) * (p * pi / n + pi / (2 * n)))) < 1e-13);
        }
}

TEST_CASE("single layer self-convergence") {
    const Material m = make_material(2.0, 1.0, 4.0);
    const Curve c = make_curve("circle");
    const CurveGrid g1 = sample_grid(c, 64), g2 = sample_grid(c, 128);
    const BioSet b1 = assemble_bios(m, g1), b2 = assemble_bios(m, g2);
    CVec one1 = CVec::Zero(4 * 64), one2 = CVec::Zero(4 * 128);
    for (int j = 0; j < 128; ++j) one1(2 * j) = 1.0;
    for (int j = 0; j < 256; ++j) one2(2 * j) = 1.0;
    const CVec v1 = b1.V.mat * one1, v2 = b2.V.mat * one2;
    double err = 0.0;
    for (int j = 0; j < 128; ++j) err = std::max(err, (v1.segment<2>(2 * j) - v2.segment<2>(4 * j)).norm());
    CHECK(err < 1e-11 * v2.cwiseAbs().maxCoeff() * 10.0);
}

TEST_CASE("single operator assembly matches the combined sweep") {
    const Material m = make_material(1.0, 1.0, 3.0);
    const CurveGrid g = sample_grid(make_curve("cavity"), 16);
    const QuadratureSet q = build_quadrature(16);
    const BioSet b = assemble_bios(m, g, q);
    const DenseOperator w = assemble_bio(kernel_split(m, g, BioTag::W), q, g);
    CHECK((w.mat - b.W.mat).norm() <= 1e-12 * b.W.mat.norm());
    CHECK(w.tag == "W");
    CHECK_THROWS(assemble_bio(kernel_split(m, g, BioTag::V), build_quadrature(8), g));
}

TEST_CASE("double layer and its adjoint are transposes") {
    const Material m = make_material(2.0, 1.0, 5.0);
    const int n = 64;
    const CurveGrid g = sample_grid(make_curve("starfish"), n);
    const BioSet b = assemble_bios(m, g);
    std::mt19937 rng(11);
    std::normal_distribution<double> N;
    auto band = [&]() {
        CVec d = CVec::Zero(4 * n);
        for (int k = -10; k <= 10; ++k)
            for (int c = 0; c < 2; ++c) d += cplx(N(rng), N(rng)) * mode_density(n, k, c);
        return d;
    };
    const CVec gg = band(), lam = band();
    const cplx lhs = (b.K.mat * gg).transpose() * lam;
    const cplx rhs = gg.transpose() * (b.Kt.mat * lam);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * gg.norm() * lam.norm());
}

TEST_CASE("exterior Calderon identities for a radiating field") {
    const Material m = make_material(1.0, 1.0, 16.0);
    const Curve c = make_curve("starfish");
    const auto src = point_source(m, Vec2(0.1, -0.2), CVec2(1.0, 0.3));
    double prev = 1.0;
    for (int n : {64, 128}) {
        const CurveGrid g = sample_grid(c, n);
        const BioSet b = assemble_bios(m, g);
        const CauchyData cd = trace_and_traction(src, g, m);
        const CVec r1 = b.V.mat * cd.traction - b.K.mat * cd.trace + 0.5 * cd.trace;
        const CVec r2 = 0.5 * cd.traction + b.Kt.mat * cd.traction - b.W.mat * cd.trace;
        const double e = std::max(r1.norm() / cd.trace.norm(), r2.norm() / cd.traction.norm());
        CHECK(e < prev);
        prev = e;
    }
    CHECK(prev < 1e-9);
}
