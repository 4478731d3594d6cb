#include "doctest.h"

#include <random>

#include <Eigen/Eigenvalues>

#include "elasto/ddm.hpp"
#include "elasto/postprocess.hpp"

using namespace elasto;

namespace {

CVec mode(int n, int k, int c = 0) {
    CVec e = CVec::Zero(4 * n);
    for (int j = 0; j < 2 * n; ++j) e(2 * j + c) = std::exp(iu * double(k) * (j * pi / n));
    return e;
}

CVec random_band(int n, int band, std::mt19937& rng) {
    std::normal_distribution<double> N;
    CVec g = CVec::Zero(4 * n);
    for (int k = -band; k <= band; ++k)
        for (int c = 0; c < 2; ++c) g += cplx(N(rng), N(rng)) * mode(n, k, c);
    return g;
}

CVec stacked(const CauchyData& d) {
    CVec c(d.trace.size() + d.traction.size());
    c << d.trace, d.traction;
    return c;
}

struct Setup {
    Material plus, minus;
    CurveGrid grid;
    BioSet bp, bm;
    cplx kappa;
    TransmissionOperators ups;
    Setup(double omega, int n, const char* curve = "circle")
        : plus(make_material(2, 8, omega)), minus(make_material(1, 1, omega)), grid(sample_grid(make_curve(curve), n)),
          bp(assemble_bios(plus, grid)), bm(assemble_bios(minus, grid)), kappa(default_kappa(plus)),
          ups(transmission_operators(plus, minus, kappa, n)) {}
};

}  // namespace

TEST_CASE("interior RtR reproduces the Cauchy data of a regular field") {
    const Setup s(4, 128);
    const RtRMap r = rtr_interior(s.minus, s.grid, s.bm, s.ups);
    // point source outside the disc: the field is regular inside
    const CauchyData d = trace_and_traction(point_source(s.minus, {2.0, 0.5}, CVec2(1.0, -0.3)), s.grid, s.minus);
    const CVec lam = d.traction + apply_multiplier(s.ups.minus, d.trace);
    const CVec c = stacked(d);
    CHECK((r.cauchy * lam - c).norm() <= 1e-8 * c.norm());
    const CVec out = d.traction + apply_multiplier(s.ups.plus, d.trace);
    CHECK((r.S * lam - out).norm() <= 1e-8 * out.norm());
    CHECK((r.S * CVec::Zero(lam.size())).norm() == 0.0);
}

TEST_CASE("exterior RtR variants reproduce radiating Cauchy data and agree") {
    const Setup s(4.3, 128);
    const CauchyData d = trace_and_traction(point_source(s.plus, {0.1, -0.2}, CVec2(0.4, 1.0)), s.grid, s.plus);
    const CVec lam = d.traction + apply_multiplier(s.ups.plus, d.trace);
    const CVec c = stacked(d);
    std::vector<CMat> maps;
    for (auto v : {RtrVariant::plain, RtrVariant::eps, RtrVariant::single}) {
        RtrOptions opt;
        opt.variant = v;
        const RtRMap r = rtr_exterior(s.plus, s.minus, s.grid, s.bp, s.ups, s.kappa, opt);
        CHECK_FALSE(r.fell_back);
        CHECK((r.cauchy * lam - c).norm() <= 1e-8 * c.norm());
        maps.push_back(r.S);
    }
    std::mt19937 rng(11);
    for (int t = 0; t < 5; ++t) {
        const CVec g = random_band(128, 60, rng);
        const CVec ref = maps[0] * g;
        CHECK((maps[1] * g - ref).norm() <= 1e-7 * ref.norm());
        CHECK((maps[2] * g - ref).norm() <= 1e-7 * ref.norm());
    }
    RtrOptions bad;
    bad.variant = RtrVariant::eps;
    bad.eps = 0.0;
    CHECK_THROWS_AS(rtr_exterior(s.plus, s.minus, s.grid, s.bp, s.ups, s.kappa, bad), std::invalid_argument);
}

TEST_CASE("RtR maps are smoothing") {
    const Setup s(4, 128);
    const RtRMap rm = rtr_interior(s.minus, s.grid, s.bm, s.ups);
    const RtRMap rp = rtr_exterior(s.plus, s.minus, s.grid, s.bp, s.ups, s.kappa);
    for (const RtRMap* r : {&rm, &rp}) {
        const double s1 = (r->S * mode(128, 1)).norm();
        CHECK((r->S * mode(128, 50)).norm() <= 0.1 * s1);
        CHECK((r->S * mode(128, -50, 1)).norm() <= 0.1 * s1);
    }
}

TEST_CASE("single-density exterior operator clusters at one") {
    const Setup s(10, 64);
    RtrOptions opt;
    opt.variant = RtrVariant::single;
    opt.keep_system = true;
    const RtRMap r = rtr_exterior(s.plus, s.minus, s.grid, s.bp, s.ups, s.kappa, opt);
    REQUIRE(r.system.rows() == 4 * 64);
    const CVec ev = Eigen::ComplexEigenSolver<CMat>(r.system, false).eigenvalues();
    int near = 0;
    for (const cplx& z : ev) near += std::abs(z - 1.0) < 0.5;
    CHECK(near >= 0.9 * ev.size());
    CHECK(rtr_exterior(s.plus, s.minus, s.grid, s.bp, s.ups, s.kappa).system.size() == 0);
}

TEST_CASE("DDM matches the Kress-Roach solution") {
    const Setup s(10, 128, "starfish");
    const CauchyData d = trace_and_traction(plane_wave(s.plus, {0, -1}, {0, -1}), s.grid, s.plus);
    const DdmSystem ddm = assemble_ddm(s.plus, s.minus, s.grid, s.bp, s.bm, s.kappa, d);
    CHECK(ddm.sys.tag == "ddm");
    const auto gd = gmres(ddm.sys.op.mat, ddm.sys.rhs, 1e-10, 500);
    REQUIRE(gd.report.converged);
    const Reconstruction rd = reconstruct_ddm(ddm, gd.x, s.plus, s.minus, s.grid);

    const LinearSystem kr = assemble_transmission(TransmissionKind::KR, s.plus, s.minus, s.grid, s.bp, s.bm, s.kappa, d);
    const CVec xk = lu_solve(kr.op.mat, kr.rhs);
    const Reconstruction rk = reconstruct_fields(kr, xk, s.plus, s.grid, d, s.minus);
    const auto ang = far_field_angles(120);
    CHECK(eps_inf(far_field(rd.exterior, ang), far_field(rk.exterior, ang)) <= 1e-5);

    // exterior scattered trace from DDM equals interior trace minus incident trace from KR
    const Eigen::Index N = s.grid.dofs();
    const CVec gp = (ddm.plus.cauchy * gd.x.head(N)).head(N);
    const CVec gk = xk.head(N) - d.trace;
    CHECK((gp - gk).norm() <= 1e-6 * gk.norm());

    // Schwarz operator stays away from singularity
    const CMat schwarz = CMat::Identity(N, N) - ddm.minus.S * ddm.plus.S;
    const double smin = Eigen::BDCSVD<CMat>(schwarz).singularValues().minCoeff();
    CHECK(smin > 1e-3);
}
