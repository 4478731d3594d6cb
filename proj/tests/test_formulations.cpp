#include "doctest.h"

#include <random>

#include <Eigen/Eigenvalues>

#include "elasto/formulations.hpp"
#include "elasto/linalg.hpp"
#include "elasto/postprocess.hpp"

using namespace elasto;

namespace {

CVec random_band(int n, int band, std::mt19937& rng, bool real = false) {
    std::normal_distribution<double> N;
    CVec g = CVec::Zero(4 * n);
    for (int k = 0; k <= band; ++k)
        for (int c = 0; c < 2; ++c) {
            const cplx a(N(rng), real ? 0.0 : N(rng)), b(N(rng), real ? 0.0 : N(rng));
            for (int j = 0; j < 2 * n; ++j) {
                const double t = j * pi / n;
                g(2 * j + c) += real ? cplx(a.real() * std::cos(k * t) + b.real() * std::sin(k * t))
                                     : a * std::exp(iu * double(k) * t) + b * std::exp(-iu * double(k) * t);
            }
        }
    return g;
}

FarField solve_far_field(const LinearSystem& sys, const Material& plus, const CurveGrid& g, const CauchyData& d,
                         const std::optional<Material>& minus = std::nullopt) {
    const CVec x = lu_solve(sys.op.mat, sys.rhs);
    return far_field(reconstruct_fields(sys, x, plus, g, d, minus).exterior, far_field_angles(90));
}

}  // namespace

TEST_CASE("coupling parameters") {
    const Material m = make_material(2, 1, 7);
    CHECK(eta_dirichlet_opt(m) == doctest::Approx(1.6 * m.ks).epsilon(1e-14));
    CHECK(eta_neumann_opt(m) == doctest::Approx(0.625 / m.ks).epsilon(1e-14));
    const CurveGrid g = sample_grid(make_curve("circle"), 8);
    const IncidentField f = plane_wave(m, {0, -1}, {1, 0});
    CHECK_THROWS_AS(assemble_dirichlet(DirichletKind::CFIE, m, g, Coupling{0.0}, f), std::invalid_argument);
    CHECK_THROWS_AS(assemble_neumann(NeumannKind::CFIE, m, g, Coupling{0.0}, f), std::invalid_argument);
}

TEST_CASE("manufactured radiating data through every impenetrable formulation") {
    const Material m = make_material(1, 1, 16);
    const CurveGrid g = sample_grid(make_curve("starfish"), 64);
    const BioSet b = assemble_bios(m, g);
    const Vec2 x0(0.1, -0.2);
    const CVec2 q(1.0, 0.5);
    const CauchyData d = trace_and_traction(point_source(m, x0, q), g, m);
    const FarField ref = point_source_far_field(m, x0, q, far_field_angles(90));
    const Coupling c{eta_dirichlet_opt(m)};
    for (auto k : {DirichletKind::CFIE, DirichletKind::CFIER, DirichletKind::SL, DirichletKind::DL}) {
        const LinearSystem s = assemble_dirichlet(k, m, g, b, c, d, DataRole::radiating);
        CHECK(eps_inf(solve_far_field(s, m, g, d), ref) < 1e-5);
    }
    const Coupling cn{eta_neumann_opt(m)};
    for (auto k : {NeumannKind::CFIE, NeumannKind::CFIER, NeumannKind::DCFIER, NeumannKind::SL, NeumannKind::DL}) {
        const LinearSystem s = assemble_neumann(k, m, g, b, cn, d, DataRole::radiating);
        CHECK(eps_inf(solve_far_field(s, m, g, d), ref) < 1e-5);
    }
}

TEST_CASE("scattering far fields do not depend on the formulation") {
    const Material m = make_material(2, 1, 10);
    const CurveGrid g = sample_grid(make_curve("starfish"), 96);
    const BioSet b = assemble_bios(m, g);
    const CauchyData d = trace_and_traction(plane_wave(m, {0, -1}, {1, 0}), g, m);
    const FarField dref = solve_far_field(assemble_dirichlet(DirichletKind::CFIE, m, g, b, {}, d), m, g, d);
    const FarField dreg = solve_far_field(assemble_dirichlet(DirichletKind::CFIER, m, g, b, {}, d), m, g, d);
    CHECK(eps_inf(dreg, dref) < 1e-7);
    const FarField nref = solve_far_field(assemble_neumann(NeumannKind::CFIE, m, g, b, {}, d), m, g, d);
    CHECK(eps_inf(solve_far_field(assemble_neumann(NeumannKind::CFIER, m, g, b, {}, d), m, g, d), nref) < 1e-7);
    CHECK(eps_inf(solve_far_field(assemble_neumann(NeumannKind::DCFIER, m, g, b, {}, d), m, g, d), nref) < 1e-7);
    // the two problems scatter differently
    CHECK(eps_inf(nref, dref) > 1e-2);
}

TEST_CASE("transmission formulations agree and the interior trace matches the exterior one") {
    const Material plus = make_material(2, 8, 6), minus = make_material(1, 1, 6);
    const CurveGrid g = sample_grid(make_curve("starfish"), 64);
    const BioSet bp = assemble_bios(plus, g), bm = assemble_bios(minus, g);
    const cplx kappa = default_kappa(plus);
    const IncidentField inc = plane_wave(plus, {0, -1}, {0, -1});
    const CauchyData d = trace_and_traction(inc, g, plus);
    const auto sys = [&](TransmissionKind k) { return assemble_transmission(k, plus, minus, g, bp, bm, kappa, d); };
    const FarField ref = solve_far_field(sys(TransmissionKind::KR), plus, g, d, minus);
    for (auto k : {TransmissionKind::SC, TransmissionKind::DCFIER, TransmissionKind::ICFIER})
        CHECK(eps_inf(solve_far_field(sys(k), plus, g, d, minus), ref) < 1e-7);

    // KR unknowns are the interior Cauchy data; the exterior scattered data follow by subtracting the incident ones
    const LinearSystem s = sys(TransmissionKind::KR);
    const CVec cm = lu_solve(s.op.mat, s.rhs);
    CVec cinc(8 * g.n);
    cinc << d.trace, d.traction;
    const CVec cp = cm - cinc;
    CHECK((0.5 * cm + calderon_matrix(bm) * cm).norm() < 1e-7 * cm.norm());
    CHECK((0.5 * cp - calderon_matrix(bp) * cp).norm() < 1e-7 * cp.norm());
}

TEST_CASE("transmission degenerate cases") {
    const Material m = make_material(1, 2, 5);
    const CurveGrid g = sample_grid(make_curve("circle"), 16);
    const BioSet b = assemble_bios(m, g);
    const CauchyData d = trace_and_traction(plane_wave(m, {1, 0}, {0, 1}), g, m);
    const LinearSystem kr = assemble_transmission(TransmissionKind::KR, m, m, g, b, b, default_kappa(m), d);
    CHECK((kr.op.mat - CMat::Identity(8 * g.n, 8 * g.n)).norm() < 1e-14);
    CHECK((lu_solve(kr.op.mat, kr.rhs) - kr.rhs).norm() < 1e-14);

    const Material minus = make_material(3, 1, 5);
    const CauchyData zero = trace_and_traction(zero_field(m), g, m);
    for (auto k : {TransmissionKind::SC, TransmissionKind::KR, TransmissionKind::DCFIER, TransmissionKind::ICFIER}) {
        const LinearSystem s = assemble_transmission(k, m, minus, g, b, assemble_bios(minus, g), default_kappa(m), zero);
        const CVec x = lu_solve(s.op.mat, s.rhs);
        CHECK(x.norm() == 0.0);
        const FarField f = far_field(reconstruct_fields(s, x, m, g, zero, minus).exterior, far_field_angles(8));
        for (const auto& v : f.up) CHECK(v.norm() == 0.0);
    }
    CHECK_THROWS_AS(reconstruct_fields(kr, kr.rhs, m, g, d), std::invalid_argument);
}

TEST_CASE("Stephan-Costabel operator squares to rho times identity up to a smoothing error") {
    const Material plus = make_material(2, 8, 3), minus = make_material(1, 1, 3);
    const int n = 64;
    const CurveGrid g = sample_grid(make_curve("circle"), n);
    const BioSet bp = assemble_bios(plus, g), bm = assemble_bios(minus, g);
    const CauchyData d = trace_and_traction(zero_field(plus), g, plus);
    const CMat L = assemble_transmission(TransmissionKind::SC, plus, minus, g, bp, bm, default_kappa(plus), d).op.mat;
    const double rho = transmission_rho(plus, minus);
    const auto defect = [&](int k) {
        CVec e = CVec::Zero(8 * n);
        for (int j = 0; j < 2 * n; ++j) {
            e(2 * j) = std::exp(iu * double(k) * (j * pi / n));
            e(4 * n + 2 * j + 1) = double(k) * std::exp(iu * double(k) * (j * pi / n));
        }
        return (L * (L * e) - rho * e).norm() / e.norm();
    };
    CHECK(defect(40) < 0.2 * defect(8));
}

TEST_CASE("regularized Dirichlet operator clusters at one") {
    const Material m = make_material(2, 1, 10);
    const CurveGrid g = sample_grid(make_curve("circle"), 64);
    const CauchyData d = trace_and_traction(zero_field(m), g, m);
    const CMat A = assemble_dirichlet(DirichletKind::CFIER, m, g, assemble_bios(m, g), {}, d).op.mat;
    const CVec ev = Eigen::ComplexEigenSolver<CMat>(A, false).eigenvalues();
    int near = 0;
    for (const cplx& z : ev) near += std::abs(z - 1.0) < 0.5;
    CHECK(near >= 0.9 * ev.size());
}

TEST_CASE("discrete exterior DtN") {
    const Material m = make_material(2, 1, 4.3);
    const CurveGrid g = sample_grid(make_curve("circle"), 128);
    const BioSet b = assemble_bios(m, g);
    const DtnResult y1 = discrete_dtn_exterior(m, g, b, 1), y2 = discrete_dtn_exterior(m, g, b, 2);
    CHECK(y1.formula == 1);
    CHECK(y2.formula == 2);
    // the formulas differ only in the last few modes before Nyquist; compare on band-limited densities
    std::mt19937 brng(3);
    for (int t = 0; t < 5; ++t) {
        const CVec v = random_band(128, 64, brng);
        CHECK(((y1.op.mat - y2.op.mat) * v).norm() <= 1e-6 * (y1.op.mat * v).norm());
    }
    CHECK(discrete_dtn_exterior(m, g, b).formula == 1);

    const Material m4 = make_material(2, 1, 4);
    const CurveGrid g4 = sample_grid(make_curve("circle"), 64);
    const CMat Y = discrete_dtn_exterior(m4, g4).op.mat;
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        const CVec v = random_band(64, 20, rng, true);
        const cplx p = (v.transpose() * (Y * v))(0, 0);  // <Y g, conj g> for real g
        CHECK(p.imag() > 0.0);
    }

    // the pseudo-differential approximation captures the principal part
    const CMat PS = multiplier_matrix(ps_dtn(m4, Side::exterior, 64), 64);
    const auto rel = [&](int k) {
        CVec e = CVec::Zero(4 * 64);
        for (int j = 0; j < 128; ++j) e(2 * j) = std::exp(iu * double(k) * (j * pi / 64));
        return ((Y - PS) * e).norm() / (Y * e).norm();
    };
    CHECK(rel(40) < rel(10));
    CHECK(rel(40) < 0.05);
}
