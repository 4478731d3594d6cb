#include <cmath>
#include <functional>
#include <ostream>

#include "elasto/formulations.hpp"
#include "elasto/harness.hpp"
#include "elasto/linalg.hpp"
#include "elasto/postprocess.hpp"
#include "elasto/symbols.hpp"

namespace elasto {

namespace {

bool check_rho() {
    const Material p = make_material(2, 8, 1), q = make_material(1, 1, 1);
    return std::abs(transmission_rho(p, q) - 3604.0 / 1728.0) < 1e-13;
}

bool check_calderon() {
    const Material m = make_material(2, 1, 4);
    const CurveGrid g = sample_grid(make_curve("starfish"), 64);
    const BioSet b = assemble_bios(m, g);
    const CauchyData d = trace_and_traction(point_source(m, {0.1, -0.2}, CVec2(1, 0)), g, m);
    CVec c(8 * g.n);
    c << d.trace, d.traction;
    const CVec r = 0.5 * c - calderon_matrix(b) * c;
    return r.norm() < 1e-6 * c.norm();
}

bool check_gmres() {
    const CVec b = CVec::Ones(12);
    const auto r = gmres(CMat(CMat::Identity(12, 12)), b, 1e-12, 10);
    return r.report.iterations == 1 && (r.x - b).norm() < 1e-14;
}

bool check_far_field() {
    const Material m = make_material(1, 1, 5);
    const auto a = far_field_angles(16);
    const FarField f = point_source_far_field(m, {0.1, -0.2}, CVec2(1, 0), a);
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const Vec2 xh(std::cos(a[j]), std::sin(a[j]));
        worst = std::max(worst, std::abs(f.up[j](0) * xh(1) - f.up[j](1) * xh(0)));
        worst = std::max(worst, std::abs(f.us[j].dot(xh.cast<cplx>())));
    }
    return worst < 1e-14;
}

bool check_table() {
    std::vector<ReportRow> rows{{10, 64, "a", 12, 1.25e-7, std::nullopt, true}, {20, 128, "b", 7, std::nullopt, 0.5, false}};
    const auto back = parse_table(format_table(rows, TableFormat::csv));
    return back.size() == 2 && back[0].eps_inf == rows[0].eps_inf && back[1].seconds == rows[1].seconds &&
           !back[1].converged && back[1].formulation == "b";
}

}  // namespace

bool run_selftest(std::ostream& os) {
    const std::pair<const char*, std::function<bool()>> checks[] = {
        {"transmission constant", check_rho},
        {"calderon projector (starfish, n=64)", check_calderon},
        {"gmres on the identity", check_gmres},
        {"far-field polarization", check_far_field},
        {"table round trip", check_table},
    };
    bool all = true;
    for (const auto& [name, fn] : checks) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            os << "  error: " << e.what() << '\n';
        }
        os << (ok ? "PASS " : "FAIL ") << name << '\n';
        all = all && ok;
    }
    return all;
}

}  // namespace elasto
