#include "elasto/ddm.hpp"

#include <memory>
#include <stdexcept>

namespace elasto {

namespace {

CMat eye(Eigen::Index n) { return CMat::Identity(n, n); }

CMat stack_rows(const CMat& a, const CMat& b) {
    CMat m(a.rows() + b.rows(), a.cols());
    m << a, b;
    return m;
}

// outgoing Robin data T u + U gamma u from stacked Cauchy data
CMat robin_out(const CMat& cauchy, const CMat& U) {
    const Eigen::Index N = cauchy.rows() / 2;
    return cauchy.bottomRows(N) + U * cauchy.topRows(N);
}

}  // namespace

RtRMap rtr_interior(const Material& minus, const CurveGrid& grid, const BioSet& b, const TransmissionOperators& ups) {
    (void)minus;
    const int n = grid.n;
    const Eigen::Index N = grid.dofs();
    const CMat Um = multiplier_matrix(ups.minus, n), Up = multiplier_matrix(ups.plus, n);
    CMat A(2 * N, 2 * N);
    A << -0.5 * eye(N) - b.K.mat, b.V.mat, -Um + b.W.mat, -0.5 * eye(N) - b.Kt.mat;
    const LuFactor lu(A);
    RtRMap r;
    r.side = Side::interior;
    r.rcond = lu.rcond();
    r.cauchy = lu.solve(stack_rows(CMat::Zero(N, N), -eye(N)));
    r.S = robin_out(r.cauchy, Up);
    return r;
}

RtRMap rtr_exterior(const Material& plus, const Material& minus, const CurveGrid& grid, const BioSet& b,
                    const TransmissionOperators& ups, cplx kappa, const RtrOptions& opt) {
    const int n = grid.n;
    const Eigen::Index N = grid.dofs();
    const CMat I = eye(N);
    const CMat Up = multiplier_matrix(ups.plus, n), Um = multiplier_matrix(ups.minus, n);
    RtRMap r;
    r.side = Side::exterior;
    r.variant = opt.variant;
    if (opt.variant == RtrVariant::single) {
        const CMat Pp = multiplier_matrix(ps_dtn(plus, Side::exterior, n, kappa), n);
        const Symbol Pm_s = ps_dtn(minus, Side::interior, n, kappa);
        const Symbol Ros_s = (ps_dtn(plus, Side::exterior, n, kappa) - Pm_s).inverse();
        const CMat Ros = multiplier_matrix(Ros_s, n);
        const CMat gam = 0.5 * I + b.K.mat - b.V.mat * Pp;   // gamma u = gam R^os phi
        const CMat tra = b.W.mat + 0.5 * Pp - b.Kt.mat * Pp;  // T u = tra R^os phi
        const CMat B = left_multiply(Pm_s, gam) * -1.0 + tra;
        const CMat Bp = B * Ros;
        const LuFactor lu(Bp);
        r.rcond = lu.rcond();
        if (opt.keep_system) r.system = Bp;
        const CMat phi = lu.solve(I);
        r.cauchy = stack_rows(gam * Ros * phi, tra * Ros * phi);
        r.S = robin_out(r.cauchy, Um);
        return r;
    }
    CMat A(2 * N, 2 * N);
    A << 0.5 * I - b.K.mat, b.V.mat, Up + b.W.mat, 0.5 * I - b.Kt.mat;
    auto eps_system = [&](CMat& M, CMat& rhs) {
        if (!(opt.eps > 0.0)) throw std::invalid_argument("rtr_exterior: eps must be positive");
        const Material& c = opt.eps_exterior_constants ? plus : minus;
        const Symbol Vt = (make_symbol(SymbolKind::LambdaKappa, n, kappa) *
                           (make_symbol(SymbolKind::Identity, n) * 0.5 - make_symbol(SymbolKind::H, n) * c.alpha)) *
                          cplx(c.beta);
        const CMat Vtm = multiplier_matrix(Vt, n);
        M.topLeftCorner(N, N) += opt.eps * Vtm * Up;
        M.topRightCorner(N, N) += opt.eps * Vtm;
        rhs.topRows(N) = opt.eps * Vtm;
    };
    CMat rhs = stack_rows(CMat::Zero(N, N), I);
    if (opt.variant == RtrVariant::eps) eps_system(A, rhs);
    LuFactor lu(A, 0.0);
    if (opt.variant == RtrVariant::plain && lu.rcond() < 1.0 / opt.max_condition) {
        eps_system(A, rhs);
        lu = LuFactor(A, 0.0);
        r.fell_back = true;
        r.variant = RtrVariant::eps;
    }
    if (lu.rcond() < 1e-15) throw std::runtime_error("rtr_exterior: subdomain system is numerically singular");
    r.rcond = lu.rcond();
    if (opt.keep_system) r.system = A;
    r.cauchy = lu.solve(rhs);
    r.S = robin_out(r.cauchy, Um);
    return r;
}

DdmSystem assemble_ddm(const Material& plus, const Material& minus, const CurveGrid& grid, const BioSet& bp,
                       const BioSet& bm, cplx kappa, const CauchyData& data, const RtrOptions& opt) {
    const int n = grid.n;
    const Eigen::Index N = grid.dofs();
    const TransmissionOperators ups = transmission_operators(plus, minus, kappa, n);
    DdmSystem d;
    d.minus = rtr_interior(minus, grid, bm, ups);
    d.plus = rtr_exterior(plus, minus, grid, bp, ups, kappa, opt);
    LinearSystem& s = d.sys;
    s.op.n = n;
    s.op.mat.resize(2 * N, 2 * N);
    s.op.mat << eye(N), -d.minus.S, -d.plus.S, eye(N);
    s.rhs.resize(2 * N);
    s.rhs << -(data.traction + apply_multiplier(ups.plus, data.trace)),
        data.traction + apply_multiplier(ups.minus, data.trace);
    s.tag = "ddm";
    s.op.tag = s.tag;
    s.kappa = kappa;
    return d;
}

DdmSystem assemble_ddm(const Material& plus, const Material& minus, const CurveGrid& grid, cplx kappa,
                       const IncidentField& field, const RtrOptions& opt) {
    return assemble_ddm(plus, minus, grid, assemble_bios(plus, grid), assemble_bios(minus, grid), kappa,
                        trace_and_traction(field, grid, plus), opt);
}

Reconstruction reconstruct_ddm(const DdmSystem& d, const CVec& x, const Material& plus, const Material& minus,
                               const CurveGrid& grid) {
    const Eigen::Index N = grid.dofs();
    if (x.size() != 2 * N) throw std::invalid_argument("reconstruct_ddm: solution size mismatch");
    const CVec cp = d.plus.cauchy * x.head(N), cm = d.minus.cauchy * x.tail(N);
    const auto shared = std::make_shared<const CurveGrid>(grid);
    Reconstruction r;
    r.exterior.grid = shared;
    r.exterior.layers = {{LayerKind::DL, plus, cp.head(N), 1.0}, {LayerKind::SL, plus, cp.tail(N), -1.0}};
    PotentialRepresentation in;
    in.grid = shared;
    in.exterior = false;
    in.layers = {{LayerKind::DL, minus, cm.head(N), -1.0}, {LayerKind::SL, minus, cm.tail(N), 1.0}};
    r.interior = in;
    return r;
}

}  // namespace elasto
