#include "elasto/formulations.hpp"

#include <stdexcept>

namespace elasto {

namespace {

CMat eye(Eigen::Index n) { return CMat::Identity(n, n); }

cplx pick_kappa(const Coupling& c, const Material& m) { return c.kappa == cplx(0.0) ? default_kappa(m) : c.kappa; }

CVec stack(const CVec& a, const CVec& b) {
    CVec v(a.size() + b.size());
    v << a, b;
    return v;
}

void check_sizes(const CurveGrid& grid, const BioSet& b, const CauchyData& d) {
    const Eigen::Index N = grid.dofs();
    if (b.V.mat.rows() != N || b.W.mat.rows() != N || d.trace.size() != N || d.traction.size() != N)
        throw std::invalid_argument("formulations: grid, operators and data disagree in size");
}

}  // namespace

CMat calderon_matrix(const BioSet& b) {
    const Eigen::Index N = b.V.mat.rows();
    CMat C(2 * N, 2 * N);
    C << b.K.mat, -b.V.mat, b.W.mat, -b.Kt.mat;
    return C;
}

CMat left_multiply(const BlockSymbol& s, const CMat& A) {
    const Eigen::Index N = A.rows() / 2;
    const CMat top = A.topRows(N), bot = A.bottomRows(N);
    CMat out(A.rows(), A.cols());
    out.topRows(N) = left_multiply(s.a, top) + left_multiply(s.b, bot);
    out.bottomRows(N) = left_multiply(s.c, top) + left_multiply(s.d, bot);
    return out;
}

CMat right_multiply(const CMat& A, const BlockSymbol& s) {
    const Eigen::Index N = A.cols() / 2;
    const CMat l = A.leftCols(N), r = A.rightCols(N);
    CMat out(A.rows(), A.cols());
    out.leftCols(N) = right_multiply(l, s.a) + right_multiply(r, s.c);
    out.rightCols(N) = right_multiply(l, s.b) + right_multiply(r, s.d);
    return out;
}

BlockSymbol sharp(const BlockSymbol& s) {
    return {s.d.transpose(), s.b.transpose() * cplx(-1.0), s.c.transpose() * cplx(-1.0), s.a.transpose()};
}

BlockSymbol regularizer_block(const TransmissionRegularizer& r) { return {r.R11, r.R12, r.R21, r.R22}; }

// ---------------------------------------------------------------- Dirichlet

LinearSystem assemble_dirichlet(DirichletKind kind, const Material& m, const CurveGrid& grid, const BioSet& b,
                                const Coupling& c, const CauchyData& data, DataRole role) {
    check_sizes(grid, b, data);
    LinearSystem s;
    s.role = role;
    s.rhs = role == DataRole::scattering ? CVec(-data.trace) : data.trace;
    s.op.n = grid.n;
    const CMat half = 0.5 * eye(grid.dofs());
    switch (kind) {
    case DirichletKind::CFIE:
        if (c.eta == 0.0) throw std::invalid_argument("assemble_dirichlet: eta must be nonzero");
        s.op.mat = half + b.K.mat - iu * c.eta * b.V.mat;
        s.tag = "dirichlet-cfie";
        s.eta = c.eta;
        break;
    case DirichletKind::CFIER: {
        const cplx kappa = pick_kappa(c, m);
        s.op.mat = half + b.K.mat - right_multiply(b.V.mat, ps_dtn(m, Side::exterior, grid.n, kappa));
        s.tag = "dirichlet-cfier";
        s.kappa = kappa;
        break;
    }
    case DirichletKind::SL:
        s.op.mat = b.V.mat;
        s.tag = "dirichlet-sl";
        break;
    case DirichletKind::DL:
        s.op.mat = half + b.K.mat;
        s.tag = "dirichlet-dl";
        break;
    }
    s.op.tag = s.tag;
    return s;
}

LinearSystem assemble_dirichlet(DirichletKind kind, const Material& m, const CurveGrid& grid, const Coupling& c,
                                const IncidentField& field, DataRole role) {
    return assemble_dirichlet(kind, m, grid, assemble_bios(m, grid), c, trace_and_traction(field, grid, m), role);
}

// ---------------------------------------------------------------- Neumann

LinearSystem assemble_neumann(NeumannKind kind, const Material& m, const CurveGrid& grid, const BioSet& b,
                              const Coupling& c, const CauchyData& data, DataRole role) {
    check_sizes(grid, b, data);
    LinearSystem s;
    s.role = role;
    s.op.n = grid.n;
    const CMat half = 0.5 * eye(grid.dofs());
    const CVec lam = role == DataRole::scattering ? CVec(-data.traction) : data.traction;
    switch (kind) {
    case NeumannKind::CFIE:
        if (c.eta == 0.0) throw std::invalid_argument("assemble_neumann: eta must be nonzero");
        s.op.mat = half - b.Kt.mat + iu * c.eta * b.W.mat;
        s.rhs = lam;
        s.tag = "neumann-cfie";
        s.eta = c.eta;
        break;
    case NeumannKind::CFIER: {
        const cplx kappa = pick_kappa(c, m);
        s.op.mat = half - b.Kt.mat + right_multiply(b.W.mat, ps_dtn(m, Side::exterior, grid.n, kappa).inverse());
        s.rhs = lam;
        s.tag = "neumann-cfier";
        s.kappa = kappa;
        break;
    }
    case NeumannKind::DCFIER: {
        const cplx kappa = pick_kappa(c, m);
        const Symbol RN = ps_dtn(m, Side::exterior, grid.n, kappa).inverse();
        s.op.mat = half - b.K.mat + left_multiply(RN, b.W.mat);
        // unknown: total trace for scattering, the field's own trace for a radiating field
        if (role == DataRole::scattering)
            s.rhs = data.trace - apply_multiplier(RN, data.traction);
        else
            s.rhs = -(b.V.mat * lam) + apply_multiplier(RN, CVec(0.5 * lam + b.Kt.mat * lam));
        s.tag = "neumann-dcfier";
        s.kappa = kappa;
        break;
    }
    case NeumannKind::SL:
        s.op.mat = -half + b.Kt.mat;
        s.rhs = lam;
        s.tag = "neumann-sl";
        break;
    case NeumannKind::DL:
        s.op.mat = b.W.mat;
        s.rhs = lam;
        s.tag = "neumann-dl";
        break;
    }
    s.op.tag = s.tag;
    return s;
}

LinearSystem assemble_neumann(NeumannKind kind, const Material& m, const CurveGrid& grid, const Coupling& c,
                              const IncidentField& field, DataRole role) {
    return assemble_neumann(kind, m, grid, assemble_bios(m, grid), c, trace_and_traction(field, grid, m), role);
}

// ---------------------------------------------------------------- transmission

LinearSystem assemble_transmission(TransmissionKind kind, const Material& plus, const Material& minus,
                                   const CurveGrid& grid, const BioSet& bp, const BioSet& bm, cplx kappa,
                                   const CauchyData& data) {
    check_sizes(grid, bp, data);
    check_sizes(grid, bm, data);
    const CMat Cp = calderon_matrix(bp), Cm = calderon_matrix(bm);
    const CMat S = Cp + Cm;
    const CVec cinc = stack(data.trace, data.traction);
    const CMat I = eye(S.rows());
    LinearSystem s;
    s.op.n = grid.n;
    switch (kind) {
    case TransmissionKind::SC:
        s.op.mat = -S;
        s.rhs = cinc;
        s.tag = "transmission-sc";
        break;
    case TransmissionKind::KR:
        s.op.mat = I + Cm - Cp;
        s.rhs = cinc;
        s.tag = "transmission-kr";
        break;
    case TransmissionKind::DCFIER: {
        const BlockSymbol Rs = sharp(regularizer_block(make_transmission_regularizer(plus, minus, kappa, grid.n)));
        s.op.mat = 0.5 * I + Cm - left_multiply(Rs, S);
        s.rhs = left_multiply(Rs, CMat(cinc)).col(0);
        s.tag = "transmission-dcfier";
        s.kappa = kappa;
        break;
    }
    case TransmissionKind::ICFIER: {
        const BlockSymbol R = regularizer_block(make_transmission_regularizer(plus, minus, kappa, grid.n));
        s.op.mat = 0.5 * I - Cm + right_multiply(S, R);
        s.rhs = -cinc;
        s.tag = "transmission-icfier";
        s.kappa = kappa;
        break;
    }
    }
    s.op.tag = s.tag;
    return s;
}

LinearSystem assemble_transmission(TransmissionKind kind, const Material& plus, const Material& minus,
                                   const CurveGrid& grid, cplx kappa, const IncidentField& field) {
    return assemble_transmission(kind, plus, minus, grid, assemble_bios(plus, grid), assemble_bios(minus, grid), kappa,
                                 trace_and_traction(field, grid, plus));
}

// ---------------------------------------------------------------- fields

Reconstruction reconstruct_fields(const LinearSystem& sys, const CVec& x, const Material& plus, const CurveGrid& grid,
                                  const CauchyData& data, const std::optional<Material>& minus) {
    const int n = grid.n;
    const Eigen::Index N = grid.dofs();
    if (x.size() != sys.rhs.size()) throw std::invalid_argument("reconstruct_fields: solution size mismatch");
    Reconstruction out;
    auto& ext = out.exterior.layers;
    const auto shared = std::make_shared<const CurveGrid>(grid);
    out.exterior.grid = shared;
    const std::string& t = sys.tag;
    auto dtn = [&]() { return ps_dtn(plus, Side::exterior, n, sys.kappa.value()); };
    if (t == "dirichlet-cfie") {
        ext = {{LayerKind::DL, plus, x, 1.0}, {LayerKind::SL, plus, x, -iu * sys.eta.value()}};
    } else if (t == "dirichlet-cfier") {
        ext = {{LayerKind::DL, plus, x, 1.0}, {LayerKind::SL, plus, apply_multiplier(dtn(), x), -1.0}};
    } else if (t == "neumann-cfie") {
        ext = {{LayerKind::SL, plus, x, -1.0}, {LayerKind::DL, plus, x, iu * sys.eta.value()}};
    } else if (t == "neumann-cfier") {
        ext = {{LayerKind::SL, plus, x, -1.0}, {LayerKind::DL, plus, apply_multiplier(dtn().inverse(), x), 1.0}};
    } else if (t == "dirichlet-sl" || t == "neumann-sl") {
        ext = {{LayerKind::SL, plus, x, 1.0}};
    } else if (t == "dirichlet-dl" || t == "neumann-dl") {
        ext = {{LayerKind::DL, plus, x, 1.0}};
    } else if (t == "neumann-dcfier") {
        ext = {{LayerKind::DL, plus, x, 1.0}};
        if (sys.role == DataRole::radiating) ext.push_back({LayerKind::SL, plus, data.traction, -1.0});
    } else if (t.starts_with("transmission-")) {
        if (!minus) throw std::invalid_argument("reconstruct_fields: transmission needs the interior material");
        CVec a, b, ai, bi;  // exterior and interior layer densities
        if (t == "transmission-icfier") {
            const BlockSymbol R = regularizer_block(make_transmission_regularizer(plus, *minus, sys.kappa.value(), n));
            const CVec rx = left_multiply(R, CMat(x)).col(0);
            a = rx.head(N);
            b = rx.tail(N);
            ai = x.head(N) - a;
            bi = x.tail(N) - b;
        } else if (t == "transmission-sc" || t == "transmission-kr" || t == "transmission-dcfier") {
            a = x.head(N) - data.trace;
            b = x.tail(N) - data.traction;
            // interior Somigliana: u = SL(Tu) - DL(gamma u)
            ai = -x.head(N);
            bi = -x.tail(N);
        } else {
            throw std::invalid_argument("reconstruct_fields: unknown tag " + t);
        }
        ext = {{LayerKind::DL, plus, a, 1.0}, {LayerKind::SL, plus, b, -1.0}};
        PotentialRepresentation in;
        in.grid = shared;
        in.exterior = false;
        in.layers = {{LayerKind::DL, *minus, ai, 1.0}, {LayerKind::SL, *minus, bi, -1.0}};
        out.interior = in;
    } else {
        throw std::invalid_argument("reconstruct_fields: unknown tag " + t);
    }
    return out;
}

DtnResult discrete_dtn_exterior(const Material& m, const CurveGrid& grid, const BioSet& b, int formula) {
    (void)m;
    const CMat half = 0.5 * eye(grid.dofs());
    constexpr double min_rcond = 1e-10;
    DtnResult r;
    r.op.n = grid.n;
    r.op.tag = "Y+";
    if (formula == 0 || formula == 1) {
        const Eigen::PartialPivLU<CMat> lu(b.V.mat);
        if (lu.rcond() >= min_rcond || formula == 1) {
            r.op.mat = -lu.solve(CMat(half - b.K.mat));
            r.formula = 1;
            return r;
        }
    }
    const Eigen::PartialPivLU<CMat> lu(half + b.Kt.mat);
    if (formula == 0 && lu.rcond() < min_rcond)
        throw std::runtime_error("discrete_dtn_exterior: both formulas are ill-conditioned");
    r.op.mat = lu.solve(b.W.mat);
    r.formula = 2;
    return r;
}

DtnResult discrete_dtn_exterior(const Material& m, const CurveGrid& grid) {
    return discrete_dtn_exterior(m, grid, assemble_bios(m, grid));
}

}  // namespace elasto
