#include "elasto/elastic_core.hpp"

#include <cmath>
#include <stdexcept>

#include "elasto/kernels.hpp"

namespace elasto {

Material make_material(double lambda, double mu, double omega) {
    if (!(mu > 0.0)) throw std::invalid_argument("make_material: mu must be positive");
    if (!(lambda + mu > 0.0)) throw std::invalid_argument("make_material: lambda + mu must be positive");
    if (!(omega > 0.0)) throw std::invalid_argument("make_material: omega must be positive");
    Material m;
    m.lambda = lambda;
    m.mu = mu;
    m.omega = omega;
    const double l2m = lambda + 2.0 * mu;
    m.kp = omega / std::sqrt(l2m);
    m.ks = omega / std::sqrt(mu);
    m.alpha = iu * mu / (2.0 * l2m);
    m.beta = (lambda + 3.0 * mu) / (4.0 * mu * l2m);
    m.delta = -mu * (lambda + mu) / l2m;
    const cplx id = m.alpha * m.alpha + m.beta * m.delta + 0.25;
    if (std::abs(id) > 1e-12) throw std::logic_error("make_material: constant identity violated");
    return m;
}

cplx default_kappa(const Material& m) { return {m.ks, 0.4 * std::cbrt(m.ks)}; }

IncidentField plane_wave(const Material& m, const Vec2& d, const Vec2& p) {
    if (std::abs(d.norm() - 1.0) > 1e-12) throw std::invalid_argument("plane_wave: |d| must be 1");
    if (p.norm() == 0.0) throw std::invalid_argument("plane_wave: zero polarization");
    IncidentField f;
    f.mat_ = m;
    f.d_ = d;
    f.p_ = p;
    // (d x p) x d = p - (d.p) d in the plane
    f.ws_ = (p - d.dot(p) * d) / m.mu;
    f.wp_ = d.dot(p) * d / (m.lambda + 2.0 * m.mu);
    const bool has_s = f.ws_.norm() > 1e-14 * p.norm();
    const bool has_p = f.wp_.norm() > 1e-14 * p.norm();
    f.kind_ = has_s && has_p ? IncidentKind::plane : (has_s ? IncidentKind::plane_S : IncidentKind::plane_P);
    return f;
}

IncidentField point_source(const Material& m, const Vec2& x0, const CVec2& q) {
    if (q.norm() == 0.0) throw std::invalid_argument("point_source: zero polarization");
    IncidentField f;
    f.kind_ = IncidentKind::point_source;
    f.mat_ = m;
    f.x0_ = x0;
    f.q_ = q;
    return f;
}

IncidentField zero_field(const Material& m) {
    IncidentField f;
    f.kind_ = IncidentKind::plane;
    f.mat_ = m;
    f.d_ = Vec2(1.0, 0.0);
    return f;
}

CVec2 IncidentField::value(const Vec2& x) const {
    if (kind_ == IncidentKind::point_source) return fundamental_solution(mat_, x, x0_) * q_;
    const double xd = x.dot(d_);
    const cplx es = std::exp(iu * mat_.ks * xd);
    const cplx ep = std::exp(iu * mat_.kp * xd);
    return es * ws_.cast<cplx>() + ep * wp_.cast<cplx>();
}

CMat2 IncidentField::gradient(const Vec2& x) const {
    CMat2 g;
    if (kind_ == IncidentKind::point_source) {
        const auto d1 = fundamental_solution_gradient(mat_, x, x0_);
        for (int j = 0; j < 2; ++j) g.col(j) = d1[j] * q_;
        return g;
    }
    const double xd = x.dot(d_);
    const cplx es = std::exp(iu * mat_.ks * xd);
    const cplx ep = std::exp(iu * mat_.kp * xd);
    const CVec2 us = es * ws_.cast<cplx>();
    const CVec2 up = ep * wp_.cast<cplx>();
    g = iu * mat_.ks * us * d_.transpose().cast<cplx>() + iu * mat_.kp * up * d_.transpose().cast<cplx>();
    return g;
}

CVec2 traction_from_gradient(const CMat2& grad, const Vec2& nu, const Material& m) {
    const cplx div = grad.trace();
    const CMat2 sigma = m.lambda * div * CMat2::Identity() + m.mu * (grad + grad.transpose());
    return sigma * nu.cast<cplx>();
}

CauchyData trace_and_traction(const IncidentField& field, const CurveGrid& grid, const Material& m) {
    CauchyData cd;
    const int nn = grid.nodes();
    cd.trace.resize(2 * nn);
    cd.traction.resize(2 * nn);
    for (int j = 0; j < nn; ++j) {
        cd.trace.segment<2>(2 * j) = field.value(grid.x[j]);
        cd.traction.segment<2>(2 * j) = traction_from_gradient(field.gradient(grid.x[j]), grid.nu[j], m);
    }
    return cd;
}

CVec2 navier_residual_fd(const IncidentField& field, const Vec2& x, double h) {
    const Material& m = field.material();
    std::array<CMat2, 2> dg;  // dg[j] = d/dx_j of the gradient
    for (int j = 0; j < 2; ++j) {
        Vec2 e = Vec2::Zero();
        e(j) = h;
        dg[j] = (field.gradient(x + e) - field.gradient(x - e)) / (2.0 * h);
    }
    CVec2 res = m.omega * m.omega * field.value(x);
    for (int i = 0; i < 2; ++i) {
        cplx lap = 0.0, graddiv = 0.0;
        for (int j = 0; j < 2; ++j) {
            lap += dg[j](i, j);
            graddiv += dg[i](j, j);
        }
        res(i) += m.mu * lap + (m.lambda + m.mu) * graddiv;
    }
    return res;
}

}  // namespace elasto
