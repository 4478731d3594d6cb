#pragma once

#include "elasto/geometry.hpp"
#include "elasto/types.hpp"

namespace elasto {

struct Material {
    double lambda = 0.0;
    double mu = 0.0;
    double omega = 0.0;
    double kp = 0.0;  // omega / sqrt(lambda + 2 mu)
    double ks = 0.0;  // omega / sqrt(mu)
    cplx alpha;       // i mu / (2 (lambda + 2 mu))
    double beta = 0.0;
    double delta = 0.0;
};

Material make_material(double lambda, double mu, double omega);

// Wavenumber used by the complexified multipliers: k_s + 0.4 i k_s^{1/3}.
cplx default_kappa(const Material& m);

enum class IncidentKind { plane_P, plane_S, plane, point_source };

// Incident elastic field with analytic gradient (grad(i,j) = du_i/dx_j).
class IncidentField {
public:
    CVec2 value(const Vec2& x) const;
    CMat2 gradient(const Vec2& x) const;

    IncidentKind kind() const { return kind_; }
    const Material& material() const { return mat_; }
    const Vec2& direction() const { return d_; }
    const Vec2& polarization() const { return p_; }
    const Vec2& source() const { return x0_; }
    const CVec2& source_strength() const { return q_; }

    friend IncidentField plane_wave(const Material&, const Vec2&, const Vec2&);
    friend IncidentField point_source(const Material&, const Vec2&, const CVec2&);
    friend IncidentField zero_field(const Material&);

private:
    IncidentKind kind_ = IncidentKind::plane;
    Material mat_;
    Vec2 d_ = Vec2::Zero(), p_ = Vec2::Zero(), x0_ = Vec2::Zero();
    CVec2 q_ = CVec2::Zero();
    // amplitudes of the S and P parts of a plane wave
    Vec2 ws_ = Vec2::Zero(), wp_ = Vec2::Zero();
};

IncidentField plane_wave(const Material& m, const Vec2& d, const Vec2& p);
IncidentField point_source(const Material& m, const Vec2& x0, const CVec2& q);
IncidentField zero_field(const Material& m);

// Nodal trace and traction, interleaved (2 components per node); traction uses the
// unnormalized normal so that it carries the |x'| weight.
struct CauchyData {
    CVec trace;
    CVec traction;
};

CVec2 traction_from_gradient(const CMat2& grad, const Vec2& nu, const Material& m);

CauchyData trace_and_traction(const IncidentField& field, const CurveGrid& grid, const Material& m);

// Navier residual mu Lap u + (lambda+mu) grad div u + omega^2 u by centered differences.
CVec2 navier_residual_fd(const IncidentField& field, const Vec2& x, double h);

}  // namespace elasto
