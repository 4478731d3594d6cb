#pragma once

#include <string>

#include "elasto/formulations.hpp"
#include "elasto/linalg.hpp"

namespace elasto {

enum class RtrVariant { plain, eps, single };

struct RtrOptions {
    RtrVariant variant = RtrVariant::plain;
    double eps = 0.1;
    // plain falls back to eps when its condition estimate exceeds this
    double max_condition = 1e12;
    // use the exterior material constants in the eps regularization instead of the interior ones
    bool eps_exterior_constants = false;
    // keep the factorized subdomain matrix in RtRMap::system (B_+ R^os for the single variant)
    bool keep_system = false;
};

// Robin-to-Robin map of one subdomain.  `cauchy` maps incoming Robin data to the subdomain
// Cauchy data (gamma u, T u) stacked; S maps it to the outgoing Robin data.
struct RtRMap {
    Side side = Side::exterior;
    RtrVariant variant = RtrVariant::plain;
    CMat cauchy;
    CMat S;
    double rcond = 0.0;
    bool fell_back = false;
    CMat system;  // empty unless requested
};

// Interior: T u + Upsilon_- gamma u = lambda in, S lambda = T u + Upsilon_+ gamma u.
RtRMap rtr_interior(const Material& minus, const CurveGrid& grid, const BioSet& bminus,
                    const TransmissionOperators& ups);
// Exterior: T u + Upsilon_+ gamma u = lambda in, S lambda = T u + Upsilon_- gamma u.
// `minus` supplies the constants of the eps regularization and of PS(Y_-) in the single variant.
RtRMap rtr_exterior(const Material& plus, const Material& minus, const CurveGrid& grid, const BioSet& bplus,
                    const TransmissionOperators& ups, cplx kappa, const RtrOptions& opt = {});

struct DdmSystem {
    LinearSystem sys;  // unknowns (lambda_+, lambda_-)
    RtRMap plus, minus;
};

DdmSystem assemble_ddm(const Material& plus, const Material& minus, const CurveGrid& grid, const BioSet& bplus,
                       const BioSet& bminus, cplx kappa, const CauchyData& data, const RtrOptions& opt = {});
DdmSystem assemble_ddm(const Material& plus, const Material& minus, const CurveGrid& grid, cplx kappa,
                       const IncidentField& field, const RtrOptions& opt = {});

// Subdomain Cauchy data and fields from the interface unknowns.
Reconstruction reconstruct_ddm(const DdmSystem& d, const CVec& x, const Material& plus, const Material& minus,
                               const CurveGrid& grid);

}  // namespace elasto
