#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "elasto/discretization.hpp"
#include "elasto/symbols.hpp"

namespace elasto {

// How boundary data enter the right-hand side.  For scattering the scattered field cancels the
// incident data; for a radiating (manufactured) field the data are the exterior solution itself.
enum class DataRole { scattering, radiating };

struct LinearSystem {
    DenseOperator op;
    CVec rhs;
    std::string tag;
    std::optional<double> eta;
    std::optional<cplx> kappa;
    DataRole role = DataRole::scattering;
};

// SL and DL are the plain single- and double-layer formulations (V phi = f, (1/2 I + K) g = f;
// (-1/2 I + Kt) phi = lambda, W g = lambda) used with manufactured data.
enum class DirichletKind { CFIE, CFIER, SL, DL };
enum class NeumannKind { CFIE, CFIER, DCFIER, SL, DL };
enum class TransmissionKind { SC, KR, DCFIER, ICFIER };

// eta is used by the CFIE variants, kappa by the regularized ones (zero selects default_kappa).
struct Coupling {
    double eta = 1.0;
    cplx kappa{0.0, 0.0};
};

LinearSystem assemble_dirichlet(DirichletKind kind, const Material& m, const CurveGrid& grid, const BioSet& bios,
                                const Coupling& c, const CauchyData& data, DataRole role = DataRole::scattering);
LinearSystem assemble_dirichlet(DirichletKind kind, const Material& m, const CurveGrid& grid, const Coupling& c,
                                const IncidentField& field, DataRole role = DataRole::scattering);

LinearSystem assemble_neumann(NeumannKind kind, const Material& m, const CurveGrid& grid, const BioSet& bios,
                              const Coupling& c, const CauchyData& data, DataRole role = DataRole::scattering);
LinearSystem assemble_neumann(NeumannKind kind, const Material& m, const CurveGrid& grid, const Coupling& c,
                              const IncidentField& field, DataRole role = DataRole::scattering);

// Unknowns: interior Cauchy data (gamma u_-, T_- u_-) except ICFIER (two layer densities).
// `data` are the incident Cauchy data computed with the exterior material.
LinearSystem assemble_transmission(TransmissionKind kind, const Material& plus, const Material& minus,
                                   const CurveGrid& grid, const BioSet& bplus, const BioSet& bminus, cplx kappa,
                                   const CauchyData& data);
LinearSystem assemble_transmission(TransmissionKind kind, const Material& plus, const Material& minus,
                                   const CurveGrid& grid, cplx kappa, const IncidentField& field);

// 8n x 8n principal Calderon operator [[K, -V], [W, -Kt]].
CMat calderon_matrix(const BioSet& b);

// Symbol-valued 2x2 block operator acting on pairs of 4n densities.
struct BlockSymbol {
    Symbol a, b, c, d;  // [[a, b], [c, d]]
};
CMat left_multiply(const BlockSymbol& s, const CMat& A);
CMat right_multiply(const CMat& A, const BlockSymbol& s);
// adjoint for the symplectic pairing: [[d^T, -b^T], [-c^T, a^T]]
BlockSymbol sharp(const BlockSymbol& s);
BlockSymbol regularizer_block(const TransmissionRegularizer& r);

enum class LayerKind { SL, DL };

struct Layer {
    LayerKind kind;
    Material mat;
    CVec density;  // interleaved; SL densities carry the |x'| weight like tractions
    cplx weight{1.0, 0.0};
};

struct PotentialRepresentation {
    std::vector<Layer> layers;
    std::shared_ptr<const CurveGrid> grid;
    bool exterior = true;
};

struct Reconstruction {
    PotentialRepresentation exterior;  // scattered (or radiating) field in the unbounded domain
    std::optional<PotentialRepresentation> interior;
};

// Tag as stored in LinearSystem::tag.  Transmission tags need both materials.
Reconstruction reconstruct_fields(const LinearSystem& sys, const CVec& x, const Material& plus, const CurveGrid& grid,
                                  const CauchyData& data, const std::optional<Material>& minus = std::nullopt);

// Exterior Dirichlet-to-Neumann matrix; the second formula is used when V is ill-conditioned.
struct DtnResult {
    DenseOperator op;
    int formula = 1;
};
DtnResult discrete_dtn_exterior(const Material& m, const CurveGrid& grid, const BioSet& bios, int formula = 0);
DtnResult discrete_dtn_exterior(const Material& m, const CurveGrid& grid);

}  // namespace elasto
