#pragma once

#include <string>
#include <vector>

#include "elasto/formulations.hpp"

namespace elasto {

// Off-surface evaluation by the trapezoid rule.  Points closer to the curve than five grid
// spacings are evaluated anyway and counted in `near_points`.
struct FieldSamples {
    std::vector<CVec2> u;
    int near_points = 0;
};
FieldSamples eval_potential(const PotentialRepresentation& rep, const std::vector<Vec2>& points);

// Far-field pattern: u(R xhat) ~ e^{i kp R}/sqrt(R) up(xhat) + e^{i ks R}/sqrt(R) us(xhat).
struct FarField {
    std::vector<double> angles;
    std::vector<CVec2> up, us;
};

std::vector<double> far_field_angles(int count = 360);
FarField far_field(const PotentialRepresentation& rep, const std::vector<double>& angles);
FarField point_source_far_field(const Material& m, const Vec2& x0, const CVec2& q, const std::vector<double>& angles);

// max over directions of max(|up - up_ref|_inf, |us - us_ref|_inf)
double eps_inf(const FarField& computed, const FarField& reference);

// angle, then Re/Im of up_1, up_2, us_1, us_2
void write_far_field_csv(const FarField& f, const std::string& path);

}  // namespace elasto
