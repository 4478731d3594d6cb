#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "elasto/types.hpp"

namespace elasto {

// Truncated real Fourier series a0 + sum_k (c[k-1] cos kt + s[k-1] sin kt).
struct FourierSeries {
    double a0 = 0.0;
    std::vector<double> c;
    std::vector<double> s;

    // d-th derivative at t.
    double eval(double t, int d = 0) const;
};

enum class CurveKind { circle, starfish, cavity, fourier_custom };

struct CurveParams {
    double radius = 1.0;
    Vec2 center = Vec2::Zero();
    FourierSeries x1;  // fourier_custom only
    FourierSeries x2;
};

// Smooth 2pi-periodic closed curve, stored as a trigonometric polynomial per coordinate.
class Curve {
public:
    Curve(std::string name, FourierSeries x1, FourierSeries x2);

    Vec2 x(double t) const { return deriv(t, 0); }
    Vec2 dx(double t) const { return deriv(t, 1); }
    Vec2 d2x(double t) const { return deriv(t, 2); }
    Vec2 d3x(double t) const { return deriv(t, 3); }
    Vec2 deriv(double t, int d) const;

    // Unnormalized normal (x2', -x1'); outward for counterclockwise curves.
    Vec2 normal(double t) const;
    double speed(double t) const { return dx(t).norm(); }

    const std::string& name() const { return name_; }
    const FourierSeries& coord(int i) const { return i == 0 ? x1_ : x2_; }

private:
    std::string name_;
    FourierSeries x1_, x2_;
};

Curve make_curve(CurveKind kind, const CurveParams& params = {});
Curve make_curve(std::string_view kind, const CurveParams& params = {});

// Equispaced sampling t_j = j pi / n, j = 0..2n-1.
struct CurveGrid {
    Curve curve;
    int n = 0;
    std::vector<double> t, t_shift;
    std::vector<Vec2> x, dx, d2x, nu;
    std::vector<double> speed;

    int nodes() const { return 2 * n; }
    int dofs() const { return 4 * n; }
    double h() const { return pi / n; }
};

CurveGrid sample_grid(const Curve& curve, int n);

}  // namespace elasto
