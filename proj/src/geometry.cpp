#include "elasto/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace elasto {

double FourierSeries::eval(double t, int d) const {
    double v = (d == 0) ? a0 : 0.0;
    const std::size_t kmax = std::max(c.size(), s.size());
    for (std::size_t i = 0; i < kmax; ++i) {
        const double k = static_cast<double>(i + 1);
        const double ck = i < c.size() ? c[i] : 0.0;
        const double sk = i < s.size() ? s[i] : 0.0;
        if (ck == 0.0 && sk == 0.0) continue;
        // d/dt of (c cos + s sin) rotates the phase by pi/2 per derivative
        const double phase = k * t + 0.5 * pi * d;
        v += std::pow(k, d) * (ck * std::cos(phase) + sk * std::sin(phase));
    }
    return v;
}

Curve::Curve(std::string name, FourierSeries x1, FourierSeries x2)
    : name_(std::move(name)), x1_(std::move(x1)), x2_(std::move(x2)) {
    // reject degenerate parameterizations on a fine scan
    const int scan = 2048;
    for (int j = 0; j < scan; ++j) {
        const double t = 2.0 * pi * j / scan;
        if (dx(t).norm() < 1e-10)
            throw std::invalid_argument("curve '" + name_ + "': |x'(t)| vanishes near t=" + std::to_string(t));
    }
}

Vec2 Curve::deriv(double t, int d) const { return {x1_.eval(t, d), x2_.eval(t, d)}; }

Vec2 Curve::normal(double t) const {
    const Vec2 d = dx(t);
    return {d(1), -d(0)};
}

Curve make_curve(CurveKind kind, const CurveParams& p) {
    switch (kind) {
    case CurveKind::circle: {
        if (!(p.radius > 0.0)) throw std::invalid_argument("circle radius must be positive");
        return Curve("circle", {p.center(0), {p.radius}, {}}, {p.center(1), {}, {p.radius}});
    }
    case CurveKind::starfish: {
        // (1 + sin(5t)/4)(cos t, sin t) expanded into harmonics 1, 4, 6
        FourierSeries x1{0.0, {1.0}, {0.0, 0.0, 0.0, 0.125, 0.0, 0.125}};
        FourierSeries x2{0.0, {0.0, 0.0, 0.0, 0.125, 0.0, -0.125}, {1.0}};
        return Curve("starfish", x1, x2);
    }
    case CurveKind::cavity: {
        FourierSeries x1{0.0, {0.4, 0.8}, {}};
        FourierSeries x2{0.0, {}, {7.0 / 12.0, 17.0 / 48.0, 3.0 / 8.0, -1.0 / 24.0}};
        return Curve("cavity", x1, x2);
    }
    case CurveKind::fourier_custom:
        return Curve("fourier_custom", p.x1, p.x2);
    }
    throw std::invalid_argument("unknown curve kind");
}

Curve make_curve(std::string_view kind, const CurveParams& p) {
    if (kind == "circle") return make_curve(CurveKind::circle, p);
    if (kind == "starfish") return make_curve(CurveKind::starfish, p);
    if (kind == "cavity") return make_curve(CurveKind::cavity, p);
    if (kind == "fourier_custom") return make_curve(CurveKind::fourier_custom, p);
    throw std::invalid_argument("unknown curve kind '" + std::string(kind) + "'");
}

CurveGrid sample_grid(const Curve& curve, int n) {
    if (n < 1) throw std::invalid_argument("sample_grid: n must be positive");
    CurveGrid g{curve, 0, {}, {}, {}, {}, {}, {}, {}};
    g.n = n;
    const int m = 2 * n;
    g.t.resize(m);
    g.t_shift.resize(m);
    g.x.resize(m);
    g.dx.resize(m);
    g.d2x.resize(m);
    g.nu.resize(m);
    g.speed.resize(m);
    for (int j = 0; j < m; ++j) {
        const double t = j * pi / n;
        g.t[j] = t;
        g.t_shift[j] = t + pi / (2.0 * n);
        g.x[j] = curve.x(t);
        g.dx[j] = curve.dx(t);
        g.d2x[j] = curve.d2x(t);
        g.nu[j] = curve.normal(t);
        g.speed[j] = g.dx[j].norm();
    }
    return g;
}

}  // namespace elasto
