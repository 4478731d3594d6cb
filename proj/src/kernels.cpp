#include "elasto/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/bessel.hpp>

namespace elasto {

namespace {

constexpr double euler_gamma = 0.57721566490153286061;
constexpr int series_terms = 26;
// ascending series are used when k_s r is below this value
constexpr double series_threshold = 2.0;

double harmonic(int n) {
    double h = 0.0;
    for (int j = 1; j <= n; ++j) h += 1.0 / j;
    return h;
}

double factorial(int n) {
    double f = 1.0;
    for (int j = 2; j <= n; ++j) f *= j;
    return f;
}

double binom(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

}  // namespace

// ---------------------------------------------------------------- special functions

BesselPair bessel(int order, double z) {
    if (order < 0 || order > 4) throw std::invalid_argument("bessel: order must be in 0..4");
    if (z < 0.0) throw std::invalid_argument("bessel: negative argument");
    const double J = boost::math::cyl_bessel_j(order, z);
    if (z == 0.0) return {J, -std::numeric_limits<double>::infinity()};
    const double Y = boost::math::cyl_neumann(order, z);
    return {J, Y};
}

cplx phi(int order, double z) {
    const auto b = bessel(order, z);
    return 0.25 * iu * cplx(b.J, b.Y);
}

cplx bessel_remainder(int n, double k, double z) {
    if (n < 0 || n > 3) throw std::invalid_argument("bessel_remainder: order must be in 0..3");
    const double x = k * z;
    const cplx c0 = 0.25 * iu - std::log(k / 2.0) / (2.0 * pi);
    if (x <= series_threshold) {
        // (k/2)^n sum_j (-x^2/4)^j / (j!(n+j)!) [c0 + (psi(j+1)+psi(n+j+1))/(4pi)]
        const double q = -x * x / 4.0;
        cplx sum = 0.0;
        double term = 1.0 / factorial(n);
        for (int j = 0; j < series_terms; ++j) {
            const double psi_sum = -2.0 * euler_gamma + harmonic(j) + harmonic(n + j);
            sum += term * (c0 + psi_sum / (4.0 * pi));
            term *= q / ((j + 1.0) * (n + j + 1.0));
        }
        return std::pow(k / 2.0, n) * sum;
    }
    double sing = 0.0;
    switch (n) {
    case 1: sing = 1.0 / (2.0 * pi * x); break;
    case 2: sing = 1.0 / (pi * x * x) + 1.0 / (4.0 * pi); break;
    case 3: sing = 4.0 / (pi * x * x * x) + 1.0 / (2.0 * pi * x) + x / (16.0 * pi); break;
    default: break;
    }
    const auto b = bessel(n, x);
    return (phi(n, x) + b.J * std::log(z) / (2.0 * pi) - sing) / std::pow(z, n);
}

// ---------------------------------------------------------------- radial functions

namespace {

// Power-series form f(r) = P(s) log r + Q(s), s = r^2, for f = sum_f w_f phi_0(k_f r).
struct LogSeries {
    std::array<cplx, series_terms> p{}, q{};

    void add_family(double w, double k) {
        const double c0 = -std::log(k / 2.0) - euler_gamma;
        double t = 1.0;  // (-1)^n (k^2/4)^n / (n!)^2
        for (int n = 0; n < series_terms; ++n) {
            p[n] += w * (-1.0 / (2.0 * pi)) * t;
            q[n] += w * (0.25 * iu + c0 / (2.0 * pi) + harmonic(n) / (2.0 * pi)) * t;
            t *= -(k * k / 4.0) / ((n + 1.0) * (n + 1.0));
        }
    }

    static cplx deriv(const std::array<cplx, series_terms>& c, int m, double s) {
        cplx v = 0.0;
        double sp = 1.0;
        for (int n = m; n < series_terms; ++n) {
            v += c[n] * (factorial(n) / factorial(n - m)) * sp;
            sp *= s;
        }
        return v;
    }

    // D^m f split into log coefficient and regular part; s > 0 unless only logc is needed.
    void eval(int m, double s, cplx& logc, cplx& reg, bool with_reg) const {
        const double scale = std::pow(2.0, m);
        logc = scale * deriv(p, m, s);
        if (!with_reg) return;
        cplx r = deriv(q, m, s);
        for (int j = 1; j <= m; ++j) {
            const double sign = (j % 2 == 1) ? 1.0 : -1.0;
            r += 0.5 * binom(m, j) * deriv(p, m - j, s) * sign * factorial(j - 1) / std::pow(s, j);
        }
        reg = scale * r;
    }
};

void radial_hankel(const Material& mat, double r, RadialSplit& out) {
    const double logr = std::log(r);
    std::array<cplx, 5> gs{}, gp{}, ls{}, lp{};
    auto family = [&](double k, std::array<cplx, 5>& g, std::array<cplx, 5>& l) {
        const double z = k * r;
        const double y0 = boost::math::cyl_neumann(0, z);
        const double y1 = boost::math::cyl_neumann(1, z);
        std::array<double, 5> J{}, Y{};
        Y[0] = y0;
        Y[1] = y1;
        for (int m = 1; m < 4; ++m) Y[m + 1] = (2.0 * m / z) * Y[m] - Y[m - 1];
        for (int m = 0; m < 5; ++m) J[m] = boost::math::cyl_bessel_j(m, z);
        double f = 1.0;  // (-k^2)^m / z^m
        for (int m = 0; m < 5; ++m) {
            g[m] = f * 0.25 * iu * cplx(J[m], Y[m]);
            l[m] = f * (-1.0 / (2.0 * pi)) * J[m];
            f *= -k * k / z;
        }
    };
    family(mat.ks, gs, ls);
    family(mat.kp, gp, lp);
    const double w2 = 1.0 / (mat.omega * mat.omega);
    for (int m = 0; m < 3; ++m) {
        out.full.a[m] = gs[m] / mat.mu;
        out.logc.a[m] = ls[m] / mat.mu;
        out.reg.a[m] = out.full.a[m] - out.logc.a[m] * logr;
    }
    for (int m = 0; m < 5; ++m) {
        out.full.chi[m] = (gs[m] - gp[m]) * w2;
        out.logc.chi[m] = (ls[m] - lp[m]) * w2;
        out.reg.chi[m] = out.full.chi[m] - out.logc.chi[m] * logr;
    }
}

void radial_series(const Material& mat, double r, RadialSplit& out) {
    LogSeries sa, sc;
    sa.add_family(1.0 / mat.mu, mat.ks);
    const double w2 = 1.0 / (mat.omega * mat.omega);
    sc.add_family(w2, mat.ks);
    sc.add_family(-w2, mat.kp);
    // exact cancellation of the leading log coefficient
    sc.p[0] = 0.0;
    const double s = r * r;
    const bool with_reg = r > 0.0;
    const double logr = with_reg ? std::log(r) : 0.0;
    for (int m = 0; m < 3; ++m) {
        sa.eval(m, s, out.logc.a[m], out.reg.a[m], with_reg);
        out.full.a[m] = out.logc.a[m] * logr + out.reg.a[m];
    }
    for (int m = 0; m < 5; ++m) {
        sc.eval(m, s, out.logc.chi[m], out.reg.chi[m], with_reg);
        out.full.chi[m] = out.logc.chi[m] * logr + out.reg.chi[m];
    }
}

// Derivative tensors of Phi in r: phi(b,c), d1[a](b,c), d2[a][e](b,c).
struct PhiTensors {
    CMat2 phi;
    std::array<CMat2, 2> d1;
    std::array<std::array<CMat2, 2>, 2> d2;
};

PhiTensors phi_tensors(const RadialData& R, const Vec2& r, int order) {
    PhiTensors T;
    auto dl = [](int i, int j) { return i == j ? 1.0 : 0.0; };
    const cplx A0 = R.a[0], A1 = R.a[1], A2 = R.a[2];
    const cplx X1 = R.chi[1], X2 = R.chi[2], X3 = R.chi[3], X4 = R.chi[4];
    for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) T.phi(b, c) = A0 * dl(b, c) + X1 * dl(b, c) + r(b) * r(c) * X2;
    if (order < 1) return T;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                T.d1[a](b, c) = r(a) * A1 * dl(b, c) + (dl(a, b) * r(c) + dl(a, c) * r(b) + dl(b, c) * r(a)) * X2 +
                                r(a) * r(b) * r(c) * X3;
    if (order < 2) return T;
    for (int a = 0; a < 2; ++a)
        for (int e = 0; e < 2; ++e)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c) {
                    const cplx aa = (dl(a, e) * A1 + r(a) * r(e) * A2) * dl(b, c);
                    const double d2 = dl(a, e) * dl(b, c) + dl(a, b) * dl(e, c) + dl(a, c) * dl(e, b);
                    const double d3 = dl(a, e) * r(b) * r(c) + dl(a, b) * r(e) * r(c) + dl(a, c) * r(e) * r(b) +
                                      dl(e, b) * r(a) * r(c) + dl(e, c) * r(a) * r(b) + dl(b, c) * r(a) * r(e);
                    T.d2[a][e](b, c) = aa + d2 * X2 + d3 * X3 + r(a) * r(e) * r(b) * r(c) * X4;
                }
    return T;
}

// K(i,j) = (T_y Phi)_{ji} with d/dy = -d/dr.
CMat2 double_layer_from(const PhiTensors& T, const Vec2& nu_y, const Material& m) {
    CMat2 K;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            // Ty(j,i) = lambda nu_j sum_k d_k Phi_ki + mu sum_l nu_l (d_l Phi_ji + d_j Phi_li)
            cplx div = T.d1[0](0, i) + T.d1[1](1, i);
            cplx v = m.lambda * nu_y(j) * div;
            for (int l = 0; l < 2; ++l) v += m.mu * nu_y(l) * (T.d1[l](j, i) + T.d1[j](l, i));
            K(i, j) = -v;
        }
    return K;
}

}  // namespace

RadialSplit radial_split(const Material& m, double r) {
    if (r < 0.0) throw std::invalid_argument("radial_split: negative distance");
    RadialSplit out;
    if (m.ks * r <= series_threshold)
        radial_series(m, r, out);
    else
        radial_hankel(m, r, out);
    return out;
}

// ---------------------------------------------------------------- kernels

CMat2& KernelSet::operator[](BioTag t) {
    switch (t) {
    case BioTag::V: return V;
    case BioTag::K: return K;
    case BioTag::Kt: return Kt;
    default: return W;
    }
}

const CMat2& KernelSet::operator[](BioTag t) const { return const_cast<KernelSet&>(*this)[t]; }

CMat2 fundamental_solution(const Material& m, const Vec2& x, const Vec2& y) {
    const Vec2 r = x - y;
    const double d = r.norm();
    if (d == 0.0) throw std::invalid_argument("fundamental_solution: coincident points");
    return phi_tensors(radial_split(m, d).full, r, 0).phi;
}

std::array<CMat2, 2> fundamental_solution_gradient(const Material& m, const Vec2& x, const Vec2& y) {
    const Vec2 r = x - y;
    const double d = r.norm();
    if (d == 0.0) throw std::invalid_argument("fundamental_solution_gradient: coincident points");
    const auto T = phi_tensors(radial_split(m, d).full, r, 1);
    return T.d1;
}

KernelSet kernels_from_radial(const RadialData& R, const Vec2& r, const Vec2& nu_x, const Vec2& nu_y,
                              const Material& m) {
    const PhiTensors T = phi_tensors(R, r, 2);
    KernelSet ks;
    ks.V = T.phi;
    ks.K = double_layer_from(T, nu_y, m);
    // Kt(i,j) = lambda nu_x(i) sum_k d_k Phi_kj + mu sum_l nu_x(l) (d_l Phi_ij + d_i Phi_lj)
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            cplx v = m.lambda * nu_x(i) * (T.d1[0](0, j) + T.d1[1](1, j));
            for (int l = 0; l < 2; ++l) v += m.mu * nu_x(l) * (T.d1[l](i, j) + T.d1[i](l, j));
            ks.Kt(i, j) = v;
        }
    // dK[e](k,j) = d/dx_e K(k,j) = -[lambda nu_y(j) sum_p d_e d_p Phi_pk + mu sum_l nu_y(l)(d_e d_l Phi_jk + d_e d_j Phi_lk)]
    std::array<CMat2, 2> dK;
    for (int e = 0; e < 2; ++e)
        for (int k = 0; k < 2; ++k)
            for (int j = 0; j < 2; ++j) {
                cplx v = m.lambda * nu_y(j) * (T.d2[e][0](0, k) + T.d2[e][1](1, k));
                for (int l = 0; l < 2; ++l) v += m.mu * nu_y(l) * (T.d2[e][l](j, k) + T.d2[e][j](l, k));
                dK[e](k, j) = -v;
            }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            cplx v = m.lambda * nu_x(i) * (dK[0](0, j) + dK[1](1, j));
            for (int l = 0; l < 2; ++l) v += m.mu * nu_x(l) * (dK[l](i, j) + dK[i](l, j));
            ks.W(i, j) = v;
        }
    return ks;
}

KernelSet kernels_direct(const Material& m, const Curve& c, double tau, double t) {
    const Vec2 r = c.x(tau) - c.x(t);
    const double d = r.norm();
    if (d == 0.0) throw std::invalid_argument("kernels_direct: coincident points");
    return kernels_from_radial(radial_split(m, d).full, r, c.normal(tau), c.normal(t), m);
}

CMat2 sl_kernel(const Material& m, const Vec2& z, const Vec2& y) { return fundamental_solution(m, z, y); }

CMat2 dl_kernel(const Material& m, const Vec2& z, const Vec2& y, const Vec2& nu_y) {
    const Vec2 r = z - y;
    const double d = r.norm();
    if (d == 0.0) throw std::invalid_argument("dl_kernel: coincident points");
    return double_layer_from(phi_tensors(radial_split(m, d).full, r, 1), nu_y, m);
}

// ---------------------------------------------------------------- splitting

double cauchy_coefficient(const Material& m) { return -m.mu / (m.lambda + 2.0 * m.mu); }

double hypersingular_coefficient(const Material& m) {
    return m.mu * (m.lambda + m.mu) / (m.lambda + 2.0 * m.mu);
}

SplitEngine::SplitEngine(Material m, Curve c) : mat_(m), curve_(std::move(c)) {}

std::array<SplitValue, 4> SplitEngine::off_diagonal(double tau, double t) const {
    return eval_with(tau, t, radial_split(mat_, (curve_.x(tau) - curve_.x(t)).norm()));
}

std::array<SplitValue, 4> SplitEngine::eval_with(double tau, double t, const RadialSplit& R) const {
    const Vec2 r = curve_.x(tau) - curve_.x(t);
    const double d = r.norm();
    const Vec2 nx = curve_.normal(tau), ny = curve_.normal(t);
    const KernelSet L = kernels_from_radial(R.logc, r, nx, ny, mat_);
    const KernelSet S = kernels_from_radial(R.reg, r, nx, ny, mat_);
    const double h = tau - t;
    const double sn = std::sin(0.5 * h);
    // log r = 1/2 log(4 sin^2) + 1/2 log(r^2 / (4 sin^2))
    const double fold = std::log(d * d / (4.0 * sn * sn));
    const double cot = std::cos(0.5 * h) / sn;
    const double csc2 = 1.0 / (sn * sn);
    const CMat2 J = rot90();
    const double cpv = cauchy_coefficient(mat_), chs = hypersingular_coefficient(mat_);
    std::array<SplitValue, 4> out;
    for (int k = 0; k < 4; ++k) {
        const auto tag = static_cast<BioTag>(k);
        out[k].log = 0.5 * L[tag];
        out[k].smooth = S[tag] + 0.5 * fold * L[tag];
    }
    out[1].smooth -= (cpv / (4.0 * pi) * cot) * J;
    out[2].smooth -= (cpv / (4.0 * pi) * cot) * J;
    out[3].smooth -= (chs / (4.0 * pi) * csc2) * CMat2::Identity();
    return out;
}

std::array<SplitValue, 4> SplitEngine::diagonal(double tau) const {
    std::array<SplitValue, 4> out;
    // log part: entire in r, evaluate at r = 0
    const RadialSplit R0 = radial_split(mat_, 0.0);
    const Vec2 nx = curve_.normal(tau);
    const KernelSet L = kernels_from_radial(R0.logc, Vec2::Zero(), nx, nx, mat_);
    // smooth part: symmetric samples and Richardson extrapolation in h^2
    const double speed = curve_.speed(tau);
    const double h0 = std::min(1e-2, 0.1 / (mat_.ks * speed));
    std::array<std::array<CMat2, 4>, 3> f;
    for (int s = 0; s < 3; ++s) {
        const double h = h0 / std::pow(2.0, s);
        const auto p = off_diagonal(tau, tau + h);
        const auto q = off_diagonal(tau, tau - h);
        for (int k = 0; k < 4; ++k) f[s][k] = 0.5 * (p[k].smooth + q[k].smooth);
    }
    for (int k = 0; k < 4; ++k) {
        out[k].log = 0.5 * L[static_cast<BioTag>(k)];
        out[k].smooth = (64.0 * f[2][k] - 20.0 * f[1][k] + f[0][k]) / 45.0;
    }
    return out;
}

std::array<SplitValue, 4> SplitEngine::eval(double tau, double t) const {
    const double h = std::remainder(tau - t, 2.0 * pi);
    if (std::abs(h) < 1e-14) return diagonal(tau);
    return off_diagonal(tau, t);
}

KernelSplit::KernelSplit(BioTag tag, Material m, Curve c) : tag_(tag), engine_(m, std::move(c)) {
    if (tag == BioTag::K || tag == BioTag::Kt) c_pv_ = cauchy_coefficient(m);
    if (tag == BioTag::W) c_hs_ = hypersingular_coefficient(m);
}

SplitValue KernelSplit::eval(double tau, double t) const { return engine_.eval(tau, t)[static_cast<int>(tag_)]; }

CMat2 KernelSplit::reconstruct(double tau, double t) const {
    const SplitValue v = eval(tau, t);
    const double h = tau - t;
    const double sn = std::sin(0.5 * h);
    CMat2 k = v.log * std::log(4.0 * sn * sn) + v.smooth;
    k += (c_pv_ / (4.0 * pi) * std::cos(0.5 * h) / sn) * rot90();
    k += (c_hs_ / (4.0 * pi) / (sn * sn)) * CMat2::Identity();
    return k;
}

CMat2 KernelSplit::direct(double tau, double t) const {
    return kernels_direct(engine_.material(), engine_.curve(), tau, t)[tag_];
}

KernelSplit kernel_split(const Material& m, const CurveGrid& grid, BioTag tag) {
    return KernelSplit(tag, m, grid.curve);
}

// ---------------------------------------------------------------- appendix coefficient functions

namespace appendix {

namespace {

// Series coefficient (in z^{2j}) of k^{2p} J_nu(kz)/(kz)^nu.
double jcoef(double k, int nu, int p, int j) {
    return std::pow(k, 2 * p) * ((j % 2) ? -1.0 : 1.0) * std::pow(k / 2.0, 2 * j) /
           (std::pow(2.0, nu) * factorial(j) * factorial(j + nu));
}

double jdirect(double k, int nu, int p, double z) {
    const double x = k * z;
    return std::pow(k, 2 * p) * boost::math::cyl_bessel_j(nu, x) / std::pow(x, nu);
}

struct Term {
    double weight;  // coefficient
    double k;
    int nu;  // J_nu(kz)/(kz)^nu
    int p;   // times k^{2p}
};

// (1/z^{2 shift}) sum_terms weight k^{2p} J_nu(kz)/(kz)^nu + constant / z^{2 shift}
double combine(const std::vector<Term>& terms, double constant, int shift, double z, double kmax) {
    if (kmax * z > 1.0) {
        double v = constant;
        for (const auto& t : terms) v += t.weight * jdirect(t.k, t.nu, t.p, z);
        return v / std::pow(z, 2 * shift);
    }
    // drop the cancelling low-order coefficients and divide by z^{2 shift}
    double v = 0.0;
    double zp = 1.0;
    for (int j = shift; j < series_terms; ++j) {
        double c = (j == 0) ? constant : 0.0;
        for (const auto& t : terms) c += t.weight * jcoef(t.k, t.nu, t.p, j);
        v += c * zp;
        zp *= z * z;
    }
    return v;
}

}  // namespace

double a_log2(const Material& m, double z) {
    const double kp = m.kp, ks = m.ks, s = 1.0 / (2.0 * pi * m.omega * m.omega);
    return combine({{-s, kp, 1, 1}, {-s, ks, 0, 1}, {s, ks, 1, 1}}, s * 0.5 * (ks * ks + kp * kp), 1, z, ks);
}

double a_log3(const Material& m, double z) {
    const double kp = m.kp, ks = m.ks, s = 1.0 / (2.0 * pi * m.omega * m.omega);
    return combine({{-s, kp, 0, 1}, {2 * s, kp, 1, 1}, {s, ks, 0, 1}, {-2 * s, ks, 1, 1}}, 0.0, 1, z, ks);
}

double b_log2(const Material& m, double z) {
    const double kp = m.kp, ks = m.ks, s = 1.0 / (2.0 * pi * m.omega * m.omega);
    return combine({{-s, kp, 2, 2}, {-s, ks, 1, 2}, {s, ks, 2, 2}}, 0.0, 0, z, ks);
}

double b_log3(const Material& m, double z) {
    const double kp = m.kp, ks = m.ks, s = 1.0 / (2.0 * pi * m.omega * m.omega);
    return combine({{-s, kp, 1, 2}, {2 * s, kp, 2, 2}, {s, ks, 1, 2}, {-2 * s, ks, 2, 2}}, 0.0, 0, z, ks);
}

double b_log4(const Material& m, double z) { return -a_log3(m, z); }

double c_log1(const Material& m, double z) {
    const double kp = m.kp, ks = m.ks, s = 1.0 / (2.0 * pi * m.omega * m.omega);
    return -z * z * combine({{s, kp, 3, 3}, {s, ks, 2, 3}, {-s, ks, 3, 3}}, 0.0, 0, z, ks);
}

double c_log2(const Material& m, double z) { return -b_log2(m, z); }

double c_log3(const Material& m, double z) {
    // second k_s term uses (k_s z)^3 in the denominator
    const double kp = m.kp, ks = m.ks, s = 1.0 / (2.0 * pi * m.omega * m.omega);
    return -z * z * combine({{s, kp, 2, 3}, {-2 * s, kp, 3, 3}, {-s, ks, 2, 3}, {2 * s, ks, 3, 3}}, 0.0, 0, z, ks);
}

double c_log4(const Material& m, double z) { return -b_log3(m, z); }

double c_log5(const Material& m, double z) {
    // k^3 z J_1(kz) = k^4 z^2 J_1(kz)/(kz); k^2 J_2(kz) = k^6 z^2 J_2/(kz)^2 / k^2 ... expanded termwise
    const double kp = m.kp, ks = m.ks, s = -1.0 / (2.0 * pi * m.omega * m.omega);
    auto part = [&](double k, double sg, double zz) {
        const double x = k * zz;
        if (x == 0.0) return 0.0;
        return sg * (-2 * k * k * boost::math::cyl_bessel_j(0, x) - k * k * k * zz * boost::math::cyl_bessel_j(1, x) +
                     4 * k * k * boost::math::cyl_bessel_j(1, x) / x - 2 * k * k * boost::math::cyl_bessel_j(2, x));
    };
    if (ks * z > 1.0) return s * (part(kp, 1.0, z) + part(ks, -1.0, z)) / (z * z);
    // series: J_0, z^2 J_1/(kz) k^4, J_1/(kz), (kz)^2 J_2/(kz)^2
    double v = 0.0, zp = 1.0;
    for (int j = 1; j < series_terms; ++j) {
        double c = 0.0;
        for (int f = 0; f < 2; ++f) {
            const double k = f == 0 ? kp : ks, sg = f == 0 ? 1.0 : -1.0;
            double cj = -2.0 * jcoef(k, 0, 1, j) + 4.0 * jcoef(k, 1, 1, j);
            if (j >= 1) cj += -jcoef(k, 1, 2, j - 1) - 2.0 * jcoef(k, 2, 2, j - 1);
            c += sg * cj;
        }
        v += c * zp;
        zp *= z * z;
    }
    return s * v;
}

double c_log6(const Material& m, double z) { return -b_log4(m, z); }

namespace {
cplx C(int r, double k, double z) { return bessel_remainder(r, k, z); }
}  // namespace

cplx a_reg4(const Material& m, double z) {
    const double kp = m.kp, ks = m.ks;
    return (kp * C(1, kp, z) + ks * ks * C(0, ks, z) - ks * C(1, ks, z)) / (m.omega * m.omega);
}

cplx a_reg5(const Material& m, double z) {
    const double kp = m.kp, ks = m.ks;
    if (z == 0.0) {
        const double E = euler_gamma;
        return (cplx(-3.0 + 4.0 * E, -2.0 * pi) * (std::pow(kp, 4) - std::pow(ks, 4)) +
                4.0 * std::pow(kp, 4) * std::log(kp / 2.0) - 4.0 * std::pow(ks, 4) * std::log(ks / 2.0)) /
               (64.0 * pi * m.omega * m.omega);
    }
    return (kp * kp * C(0, kp, z) - 2.0 * kp * C(1, kp, z) - ks * ks * C(0, ks, z) + 2.0 * ks * C(1, ks, z) +
            (kp * kp - ks * ks) / (4.0 * pi)) /
           (m.omega * m.omega * z * z);
}

cplx b_reg5(const Material& m, double z) {
    const double kp = m.kp, ks = m.ks;
    return -(-std::pow(ks, 3) * C(1, ks, z) + ks * ks * C(2, ks, z) - kp * kp * C(2, kp, z)) / (m.omega * m.omega);
}

cplx b_reg6(const Material& m, double z) {
    const double kp = m.kp, ks = m.ks;
    return -(std::pow(ks, 3) * C(1, ks, z) - 2.0 * ks * ks * C(2, ks, z) - std::pow(kp, 3) * C(1, kp, z) +
             2.0 * kp * kp * C(2, kp, z)) /
           (m.omega * m.omega);
}

cplx b_reg7(const Material& m, double z) { return -a_reg5(m, z); }
cplx c_reg8(const Material& m, double z) { return -b_reg5(m, z); }
cplx c_reg10(const Material& m, double z) { return -b_reg6(m, z); }
cplx c_reg12(const Material& m, double z) { return -b_reg7(m, z); }

CMat2 U1(const Vec2& nu_t, const Vec2& r, const Material& m) {
    const CMat2 u = (m.lambda * nu_t * r.transpose() + m.mu * r * nu_t.transpose() +
                     m.mu * nu_t.dot(r) * Eigen::Matrix2d::Identity())
                        .cast<cplx>();
    return u;
}

CMat2 U2(const Vec2& nu_t, const Vec2& r, const Material& m) {
    const double rr = r.squaredNorm();
    const Eigen::Matrix2d G = rr > 0.0 ? Eigen::Matrix2d(r * r.transpose() / rr) : Eigen::Matrix2d::Zero();
    const CMat2 u = ((m.lambda + 2.0 * m.mu) * nu_t * r.transpose() + m.mu * r * nu_t.transpose() +
                     m.mu * nu_t.dot(r) * (Eigen::Matrix2d::Identity() - 4.0 * G))
                        .cast<cplx>();
    return u;
}

}  // namespace appendix

}  // namespace elasto
