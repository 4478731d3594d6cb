#pragma once

#include <array>

#include "elasto/elastic_core.hpp"
#include "elasto/geometry.hpp"
#include "elasto/types.hpp"

namespace elasto {

// ---------------------------------------------------------------- special functions

struct BesselPair {
    double J;
    double Y;
};

// Bessel functions of integer order 0..4 (Y requires z > 0).
BesselPair bessel(int order, double z);

// phi_r(z) = (i/4) H_r^(1)(z)
cplx phi(int order, double z);

// Smooth remainder C_{r,k}(z) in the split
//   phi_r(kz) = -(1/2pi) J_r(kz) log z + z^r C_{r,k}(z) + singular terms.
cplx bessel_remainder(int order, double k, double z);

// ---------------------------------------------------------------- radial functions
//
// With D = r^{-1} d/dr the fundamental solution is
//   Phi(x,y) = a(r) I + grad grad^T chi(r),
//   a = phi_0(k_s r)/mu,  chi = (phi_0(k_s r) - phi_0(k_p r))/omega^2,
// and every derivative tensor is a polynomial in r-components times D^m a, D^m chi.

struct RadialData {
    std::array<cplx, 3> a{};    // D^m a,   m = 0..2
    std::array<cplx, 5> chi{};  // D^m chi, m = 0..4
};

// full = logc * log r + reg.  At r = 0 only logc is meaningful.
struct RadialSplit {
    RadialData full, logc, reg;
};

RadialSplit radial_split(const Material& m, double r);

// ---------------------------------------------------------------- kernels

CMat2 fundamental_solution(const Material& m, const Vec2& x, const Vec2& y);
// d[j] = dPhi/dx_j
std::array<CMat2, 2> fundamental_solution_gradient(const Material& m, const Vec2& x, const Vec2& y);

enum class BioTag { V = 0, K = 1, Kt = 2, W = 3 };

struct KernelSet {
    CMat2 V, K, Kt, W;
    CMat2& operator[](BioTag t);
    const CMat2& operator[](BioTag t) const;
};

// All four kernels at r = x - y from radial data (linear in the radial data).
// nu_x, nu_y are the unnormalized normals at target and source.
KernelSet kernels_from_radial(const RadialData& R, const Vec2& r, const Vec2& nu_x, const Vec2& nu_y,
                              const Material& m);

// Direct evaluation of the parameterized kernels at tau != t.
KernelSet kernels_direct(const Material& m, const Curve& c, double tau, double t);

// Layer potential kernels at an off-curve target z: Phi(z,y) and [T_y Phi(z,y)]^T.
CMat2 sl_kernel(const Material& m, const Vec2& z, const Vec2& y);
CMat2 dl_kernel(const Material& m, const Vec2& z, const Vec2& y, const Vec2& nu_y);

// ---------------------------------------------------------------- splitting
//
//  kernel(tau,t) = c_hs/(4pi) csc^2((tau-t)/2) I + c_pv/(4pi) cot((tau-t)/2) J
//                + M_log log(4 sin^2((tau-t)/2)) + M_smooth

struct SplitValue {
    CMat2 log;
    CMat2 smooth;
};

double cauchy_coefficient(const Material& m);        // c_pv for K and Kt
double hypersingular_coefficient(const Material& m);  // c_hs for W

// Evaluates the split of all four kernels at once; tau == t gives the diagonal limits.
class SplitEngine {
public:
    SplitEngine(Material m, Curve c);
    std::array<SplitValue, 4> eval(double tau, double t) const;
    std::array<SplitValue, 4> diagonal(double tau) const;
    // Off-diagonal split with the radial data for |x(tau) - x(t)| supplied by the caller.
    std::array<SplitValue, 4> eval_with(double tau, double t, const RadialSplit& R) const;
    const Material& material() const { return mat_; }
    const Curve& curve() const { return curve_; }

private:
    std::array<SplitValue, 4> off_diagonal(double tau, double t) const;
    Material mat_;
    Curve curve_;
};

class KernelSplit {
public:
    KernelSplit(BioTag tag, Material m, Curve c);

    BioTag tag() const { return tag_; }
    double c_hs() const { return c_hs_; }
    double c_pv() const { return c_pv_; }
    SplitValue eval(double tau, double t) const;
    CMat2 m_log(double tau, double t) const { return eval(tau, t).log; }
    CMat2 m_smooth(double tau, double t) const { return eval(tau, t).smooth; }
    // Sum of all parts at tau != t.
    CMat2 reconstruct(double tau, double t) const;
    CMat2 direct(double tau, double t) const;
    const SplitEngine& engine() const { return engine_; }

private:
    BioTag tag_;
    double c_hs_ = 0.0, c_pv_ = 0.0;
    SplitEngine engine_;
};

KernelSplit kernel_split(const Material& m, const CurveGrid& grid, BioTag tag);

// ---------------------------------------------------------------- appendix coefficient functions
//
// Log-coefficient functions of the single, double layer and hypersingular kernels,
// evaluated with ascending series near z = 0.
namespace appendix {
double a_log2(const Material& m, double z);
double a_log3(const Material& m, double z);
double b_log2(const Material& m, double z);
double b_log3(const Material& m, double z);
double b_log4(const Material& m, double z);
double c_log1(const Material& m, double z);
double c_log2(const Material& m, double z);
double c_log3(const Material& m, double z);
double c_log4(const Material& m, double z);
double c_log5(const Material& m, double z);
double c_log6(const Material& m, double z);

// Regular coefficient functions built from C_{r,k}.
cplx a_reg4(const Material& m, double z);
cplx a_reg5(const Material& m, double z);
cplx b_reg5(const Material& m, double z);
cplx b_reg6(const Material& m, double z);
cplx b_reg7(const Material& m, double z);
cplx c_reg8(const Material& m, double z);
cplx c_reg10(const Material& m, double z);
cplx c_reg12(const Material& m, double z);

// Matrix fields of the double layer / hypersingular splitting (r = x(tau) - x(t)).
CMat2 U1(const Vec2& nu_t, const Vec2& r, const Material& m);
CMat2 U2(const Vec2& nu_t, const Vec2& r, const Material& m);
}  // namespace appendix

}  // namespace elasto
