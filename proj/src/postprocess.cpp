#include "elasto/postprocess.hpp"

#include "detail/numfmt.hpp"

#include <fstream>
#include <stdexcept>

namespace elasto {

namespace {

const CurveGrid& grid_of(const PotentialRepresentation& rep) {
    if (!rep.grid) throw std::invalid_argument("postprocess: representation has no grid");
    return *rep.grid;
}

// e^{i pi/4} / sqrt(8 pi k): leading Hankel asymptotics of (i/4) H0(k r)
cplx asymptotic_factor(double k) { return std::exp(iu * (pi / 4.0)) / std::sqrt(8.0 * pi * k); }

struct Family {
    double k;
    cplx scale;
    Eigen::Matrix2d proj;
};

// p family: xhat xhat^T / (lambda + 2 mu); s family: (I - xhat xhat^T) / mu
std::array<Family, 2> families(const Material& m, const Vec2& xh) {
    const Eigen::Matrix2d P = xh * xh.transpose();
    return {Family{m.kp, asymptotic_factor(m.kp) / (m.lambda + 2.0 * m.mu), P},
            Family{m.ks, asymptotic_factor(m.ks) / m.mu, Eigen::Matrix2d::Identity() - P}};
}

}  // namespace

FieldSamples eval_potential(const PotentialRepresentation& rep, const std::vector<Vec2>& points) {
    const CurveGrid& g = grid_of(rep);
    const int nn = g.nodes();
    double hmax = 0.0;
    for (int j = 0; j < nn; ++j) hmax = std::max(hmax, g.speed[j] * g.h());
    FieldSamples out;
    out.u.assign(points.size(), CVec2::Zero());
    for (std::size_t p = 0; p < points.size(); ++p) {
        const Vec2& z = points[p];
        double dmin = 1e300;
        for (int j = 0; j < nn; ++j) dmin = std::min(dmin, (z - g.x[j]).norm());
        if (dmin < 5.0 * hmax) ++out.near_points;
        CVec2 s = CVec2::Zero();
        for (const Layer& L : rep.layers) {
            CVec2 acc = CVec2::Zero();
            for (int j = 0; j < nn; ++j) {
                const CVec2 d = L.density.segment<2>(2 * j);
                if (d.isZero(0.0)) continue;
                const CMat2 k = L.kind == LayerKind::SL ? sl_kernel(L.mat, z, g.x[j]) : dl_kernel(L.mat, z, g.x[j], g.nu[j]);
                acc += k * d;
            }
            s += L.weight * g.h() * acc;
        }
        out.u[p] = s;
    }
    return out;
}

std::vector<double> far_field_angles(int count) {
    std::vector<double> a(count);
    for (int i = 0; i < count; ++i) a[i] = 2.0 * pi * i / count;
    return a;
}

FarField far_field(const PotentialRepresentation& rep, const std::vector<double>& angles) {
    if (!rep.exterior) throw std::invalid_argument("far_field: representation is not an exterior field");
    const CurveGrid& g = grid_of(rep);
    const int nn = g.nodes();
    FarField f;
    f.angles = angles;
    f.up.assign(angles.size(), CVec2::Zero());
    f.us.assign(angles.size(), CVec2::Zero());
    for (std::size_t a = 0; a < angles.size(); ++a) {
        const Vec2 xh(std::cos(angles[a]), std::sin(angles[a]));
        for (const Layer& L : rep.layers) {
            const auto fam = families(L.mat, xh);
            for (int c = 0; c < 2; ++c) {
                CVec2 acc = CVec2::Zero();
                for (int j = 0; j < nn; ++j) {
                    const CVec2 d = L.density.segment<2>(2 * j);
                    const cplx ph = std::exp(-iu * fam[c].k * xh.dot(g.x[j]));
                    if (L.kind == LayerKind::SL) {
                        acc += ph * d;
                    } else {
                        // column i: traction of the plane wave with amplitude proj e_i, dotted with d
                        for (int i = 0; i < 2; ++i) {
                            const CVec2 amp = fam[c].proj.col(i).cast<cplx>();
                            const CMat2 grad = -iu * fam[c].k * amp * xh.transpose().cast<cplx>();
                            acc(i) += ph * traction_from_gradient(grad, g.nu[j], L.mat).cwiseProduct(d).sum();
                        }
                    }
                }
                CVec2 v = L.kind == LayerKind::SL ? CVec2(fam[c].proj.cast<cplx>() * acc) : acc;
                v *= L.weight * g.h() * fam[c].scale;
                (c == 0 ? f.up : f.us)[a] += v;
            }
        }
    }
    return f;
}

FarField point_source_far_field(const Material& m, const Vec2& x0, const CVec2& q, const std::vector<double>& angles) {
    FarField f;
    f.angles = angles;
    for (double t : angles) {
        const Vec2 xh(std::cos(t), std::sin(t));
        const auto fam = families(m, xh);
        for (int c = 0; c < 2; ++c) {
            const CVec2 v = fam[c].scale * std::exp(-iu * fam[c].k * xh.dot(x0)) * (fam[c].proj.cast<cplx>() * q);
            (c == 0 ? f.up : f.us).push_back(v);
        }
    }
    return f;
}

double eps_inf(const FarField& a, const FarField& b) {
    if (a.angles.size() != b.angles.size() || a.up.size() != b.up.size() || a.us.size() != b.us.size())
        throw std::invalid_argument("eps_inf: direction samplings differ");
    for (std::size_t i = 0; i < a.angles.size(); ++i)
        if (std::abs(a.angles[i] - b.angles[i]) > 1e-12) throw std::invalid_argument("eps_inf: direction samplings differ");
    double e = 0.0;
    for (std::size_t i = 0; i < a.up.size(); ++i)
        e = std::max({e, (a.up[i] - b.up[i]).cwiseAbs().maxCoeff(), (a.us[i] - b.us[i]).cwiseAbs().maxCoeff()});
    return e;
}

void write_far_field_csv(const FarField& f, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_far_field_csv: cannot open " + path);
    os << "angle,up1_re,up1_im,up2_re,up2_im,us1_re,us1_im,us2_re,us2_im\n";
    for (std::size_t i = 0; i < f.angles.size(); ++i) {
        os << detail::num(f.angles[i]);
        for (const CVec2* v : {&f.up[i], &f.us[i]})
            for (int c = 0; c < 2; ++c) os << ',' << detail::num((*v)(c).real()) << ',' << detail::num((*v)(c).imag());
        os << '\n';
    }
}

}  // namespace elasto
