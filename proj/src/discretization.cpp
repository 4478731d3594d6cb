#include "elasto/discretization.hpp"

#include <cmath>
#include <stdexcept>

namespace elasto {

std::vector<double> shift_interpolation_row(int n) {
    const int nn = 2 * n;
    // Dirichlet-type kernel of the trigonometric interpolant, Nyquist term halved
    auto L = [n](double s) {
        double v = 1.0 + std::cos(n * s);
        for (int k = 1; k < n; ++k) v += 2.0 * std::cos(k * s);
        return v / (2.0 * n);
    };
    std::vector<double> row(nn);
    for (int d = 0; d < nn; ++d) row[d] = L(pi / (2.0 * n) - d * pi / n);
    return row;
}

QuadratureSet build_quadrature(int n) {
    if (n < 2) throw std::invalid_argument("build_quadrature: n must be at least 2");
    const int nn = 2 * n;
    QuadratureSet q;
    q.n = n;
    q.trap = pi / n;
    q.r.resize(nn);
    q.t.resize(nn);
    q.c.assign(nn, 0.0);
    for (int d = 0; d < nn; ++d) {
        const double s = -d * pi / n;  // tau - t_m with m - j = d
        double rs = 0.0, ts = 0.0;
        for (int k = 1; k < n; ++k) {
            rs += std::cos(k * s) / k;
            ts += k * std::cos(k * s);
        }
        q.r[d] = -rs / n - std::cos(n * s) / (2.0 * n * n);
        q.t[d] = -ts / n - 0.5 * std::cos(n * s);
    }
    // midpoint cot sum at the shifted nodes composed with interpolation to them
    const auto srow = shift_interpolation_row(n);
    std::vector<double> cot(nn);
    for (int p = 0; p < nn; ++p) cot[p] = 1.0 / std::tan(0.5 * (p + 0.5) * pi / n) / (2.0 * n);
    for (int d = 0; d < nn; ++d) {
        double v = 0.0;
        for (int p = 0; p < nn; ++p) v += cot[p] * srow[((d - p) % nn + nn) % nn];
        q.c[d] = v;
    }
    return q;
}

namespace {

void add_block(CMat& A, int j, int m, const SplitValue& v, double trap, double Rw, double chs_T, double cpv_C) {
    CMat2 b = trap * v.smooth + (2.0 * pi * Rw) * v.log;
    b(0, 0) += chs_T;
    b(1, 1) += chs_T;
    // -(c_pv/2) C J
    b(0, 1) += 0.5 * cpv_C;
    b(1, 0) -= 0.5 * cpv_C;
    A.block<2, 2>(2 * j, 2 * m) += b;
}

}  // namespace

DenseOperator assemble_bio(const KernelSplit& ks, const QuadratureSet& q, const CurveGrid& grid) {
    if (q.n != grid.n) throw std::invalid_argument("assemble_bio: quadrature and grid sizes differ");
    const int nn = grid.nodes();
    const SplitEngine& e = ks.engine();
    const int k = static_cast<int>(ks.tag());
    DenseOperator op;
    op.n = grid.n;
    op.tag = std::array<const char*, 4>{"V", "K", "Kt", "W"}[k];
    op.mat = CMat::Zero(2 * nn, 2 * nn);
#ifdef ELASTO_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (int j = 0; j < nn; ++j)
        for (int m = 0; m < nn; ++m) {
            const SplitValue v = (m == j) ? e.diagonal(grid.t[j])[k] : e.eval(grid.t[j], grid.t[m])[k];
            add_block(op.mat, j, m, v, q.trap, q.R(j, m), ks.c_hs() * q.T(j, m), ks.c_pv() * q.C(j, m));
        }
    return op;
}

BioSet assemble_bios(const Material& mat, const CurveGrid& grid, const QuadratureSet& q) {
    if (q.n != grid.n) throw std::invalid_argument("assemble_bios: quadrature and grid sizes differ");
    const int nn = grid.nodes();
    const SplitEngine e(mat, grid.curve);
    const double cpv = cauchy_coefficient(mat), chs = hypersingular_coefficient(mat);
    BioSet s;
    std::array<DenseOperator*, 4> ops{&s.V, &s.K, &s.Kt, &s.W};
    const std::array<const char*, 4> names{"V", "K", "Kt", "W"};
    for (int k = 0; k < 4; ++k) {
        ops[k]->n = grid.n;
        ops[k]->tag = names[k];
        ops[k]->mat = CMat::Zero(2 * nn, 2 * nn);
    }
    auto install = [&](int j, int m, const std::array<SplitValue, 4>& v) {
        const double Rw = q.R(j, m), Tw = q.T(j, m), Cw = q.C(j, m);
        add_block(s.V.mat, j, m, v[0], q.trap, Rw, 0.0, 0.0);
        add_block(s.K.mat, j, m, v[1], q.trap, Rw, 0.0, cpv * Cw);
        add_block(s.Kt.mat, j, m, v[2], q.trap, Rw, 0.0, cpv * Cw);
        add_block(s.W.mat, j, m, v[3], q.trap, Rw, chs * Tw, 0.0);
    };
#ifdef ELASTO_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (int j = 0; j < nn; ++j) {
        install(j, j, e.diagonal(grid.t[j]));
        for (int m = j + 1; m < nn; ++m) {
            // the radial data depend on |x(t_j) - x(t_m)| only
            const RadialSplit R = radial_split(mat, (grid.x[j] - grid.x[m]).norm());
            install(j, m, e.eval_with(grid.t[j], grid.t[m], R));
            install(m, j, e.eval_with(grid.t[m], grid.t[j], R));
        }
    }
    return s;
}

BioSet assemble_bios(const Material& m, const CurveGrid& grid) { return assemble_bios(m, grid, build_quadrature(grid.n)); }

}  // namespace elasto
