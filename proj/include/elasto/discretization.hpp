#pragma once

#include <string>
#include <vector>

#include "elasto/kernels.hpp"

namespace elasto {

// Circulant quadrature weights on the grid t_j = j pi / n.  Each family depends on j - m only
// and is stored as its first row; R(j,m) etc. index it.
struct QuadratureSet {
    int n = 0;
    std::vector<double> r;  // log weights: (1/2pi) int log(4 sin^2((tau-t)/2)) f(t) dt ~ sum_m R_m(tau) f(t_m)
    std::vector<double> t;  // csc^2 weights: (1/4pi) f.p. int csc^2((tau-t)/2) f(t) dt ~ sum_m T_m(tau) f(t_m)
    std::vector<double> c;  // shifted cot rule: (1/2pi) p.v. int cot((t-tau)/2) f(t) dt ~ sum_m C_m(tau) f(t_m)
    double trap = 0.0;      // pi / n

    double R(int j, int m) const { return r[idx(j, m)]; }
    double T(int j, int m) const { return t[idx(j, m)]; }
    double C(int j, int m) const { return c[idx(j, m)]; }

private:
    std::size_t idx(int j, int m) const {
        const int nn = 2 * n;
        return static_cast<std::size_t>(((m - j) % nn + nn) % nn);
    }
};

QuadratureSet build_quadrature(int n);

// Trigonometric interpolation matrix from nodes t_m to shifted nodes t_m + pi/(2n), first row.
std::vector<double> shift_interpolation_row(int n);

// 4n x 4n operator on interleaved densities (dof 2j + c is component c at node j).
struct DenseOperator {
    CMat mat;
    std::string tag;
    int n = 0;
};

DenseOperator assemble_bio(const KernelSplit& ks, const QuadratureSet& q, const CurveGrid& grid);

struct BioSet {
    DenseOperator V, K, Kt, W;
};

// All four operators in one sweep over node pairs.
BioSet assemble_bios(const Material& m, const CurveGrid& grid, const QuadratureSet& q);
BioSet assemble_bios(const Material& m, const CurveGrid& grid);

}  // namespace elasto
