#include "elasto/linalg.hpp"

#include <chrono>
#include <stdexcept>

namespace elasto {

GmresResult gmres_apply(const LinearMap& A, const CVec& b, double tol, int max_iter) {
    if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("gmres: tol must lie in (0,1)");
    if (max_iter < 1) throw std::invalid_argument("gmres: max_iter must be positive");
    const auto start = std::chrono::steady_clock::now();
    const Eigen::Index N = b.size();
    GmresResult out;
    out.x = CVec::Zero(N);
    SolveReport& rep = out.report;
    const double bnorm = b.norm();
    rep.residuals.push_back(bnorm == 0.0 ? 0.0 : 1.0);
    if (bnorm == 0.0) {
        rep.converged = true;
        return out;
    }
    const int m = static_cast<int>(std::min<Eigen::Index>(max_iter, N));
    CMat Q(N, m + 1);
    CMat H = CMat::Zero(m + 1, m);
    std::vector<double> cs(m);
    std::vector<cplx> sn(m);
    CVec g = CVec::Zero(m + 1);
    Q.col(0) = b / bnorm;
    g(0) = bnorm;
    int k = 0;
    double res = 1.0;
    while (k < m) {
        CVec w = A(Q.col(k));
        if (w.size() != N) throw std::invalid_argument("gmres: operator is not square");
        for (int pass = 0; pass < 2; ++pass)
            for (int i = 0; i <= k; ++i) {
                const cplx hij = Q.col(i).dot(w);
                H(i, k) += hij;
                w -= hij * Q.col(i);
            }
        const double hn = w.norm();
        H(k + 1, k) = hn;
        for (int i = 0; i < k; ++i) {
            const cplx t = cs[i] * H(i, k) + sn[i] * H(i + 1, k);
            H(i + 1, k) = -std::conj(sn[i]) * H(i, k) + cs[i] * H(i + 1, k);
            H(i, k) = t;
        }
        // Givens rotation zeroing H(k+1,k)
        const cplx a = H(k, k);
        const double r = std::hypot(std::abs(a), hn);
        if (r == 0.0) {
            cs[k] = 1.0;
            sn[k] = 0.0;
        } else if (std::abs(a) == 0.0) {
            cs[k] = 0.0;
            sn[k] = 1.0;
        } else {
            cs[k] = std::abs(a) / r;
            sn[k] = (a / std::abs(a)) * hn / r;
        }
        H(k, k) = cs[k] * a + sn[k] * hn;
        H(k + 1, k) = 0.0;
        g(k + 1) = -std::conj(sn[k]) * g(k);
        g(k) = cs[k] * g(k);
        ++k;
        const double next = std::abs(g(k)) / bnorm;
        if (next > res * (1.0 + 1e-12) + 1e-300) throw std::logic_error("gmres: residual increased");
        res = next;
        rep.residuals.push_back(res);
        if (res <= tol || hn <= 1e-14 * bnorm) break;
        Q.col(k) = w / hn;
    }
    const CVec y = H.topLeftCorner(k, k).triangularView<Eigen::Upper>().solve(g.head(k));
    out.x = Q.leftCols(k) * y;
    rep.iterations = k;
    rep.relative_residual = res;
    rep.converged = res <= tol;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

GmresResult gmres(const CMat& A, const CVec& b, double tol, int max_iter) {
    if (A.rows() != A.cols() || A.rows() != b.size()) throw std::invalid_argument("gmres: dimension mismatch");
    return gmres_apply([&A](const CVec& v) -> CVec { return A * v; }, b, tol, max_iter);
}

LuFactor::LuFactor(const CMat& A, double min_rcond) {
    if (A.rows() != A.cols()) throw std::invalid_argument("LuFactor: matrix must be square");
    lu_.compute(A);
    rcond_ = lu_.rcond();
    if (!(rcond_ >= min_rcond)) throw std::runtime_error("LuFactor: numerically singular matrix (rcond " + std::to_string(rcond_) + ")");
}

CVec lu_solve(const CMat& A, const CVec& b) {
    if (A.rows() != b.size()) throw std::invalid_argument("lu_solve: dimension mismatch");
    return LuFactor(A).solve(b);
}

}  // namespace elasto
