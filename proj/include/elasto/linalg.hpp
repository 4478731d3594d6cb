#pragma once

#include <functional>
#include <vector>

#include <Eigen/LU>

#include "elasto/types.hpp"

namespace elasto {

struct SolveReport {
    int iterations = 0;
    std::vector<double> residuals;  // ||r_k|| / ||b||, k = 0..iterations
    double relative_residual = 0.0;
    double seconds = 0.0;
    bool converged = false;
};

using LinearMap = std::function<CVec(const CVec&)>;

struct GmresResult {
    CVec x;
    SolveReport report;
};

// Full (unrestarted) GMRES from x0 = 0, modified Gram-Schmidt with one reorthogonalization
// pass.  Stops once ||r_k|| <= tol ||b||.
GmresResult gmres_apply(const LinearMap& A, const CVec& b, double tol, int max_iter);
GmresResult gmres(const CMat& A, const CVec& b, double tol, int max_iter);

// Partial-pivoting LU; throws std::runtime_error when the reciprocal condition estimate
// falls below the threshold.
class LuFactor {
public:
    LuFactor() = default;
    explicit LuFactor(const CMat& A, double min_rcond = 1e-20);

    CVec solve(const CVec& b) const { return lu_.solve(b); }
    CMat solve(const CMat& B) const { return lu_.solve(B); }
    double rcond() const { return rcond_; }
    Eigen::Index size() const { return lu_.rows(); }

private:
    Eigen::PartialPivLU<CMat> lu_;
    double rcond_ = 0.0;
};

CVec lu_solve(const CMat& A, const CVec& b);

}  // namespace elasto
