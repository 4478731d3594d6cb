#pragma once

#include <optional>

#include "elasto/elastic_core.hpp"
#include "elasto/discretization.hpp"

namespace elasto {

// Fourier multiplier: mode k -> 2x2 complex matrix, |k| <= n_max.
class Symbol {
public:
    Symbol() = default;
    template <class F>
    Symbol(int n_max, F&& f) : n_max_(n_max), v_(2 * n_max + 1) {
        for (int k = -n_max; k <= n_max; ++k) v_[k + n_max] = f(k);
    }

    int n_max() const { return n_max_; }
    const CMat2& operator()(int k) const { return v_.at(static_cast<std::size_t>(k + n_max_)); }
    // value used on a grid with 2n nodes: the Nyquist mode n carries the average of +-n
    CMat2 grid_value(int k, int n) const;

    Symbol operator*(const Symbol& o) const;
    Symbol operator+(const Symbol& o) const;
    Symbol operator-(const Symbol& o) const;
    Symbol operator*(cplx s) const;
    Symbol inverse() const;
    // symbol of the transpose with respect to the bilinear pairing: sigma(-k)^T
    Symbol transpose() const;

private:
    int n_max_ = 0;
    std::vector<CMat2> v_;
};

inline Symbol operator*(cplx s, const Symbol& a) { return a * s; }

enum class SymbolKind { Lambda, LambdaInv, LambdaHalfInv, H, LambdaKappa, LambdaKappaInv, Identity };

Symbol make_symbol(SymbolKind kind, int n_max, std::optional<cplx> kappa = std::nullopt);

// Density layout is interleaved (4n entries for 2n nodes).
CVec apply_multiplier(const Symbol& s, const CVec& density);
// s * A and A * s for a dense 4n x 4n (or 4n x k / k x 4n) matrix A.
CMat left_multiply(const Symbol& s, const CMat& A);
CMat right_multiply(const CMat& A, const Symbol& s);
CMat multiplier_matrix(const Symbol& s, int n);

enum class Side { exterior, interior };

// Principal-symbol DtN maps
//   exterior: -beta^{-1} L^{-1} (1/2 I - alpha H),  interior: beta^{-1} L^{-1} (1/2 I + alpha H)
// with L = Lambda, or Lambda_kappa when kappa is given.
Symbol ps_dtn(const Material& m, Side side, int n_max, std::optional<cplx> kappa = std::nullopt);

// Per-mode 4x4 principal Calderon symbol [[alpha H, -beta L_k], [delta L_k^{-1}, -alpha H]].
Eigen::Matrix4cd calderon_symbol(const Material& m, cplx kappa, int k);

struct RhoParts {
    double num, den;
};
// Closed form of the transmission constant; numerator/denominator are exact for integer data.
RhoParts transmission_rho_parts(const Material& plus, const Material& minus);
double transmission_rho(const Material& plus, const Material& minus);

struct TransmissionRegularizer {
    Symbol R11, R12, R21, R22;
    double rho = 1.0;
};

TransmissionRegularizer make_transmission_regularizer(const Material& plus, const Material& minus, cplx kappa,
                                                      int n_max);

struct TransmissionOperators {
    Symbol plus, minus;  // Upsilon_+ = -PS_k(Y_-), Upsilon_- = -PS_k(Y_+)
};

TransmissionOperators transmission_operators(const Material& plus, const Material& minus, cplx kappa, int n_max);

// Coupling constants of the classical combined field equations.
double eta_dirichlet_opt(const Material& m);
double eta_neumann_opt(const Material& m);

}  // namespace elasto
