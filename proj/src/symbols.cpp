#include "elasto/symbols.hpp"

#include <stdexcept>

#include <unsupported/Eigen/FFT>

namespace elasto {

CMat2 Symbol::grid_value(int k, int n) const {
    if (n > n_max_) throw std::invalid_argument("Symbol: grid exceeds n_max");
    if (std::abs(k) == n) return 0.5 * ((*this)(n) + (*this)(-n));
    return (*this)(k);
}

namespace {

void require_same(const Symbol& a, const Symbol& b) {
    if (a.n_max() != b.n_max()) throw std::invalid_argument("Symbol: n_max mismatch");
}

}  // namespace

Symbol Symbol::operator*(const Symbol& o) const {
    require_same(*this, o);
    return Symbol(n_max_, [&](int k) -> CMat2 { return (*this)(k) * o(k); });
}

Symbol Symbol::operator+(const Symbol& o) const {
    require_same(*this, o);
    return Symbol(n_max_, [&](int k) -> CMat2 { return (*this)(k) + o(k); });
}

Symbol Symbol::operator-(const Symbol& o) const {
    require_same(*this, o);
    return Symbol(n_max_, [&](int k) -> CMat2 { return (*this)(k) - o(k); });
}

Symbol Symbol::operator*(cplx s) const {
    return Symbol(n_max_, [&](int k) -> CMat2 { return s * (*this)(k); });
}

Symbol Symbol::inverse() const {
    return Symbol(n_max_, [&](int k) -> CMat2 {
        const CMat2& a = (*this)(k);
        if (std::abs(a.determinant()) < 1e-300 * std::max(1.0, a.squaredNorm()))
            throw std::domain_error("Symbol: singular mode " + std::to_string(k));
        return a.inverse();
    });
}

Symbol Symbol::transpose() const {
    return Symbol(n_max_, [&](int k) -> CMat2 { return (*this)(-k).transpose(); });
}

Symbol make_symbol(SymbolKind kind, int n_max, std::optional<cplx> kappa) {
    const bool needs_kappa = kind == SymbolKind::LambdaKappa || kind == SymbolKind::LambdaKappaInv;
    if (needs_kappa != kappa.has_value())
        throw std::invalid_argument("make_symbol: kappa must be given exactly for the kappa variants");
    if (kappa && !(kappa->real() > 0.0 && kappa->imag() > 0.0))
        throw std::invalid_argument("make_symbol: kappa must satisfy Re > 0 and Im > 0");
    const CMat2 I = CMat2::Identity();
    switch (kind) {
    case SymbolKind::Identity: return Symbol(n_max, [&](int) -> CMat2 { return I; });
    case SymbolKind::Lambda:
        return Symbol(n_max, [&](int k) -> CMat2 { return (k == 0 ? 1.0 : 1.0 / std::abs(k)) * I; });
    case SymbolKind::LambdaInv:
        return Symbol(n_max, [&](int k) -> CMat2 { return (k == 0 ? 1.0 : double(std::abs(k))) * I; });
    case SymbolKind::LambdaHalfInv:
        return Symbol(n_max, [&](int k) -> CMat2 { return (k == 0 ? 1.0 : std::sqrt(double(std::abs(k)))) * I; });
    case SymbolKind::H:
        return Symbol(n_max, [&](int k) -> CMat2 { return (k >= 0 ? 1.0 : -1.0) * rot90(); });
    case SymbolKind::LambdaKappa:
        return Symbol(n_max, [&](int k) -> CMat2 { return (1.0 / std::sqrt(double(k) * k - *kappa * *kappa)) * I; });
    case SymbolKind::LambdaKappaInv:
        return Symbol(n_max, [&](int k) -> CMat2 { return std::sqrt(double(k) * k - *kappa * *kappa) * I; });
    }
    throw std::invalid_argument("make_symbol: unknown kind");
}

namespace {

// Applies the per-mode matrices to the interleaved columns of X in place.
void apply_columns(const Symbol& s, CMat& X) {
    const Eigen::Index dofs = X.rows();
    if (dofs % 4 != 0) throw std::invalid_argument("apply_multiplier: length must be a multiple of 4");
    const int nn = static_cast<int>(dofs / 2);
    const int n = nn / 2;
    std::vector<CMat2> sym(nn);
    for (int b = 0; b < nn; ++b) sym[b] = s.grid_value(b <= n ? b : b - nn, n);
    Eigen::FFT<double> fft;
    std::vector<cplx> in(nn), f0(nn), f1(nn), out(nn);
    for (Eigen::Index col = 0; col < X.cols(); ++col) {
        for (int j = 0; j < nn; ++j) in[j] = X(2 * j, col);
        fft.fwd(f0, in);
        for (int j = 0; j < nn; ++j) in[j] = X(2 * j + 1, col);
        fft.fwd(f1, in);
        for (int b = 0; b < nn; ++b) {
            const cplx a0 = f0[b], a1 = f1[b];
            f0[b] = sym[b](0, 0) * a0 + sym[b](0, 1) * a1;
            f1[b] = sym[b](1, 0) * a0 + sym[b](1, 1) * a1;
        }
        fft.inv(out, f0);
        for (int j = 0; j < nn; ++j) X(2 * j, col) = out[j];
        fft.inv(out, f1);
        for (int j = 0; j < nn; ++j) X(2 * j + 1, col) = out[j];
    }
}

}  // namespace

CVec apply_multiplier(const Symbol& s, const CVec& density) {
    CMat X = density;
    apply_columns(s, X);
    return X.col(0);
}

CMat left_multiply(const Symbol& s, const CMat& A) {
    CMat X = A;
    apply_columns(s, X);
    return X;
}

CMat right_multiply(const CMat& A, const Symbol& s) {
    CMat X = A.transpose();
    apply_columns(s.transpose(), X);
    return X.transpose();
}

CMat multiplier_matrix(const Symbol& s, int n) {
    CMat X = CMat::Identity(4 * n, 4 * n);
    apply_columns(s, X);
    return X;
}

Symbol ps_dtn(const Material& m, Side side, int n_max, std::optional<cplx> kappa) {
    const Symbol Linv = kappa ? make_symbol(SymbolKind::LambdaKappaInv, n_max, kappa)
                              : make_symbol(SymbolKind::LambdaInv, n_max);
    const Symbol H = make_symbol(SymbolKind::H, n_max);
    const Symbol I = make_symbol(SymbolKind::Identity, n_max);
    if (side == Side::exterior) return Linv * (I * 0.5 - H * m.alpha) * cplx(-1.0 / m.beta);
    return Linv * (I * 0.5 + H * m.alpha) * cplx(1.0 / m.beta);
}

Eigen::Matrix4cd calderon_symbol(const Material& m, cplx kappa, int k) {
    const cplx lk = 1.0 / std::sqrt(double(k) * k - kappa * kappa);
    const CMat2 H = (k >= 0 ? 1.0 : -1.0) * rot90();
    const CMat2 I = CMat2::Identity();
    Eigen::Matrix4cd c;
    c.block<2, 2>(0, 0) = m.alpha * H;
    c.block<2, 2>(0, 2) = -m.beta * lk * I;
    c.block<2, 2>(2, 0) = m.delta / lk * I;
    c.block<2, 2>(2, 2) = -m.alpha * H;
    return c;
}

RhoParts transmission_rho_parts(const Material& p, const Material& q) {
    const double lp = p.lambda, mp = p.mu, lm = q.lambda, mm = q.mu;
    const double num = (lp * (mp + mm) + mp * (mp + 3 * mm)) * (lm * (mp + mm) + mm * (3 * mp + mm));
    const double den = 4 * mp * mm * (lp + 2 * mp) * (lm + 2 * mm);
    return {num, den};
}

double transmission_rho(const Material& p, const Material& q) {
    const auto r = transmission_rho_parts(p, q);
    return r.num / r.den;
}

TransmissionRegularizer make_transmission_regularizer(const Material& p, const Material& q, cplx kappa, int n_max) {
    TransmissionRegularizer R;
    const double rho = transmission_rho(p, q);
    R.rho = rho;
    const cplx ap = p.alpha, am = q.alpha;
    const double bp = p.beta, bm = q.beta, dp = p.delta, dm = q.delta;
    const Symbol I = make_symbol(SymbolKind::Identity, n_max);
    const Symbol H = make_symbol(SymbolKind::H, n_max);
    const Symbol L = make_symbol(SymbolKind::LambdaKappa, n_max, kappa);
    const Symbol Li = make_symbol(SymbolKind::LambdaKappaInv, n_max, kappa);
    R.R11 = H * ((ap + am) / (2 * rho)) - I * ((am * (ap + am) + dm * (bp + bm)) / rho);
    R.R12 = L * cplx(-(bp + bm) / (2 * rho)) - (L * H) * ((bm * ap - am * bp) / rho);
    R.R21 = Li * cplx((dp + dm) / (2 * rho)) + (Li * H) * ((am * (dp + dm) - dm * (ap + am)) / rho);
    R.R22 = H * (-(ap + am) / (2 * rho)) - I * ((am * (ap + am) + bm * (dp + dm)) / rho);
    return R;
}

TransmissionOperators transmission_operators(const Material& p, const Material& q, cplx kappa, int n_max) {
    TransmissionOperators t;
    t.plus = ps_dtn(q, Side::interior, n_max, kappa) * cplx(-1.0);
    t.minus = ps_dtn(p, Side::exterior, n_max, kappa) * cplx(-1.0);
    return t;
}

double eta_dirichlet_opt(const Material& m) { return m.ks / (2.0 * m.beta); }
double eta_neumann_opt(const Material& m) { return 2.0 * m.beta / m.ks; }

}  // namespace elasto
