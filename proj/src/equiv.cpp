#include "jtk/equiv.hpp"

#include <sstream>

#include "jtk/error.hpp"
#include "jtk/irreps.hpp"

namespace jtk {

namespace {

WSeries padded_series(const std::vector<Rational>& coeffs, int order) {
    if (order < 1) throw error("connecting series needs positive order");
    WSeries s(order);
    const int top = std::min<int>(order - 1, static_cast<int>(coeffs.size()));
    for (int k = 1; k <= top; ++k) s.set_coeff(k, coeffs[k - 1]);
    return s;
}

std::string coeff_list(const std::vector<Rational>& c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ", ";
        os << c[i].str();
    }
    return os.str();
}

} // namespace

WSeries SimilaritySeries::as_series(int order) const {
    return padded_series(c, order);
}

SimilaritySeries SimilaritySeries::negated() const {
    SimilaritySeries out{target, source, order, c};
    for (auto& ck : out.c) ck = -ck;
    return out;
}

WSeries MuSeries::as_series(int order) const {
    return padded_series(d, order);
}

WSeries target_series(const MapSpec& source, const MapSpec& target, int order) {
    return compose(target.phi(order), revert(source.phi(order)));
}

WSeries flow_time1(const SimilaritySeries& lam, int order) {
    if (order < 1) throw error("flow_time1: order must be positive");
    const int W = 2 * order + 2;
    const WSeries vf = rat(-2) * lam.as_series(W) * WSeries::identity(W);

    WSeries term = WSeries::identity(W);   // k = 0
    WSeries acc = term;
    for (int k = 1; k <= order; ++k) {
        term = vf * term.derivative() * rat(1, k);
        if (term.is_zero()) break;
        acc += term;
    }
    return acc.truncated(order);
}

SimilaritySeries lambda_solve(const WSeries& rho, int N) {
    if (N < 1) throw error("lambda_solve: need at least one coefficient");
    if (rho.order() < N + 2)
        throw error("lambda_solve: rho must carry order >= N + 2");

    SimilaritySeries lam;
    lam.order = N;
    for (int k = 1; k <= N; ++k) {
        const WSeries flow = flow_time1(lam, N + 2);
        lam.c.push_back((flow.coeff(k + 1) - rho.coeff(k + 1)) * rat(1, 2));
    }

    const WSeries flow = flow_time1(lam, N + 2);
    if (!agrees_to(flow, rho, N + 1))
        throw error("lambda_solve: solved series fails to reproduce rho");
    return lam;
}

SimilaritySeries lambda_oracle(const WSeries& rho, int N) {
    if (N < 1) throw error("lambda_oracle: need at least one coefficient");
    if (rho.order() < N + 2)
        throw error("lambda_oracle: rho must carry order >= N + 2");

    const int two_j = N + 1;
    const int n = two_j + 1;
    const ClassicalIrrep cl = classical_irrep(two_j);
    PolyMatrix Z = cl.Jp;
    Z *= HPoly::h();
    const PolyMatrix rho_at_Z = apply_series(rho.truncated(n), Z);

    // (0, k) entry of Z^k carries h^k times this product of shift weights.
    std::vector<Rational> weight(n, rat(1));
    for (int k = 1; k < n; ++k) weight[k] = weight[k - 1] * rat(k) * rat(n - k);

    SimilaritySeries lam;
    lam.order = N;
    PolyMatrix conj = Z;
    for (int k = 1; k <= N; ++k) {
        const PolyMatrix M = conj - rho_at_Z;
        lam.c.push_back(M.at(0, k + 1).coeff(k + 1) / weight[k + 1] * rat(1, 2));

        const PolyMatrix L = apply_series(lam.as_series(n), Z) * cl.J0;
        conj = mat_exp_terminating(-L, 2 * n + 4) * Z * mat_exp_terminating(L, 2 * n + 4);
    }
    if (!(conj - rho_at_Z).is_zero())
        throw error("lambda_oracle: full solution leaves a nonzero conjugation residual");

    const SimilaritySeries scalar = lambda_solve(rho, N);
    if (scalar.c != lam.c) {
        throw error("lambda_oracle: matrix and scalar solvers disagree; matrix = [" +
                    coeff_list(lam.c) + "], scalar = [" + coeff_list(scalar.c) + "]");
    }
    return lam;
}

SimilaritySeries similarity(const MapSpec& from, const MapSpec& to, int N) {
    SimilaritySeries lam = lambda_solve(target_series(from, to, N + 2), N);
    lam.source = from.name;
    lam.target = to.name;
    return lam;
}

MuSeries mu_from_lambda(const SimilaritySeries& lam) {
    // Coefficient k of the result depends on c_1..c_k, so only the first
    // lam.order coefficients are exact; carrying one more would bake in a
    // zero-padded c_{order+1} and store a wrong tail coefficient.
    const int Wm = lam.order;       // highest coefficient degree carried
    const int W = Wm + 1;           // series order needed to reach degree Wm
    const WSeries one = WSeries::constant(rat(1), W);
    const WSeries one_p_s = one + WSeries::identity(W);
    const WSeries q = (one - series_div(one, one_p_s * one_p_s)) * rat(1, 2);
    const WSeries mu = -(one_p_s * compose(lam.as_series(W), q));

    MuSeries out;
    out.order = Wm;
    for (int k = 1; k <= Wm; ++k) out.d.push_back(mu.coeff(k));
    return out;
}

PolyMatrix build_U(const SimilaritySeries& lam, int two_j) {
    if (lam.order < two_j)
        throw error("build_U: lambda order " + std::to_string(lam.order) +
                    " is below 2j = " + std::to_string(two_j));
    const int n = two_j + 1;
    const ClassicalIrrep cl = classical_irrep(two_j);
    PolyMatrix Z = cl.Jp;
    Z *= HPoly::h();
    const PolyMatrix L = apply_series(lam.as_series(n), Z) * cl.J0;
    return mat_exp_terminating(L, 2 * n + 4);
}

} // namespace jtk
