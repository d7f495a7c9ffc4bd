#include "jtk/maps.hpp"

#include <utility>

#include "jtk/error.hpp"

namespace jtk {

namespace {

// Extra orders carried internally so that derivative and division erosion
// never eats into the requested order.
constexpr int kOrderSlack = 8;

WSeries one(int order) { return WSeries::constant(rat(1), order); }

// e^w and e^{-w} at the given order.
WSeries exp_plus(int order) { return elementary(Elementary::Exp, order); }
WSeries exp_minus(int order) { return elementary(Elementary::Exp, order).scaled_arg(rat(-1)); }

void check_phi(const WSeries& phi, const std::string& name) {
    if (phi.order() < 2) throw error("map '" + name + "': phi needs order >= 2");
    if (!phi.coeff(0).is_zero())
        throw error("map '" + name + "': phi(0) must vanish");
    if (!phi.coeff(1).is_one())
        throw error("map '" + name + "': phi'(0) must equal 1");
}

} // namespace

WSeries MapSpec::phi(int order) const {
    if (!phi_fn) throw error("map '" + name + "' has no defining series");
    WSeries p = phi_fn(order);
    if (p.order() < order)
        throw error("map '" + name + "': defining series came back under-ordered");
    p = p.truncated(order);
    check_phi(p, name);
    return p;
}

MapSpec builtin_map(const std::string& name) {
    if (name == "diag") {
        return {name, [](int n) {
                    return rat(2) * elementary(Elementary::Tanh, n).scaled_arg(rat(1, 2));
                }};
    }
    if (name == "contraction") {
        return {name, [](int n) { return elementary(Elementary::Sinh, n); }};
    }
    if (name == "minimal") {
        return {name, [](int n) {
                    return (one(n) - elementary(Elementary::Exp, n).scaled_arg(rat(-2))) * rat(1, 2);
                }};
    }
    if (name == "simple-plus") {
        return {name, [](int n) { return exp_plus(n) - one(n); }};
    }
    if (name == "simple-minus") {
        return {name, [](int n) { return one(n) - exp_minus(n); }};
    }
    throw error("unknown builtin map '" + name + "'");
}

const std::vector<std::string>& builtin_map_names() {
    static const std::vector<std::string> names = {
        "diag", "contraction", "minimal", "simple-plus", "simple-minus",
    };
    return names;
}

bool is_builtin_map(const std::string& name) {
    for (const auto& n : builtin_map_names())
        if (n == name) return true;
    return false;
}

MapSpec custom_map(std::string name, std::function<WSeries(int)> phi_fn) {
    return {std::move(name), std::move(phi_fn)};
}

ForwardSolution solve_forward(const MapSpec& map, int order) {
    if (order < 1) throw error("solve_forward: order must be positive");
    const int W = order + kOrderSlack;

    const WSeries phi = map.phi(W);
    const WSeries phi_w = phi.derivative();
    const WSeries ep = exp_plus(W);
    const WSeries em = exp_minus(W);
    const WSeries S = ep - em;   // e^w - e^{-w}
    const WSeries C = ep + em;   // e^w + e^{-w}
    const WSeries sinh = elementary(Elementary::Sinh, W);
    const WSeries cosh = elementary(Elementary::Cosh, W);

    // F2 = 2*phi / ((e^w - e^{-w}) * phi_w)
    const WSeries F2 = series_div(rat(2) * phi, S * phi_w);
    // F3 = sinh(w) / phi
    const WSeries F3 = series_div(sinh, phi);
    // Ubar = -sinh(w)^2 / (4*phi)
    const WSeries Ubar = -series_div(sinh * sinh, rat(4) * phi);
    // Wbar = (1 - F2^2) / (4*phi)
    const WSeries Wbar = series_div(one(F2.order()) - F2 * F2, rat(4) * phi);
    // Vbar = -(1/2) * (F2_w/phi_w - F2/phi + cosh(w)/phi); the last two
    // quotients are grouped as (cosh - F2)/phi so the division stays
    // valuation-safe (cosh - F2 vanishes at w = 0, phi does too).
    const WSeries Vbar =
        rat(-1, 2) * (series_div(F2.derivative(), phi_w) + series_div(cosh - F2, phi));

    return ForwardSolution{
        order,
        phi.truncated(order),
        F2.truncated(order),
        F3.truncated(order),
        Ubar.truncated(order),
        Vbar.truncated(order),
        Wbar.truncated(order),
    };
}

InverseSolution solve_inverse(const MapSpec& map, int order) {
    if (order < 1) throw error("solve_inverse: order must be positive");
    const int W = order + kOrderSlack;

    const WSeries phi = map.phi(W);
    const WSeries psi = revert(phi);
    const WSeries g1 = compose(exp_plus(W), psi);
    const WSeries g1inv = compose(exp_minus(W), psi);
    const WSeries g1_z = g1.derivative();
    const WSeries z = WSeries::identity(W);
    const WSeries g1sq_m1 = g1 * g1 - one(W);

    // G2 = (g1^2 - 1) / (2*z*g1_z)
    const WSeries G2 = series_div(g1sq_m1, rat(2) * z * g1_z);
    // G3 = 2*z*g1 / (g1^2 - 1)
    const WSeries G3 = series_div(rat(2) * z * g1, g1sq_m1);
    // Abar = (g1 - g1^{-1}) / 8
    const WSeries Abar = (g1 - g1inv) * rat(1, 8);
    // Cbar = g1 * (1 - G2^2) / (2*(g1^2 - 1))
    const WSeries Cbar = series_div(g1 * (one(G2.order()) - G2 * G2), rat(2) * g1sq_m1);
    // Bbar = -(2*Cbar + (1/2)*(g1/g1_z)'*G2)
    const WSeries Bbar =
        -(rat(2) * Cbar + rat(1, 2) * series_div(g1, g1_z).derivative() * G2);

    return InverseSolution{
        order,
        psi.truncated(order),
        g1.truncated(order),
        g1inv.truncated(order),
        G2.truncated(order),
        G3.truncated(order),
        Abar.truncated(order),
        Bbar.truncated(order),
        Cbar.truncated(order),
    };
}

bool SevenEquationReport::all_zero() const {
    for (const auto& r : residuals)
        if (!r.is_zero()) return false;
    return true;
}

SevenEquationReport check_seven_equations(const MapSpec& map, const ForwardSolution& sol) {
    const int M = sol.order;
    if (M < 4) throw error("check_seven_equations: solution order too small");
    const int N = M - 2;   // second derivatives below cost two degrees

    const WSeries phi = map.phi(M);
    const WSeries phi_w = phi.derivative();
    const WSeries phi_ww = phi_w.derivative();
    const WSeries ep = exp_plus(M);
    const WSeries em = exp_minus(M);
    const WSeries S = ep - em;
    const WSeries C = ep + em;

    const WSeries& F2 = sol.F2;
    const WSeries& F3 = sol.F3;
    const WSeries& Ub = sol.Ubar;
    const WSeries& Vb = sol.Vbar;
    const WSeries& Wb = sol.Wbar;
    const WSeries F2_w = F2.derivative();
    const WSeries F2_ww = F2_w.derivative();
    const WSeries F3_w = F3.derivative();
    const WSeries Ub_w = Ub.derivative();
    const WSeries Vb_w = Vb.derivative();
    const WSeries Wb_w = Wb.derivative();

    std::vector<WSeries> r;
    r.reserve(7);
    // 1:  S*F2*phi_w = 2*phi
    r.push_back(S * F2 * phi_w - rat(2) * phi);
    // 2:  F3*phi_w - 2*Wbar*S*phi_w = F2
    r.push_back(F3 * phi_w - rat(2) * Wb * S * phi_w - F2);
    // 3:  (1/2)*F3*phi_ww = Vbar*phi_w + Wbar*(C*phi_w + S*phi_ww)
    r.push_back(rat(1, 2) * F3 * phi_ww - Vb * phi_w - Wb * (C * phi_w + S * phi_ww));
    // 4:  F2*(S*F3_w - C*F3) + 2*F3 = 0
    r.push_back(F2 * (S * F3_w - C * F3) + rat(2) * F3);
    // 5:  F2*S*((1/4)*C*F3 + Ubar_w) + 2*Ubar = 0
    r.push_back(F2 * S * (rat(1, 4) * C * F3 + Ub_w) + rat(2) * Ub);
    // 6:  F3*F2_w + S*(F2*Wbar_w - 2*Wbar*F2_w) + 2*Wbar = 0
    r.push_back(F3 * F2_w + S * (F2 * Wb_w - rat(2) * Wb * F2_w) + rat(2) * Wb);
    // 7:  S*((1/2)*F3*(F2 + F2_ww) - (Vbar*F2_w - F2*Vbar_w)
    //        - Wbar*(C*F2_w + S*F2_ww)) + 2*Vbar = 0
    r.push_back(S * (rat(1, 2) * F3 * (F2 + F2_ww) - (Vb * F2_w - F2 * Vb_w) -
                     Wb * (C * F2_w + S * F2_ww)) +
                rat(2) * Vb);

    SevenEquationReport report;
    report.order = N;
    for (auto& res : r) report.residuals.push_back(res.truncated(N));
    return report;
}

ForwardSolution closed_form_reference(const std::string& name, int order) {
    const int W = order + 2;
    const WSeries ep = exp_plus(W);
    const WSeries em = exp_minus(W);
    const WSeries sinh = elementary(Elementary::Sinh, W);

    ForwardSolution out;
    out.order = order;
    if (name == "diag") {
        // phi = 2*tanh(w/2); F2 = 1; F3 = cosh(w/2)^2;
        // Ubar = -(1/4)*cosh(w/2)^2*sinh(w); Vbar = -(1/8)*(e^w - e^{-w});
        // Wbar = 0.
        const WSeries ch2 = elementary(Elementary::Cosh, W).scaled_arg(rat(1, 2));
        out.phi = rat(2) * elementary(Elementary::Tanh, W).scaled_arg(rat(1, 2));
        out.F2 = WSeries::constant(rat(1), W);
        out.F3 = ch2 * ch2;
        out.Ubar = rat(-1, 4) * ch2 * ch2 * sinh;
        out.Vbar = rat(-1, 8) * (ep - em);
        out.Wbar = WSeries(W);
    } else if (name == "contraction") {
        // phi = sinh(w); F2 = 2/(e^w + e^{-w}); F3 = 1;
        // Ubar = -(1/8)*(e^w - e^{-w}); Vbar = -(1/2)*tanh(w)^3;
        // Wbar = (1/2)*(e^w - e^{-w})/(e^w + e^{-w})^2.
        const WSeries tan = elementary(Elementary::Tanh, W);
        out.phi = sinh;
        out.F2 = series_div(WSeries::constant(rat(2), W), ep + em);
        out.F3 = WSeries::constant(rat(1), W);
        out.Ubar = rat(-1, 8) * (ep - em);
        out.Vbar = rat(-1, 2) * tan * tan * tan;
        out.Wbar = rat(1, 2) * series_div(ep - em, (ep + em) * (ep + em));
    } else if (name == "minimal") {
        // phi = (1 - e^{-2w})/2; F2 = F3 = e^w; Ubar = -(e^{2w} - 1)/8;
        // Vbar = -(1/2)*(e^{2w} - 1)*e^w; Wbar = -(1/2)*e^{2w}.
        const WSeries e2 = elementary(Elementary::Exp, W).scaled_arg(rat(2));
        out.phi = (one(W) - elementary(Elementary::Exp, W).scaled_arg(rat(-2))) * rat(1, 2);
        out.F2 = ep;
        out.F3 = ep;
        out.Ubar = rat(-1, 8) * (e2 - one(W));
        out.Vbar = rat(-1, 2) * (e2 - one(W)) * ep;
        out.Wbar = rat(-1, 2) * e2;
    } else {
        throw error("no tabulated closed form for map '" + name + "'");
    }
    out.phi = out.phi.truncated(order);
    out.F2 = out.F2.truncated(order);
    out.F3 = out.F3.truncated(order);
    out.Ubar = out.Ubar.truncated(order);
    out.Vbar = out.Vbar.truncated(order);
    out.Wbar = out.Wbar.truncated(order);
    return out;
}

} // namespace jtk
