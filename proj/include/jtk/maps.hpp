#pragma once
// maps.hpp -- generator maps between the classical and deformed algebras,
// each determined by a single defining series phi with phi(0) = 0 and
// phi'(0) = 1, together with the order-by-order solution of the determining
// equations in both directions and a residual check of the full coupled
// system.
//
// Everything here is a univariate h-free series: the forward solution lives
// in w = log T and the inverse solution in z = h*J+.  All divisions are
// valuation-checked exact truncated divisions.

#include <functional>
#include <string>
#include <vector>

#include "jtk/wseries.hpp"

namespace jtk {

// A generator map.  phi defines the image of the classical raising
// generator: h*J+ = phi(w) at w = log T.
struct MapSpec {
    std::string name;                      // builtin tag or a custom label
    std::function<WSeries(int)> phi_fn;    // expansion of phi to a given order

    // phi expanded to the requested order, with the defining invariants
    // phi(0) = 0 and phi'(0) = 1 enforced on every call.
    WSeries phi(int order) const;
};

// Tabulated maps: diag, contraction, minimal, simple-plus, simple-minus.
MapSpec builtin_map(const std::string& name);
const std::vector<std::string>& builtin_map_names();
bool is_builtin_map(const std::string& name);

// A map defined by an arbitrary series generator (the CLI wraps parsed
// phi expressions in this).
MapSpec custom_map(std::string name, std::function<WSeries(int)> phi_fn);

// Classical images of the deformed basis, as h-free series in w = log T:
//   J+ = phi(w)/h,
//   J0 = F2(w) * H,
//   J- = F3(w) * Y + h*Ubar(w) + h*Vbar(w)*H + h*Wbar(w)*H^2.
struct ForwardSolution {
    int order = 0;
    WSeries phi{1}, F2{1}, F3{1}, Ubar{1}, Vbar{1}, Wbar{1};
};

// Deformed images of the classical basis, as h-free series in z = h*J+:
//   T = g1(z) = e^{psi(z)} with psi the compositional inverse of phi,
//   H = G2(z) * J0,
//   Y = G3(z) * J- + h*Abar(z) + h*Bbar(z)*J0 + h*Cbar(z)*J0^2.
struct InverseSolution {
    int order = 0;
    WSeries psi{1}, g1{1}, g1inv{1}, G2{1}, G3{1}, Abar{1}, Bbar{1}, Cbar{1};
};

// Solve the determining equations through the given order.  Both solvers
// carry extra internal orders so that every deliverable series is exact to
// the requested order despite derivative and division erosion.
ForwardSolution solve_forward(const MapSpec& map, int order);
InverseSolution solve_inverse(const MapSpec& map, int order);

// Residuals of the seven coupled determining equations, evaluated through
// degree sol.order - 2 (second derivatives of the solution appear, which
// costs two degrees).  A valid solution makes every residual identically
// zero.
struct SevenEquationReport {
    int order = 0;                    // degree through which residuals were checked
    std::vector<WSeries> residuals;   // exactly seven series
    bool all_zero() const;
};

SevenEquationReport check_seven_equations(const MapSpec& map, const ForwardSolution& sol);

// Independent expansions of the known closed-form solutions for diag,
// contraction, and minimal, built from elementary series only -- never from
// solve_forward -- so the solver can be cross-validated against them.
ForwardSolution closed_form_reference(const std::string& name, int order);

} // namespace jtk
