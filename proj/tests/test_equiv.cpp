// Similarity transformations between maps: the connecting series solved two
// independent ways, its companion series, and the conjugating matrix.
#include <doctest.h>

#include <vector>

#include "jtk/equiv.hpp"
#include "jtk/error.hpp"
#include "jtk/irreps.hpp"

using namespace jtk;

namespace {

const std::vector<Rational>& frozen_c() {
    static const std::vector<Rational> c{rat(1, 2),  rat(1, 4),  rat(1, 8),
                                         rat(1, 24), rat(-1, 96), rat(-7, 240)};
    return c;
}

} // namespace

TEST_CASE("change-of-variable series between two tabulated maps") {
    // From the odd hyperbolic map to the short exponential map:
    // rho(z) = z - z^2 + z^3/2 + 0*z^4 - z^5/8 + ...
    const WSeries rho =
        target_series(builtin_map("contraction"), builtin_map("minimal"), 6);
    CHECK(rho.coeff(0) == rat(0));
    CHECK(rho.coeff(1) == rat(1));
    CHECK(rho.coeff(2) == rat(-1));
    CHECK(rho.coeff(3) == rat(1, 2));
    CHECK(rho.coeff(4) == rat(0));
    CHECK(rho.coeff(5) == rat(-1, 8));

    // From the symmetric map: rho(z) = z - z^2 + (3/4)z^3 - (1/2)z^4 + ...
    const WSeries rho2 = target_series(builtin_map("diag"), builtin_map("minimal"), 5);
    CHECK(rho2.coeff(2) == rat(-1));
    CHECK(rho2.coeff(3) == rat(3, 4));
    CHECK(rho2.coeff(4) == rat(-1, 2));

    // A map composed with its own reversion is the identity change.
    CHECK(target_series(builtin_map("diag"), builtin_map("diag"), 6) ==
          WSeries::identity(6));
}

TEST_CASE("connecting series between the hyperbolic and exponential maps") {
    const SimilaritySeries lam =
        similarity(builtin_map("contraction"), builtin_map("minimal"), 6);
    CHECK(lam.source == "contraction");
    CHECK(lam.target == "minimal");
    CHECK(lam.order == 6);
    CHECK(lam.c == frozen_c());
}

TEST_CASE("companion series coefficients") {
    const SimilaritySeries lam =
        similarity(builtin_map("contraction"), builtin_map("minimal"), 7);
    const MuSeries mu = mu_from_lambda(lam);
    CHECK(mu.order == 7);
    const std::vector<Rational> expected{rat(-1, 2), rat(0),      rat(1, 8),
                                         rat(-1, 6), rat(1, 8),   rat(-7, 160),
                                         rat(-1, 64)};
    CHECK(mu.d == expected);

    // Every stored coefficient is final: recomputing from a longer
    // connecting series must reproduce the same prefix.
    const SimilaritySeries lam10 =
        similarity(builtin_map("contraction"), builtin_map("minimal"), 10);
    const MuSeries mu10 = mu_from_lambda(lam10);
    CHECK(std::vector<Rational>(mu10.d.begin(), mu10.d.begin() + 7) == expected);
}

TEST_CASE("companion series satisfies its defining substitution identity") {
    SimilaritySeries lam;
    lam.order = 5;
    lam.c = {rat(1, 3), rat(-2, 5), rat(7, 2), rat(0), rat(1, 6)};
    const MuSeries mu = mu_from_lambda(lam);
    CHECK(mu.order == lam.order);

    // mu(s) = -(1+s) * lambda(q(s)) with q = (1 - (1+s)^{-2})/2, checked
    // against a recomputation with extra working order.
    const int W = lam.order + 5;
    const WSeries one = WSeries::constant(rat(1), W);
    const WSeries one_p_s = one + WSeries::identity(W);
    const WSeries q = (one - series_div(one, one_p_s * one_p_s)) * rat(1, 2);
    const WSeries rhs = -(one_p_s * compose(lam.as_series(W), q));
    CHECK(agrees_to(mu.as_series(W), rhs, mu.order + 1));
}

TEST_CASE("scalar and matrix solvers agree for every ordered map pair") {
    const int N = 8;
    for (const auto& from : builtin_map_names())
        for (const auto& to : builtin_map_names()) {
            if (from == to) continue;
            CAPTURE(from);
            CAPTURE(to);
            const WSeries rho =
                target_series(builtin_map(from), builtin_map(to), N + 2);
            // The matrix oracle cross-checks the scalar solver internally and
            // throws on any mismatch.
            const SimilaritySeries lam = lambda_oracle(rho, N);
            CHECK(lam.c == lambda_solve(rho, N).c);
            CHECK(static_cast<int>(lam.c.size()) == N);
        }
}

TEST_CASE("coefficients are stable under the solve order") {
    const SimilaritySeries low =
        similarity(builtin_map("diag"), builtin_map("contraction"), 5);
    const SimilaritySeries high =
        similarity(builtin_map("diag"), builtin_map("contraction"), 9);
    for (int k = 0; k < 5; ++k) CHECK(low.c[k] == high.c[k]);
}

TEST_CASE("reversing the direction negates the connecting series") {
    for (const auto& from : builtin_map_names())
        for (const auto& to : builtin_map_names()) {
            if (from >= to) continue;
            CAPTURE(from);
            CAPTURE(to);
            const SimilaritySeries ab =
                similarity(builtin_map(from), builtin_map(to), 6);
            const SimilaritySeries ba =
                similarity(builtin_map(to), builtin_map(from), 6);
            CHECK(ab.c == ba.negated().c);
            CHECK(ba.negated().source == from);
            CHECK(ba.negated().target == to);
        }
}

TEST_CASE("change-of-variable series compose along chains") {
    const int N = 8;
    const MapSpec a = builtin_map("diag");
    const MapSpec b = builtin_map("minimal");
    const MapSpec c = builtin_map("simple-plus");
    const WSeries ab = target_series(a, b, N);
    const WSeries bc = target_series(b, c, N);
    const WSeries ac = target_series(a, c, N);
    CHECK(compose(bc, ab) == ac);
}

TEST_CASE("time-one flow of a linear generator is the exact geometric flow") {
    // For lambda(z) = a z the flow of -2 lambda(z) z d/dz at time one is
    // z / (1 + 2 a z).
    SimilaritySeries lam;
    lam.order = 1;
    lam.c = {rat(1, 2)};
    const int N = 8;
    const WSeries flow = flow_time1(lam, N);
    CHECK(flow.order() == N);
    for (int k = 1; k < N; ++k) CHECK(flow.coeff(k) == pow(rat(-1), k - 1));

    // Zero generator: the flow fixes the variable.
    SimilaritySeries zero;
    zero.order = 3;
    zero.c = {rat(0), rat(0), rat(0)};
    CHECK(flow_time1(zero, 6) == WSeries::identity(6));
}

TEST_CASE("the identity pair solves to the zero connecting series") {
    const SimilaritySeries lam =
        similarity(builtin_map("minimal"), builtin_map("minimal"), 5);
    for (const auto& ck : lam.c) CHECK(ck == rat(0));
}

TEST_CASE("solver order contracts") {
    const WSeries rho = target_series(builtin_map("diag"), builtin_map("minimal"), 6);
    CHECK_THROWS_AS(lambda_solve(rho, 5), error);   // needs order >= N + 2
    CHECK_THROWS_AS(lambda_solve(rho, 0), error);
    CHECK_THROWS_AS(lambda_oracle(rho, 5), error);
}

TEST_CASE("conjugator maps one deformed representation onto the other") {
    const int N = 6;
    for (int two_j = 1; two_j <= 3; ++two_j) {
        CAPTURE(two_j);
        const MapSpec from = builtin_map("contraction");
        const MapSpec to = builtin_map("diag");
        const SimilaritySeries lam = similarity(from, to, N);
        const PolyMatrix E = build_U(lam, two_j);
        const PolyMatrix Einv = inverse_unipotent(E);
        const GenSet ga = gens(jordanian_irrep(from, two_j));
        const GenSet gb = gens(jordanian_irrep(to, two_j));
        CHECK(Einv * gb.T * E == ga.T);
        CHECK(Einv * gb.Tinv * E == ga.Tinv);
        CHECK(Einv * gb.H * E == ga.H);
        CHECK(Einv * gb.Y * E == ga.Y);
        CHECK(Einv * gb.X * E == ga.X);
    }
}

TEST_CASE("conjugator is unipotent and classical at h = 0") {
    const SimilaritySeries lam =
        similarity(builtin_map("minimal"), builtin_map("contraction"), 6);
    const PolyMatrix U = build_U(lam, 3);
    CHECK(eval_h0(U) == PolyMatrix::identity(4));
    CHECK(is_nilpotent(U - PolyMatrix::identity(4)));
}

TEST_CASE("conjugator construction demands enough coefficients") {
    SimilaritySeries lam;
    lam.order = 2;
    lam.c = {rat(1), rat(1)};
    CHECK_THROWS_AS(build_U(lam, 4), error);
    CHECK(build_U(lam, 2).rows() == 3);
}
