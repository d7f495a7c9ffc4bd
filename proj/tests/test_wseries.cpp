// Truncated power series: order bookkeeping, elementary expansions, and the
// composition/reversion/division machinery every solver builds on.
#include <doctest.h>

#include <vector>

#include "jtk/error.hpp"
#include "jtk/wseries.hpp"

using namespace jtk;

namespace {

WSeries exp_series(int order) { return elementary(Elementary::Exp, order); }
WSeries sinh_series(int order) { return elementary(Elementary::Sinh, order); }
WSeries cosh_series(int order) { return elementary(Elementary::Cosh, order); }

} // namespace

TEST_CASE("order carries coefficients of degrees 0..order-1") {
    WSeries s(4);
    CHECK(s.order() == 4);
    CHECK(s.is_zero());
    CHECK(s.valuation() == 4);
    s.set_coeff(2, rat(5));
    CHECK(s.coeff(2) == rat(5));
    CHECK(s.valuation() == 2);
    CHECK_FALSE(s.is_zero());
    CHECK_THROWS_AS(s.coeff(4), error);
    CHECK_THROWS_AS(s.set_coeff(4, rat(1)), error);
    CHECK_THROWS_AS(WSeries(0), error);
}

TEST_CASE("coefficient-vector constructor pads with zeros and checks size") {
    WSeries s(4, {rat(1), rat(2)});
    CHECK(s.coeff(0) == rat(1));
    CHECK(s.coeff(1) == rat(2));
    CHECK(s.coeff(2) == rat(0));
    CHECK(s.coeff(3) == rat(0));
    CHECK_THROWS_AS(WSeries(2, {rat(1), rat(2), rat(3)}), error);
}

TEST_CASE("named constructors") {
    CHECK(WSeries::constant(rat(3), 5).coeff(0) == rat(3));
    CHECK(WSeries::constant(rat(3), 5).valuation() == 0);
    CHECK(WSeries::identity(5).coeff(1) == rat(1));
    CHECK(WSeries::identity(5).valuation() == 1);
    CHECK(WSeries::monomial(3, rat(-2), 5).coeff(3) == rat(-2));
    CHECK_THROWS_AS(WSeries::monomial(5, rat(1), 5), error);
}

TEST_CASE("series of different orders are distinct values") {
    CHECK(WSeries::identity(4) != WSeries::identity(5));
    CHECK(WSeries::identity(5).truncated(4) == WSeries::identity(4));
    CHECK_THROWS_AS(WSeries::identity(4).truncated(5), error);
}

TEST_CASE("arithmetic returns the minimum order") {
    const WSeries a = exp_series(6);
    const WSeries b = sinh_series(4);
    CHECK((a + b).order() == 4);
    CHECK((a - b).order() == 4);
    CHECK((a * b).order() == 4);
    CHECK((a * rat(2)).order() == 6);
    CHECK((-a).order() == 6);
    CHECK((rat(2) * a).coeff(0) == rat(2));
}

TEST_CASE("derivative drops the order by one") {
    const WSeries s = exp_series(6);
    const WSeries d = s.derivative();
    CHECK(d.order() == 5);
    // d/dw e^w = e^w.
    CHECK(d == exp_series(5));
    CHECK_THROWS_AS(WSeries(1).derivative(), error);
    // Power rule: d/dw w^3 = 3 w^2.
    CHECK(WSeries::monomial(3, rat(1), 5).derivative() ==
          WSeries::monomial(2, rat(3), 4));
}

TEST_CASE("argument rescaling") {
    // e^{2w} has coefficients 2^k / k!.
    const WSeries e2 = exp_series(5).scaled_arg(rat(2));
    CHECK(e2.coeff(0) == rat(1));
    CHECK(e2.coeff(1) == rat(2));
    CHECK(e2.coeff(2) == rat(2));
    CHECK(e2.coeff(3) == rat(4, 3));
    // e^w * e^{-w} = 1.
    const WSeries prod = exp_series(8) * exp_series(8).scaled_arg(rat(-1));
    CHECK(prod == WSeries::constant(rat(1), 8));
}

TEST_CASE("elementary expansions match the classical tables") {
    const WSeries e = exp_series(5);
    CHECK(e.coeff(0) == rat(1));
    CHECK(e.coeff(1) == rat(1));
    CHECK(e.coeff(2) == rat(1, 2));
    CHECK(e.coeff(3) == rat(1, 6));
    CHECK(e.coeff(4) == rat(1, 24));

    const WSeries sh = sinh_series(6);
    CHECK(sh.coeff(1) == rat(1));
    CHECK(sh.coeff(2) == rat(0));
    CHECK(sh.coeff(3) == rat(1, 6));
    CHECK(sh.coeff(5) == rat(1, 120));

    const WSeries ch = cosh_series(6);
    CHECK(ch.coeff(0) == rat(1));
    CHECK(ch.coeff(2) == rat(1, 2));
    CHECK(ch.coeff(4) == rat(1, 24));

    const WSeries th = elementary(Elementary::Tanh, 7);
    CHECK(th.coeff(1) == rat(1));
    CHECK(th.coeff(3) == rat(-1, 3));
    CHECK(th.coeff(5) == rat(2, 15));

    const WSeries ath = elementary(Elementary::Arctanh, 7);
    CHECK(ath.coeff(1) == rat(1));
    CHECK(ath.coeff(3) == rat(1, 3));
    CHECK(ath.coeff(5) == rat(1, 5));

    const WSeries sq = elementary(Elementary::Sqrt1p, 6);
    CHECK(sq.coeff(0) == rat(1));
    CHECK(sq.coeff(1) == rat(1, 2));
    CHECK(sq.coeff(2) == rat(-1, 8));
    CHECK(sq.coeff(3) == rat(1, 16));
    CHECK(sq.coeff(4) == rat(-5, 128));
    CHECK(sq.coeff(5) == rat(7, 256));

    const WSeries lg = elementary(Elementary::Log1p, 5);
    CHECK(lg.coeff(1) == rat(1));
    CHECK(lg.coeff(2) == rat(-1, 2));
    CHECK(lg.coeff(3) == rat(1, 3));
    CHECK(lg.coeff(4) == rat(-1, 4));
}

TEST_CASE("elementary identities hold to every computed order") {
    const int N = 10;
    // sinh^2 = cosh^2 - 1.
    CHECK(sinh_series(N) * sinh_series(N) ==
          cosh_series(N) * cosh_series(N) - WSeries::constant(rat(1), N));
    // tanh * cosh = sinh.
    CHECK(elementary(Elementary::Tanh, N) * cosh_series(N) == sinh_series(N));
    // sqrt1p^2 = 1 + w.
    const WSeries sq = elementary(Elementary::Sqrt1p, N);
    WSeries onepw = WSeries::constant(rat(1), N);
    onepw.set_coeff(1, rat(1));
    CHECK(sq * sq == onepw);
    // exp = cosh + sinh.
    CHECK(exp_series(N) == cosh_series(N) + sinh_series(N));
}

TEST_CASE("division is exact and valuation-checked") {
    const int N = 8;
    // sinh / w = 1 + w^2/6 + ... (order drops by the divisor valuation).
    const WSeries q = series_div(sinh_series(N), WSeries::identity(N));
    CHECK(q.order() == N - 1);
    CHECK(q.coeff(0) == rat(1));
    CHECK(q.coeff(2) == rat(1, 6));
    CHECK(q.coeff(4) == rat(1, 120));
    // tanh = sinh / cosh at full order.
    CHECK(series_div(sinh_series(N), cosh_series(N)) == elementary(Elementary::Tanh, N));
    // Quotient times divisor restores the dividend.
    const WSeries back = q * WSeries::identity(N - 1);
    CHECK(agrees_to(back, sinh_series(N), N - 1));
    // Poles and zero divisors are rejected.
    CHECK_THROWS_AS(series_div(WSeries::constant(rat(1), N), WSeries::identity(N)), error);
    CHECK_THROWS_AS(series_div(sinh_series(N), WSeries(N)), error);
    // Zero numerator stays zero.
    CHECK(series_div(WSeries(N), cosh_series(N)).is_zero());
}

TEST_CASE("composition requires positive inner valuation") {
    const int N = 8;
    // exp(log1p(w)) = 1 + w.
    const WSeries comp = compose(exp_series(N), elementary(Elementary::Log1p, N));
    WSeries onepw = WSeries::constant(rat(1), N);
    onepw.set_coeff(1, rat(1));
    CHECK(comp == onepw);
    // arctanh(tanh(w)) = w.
    CHECK(compose(elementary(Elementary::Arctanh, N), elementary(Elementary::Tanh, N)) ==
          WSeries::identity(N));
    CHECK_THROWS_AS(compose(exp_series(N), WSeries::constant(rat(1), N)), error);
}

TEST_CASE("reversion inverts composition") {
    const int N = 9;
    // revert(e^w - 1) = log(1 + w).
    const WSeries em1 = exp_series(N) - WSeries::constant(rat(1), N);
    CHECK(revert(em1) == elementary(Elementary::Log1p, N));
    // revert(sinh) composed with sinh is the identity.
    const WSeries asinh = revert(sinh_series(N));
    CHECK(compose(asinh, sinh_series(N)) == WSeries::identity(N));
    CHECK(compose(sinh_series(N), asinh) == WSeries::identity(N));
    // Normalization f(0) = 0, f'(0) = 1 is enforced.
    CHECK_THROWS_AS(revert(exp_series(N)), error);
    CHECK_THROWS_AS(revert(WSeries::monomial(1, rat(2), N)), error);
}

TEST_CASE("integer powers") {
    const int N = 8;
    CHECK(pow(sinh_series(N), 0) == WSeries::constant(rat(1), N));
    CHECK(pow(sinh_series(N), 2) == sinh_series(N) * sinh_series(N));
    CHECK(pow(exp_series(N), 3) == exp_series(N).scaled_arg(rat(3)));
    CHECK_THROWS_AS(pow(sinh_series(N), -1), error);
}

TEST_CASE("derivative with respect to the exponential of the variable") {
    const int N = 8;
    // For f = e^{2w}: e^{-w} df/dw = 2 e^{w}.
    const WSeries f = exp_series(N).scaled_arg(rat(2));
    const WSeries d = deriv_T(f);
    CHECK(d.order() == N - 1);
    CHECK(d == exp_series(N - 1) * rat(2));
    // For f = e^{w}: e^{-w} e^{w} = 1.
    CHECK(deriv_T(exp_series(N)) == WSeries::constant(rat(1), N - 1));
}

TEST_CASE("coefficient agreement comparisons") {
    const WSeries a = exp_series(8);
    WSeries b = exp_series(6);
    CHECK(agrees_to(a, b, 6));
    b.set_coeff(5, rat(0));
    CHECK(agrees_to(a, b, 5));
    CHECK_FALSE(agrees_to(a, b, 6));
    CHECK_THROWS_AS(agrees_to(a, b, 7), error);
}

TEST_CASE("diagnostic rendering mentions the order window") {
    const std::string s = sinh_series(4).str();
    CHECK(s.find("w") != std::string::npos);
    CHECK(s.find("O(w^4)") != std::string::npos);
    CHECK(WSeries(3).str().find("0") != std::string::npos);
}
