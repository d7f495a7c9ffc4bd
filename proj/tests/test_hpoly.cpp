// Polynomials in the deformation parameter: ring operations and the exact
// divisions used to extract classical limits.
#include <doctest.h>

#include "jtk/error.hpp"
#include "jtk/hpoly.hpp"

using namespace jtk;

TEST_CASE("zero polynomial is canonical") {
    HPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.coeff(0).is_zero());
    CHECK(z.coeff(5).is_zero());
    CHECK(z == HPoly(Rational(0)));
    CHECK((HPoly::h() - HPoly::h()).is_zero());
    CHECK((HPoly::h() - HPoly::h()).degree() == -1);
}

TEST_CASE("constants and monomials") {
    CHECK(HPoly(rat(3, 2)).degree() == 0);
    CHECK(HPoly(rat(3, 2)).is_constant());
    CHECK(HPoly::h().degree() == 1);
    CHECK(HPoly::h(4).degree() == 4);
    CHECK(HPoly::h(4).coeff(4).is_one());
    CHECK(HPoly::h(4).coeff(3).is_zero());
    CHECK(HPoly::monomial(2, rat(-1, 3)).coeff(2) == rat(-1, 3));
    CHECK(HPoly::monomial(2, rat(0)).is_zero());
    CHECK(HPoly(7) == HPoly(rat(7)));
}

TEST_CASE("explicit coefficient vector constructor trims trailing zeros") {
    HPoly p(std::vector<Rational>{rat(1), rat(0), rat(2), rat(0)});
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == rat(1));
    CHECK(p.coeff(1) == rat(0));
    CHECK(p.coeff(2) == rat(2));
    CHECK(p.coeffs().size() == 3);
}

TEST_CASE("ring arithmetic") {
    const HPoly p = HPoly(1) + HPoly::h();              // 1 + h
    const HPoly q = HPoly(1) - HPoly::h();              // 1 - h
    CHECK(p * q == HPoly(1) - HPoly::h(2));             // 1 - h^2
    CHECK(p + q == HPoly(2));
    CHECK(p - p == HPoly());
    CHECK(-p == HPoly(-1) - HPoly::h());
    CHECK(p * rat(2) == HPoly(2) + HPoly::monomial(1, rat(2)));
    CHECK(rat(2) * p == p * rat(2));

    // (1 + h)^2 = 1 + 2h + h^2
    CHECK(pow(p, 2) == HPoly(1) + HPoly::monomial(1, rat(2)) + HPoly::h(2));
    CHECK(pow(p, 0) == HPoly(1));
    // Product degree adds; product of nonzero polynomials over a field is nonzero.
    CHECK((HPoly::h(3) * HPoly::h(5)).degree() == 8);
    CHECK((p * HPoly()).is_zero());
}

TEST_CASE("value at h = 0 is the constant term") {
    const HPoly p = HPoly(rat(5, 3)) + HPoly::monomial(2, rat(7));
    CHECK(p.eval_h0() == rat(5, 3));
    CHECK(HPoly().eval_h0() == rat(0));
    CHECK(HPoly::h().eval_h0() == rat(0));
}

TEST_CASE("shift and exact division by powers of h") {
    const HPoly p = HPoly::monomial(2, rat(3)) + HPoly::monomial(4, rat(-1, 2));
    CHECK(p.shift_h(1).degree() == 5);
    CHECK(p.shift_h(1).coeff(3) == rat(3));
    CHECK(p.div_h(2) == HPoly(rat(3)) + HPoly::monomial(2, rat(-1, 2)));
    CHECK(p.div_h(2).shift_h(2) == p);
    CHECK(p.div_h(0) == p);
    CHECK(HPoly().div_h(3).is_zero());
    // Not divisible: the h^2 term blocks division by h^3.
    CHECK_THROWS_AS(p.div_h(3), error);
    CHECK_THROWS_AS((HPoly(1) + HPoly::h()).div_h(1), error);
}

TEST_CASE("coefficient access beyond the degree reads zero") {
    const HPoly p = HPoly(1) + HPoly::h();
    CHECK(p.coeff(2).is_zero());
    CHECK(p.coeff(100).is_zero());
}

TEST_CASE("diagnostic rendering") {
    CHECK(HPoly().str() == "0");
    // A representative mixed polynomial renders with powers ascending.
    const HPoly p = HPoly(1) + HPoly::monomial(2, rat(-3, 2));
    const std::string s = p.str();
    CHECK(s.find("1/1") != std::string::npos);
    CHECK(s.find("3/2") != std::string::npos);
    CHECK(s.find("h^2") != std::string::npos);
}

TEST_CASE("binomial cube as an arithmetic stress check") {
    const HPoly p = HPoly(1) + HPoly::h();
    const HPoly cube = p * p * p;
    CHECK(cube.coeff(0) == rat(1));
    CHECK(cube.coeff(1) == rat(3));
    CHECK(cube.coeff(2) == rat(3));
    CHECK(cube.coeff(3) == rat(1));
    CHECK(cube == pow(p, 3));
}
