#pragma once
// hpoly.hpp -- dense univariate polynomials in the deformation parameter h
// with exact rational coefficients.
//
// Coefficients are stored ascending by power; the canonical form has no
// trailing zero coefficients, so the zero polynomial is the empty vector and
// fieldwise comparison is value comparison.  Polynomials form a commutative
// ring; the only divisions offered are exact ones (by a nonzero rational or
// by a power of h that divides every term).

#include <string>
#include <vector>

#include "jtk/rational.hpp"

namespace jtk {

class HPoly {
  public:
    HPoly() = default;                       // zero polynomial
    HPoly(const Rational& c);                // constant   NOLINT: implicit by design
    HPoly(long long c) : HPoly(Rational(c)) {}   // NOLINT: implicit by design
    explicit HPoly(std::vector<Rational> coeffs);

    static HPoly h(int power = 1);                       // h^power
    static HPoly monomial(int power, const Rational& c); // c * h^power

    // Degree of the highest nonzero term, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Coefficient of h^k; zero beyond the degree.
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    // Value at h = 0, i.e. the constant term.
    Rational eval_h0() const { return coeff(0); }

    // Exact division by h^k; throws unless every term has power >= k.
    HPoly div_h(int k) const;
    // Multiplication by h^k.
    HPoly shift_h(int k) const;

    HPoly operator-() const;
    HPoly& operator+=(const HPoly& o);
    HPoly& operator-=(const HPoly& o);
    HPoly& operator*=(const HPoly& o);
    HPoly& operator*=(const Rational& s);

    friend bool operator==(const HPoly&, const HPoly&) = default;

    // Human-readable form for diagnostics, e.g. "1/1 - 3/2*h^2".
    std::string str() const;

  private:
    void trim();

    std::vector<Rational> c_;   // c_[k] multiplies h^k
};

HPoly operator+(HPoly a, const HPoly& b);
HPoly operator-(HPoly a, const HPoly& b);
HPoly operator*(const HPoly& a, const HPoly& b);
HPoly operator*(HPoly a, const Rational& s);
HPoly operator*(const Rational& s, HPoly a);

HPoly pow(const HPoly& base, int exponent);   // exponent >= 0

} // namespace jtk
