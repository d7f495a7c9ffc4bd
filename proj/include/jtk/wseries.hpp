#pragma once
// wseries.hpp -- truncated power series in one formal variable with exact
// rational coefficients.
//
// A series of order N carries the coefficients of degrees 0..N-1 and is
// silent about everything above; binary operations return the minimum order
// of their operands, and order-eroding operations (derivative, division by a
// series of positive valuation) return the correspondingly smaller order.
// Series of different orders are distinct values.  The formal variable is
// written "w" in diagnostics but the type is variable-agnostic: the same
// arithmetic serves series in w and series in z.

#include <string>
#include <vector>

#include "jtk/rational.hpp"

namespace jtk {

// Elementary analytic series with rational Taylor coefficients at 0.
enum class Elementary { Exp, Log1p, Sinh, Cosh, Tanh, Arctanh, Sqrt1p };

const char* elementary_name(Elementary fn);

class WSeries {
  public:
    // Zero series of the given order (order >= 1).
    explicit WSeries(int order);
    // Series with the given low-degree coefficients (size <= order; the rest
    // are zero).
    WSeries(int order, std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(c_.size()); }
    const Rational& coeff(int k) const;         // throws beyond the order
    void set_coeff(int k, const Rational& v);   // throws beyond the order

    // Smallest degree with a nonzero coefficient; equals order() for the
    // zero series.
    int valuation() const;
    bool is_zero() const { return valuation() == order(); }

    static WSeries constant(const Rational& c, int order);
    static WSeries identity(int order);                              // the variable itself
    static WSeries monomial(int degree, const Rational& c, int order);

    // Copy truncated to a smaller (or equal) order.
    WSeries truncated(int new_order) const;
    // Termwise derivative; drops the order by one (requires order >= 2).
    WSeries derivative() const;
    // f(a*w): rescale the argument by a rational.
    WSeries scaled_arg(const Rational& a) const;

    WSeries operator-() const;
    WSeries& operator+=(const WSeries& o);
    WSeries& operator-=(const WSeries& o);
    WSeries& operator*=(const Rational& s);

    friend bool operator==(const WSeries&, const WSeries&) = default;

    // Human-readable form for diagnostics, e.g. "w - 1/6*w^3 (+O(w^8))".
    std::string str() const;

  private:
    std::vector<Rational> c_;   // c_[k] multiplies w^k; size == order
};

WSeries operator+(WSeries a, const WSeries& b);
WSeries operator-(WSeries a, const WSeries& b);
WSeries operator*(const WSeries& a, const WSeries& b);   // truncated product
WSeries operator*(WSeries a, const Rational& s);
WSeries operator*(const Rational& s, WSeries a);

// Exact truncated quotient.  Requires b nonzero and val(a) >= val(b); the
// result has order min(a,b).order - val(b).
WSeries series_div(const WSeries& a, const WSeries& b);

// outer(inner); requires val(inner) >= 1.  Result order is the minimum of
// the two orders.
WSeries compose(const WSeries& outer, const WSeries& inner);

// Compositional inverse of f with f(0) = 0, f'(0) = 1; same order as f.
WSeries revert(const WSeries& f);

// Taylor series of an elementary function at 0, to the given order.
WSeries elementary(Elementary fn, int order);

// Integer power (exponent >= 0).
WSeries pow(const WSeries& base, int exponent);

// e^{-w} * df/dw: the derivative with respect to e^{w} of a series in w,
// pulled back to the w variable.  Drops the order by one.
WSeries deriv_T(const WSeries& f);

// Do a and b agree on all coefficients of degree < order?  Both must have at
// least that order.
bool agrees_to(const WSeries& a, const WSeries& b, int order);

} // namespace jtk
