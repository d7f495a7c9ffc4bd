#pragma once
// rational.hpp -- exact rational numbers over arbitrary-precision integers.
//
// Canonical form: lowest terms, denominator strictly positive, zero stored
// as 0/1.  Every constructor and operator restores the canonical form, so
// fieldwise comparison is value comparison.  Division by zero throws.

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <utility>

#include "jtk/error.hpp"

namespace jtk {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}   // NOLINT: implicit by design
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);   // throws on zero divisor

    friend bool operator==(const Rational&, const Rational&) = default;

    // Canonical text form "num/den" with the denominator always spelled out,
    // e.g. "3/1", "-2/5".  parse() also accepts a bare integer "n".
    std::string str() const;
    static Rational parse(const std::string& text);

  private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

Rational operator+(Rational a, const Rational& b);
Rational operator-(Rational a, const Rational& b);
Rational operator*(Rational a, const Rational& b);
Rational operator/(Rational a, const Rational& b);
bool operator<(const Rational& a, const Rational& b);

// Multiplicative inverse; throws on zero.
Rational inv(const Rational& r);

// Integer power; negative exponents invert (and throw on base zero).
Rational pow(const Rational& base, int exponent);

// k! as a rational, for series coefficients.
Rational factorial(int k);

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Terse literals for tests and tables.
inline Rational rat(long long n) { return Rational(n); }
inline Rational rat(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

} // namespace jtk
