#include "jtk/rational.hpp"

#include <cctype>
#include <ostream>

namespace jtk {

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string strip(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

} // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rational::normalize() {
    if (den_ == 0) throw error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r(*this);
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Rational operator+(Rational a, const Rational& b) { return a += b; }
Rational operator-(Rational a, const Rational& b) { return a -= b; }
Rational operator*(Rational a, const Rational& b) { return a *= b; }
Rational operator/(Rational a, const Rational& b) { return a /= b; }

bool operator<(const Rational& a, const Rational& b) {
    // Denominators are positive in canonical form, so cross-multiplying
    // preserves the order.
    return a.num() * b.den() < b.num() * a.den();
}

Rational inv(const Rational& r) {
    if (r.is_zero()) throw error("inverse of zero rational");
    return Rational(r.den(), r.num());
}

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) return pow(inv(base), -exponent);
    Rational acc(1);
    Rational b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Rational factorial(int k) {
    if (k < 0) throw error("factorial of negative integer");
    BigInt acc(1);
    for (int i = 2; i <= k; ++i) acc *= i;
    return Rational(std::move(acc));
}

std::string Rational::str() const {
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(const std::string& text) {
    const std::string s = strip(text);
    const std::size_t slash = s.find('/');
    std::string num_part;
    std::string den_part;
    if (slash == std::string::npos) {
        num_part = s;
        den_part = "1";
    } else {
        num_part = strip(s.substr(0, slash));
        den_part = strip(s.substr(slash + 1));
    }
    if (!looks_like_integer(num_part) || !looks_like_integer(den_part)) {
        throw error("cannot parse rational from \"" + text + "\"");
    }
    return Rational(BigInt(num_part), BigInt(den_part));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace jtk
