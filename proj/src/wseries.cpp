#include "jtk/wseries.hpp"

#include <algorithm>
#include <utility>

namespace jtk {

namespace {

void check_order(int order) {
    if (order < 1) throw error("series order must be at least 1");
}

} // namespace

const char* elementary_name(Elementary fn) {
    switch (fn) {
        case Elementary::Exp: return "exp";
        case Elementary::Log1p: return "log1p";
        case Elementary::Sinh: return "sinh";
        case Elementary::Cosh: return "cosh";
        case Elementary::Tanh: return "tanh";
        case Elementary::Arctanh: return "arctanh";
        case Elementary::Sqrt1p: return "sqrt1p";
    }
    throw error("unknown elementary function");
}

WSeries::WSeries(int order) {
    check_order(order);
    c_.assign(static_cast<std::size_t>(order), Rational(0));
}

WSeries::WSeries(int order, std::vector<Rational> coeffs) {
    check_order(order);
    if (static_cast<int>(coeffs.size()) > order) {
        throw error("more coefficients than the series order admits");
    }
    c_ = std::move(coeffs);
    c_.resize(static_cast<std::size_t>(order), Rational(0));
}

const Rational& WSeries::coeff(int k) const {
    if (k < 0 || k >= order()) {
        throw error("series coefficient index " + std::to_string(k) +
                    " outside order " + std::to_string(order()));
    }
    return c_[static_cast<std::size_t>(k)];
}

void WSeries::set_coeff(int k, const Rational& v) {
    if (k < 0 || k >= order()) {
        throw error("series coefficient index " + std::to_string(k) +
                    " outside order " + std::to_string(order()));
    }
    c_[static_cast<std::size_t>(k)] = v;
}

int WSeries::valuation() const {
    for (int k = 0; k < order(); ++k) {
        if (!c_[static_cast<std::size_t>(k)].is_zero()) return k;
    }
    return order();
}

WSeries WSeries::constant(const Rational& c, int order) {
    WSeries s(order);
    s.c_[0] = c;
    return s;
}

WSeries WSeries::identity(int order) {
    return monomial(1, Rational(1), order);
}

WSeries WSeries::monomial(int degree, const Rational& c, int order) {
    WSeries s(order);
    if (degree < 0 || degree >= order) {
        throw error("monomial degree outside series order");
    }
    s.c_[static_cast<std::size_t>(degree)] = c;
    return s;
}

WSeries WSeries::truncated(int new_order) const {
    check_order(new_order);
    if (new_order > order()) {
        throw error("cannot extend a series by truncation");
    }
    WSeries s(new_order);
    std::copy(c_.begin(), c_.begin() + new_order, s.c_.begin());
    return s;
}

WSeries WSeries::derivative() const {
    if (order() < 2) throw error("derivative needs series order >= 2");
    WSeries s(order() - 1);
    for (int k = 1; k < order(); ++k) {
        s.c_[static_cast<std::size_t>(k - 1)] = Rational(k) * c_[static_cast<std::size_t>(k)];
    }
    return s;
}

WSeries WSeries::scaled_arg(const Rational& a) const {
    WSeries s(*this);
    Rational p(1);
    for (int k = 1; k < order(); ++k) {
        p *= a;
        s.c_[static_cast<std::size_t>(k)] *= p;
    }
    return s;
}

WSeries WSeries::operator-() const {
    WSeries s(*this);
    for (auto& c : s.c_) c = -c;
    return s;
}

WSeries& WSeries::operator+=(const WSeries& o) {
    const int n = std::min(order(), o.order());
    c_.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) c_[static_cast<std::size_t>(k)] += o.c_[static_cast<std::size_t>(k)];
    return *this;
}

WSeries& WSeries::operator-=(const WSeries& o) {
    const int n = std::min(order(), o.order());
    c_.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) c_[static_cast<std::size_t>(k)] -= o.c_[static_cast<std::size_t>(k)];
    return *this;
}

WSeries& WSeries::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

WSeries operator+(WSeries a, const WSeries& b) { return a += b; }
WSeries operator-(WSeries a, const WSeries& b) { return a -= b; }

WSeries operator*(const WSeries& a, const WSeries& b) {
    const int n = std::min(a.order(), b.order());
    WSeries out(n);
    for (int i = 0; i < std::min(a.order(), n); ++i) {
        const Rational& ai = a.coeff(i);
        if (ai.is_zero()) continue;
        for (int j = 0; i + j < n && j < b.order(); ++j) {
            const Rational& bj = b.coeff(j);
            if (bj.is_zero()) continue;
            out.set_coeff(i + j, out.coeff(i + j) + ai * bj);
        }
    }
    return out;
}

WSeries operator*(WSeries a, const Rational& s) { return a *= s; }
WSeries operator*(const Rational& s, WSeries a) { return a *= s; }

WSeries series_div(const WSeries& a, const WSeries& b) {
    if (b.is_zero()) throw error("series division by zero");
    const int n = std::min(a.order(), b.order());
    const int v = b.valuation();
    if (!a.is_zero() && a.valuation() < v) {
        throw error("series quotient would have a pole (valuation of the "
                    "numerator is below the denominator's)");
    }
    const int m = n - v;
    if (m < 1) throw error("series division exhausts the available order");
    // Shift both down by v; the denominator becomes a unit.
    std::vector<Rational> num(static_cast<std::size_t>(m), Rational(0));
    std::vector<Rational> den(static_cast<std::size_t>(m), Rational(0));
    for (int k = 0; k < m; ++k) {
        if (k + v < a.order()) num[static_cast<std::size_t>(k)] = a.coeff(k + v);
        den[static_cast<std::size_t>(k)] = b.coeff(k + v);
    }
    const Rational lead_inv = inv(den[0]);
    WSeries q(m);
    for (int k = 0; k < m; ++k) {
        Rational acc = num[static_cast<std::size_t>(k)];
        for (int i = 0; i < k; ++i) {
            const Rational& qi = q.coeff(i);
            if (qi.is_zero()) continue;
            acc -= qi * den[static_cast<std::size_t>(k - i)];
        }
        q.set_coeff(k, acc * lead_inv);
    }
    return q;
}

WSeries compose(const WSeries& outer, const WSeries& inner) {
    if (inner.order() >= 1 && !inner.coeff(0).is_zero()) {
        throw error("series composition needs an inner series with zero "
                    "constant term");
    }
    const int n = std::min(outer.order(), inner.order());
    const WSeries g = inner.truncated(n);
    // Horner evaluation: ((f_{n-1} g + f_{n-2}) g + ...) + f_0.
    WSeries acc = WSeries::constant(outer.coeff(n - 1), n);
    for (int k = n - 2; k >= 0; --k) {
        acc = acc * g;
        acc.set_coeff(0, acc.coeff(0) + outer.coeff(k));
    }
    return acc;
}

WSeries revert(const WSeries& f) {
    const int n = f.order();
    if (n < 2 || !f.coeff(0).is_zero() || !f.coeff(1).is_one()) {
        throw error("series reversion needs f(0) = 0 and f'(0) = 1");
    }
    // Solve f(g(w)) = w degree by degree.  With the coefficients of g below
    // degree k already correct, changing g_k by d changes (f o g)_k by
    // exactly d (because f'(0) = 1), so each step reads off g_k directly.
    WSeries g = WSeries::identity(n);
    for (int k = 2; k < n; ++k) {
        const WSeries e = compose(f, g);
        g.set_coeff(k, g.coeff(k) - e.coeff(k));
    }
    return g;
}

WSeries elementary(Elementary fn, int order) {
    check_order(order);
    WSeries s(order);
    switch (fn) {
        case Elementary::Exp:
            for (int k = 0; k < order; ++k) s.set_coeff(k, inv(factorial(k)));
            break;
        case Elementary::Log1p:
            for (int k = 1; k < order; ++k) {
                s.set_coeff(k, Rational(BigInt(k % 2 == 1 ? 1 : -1), BigInt(k)));
            }
            break;
        case Elementary::Sinh:
            for (int k = 1; k < order; k += 2) s.set_coeff(k, inv(factorial(k)));
            break;
        case Elementary::Cosh:
            for (int k = 0; k < order; k += 2) s.set_coeff(k, inv(factorial(k)));
            break;
        case Elementary::Tanh:
            return series_div(elementary(Elementary::Sinh, order),
                              elementary(Elementary::Cosh, order));
        case Elementary::Arctanh:
            for (int k = 1; k < order; k += 2) s.set_coeff(k, rat(1, k));
            break;
        case Elementary::Sqrt1p: {
            // Binomial series for (1+w)^{1/2}: c_k = c_{k-1} * (3/2 - k)/k.
            Rational c(1);
            s.set_coeff(0, c);
            for (int k = 1; k < order; ++k) {
                c *= (rat(3, 2) - Rational(k)) / Rational(k);
                s.set_coeff(k, c);
            }
            break;
        }
    }
    return s;
}

WSeries pow(const WSeries& base, int exponent) {
    if (exponent < 0) throw error("negative series exponent");
    WSeries acc = WSeries::constant(Rational(1), base.order());
    WSeries b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        if (e >>= 1) b = b * b;
    }
    return acc;
}

WSeries deriv_T(const WSeries& f) {
    const WSeries df = f.derivative();
    const WSeries em = elementary(Elementary::Exp, df.order()).scaled_arg(Rational(-1));
    return em * df;
}

bool agrees_to(const WSeries& a, const WSeries& b, int order) {
    if (a.order() < order || b.order() < order) {
        throw error("series too short for the requested comparison");
    }
    for (int k = 0; k < order; ++k) {
        if (!(a.coeff(k) == b.coeff(k))) return false;
    }
    return true;
}

std::string WSeries::str() const {
    std::string out;
    for (int k = 0; k < order(); ++k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        Rational a = c;
        if (out.empty()) {
            if (a.sign() < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        out += a.str();
        if (k == 1) out += "*w";
        if (k > 1) out += "*w^" + std::to_string(k);
    }
    if (out.empty()) out = "0";
    out += " (+O(w^" + std::to_string(order()) + "))";
    return out;
}

} // namespace jtk
