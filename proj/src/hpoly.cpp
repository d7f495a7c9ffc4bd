#include "jtk/hpoly.hpp"

#include <utility>

namespace jtk {

namespace {
// Function-local static so clients with static-storage HPoly objects never
// observe this constant before it is constructed.
const Rational& kZero() {
    static const Rational zero(0);
    return zero;
}
} // namespace

HPoly::HPoly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

HPoly::HPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

HPoly HPoly::h(int power) {
    return monomial(power, Rational(1));
}

HPoly HPoly::monomial(int power, const Rational& c) {
    if (power < 0) throw error("negative power of h");
    HPoly p;
    if (!c.is_zero()) {
        p.c_.assign(static_cast<std::size_t>(power) + 1, kZero());
        p.c_.back() = c;
    }
    return p;
}

void HPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& HPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero();
    return c_[static_cast<std::size_t>(k)];
}

HPoly HPoly::div_h(int k) const {
    if (k < 0) throw error("negative power of h");
    if (is_zero() || k == 0) return k == 0 ? *this : HPoly();
    if (static_cast<int>(c_.size()) <= k) {
        // Every stored coefficient sits below h^k, and at least one of them
        // is nonzero (canonical form), so the division cannot be exact.
        throw error("polynomial not divisible by h^" + std::to_string(k));
    }
    for (int i = 0; i < k; ++i) {
        if (!c_[static_cast<std::size_t>(i)].is_zero()) {
            throw error("polynomial not divisible by h^" + std::to_string(k));
        }
    }
    HPoly q;
    q.c_.assign(c_.begin() + k, c_.end());
    return q;
}

HPoly HPoly::shift_h(int k) const {
    if (k < 0) throw error("negative power of h");
    if (is_zero() || k == 0) return *this;
    HPoly p;
    p.c_.assign(static_cast<std::size_t>(k), kZero());
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
    return p;
}

HPoly HPoly::operator-() const {
    HPoly p(*this);
    for (auto& c : p.c_) c = -c;
    return p;
}

HPoly& HPoly::operator+=(const HPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

HPoly& HPoly::operator*=(const HPoly& o) {
    *this = *this * o;
    return *this;
}

HPoly& HPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }

HPoly operator*(const HPoly& a, const HPoly& b) {
    if (a.is_zero() || b.is_zero()) return HPoly();
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Rational> out(ac.size() + bc.size() - 1, Rational(0));
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i].is_zero()) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) {
            if (bc[j].is_zero()) continue;
            out[i + j] += ac[i] * bc[j];
        }
    }
    // The leading coefficient is a product of nonzero rationals, hence
    // nonzero: no trim is needed, but the constructor trims defensively.
    return HPoly(std::move(out));
}

HPoly operator*(HPoly a, const Rational& s) { return a *= s; }
HPoly operator*(const Rational& s, HPoly a) { return a *= s; }

HPoly pow(const HPoly& base, int exponent) {
    if (exponent < 0) throw error("negative polynomial exponent");
    HPoly acc{Rational(1)};
    HPoly b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) acc *= b;
        if (e >>= 1) b *= b;
    }
    return acc;
}

std::string HPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
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
        if (k == 1) out += "*h";
        if (k > 1) out += "*h^" + std::to_string(k);
    }
    return out;
}

} // namespace jtk
