#include "jtk/pmatrix.hpp"

#include <utility>

namespace jtk {

namespace {

void require_square(const PolyMatrix& m, const char* who) {
    if (!m.is_square()) throw error(std::string(who) + " needs a square matrix");
}

void require_same_shape(const PolyMatrix& a, const PolyMatrix& b, const char* who) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw error(std::string(who) + " on mismatched shapes");
    }
}

} // namespace

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw error("negative matrix dimension");
    e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), HPoly());
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = HPoly(Rational(1));
    return m;
}

void PolyMatrix::check_index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
        throw error("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                    ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

HPoly& PolyMatrix::at(int i, int j) {
    check_index(i, j);
    return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(j)];
}

const HPoly& PolyMatrix::at(int i, int j) const {
    check_index(i, j);
    return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(j)];
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : e_) {
        if (!p.is_zero()) return false;
    }
    return true;
}

int PolyMatrix::max_h_degree() const {
    int d = -1;
    for (const auto& p : e_) d = std::max(d, p.degree());
    return d;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix m(*this);
    for (auto& p : m.e_) p = -p;
    return m;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
    require_same_shape(*this, o, "matrix addition");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
    require_same_shape(*this, o, "matrix subtraction");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

PolyMatrix& PolyMatrix::operator*=(const HPoly& s) {
    for (auto& p : e_) p *= s;
    return *this;
}

PolyMatrix& PolyMatrix::operator*=(const Rational& s) {
    for (auto& p : e_) p *= s;
    return *this;
}

PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw error("matrix product on mismatched shapes");
    PolyMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const HPoly& aik = a.at(i, k);
            if (aik.is_zero()) continue;   // the matrices here are mostly banded
            for (int j = 0; j < b.cols(); ++j) {
                const HPoly& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

PolyMatrix operator*(PolyMatrix a, const HPoly& s) { return a *= s; }
PolyMatrix operator*(const HPoly& s, PolyMatrix a) { return a *= s; }
PolyMatrix operator*(PolyMatrix a, const Rational& s) { return a *= s; }
PolyMatrix operator*(const Rational& s, PolyMatrix a) { return a *= s; }

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) {
    return a * b - b * a;
}

PolyMatrix pow(const PolyMatrix& base, int exponent) {
    require_square(base, "matrix power");
    if (exponent < 0) throw error("negative matrix exponent");
    PolyMatrix acc = PolyMatrix::identity(base.rows());
    PolyMatrix b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        if (e >>= 1) b = b * b;
    }
    return acc;
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ia = 0; ia < a.rows(); ++ia) {
        for (int ja = 0; ja < a.cols(); ++ja) {
            const HPoly& av = a.at(ia, ja);
            if (av.is_zero()) continue;
            for (int ib = 0; ib < b.rows(); ++ib) {
                for (int jb = 0; jb < b.cols(); ++jb) {
                    const HPoly& bv = b.at(ib, jb);
                    if (bv.is_zero()) continue;
                    out.at(ia * b.rows() + ib, ja * b.cols() + jb) = av * bv;
                }
            }
        }
    }
    return out;
}

PolyMatrix flip_perm(int d1, int d2) {
    PolyMatrix p(d1 * d2, d1 * d2);
    for (int i1 = 0; i1 < d1; ++i1) {
        for (int i2 = 0; i2 < d2; ++i2) {
            // Column (i1, i2) of the source space maps to row (i2, i1).
            p.at(i2 * d1 + i1, i1 * d2 + i2) = HPoly(Rational(1));
        }
    }
    return p;
}

PolyMatrix flip_conjugate(const PolyMatrix& a, int d1, int d2) {
    if (a.rows() != d1 * d2 || a.cols() != d1 * d2) {
        throw error("flip conjugation on a matrix of the wrong shape");
    }
    return flip_perm(d1, d2) * a * flip_perm(d2, d1);
}

bool is_flip_symmetric(const PolyMatrix& a, int d) {
    return flip_conjugate(a, d, d) == a;
}

bool is_nilpotent(const PolyMatrix& a) {
    require_square(a, "nilpotency test");
    if (a.rows() == 0) return true;
    PolyMatrix p = a;
    int reach = 1;
    while (!p.is_zero() && reach < a.rows()) {
        p = p * p;
        reach *= 2;
    }
    return p.is_zero();
}

PolyMatrix mat_exp_nilpotent(const PolyMatrix& a) {
    require_square(a, "matrix exponential");
    if (!is_nilpotent(a)) throw error("matrix exponential of a non-nilpotent matrix");
    PolyMatrix acc = PolyMatrix::identity(a.rows());
    PolyMatrix term = acc;
    for (int k = 1; k <= a.rows(); ++k) {
        term = term * a;
        if (term.is_zero()) break;
        term *= inv(Rational(k));
        acc += term;
    }
    return acc;
}

PolyMatrix mat_exp_terminating(const PolyMatrix& a, int max_terms) {
    require_square(a, "matrix exponential");
    PolyMatrix acc = PolyMatrix::identity(a.rows());
    PolyMatrix term = acc;
    for (int k = 1; k <= max_terms; ++k) {
        term = term * a;
        if (term.is_zero()) return acc;
        term *= inv(Rational(k));
        acc += term;
    }
    throw error("matrix exponential did not terminate within " +
                std::to_string(max_terms) + " terms");
}

PolyMatrix mat_log_unipotent(const PolyMatrix& m) {
    require_square(m, "matrix logarithm");
    const PolyMatrix n = m - PolyMatrix::identity(m.rows());
    if (!is_nilpotent(n)) throw error("matrix logarithm of a non-unipotent matrix");
    PolyMatrix acc(m.rows(), m.rows());
    PolyMatrix p = PolyMatrix::identity(m.rows());
    for (int k = 1; k <= m.rows(); ++k) {
        p = p * n;
        if (p.is_zero()) break;
        acc += p * Rational(BigInt(k % 2 == 1 ? 1 : -1), BigInt(k));
    }
    return acc;
}

PolyMatrix inverse_unipotent(const PolyMatrix& m) {
    return mat_exp_nilpotent(-mat_log_unipotent(m));
}

PolyMatrix apply_series(const WSeries& s, const PolyMatrix& m) {
    require_square(m, "series evaluation");
    PolyMatrix acc = PolyMatrix::identity(m.rows()) * s.coeff(0);
    PolyMatrix p = PolyMatrix::identity(m.rows());
    bool vanished = false;
    for (int k = 1; k < s.order(); ++k) {
        p = p * m;
        if (p.is_zero()) {
            vanished = true;
            break;
        }
        const Rational& c = s.coeff(k);
        if (!c.is_zero()) acc += p * c;
    }
    if (!vanished) {
        // Exactness demands the dropped tail to vanish on this argument.
        p = p * m;
        if (!p.is_zero()) {
            throw error("series order " + std::to_string(s.order()) +
                        " is below the matrix argument's nilpotency index");
        }
    }
    return acc;
}

PolyMatrix mat_div_h(const PolyMatrix& m, int k) {
    PolyMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (!m.at(i, j).is_zero()) out.at(i, j) = m.at(i, j).div_h(k);
        }
    }
    return out;
}

PolyMatrix eval_h0(const PolyMatrix& m) {
    PolyMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            out.at(i, j) = HPoly(m.at(i, j).eval_h0());
        }
    }
    return out;
}

bool zero_through_h(const PolyMatrix& m, int max_degree) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            const HPoly& e = m.at(i, j);
            for (int k = 0; k <= max_degree; ++k) {
                if (!e.coeff(k).is_zero()) return false;
            }
        }
    }
    return true;
}

PolyMatrix on_legs_12(const PolyMatrix& op12, int d3) {
    return kron(op12, PolyMatrix::identity(d3));
}

PolyMatrix on_legs_23(int d1, const PolyMatrix& op23) {
    return kron(PolyMatrix::identity(d1), op23);
}

PolyMatrix on_legs_13(const PolyMatrix& op13, int d1, int d2, int d3) {
    if (op13.rows() != d1 * d3 || op13.cols() != d1 * d3) {
        throw error("outer-leg embedding on a matrix of the wrong shape");
    }
    PolyMatrix out(d1 * d2 * d3, d1 * d2 * d3);
    for (int a = 0; a < d1; ++a) {
        for (int c = 0; c < d3; ++c) {
            for (int ap = 0; ap < d1; ++ap) {
                for (int cp = 0; cp < d3; ++cp) {
                    const HPoly& v = op13.at(a * d3 + c, ap * d3 + cp);
                    if (v.is_zero()) continue;
                    for (int b = 0; b < d2; ++b) {
                        out.at((a * d2 + b) * d3 + c, (ap * d2 + b) * d3 + cp) = v;
                    }
                }
            }
        }
    }
    return out;
}

int TensorShape::total() const {
    int t = 1;
    for (int d : dims) t *= d;
    return t;
}

TensorShape concat(TensorShape a, const TensorShape& b) {
    a.dims.insert(a.dims.end(), b.dims.begin(), b.dims.end());
    return a;
}

std::string PolyMatrix::str() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        out += "[ ";
        for (int j = 0; j < cols_; ++j) {
            out += at(i, j).str();
            if (j + 1 < cols_) out += " | ";
        }
        out += " ]\n";
    }
    return out;
}

} // namespace jtk
