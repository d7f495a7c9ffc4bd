#pragma once
// pmatrix.hpp -- dense matrices over exact h-polynomials, plus the
// structural operations the whole engine leans on: Kronecker products, flip
// permutations, exact exponentials/logarithms of nilpotent and unipotent
// matrices, evaluation of truncated series at nilpotent arguments, exact
// division by powers of h, and the h -> 0 limit.
//
// Tensor factors are ordered so that kron(A, B) acts on V_A (x) V_B with the
// row index r = i_A * dim_B + i_B (row-major leg layout).

#include <string>
#include <vector>

#include "jtk/hpoly.hpp"
#include "jtk/wseries.hpp"

namespace jtk {

class PolyMatrix {
  public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int rows, int cols);   // zero matrix

    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    HPoly& at(int i, int j);
    const HPoly& at(int i, int j) const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    // Largest entry degree, or -1 for the zero matrix.
    int max_h_degree() const;

    PolyMatrix operator-() const;
    PolyMatrix& operator+=(const PolyMatrix& o);
    PolyMatrix& operator-=(const PolyMatrix& o);
    PolyMatrix& operator*=(const HPoly& s);
    PolyMatrix& operator*=(const Rational& s);

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    // Multi-line diagnostic rendering.
    std::string str() const;

  private:
    void check_index(int i, int j) const;

    int rows_;
    int cols_;
    std::vector<HPoly> e_;   // row-major
};

PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b);
PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b);
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(PolyMatrix a, const HPoly& s);
PolyMatrix operator*(const HPoly& s, PolyMatrix a);
PolyMatrix operator*(PolyMatrix a, const Rational& s);
PolyMatrix operator*(const Rational& s, PolyMatrix a);

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix pow(const PolyMatrix& base, int exponent);   // exponent >= 0, square base

// Kronecker product, row-major leg order.
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);

// The permutation matrix P : V_1 (x) V_2 -> V_2 (x) V_1, P(x (x) y) = y (x) x,
// with dim V_1 = d1 and dim V_2 = d2.
PolyMatrix flip_perm(int d1, int d2);

// Conjugation by the flip: the image of an operator on V_1 (x) V_2 as an
// operator on V_2 (x) V_1.  Sends a (x) b to b (x) a multiplicatively.
PolyMatrix flip_conjugate(const PolyMatrix& a, int d1, int d2);

// Is a two-leg operator invariant under exchanging its (equal-dimension)
// legs?
bool is_flip_symmetric(const PolyMatrix& a, int d);

// True iff some power of a (up to the dimension) vanishes; detected by
// repeated squaring.
bool is_nilpotent(const PolyMatrix& a);

// exp of a nilpotent matrix: exact terminating sum.  Throws if the argument
// is not nilpotent.
PolyMatrix mat_exp_nilpotent(const PolyMatrix& a);

// exp by term accumulation until a term vanishes exactly, without a prior
// nilpotency scan; throws if no term vanishes within max_terms.
PolyMatrix mat_exp_terminating(const PolyMatrix& a, int max_terms);

// log of a unipotent matrix (identity plus nilpotent): exact terminating
// Mercator sum.  Throws if m - 1 is not nilpotent.
PolyMatrix mat_log_unipotent(const PolyMatrix& m);

// Inverse of a unipotent matrix, via exp(-log m).
PolyMatrix inverse_unipotent(const PolyMatrix& m);

// Evaluate a truncated series at a nilpotent matrix argument.  Exact only
// when the truncation order reaches the nilpotency index; anything less
// throws rather than silently dropping terms.
PolyMatrix apply_series(const WSeries& s, const PolyMatrix& m);

// Entrywise exact division by h^k.
PolyMatrix mat_div_h(const PolyMatrix& m, int k);

// Entrywise value at h = 0 (kept as a polynomial matrix of constants).
PolyMatrix eval_h0(const PolyMatrix& m);

// True when every entry's coefficients of h^0..h^max_degree vanish.
bool zero_through_h(const PolyMatrix& m, int max_degree);

// Embeddings of one- and two-leg operators into a three-leg space.
PolyMatrix on_legs_12(const PolyMatrix& op12, int d3);
PolyMatrix on_legs_23(int d1, const PolyMatrix& op23);
PolyMatrix on_legs_13(const PolyMatrix& op13, int d1, int d2, int d3);

// Dimension bookkeeping for tensor spaces.
struct TensorShape {
    std::vector<int> dims;
    int total() const;
};
TensorShape concat(TensorShape a, const TensorShape& b);

} // namespace jtk
