#pragma once
// expr.hpp -- expression trees over the deformed and classical
// generators, with exact evaluation to matrices or scalar series and
// the homomorphic (substitution) and anti-homomorphic (antipode)
// transforms used by the coalgebra checks.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "jtk/hpoly.hpp"
#include "jtk/pmatrix.hpp"
#include "jtk/rational.hpp"
#include "jtk/wseries.hpp"

namespace jtk {

struct ClassicalIrrep;
struct JordanianIrrep;

enum class Gen { Jp, Jm, J0, T, Tinv, H, Y, X };

const char* gen_name(Gen g);
bool is_classical_gen(Gen g);

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

// One node of an expression tree.  Products and quotients keep their
// operand order; nothing here commutes.
struct ExprNode {
    enum class Kind {
        Scalar,        // exact rational constant
        DeformParam,   // the deformation parameter h
        Variable,      // the series variable w
        Generator,     // one of Gen
        Sum,           // kids: the terms
        Product,       // kids: the ordered factors
        Power,         // kids: [base]; integer exponent
        Quotient,      // kids: [numerator, denominator]
        Apply,         // kids: [argument]; named elementary function
        Series,        // kids: [argument]; explicit truncated series
    };

    Kind kind = Kind::Scalar;
    Rational scalar;
    Gen gen = Gen::T;
    Elementary fn = Elementary::Exp;
    int exponent = 0;
    WSeries series = WSeries(1);
    std::vector<ExprPtr> kids;
};

ExprPtr make_scalar(Rational c);
ExprPtr make_deform_param();
ExprPtr make_variable();
ExprPtr make_generator(Gen g);
ExprPtr make_sum(std::vector<ExprPtr> terms);
ExprPtr make_product(std::vector<ExprPtr> factors);
ExprPtr make_power(ExprPtr base, int exponent);
ExprPtr make_quotient(ExprPtr num, ExprPtr den);
ExprPtr make_apply(Elementary fn, ExprPtr arg);
ExprPtr make_series(WSeries s, ExprPtr arg);

// Generator matrices an expression may be evaluated against, plus the
// truncation order used when an elementary function meets a nilpotent
// matrix argument.
struct EvalEnv {
    std::map<Gen, PolyMatrix> gens;
    int dim = 0;
    int series_order = 0;
};

EvalEnv jordanian_env(const JordanianIrrep& rep);
EvalEnv classical_env(const ClassicalIrrep& cl);

// Exact matrix value.  Quotients require the denominator to evaluate
// to (rational)*h^k times the identity; elementary functions and
// series nodes require nilpotent-compatible arguments.
PolyMatrix eval_matrix(const ExprPtr& e, const EvalEnv& env);

// Exact scalar series in w at the given order.  Generators and h have
// no scalar meaning and are rejected.
WSeries eval_series(const ExprPtr& e, int order);

// Which antipode's generator images to substitute.
enum class AntipodeFlavor { Jordanian, Classical };

// Anti-homomorphic transform: reverse every product, replace each
// generator by its antipode image, keep scalars fixed, and push the
// transform through function applications argument-wise.
ExprPtr antipode_transform(const ExprPtr& e, AntipodeFlavor flavor);

// Homomorphic substitution of generator images (products keep order).
// Generators absent from the image table are left untouched.
ExprPtr substitute_generators(const ExprPtr& e, const std::map<Gen, ExprPtr>& images);

// Canonical rendering; everything except Series nodes re-parses to an
// equal tree.
std::string print_expr(const ExprPtr& e);

} // namespace jtk
