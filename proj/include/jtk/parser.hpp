#pragma once
// parser.hpp -- recursive-descent parser for the two expression
// dialects: scalar series in w (map definitions) and matrix
// expressions over the generators and h (evaluation and checks).

#include <string>

#include "jtk/expr.hpp"

namespace jtk {

enum class Dialect { ScalarSeries, MatrixExpr };

struct ParsedExpr {
    ExprPtr node;
    std::string source;
    Dialect dialect = Dialect::MatrixExpr;
};

// Grammar: sums of terms; terms chain '*' and '/' left-to-right;
// unary '-'; 'atom^int' powers with optionally parenthesized signed
// exponents; parentheses; function application by name.  Atoms are
// integers, w (scalar dialect only), h and generators (matrix dialect
// only).  Errors carry 1-based character positions.
ParsedExpr parse_expression(const std::string& src, Dialect dialect);

PolyMatrix eval_expression(const ParsedExpr& e, const JordanianIrrep& rep);
PolyMatrix eval_expression(const ParsedExpr& e, const ClassicalIrrep& cl);
WSeries eval_expression_series(const ParsedExpr& e, int order);

} // namespace jtk
