#include "jtk/parser.hpp"

#include <cctype>
#include <map>
#include <utility>

#include "jtk/error.hpp"
#include "jtk/irreps.hpp"

namespace jtk {

namespace {

const std::map<std::string, Elementary>& function_table() {
    static const std::map<std::string, Elementary> table = {
        {"exp", Elementary::Exp},         {"log1p", Elementary::Log1p},
        {"sinh", Elementary::Sinh},       {"cosh", Elementary::Cosh},
        {"tanh", Elementary::Tanh},       {"arctanh", Elementary::Arctanh},
        {"sqrt1p", Elementary::Sqrt1p},
    };
    return table;
}

const std::map<std::string, Gen>& generator_table() {
    static const std::map<std::string, Gen> table = {
        {"J0", Gen::J0}, {"T", Gen::T}, {"Tinv", Gen::Tinv},
        {"H", Gen::H},   {"Y", Gen::Y}, {"X", Gen::X},
    };
    return table;
}

ExprPtr negated(const ExprPtr& e) {
    if (e->kind == ExprNode::Kind::Scalar) return make_scalar(-e->scalar);
    if (e->kind == ExprNode::Kind::Product &&
        e->kids[0]->kind == ExprNode::Kind::Scalar) {
        std::vector<ExprPtr> kids = e->kids;
        kids[0] = make_scalar(-kids[0]->scalar);
        return make_product(std::move(kids));
    }
    return make_product({make_scalar(rat(-1)), e});
}

class Parser {
  public:
    Parser(const std::string& src, Dialect dialect) : src_(src), dialect_(dialect) {}

    ExprPtr run() {
        ExprPtr e = parse_sum();
        skip_ws();
        if (!at_end()) fail(pos_, "unexpected trailing input");
        return e;
    }

  private:
    const std::string& src_;
    Dialect dialect_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
        throw error("parse error at position " + std::to_string(at + 1) + ": " + msg);
    }

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool eat(char c) {
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPtr parse_sum() {
        std::vector<ExprPtr> terms;
        terms.push_back(parse_term());
        for (;;) {
            skip_ws();
            if (eat('+')) {
                terms.push_back(parse_term());
            } else if (eat('-')) {
                terms.push_back(negated(parse_term()));
            } else {
                break;
            }
        }
        return make_sum(std::move(terms));
    }

    ExprPtr parse_term() {
        ExprPtr cur = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                ExprPtr rhs = parse_factor();
                if (cur->kind == ExprNode::Kind::Product) {
                    std::vector<ExprPtr> kids = cur->kids;
                    kids.push_back(std::move(rhs));
                    cur = make_product(std::move(kids));
                } else {
                    cur = make_product({cur, std::move(rhs)});
                }
            } else if (eat('/')) {
                const std::size_t den_at = pos_;
                ExprPtr den = parse_factor();
                if (cur->kind == ExprNode::Kind::Scalar &&
                    den->kind == ExprNode::Kind::Scalar) {
                    if (den->scalar.is_zero()) fail(den_at, "division by zero");
                    cur = make_scalar(cur->scalar / den->scalar);
                } else {
                    cur = make_quotient(cur, std::move(den));
                }
            } else {
                break;
            }
        }
        return cur;
    }

    ExprPtr parse_factor() {
        skip_ws();
        if (eat('-')) return negated(parse_factor());
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        skip_ws();
        if (!eat('^')) return base;
        return make_power(std::move(base), parse_exponent());
    }

    int parse_exponent() {
        skip_ws();
        if (eat('(')) {
            skip_ws();
            const int k = parse_signed_int();
            skip_ws();
            if (!eat(')')) fail(pos_, "expected ')' after the exponent");
            return k;
        }
        return parse_signed_int();
    }

    int parse_signed_int() {
        const bool neg = eat('-');
        const std::size_t at = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail(at, "expected an integer exponent");
        long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > 1'000'000) fail(at, "exponent out of range");
            ++pos_;
        }
        return static_cast<int>(neg ? -value : value);
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (at_end()) fail(pos_, "expected a value");
        const char c = peek();
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_sum();
            skip_ws();
            if (!eat(')')) fail(pos_, "expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_symbol();
        fail(pos_, std::string("expected a value, found '") + c + "'");
    }

    ExprPtr parse_number() {
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits.push_back(peek());
            ++pos_;
        }
        return make_scalar(Rational(BigInt(digits)));
    }

    ExprPtr parse_symbol() {
        const std::size_t at = pos_;
        std::string name;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) {
            name.push_back(peek());
            ++pos_;
        }

        // A lone J binds to an immediately following + or - sign.
        if (name == "J") {
            if (eat('+')) return generator(Gen::Jp, at);
            if (eat('-')) return generator(Gen::Jm, at);
            fail(at, "bare generator J (use J+, J-, or J0)");
        }

        if (auto fn = function_table().find(name); fn != function_table().end()) {
            skip_ws();
            if (!eat('(')) fail(pos_, "expected '(' after function name " + name);
            ExprPtr arg = parse_sum();
            skip_ws();
            if (!eat(')')) fail(pos_, "expected ')'");
            return make_apply(fn->second, std::move(arg));
        }

        if (name == "w") {
            if (dialect_ == Dialect::MatrixExpr)
                fail(at, "the variable w is not allowed in matrix expressions");
            return make_variable();
        }
        if (name == "h") {
            if (dialect_ == Dialect::ScalarSeries)
                fail(at, "h is not allowed in scalar series expressions");
            return make_deform_param();
        }
        if (auto g = generator_table().find(name); g != generator_table().end())
            return generator(g->second, at);

        fail(at, "unknown symbol '" + name + "'");
    }

    ExprPtr generator(Gen g, std::size_t at) const {
        if (dialect_ == Dialect::ScalarSeries)
            fail(at, std::string("generator ") + gen_name(g) +
                         " is not allowed in scalar series expressions");
        return make_generator(g);
    }
};

} // namespace

ParsedExpr parse_expression(const std::string& src, Dialect dialect) {
    Parser parser(src, dialect);
    return ParsedExpr{parser.run(), src, dialect};
}

PolyMatrix eval_expression(const ParsedExpr& e, const JordanianIrrep& rep) {
    if (e.dialect != Dialect::MatrixExpr)
        throw error("expression was parsed in the scalar dialect");
    return eval_matrix(e.node, jordanian_env(rep));
}

PolyMatrix eval_expression(const ParsedExpr& e, const ClassicalIrrep& cl) {
    if (e.dialect != Dialect::MatrixExpr)
        throw error("expression was parsed in the scalar dialect");
    return eval_matrix(e.node, classical_env(cl));
}

WSeries eval_expression_series(const ParsedExpr& e, int order) {
    if (e.dialect != Dialect::ScalarSeries)
        throw error("expression was parsed in the matrix dialect");
    return eval_series(e.node, order);
}

} // namespace jtk
