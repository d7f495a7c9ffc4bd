#include "jtk/expr.hpp"

#include <sstream>
#include <utility>

#include "jtk/error.hpp"
#include "jtk/irreps.hpp"

namespace jtk {

namespace {

using Kind = ExprNode::Kind;

std::shared_ptr<ExprNode> node(Kind k) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    return n;
}

// Rendering precedence: 1 sum, 2 product/quotient, 3 power, 4 atoms.
// Negative scalars rank 0 (parenthesized anywhere but leading) and
// fractional scalars rank 2 (their textual '/' binds like a quotient).
int print_prec(const ExprNode& e) {
    switch (e.kind) {
        case Kind::Sum: return 1;
        case Kind::Product:
        case Kind::Quotient: return 2;
        case Kind::Power: return 3;
        case Kind::Scalar:
            if (e.scalar.sign() < 0) return 0;
            return e.scalar.is_integer() ? 4 : 2;
        default: return 4;
    }
}

std::string scalar_str(const Rational& c) {
    if (c.is_integer()) {
        std::ostringstream os;
        os << c.num();
        return os.str();
    }
    return c.str();
}

// Splits a leading minus sign off a term, for rendering sums with
// binary '-': returns the positive remainder or null.
ExprPtr strip_leading_minus(const ExprPtr& e) {
    if (e->kind == Kind::Scalar && e->scalar.sign() < 0) return make_scalar(-e->scalar);
    if (e->kind == Kind::Product && !e->kids.empty() &&
        e->kids[0]->kind == Kind::Scalar && e->kids[0]->scalar.sign() < 0) {
        const Rational c = -e->kids[0]->scalar;
        std::vector<ExprPtr> rest(e->kids.begin() + 1, e->kids.end());
        if (c.is_one() && rest.size() == 1) return rest[0];
        if (c.is_one()) return make_product(std::move(rest));
        std::vector<ExprPtr> kids;
        kids.push_back(make_scalar(c));
        kids.insert(kids.end(), rest.begin(), rest.end());
        return make_product(std::move(kids));
    }
    return nullptr;
}

std::string render(const ExprPtr& e, int parent_prec);

std::string render_bare(const ExprPtr& e) {
    switch (e->kind) {
        case Kind::Scalar: return scalar_str(e->scalar);
        case Kind::DeformParam: return "h";
        case Kind::Variable: return "w";
        case Kind::Generator: return gen_name(e->gen);
        case Kind::Sum: {
            std::string out = render(e->kids.at(0), 0);
            for (std::size_t i = 1; i < e->kids.size(); ++i) {
                if (ExprPtr pos = strip_leading_minus(e->kids[i])) {
                    out += " - " + render(pos, 2);
                } else {
                    out += " + " + render(e->kids[i], 2);
                }
            }
            return out;
        }
        case Kind::Product: {
            std::string out = render(e->kids.at(0), 0);
            for (std::size_t i = 1; i < e->kids.size(); ++i)
                out += "*" + render(e->kids[i], 2);
            return out;
        }
        case Kind::Quotient:
            return render(e->kids.at(0), 2) + "/" + render(e->kids.at(1), 3);
        case Kind::Power: {
            std::string exp = std::to_string(e->exponent);
            if (e->exponent < 0) exp = "(" + exp + ")";
            return render(e->kids.at(0), 4) + "^" + exp;
        }
        case Kind::Apply:
            return std::string(elementary_name(e->fn)) + "(" + render(e->kids.at(0), 0) + ")";
        case Kind::Series:
            return "series[" + std::to_string(e->series.order()) + "](" +
                   render(e->kids.at(0), 0) + ")";
    }
    throw error("unknown expression node");
}

std::string render(const ExprPtr& e, int parent_prec) {
    const std::string body = render_bare(e);
    if (print_prec(*e) < parent_prec) return "(" + body + ")";
    return body;
}

bool is_scalar_matrix(const PolyMatrix& m, HPoly& diag) {
    if (!m.is_square()) return false;
    diag = m.at(0, 0);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (i == j ? !(m.at(i, j) == diag) : !m.at(i, j).is_zero()) return false;
        }
    }
    return true;
}

// A denominator must be c*h^k: a single nonzero coefficient.
bool as_h_monomial(const HPoly& p, Rational& c, int& k) {
    if (p.is_zero()) return false;
    int found = -1;
    for (int d = 0; d <= p.degree(); ++d) {
        if (p.coeff(d).is_zero()) continue;
        if (found >= 0) return false;
        found = d;
    }
    c = p.coeff(found);
    k = found;
    return true;
}

} // namespace

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::Jp: return "J+";
        case Gen::Jm: return "J-";
        case Gen::J0: return "J0";
        case Gen::T: return "T";
        case Gen::Tinv: return "Tinv";
        case Gen::H: return "H";
        case Gen::Y: return "Y";
        case Gen::X: return "X";
    }
    throw error("unknown generator");
}

bool is_classical_gen(Gen g) {
    return g == Gen::Jp || g == Gen::Jm || g == Gen::J0;
}

ExprPtr make_scalar(Rational c) {
    auto n = node(Kind::Scalar);
    n->scalar = std::move(c);
    return n;
}

ExprPtr make_deform_param() { return node(Kind::DeformParam); }

ExprPtr make_variable() { return node(Kind::Variable); }

ExprPtr make_generator(Gen g) {
    auto n = node(Kind::Generator);
    n->gen = g;
    return n;
}

ExprPtr make_sum(std::vector<ExprPtr> terms) {
    if (terms.empty()) throw error("a sum needs at least one term");
    if (terms.size() == 1) return terms[0];
    auto n = node(Kind::Sum);
    n->kids = std::move(terms);
    return n;
}

ExprPtr make_product(std::vector<ExprPtr> factors) {
    if (factors.empty()) throw error("a product needs at least one factor");
    if (factors.size() == 1) return factors[0];
    auto n = node(Kind::Product);
    n->kids = std::move(factors);
    return n;
}

ExprPtr make_power(ExprPtr base, int exponent) {
    auto n = node(Kind::Power);
    n->exponent = exponent;
    n->kids = {std::move(base)};
    return n;
}

ExprPtr make_quotient(ExprPtr num, ExprPtr den) {
    auto n = node(Kind::Quotient);
    n->kids = {std::move(num), std::move(den)};
    return n;
}

ExprPtr make_apply(Elementary fn, ExprPtr arg) {
    auto n = node(Kind::Apply);
    n->fn = fn;
    n->kids = {std::move(arg)};
    return n;
}

ExprPtr make_series(WSeries s, ExprPtr arg) {
    auto n = node(Kind::Series);
    n->series = std::move(s);
    n->kids = {std::move(arg)};
    return n;
}

EvalEnv jordanian_env(const JordanianIrrep& rep) {
    EvalEnv env;
    env.gens = {{Gen::T, rep.T},
                {Gen::Tinv, rep.Tinv},
                {Gen::H, rep.H},
                {Gen::Y, rep.Y},
                {Gen::X, rep.X}};
    env.dim = rep.dim();
    env.series_order = rep.dim();
    return env;
}

EvalEnv classical_env(const ClassicalIrrep& cl) {
    EvalEnv env;
    env.gens = {{Gen::Jp, cl.Jp}, {Gen::Jm, cl.Jm}, {Gen::J0, cl.J0}};
    env.dim = cl.dim();
    env.series_order = cl.dim();
    return env;
}

PolyMatrix eval_matrix(const ExprPtr& e, const EvalEnv& env) {
    switch (e->kind) {
        case Kind::Scalar:
            return PolyMatrix::identity(env.dim) * e->scalar;
        case Kind::DeformParam:
            return PolyMatrix::identity(env.dim) * HPoly::h();
        case Kind::Variable:
            throw error("the series variable w has no matrix meaning");
        case Kind::Generator: {
            auto it = env.gens.find(e->gen);
            if (it == env.gens.end())
                throw error(std::string("generator ") + gen_name(e->gen) +
                            " is not available in this representation");
            return it->second;
        }
        case Kind::Sum: {
            PolyMatrix acc = eval_matrix(e->kids.at(0), env);
            for (std::size_t i = 1; i < e->kids.size(); ++i)
                acc += eval_matrix(e->kids[i], env);
            return acc;
        }
        case Kind::Product: {
            PolyMatrix acc = eval_matrix(e->kids.at(0), env);
            for (std::size_t i = 1; i < e->kids.size(); ++i)
                acc = acc * eval_matrix(e->kids[i], env);
            return acc;
        }
        case Kind::Power: {
            if (e->exponent < 0)
                throw error("negative powers of matrix expressions are not defined");
            return pow(eval_matrix(e->kids.at(0), env), e->exponent);
        }
        case Kind::Quotient: {
            const PolyMatrix num = eval_matrix(e->kids.at(0), env);
            const PolyMatrix den = eval_matrix(e->kids.at(1), env);
            HPoly diag;
            Rational c;
            int k = 0;
            if (!is_scalar_matrix(den, diag) || !as_h_monomial(diag, c, k))
                throw error("matrix division requires a (rational)*h^k denominator");
            return mat_div_h(num * inv(c), k);
        }
        case Kind::Apply:
            return apply_series(elementary(e->fn, std::max(env.series_order, 1)),
                                eval_matrix(e->kids.at(0), env));
        case Kind::Series:
            return apply_series(e->series, eval_matrix(e->kids.at(0), env));
    }
    throw error("unknown expression node");
}

WSeries eval_series(const ExprPtr& e, int order) {
    switch (e->kind) {
        case Kind::Scalar:
            return WSeries::constant(e->scalar, order);
        case Kind::DeformParam:
            throw error("the deformation parameter h has no scalar-series meaning");
        case Kind::Variable:
            return WSeries::identity(order);
        case Kind::Generator:
            throw error(std::string("generator ") + gen_name(e->gen) +
                        " has no scalar-series meaning");
        case Kind::Sum: {
            WSeries acc = eval_series(e->kids.at(0), order);
            for (std::size_t i = 1; i < e->kids.size(); ++i)
                acc += eval_series(e->kids[i], order);
            return acc;
        }
        case Kind::Product: {
            WSeries acc = eval_series(e->kids.at(0), order);
            for (std::size_t i = 1; i < e->kids.size(); ++i)
                acc = acc * eval_series(e->kids[i], order);
            return acc;
        }
        case Kind::Power: {
            const WSeries base = eval_series(e->kids.at(0), order);
            if (e->exponent >= 0) return pow(base, e->exponent);
            return series_div(WSeries::constant(rat(1), order), pow(base, -e->exponent));
        }
        case Kind::Quotient:
            return series_div(eval_series(e->kids.at(0), order),
                              eval_series(e->kids.at(1), order));
        case Kind::Apply:
            return compose(elementary(e->fn, order), eval_series(e->kids.at(0), order));
        case Kind::Series:
            return compose(e->series, eval_series(e->kids.at(0), order));
    }
    throw error("unknown expression node");
}

namespace {

ExprPtr jordanian_antipode_image(Gen g) {
    switch (g) {
        case Gen::T: return make_generator(Gen::Tinv);
        case Gen::Tinv: return make_generator(Gen::T);
        case Gen::H:
            return make_product({make_scalar(rat(-1)), make_generator(Gen::T),
                                 make_generator(Gen::H), make_generator(Gen::Tinv)});
        case Gen::Y:
            return make_product({make_scalar(rat(-1)), make_generator(Gen::T),
                                 make_generator(Gen::Y), make_generator(Gen::Tinv)});
        case Gen::X:
            return make_product({make_scalar(rat(-1)), make_generator(Gen::X)});
        default:
            throw error(std::string("classical generator ") + gen_name(g) +
                        " under the deformed antipode");
    }
}

ExprPtr classical_antipode_image(Gen g) {
    if (!is_classical_gen(g))
        throw error(std::string("deformed generator ") + gen_name(g) +
                    " under the classical antipode");
    return make_product({make_scalar(rat(-1)), make_generator(g)});
}

} // namespace

ExprPtr antipode_transform(const ExprPtr& e, AntipodeFlavor flavor) {
    switch (e->kind) {
        case Kind::Scalar:
        case Kind::DeformParam:
        case Kind::Variable:
            return e;
        case Kind::Generator:
            return flavor == AntipodeFlavor::Jordanian ? jordanian_antipode_image(e->gen)
                                                       : classical_antipode_image(e->gen);
        case Kind::Sum: {
            std::vector<ExprPtr> terms;
            for (const auto& kid : e->kids) terms.push_back(antipode_transform(kid, flavor));
            return make_sum(std::move(terms));
        }
        case Kind::Product: {
            std::vector<ExprPtr> factors;
            for (auto it = e->kids.rbegin(); it != e->kids.rend(); ++it)
                factors.push_back(antipode_transform(*it, flavor));
            return make_product(std::move(factors));
        }
        case Kind::Power:
            return make_power(antipode_transform(e->kids.at(0), flavor), e->exponent);
        case Kind::Quotient:
            return make_quotient(antipode_transform(e->kids.at(0), flavor),
                                 antipode_transform(e->kids.at(1), flavor));
        case Kind::Apply:
            return make_apply(e->fn, antipode_transform(e->kids.at(0), flavor));
        case Kind::Series:
            return make_series(e->series, antipode_transform(e->kids.at(0), flavor));
    }
    throw error("unknown expression node");
}

ExprPtr substitute_generators(const ExprPtr& e, const std::map<Gen, ExprPtr>& images) {
    switch (e->kind) {
        case Kind::Scalar:
        case Kind::DeformParam:
        case Kind::Variable:
            return e;
        case Kind::Generator: {
            auto it = images.find(e->gen);
            return it == images.end() ? e : it->second;
        }
        default: {
            auto n = std::make_shared<ExprNode>(*e);
            for (auto& kid : n->kids) kid = substitute_generators(kid, images);
            return n;
        }
    }
}

std::string print_expr(const ExprPtr& e) { return render(e, 0); }

} // namespace jtk
