#include "jtk/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jtk/equiv.hpp"
#include "jtk/error.hpp"
#include "jtk/expr.hpp"
#include "jtk/hopf.hpp"
#include "jtk/irreps.hpp"
#include "jtk/maps.hpp"
#include "jtk/parser.hpp"
#include "jtk/report.hpp"
#include "jtk/suites.hpp"

namespace jtk {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

constexpr int kMinOrder = 1;
constexpr int kMaxOrder = 64;

// --order default: the JTK_DEFAULT_ORDER environment variable, else 16.
int default_order() {
    const char* env = std::getenv("JTK_DEFAULT_ORDER");
    if (env == nullptr || *env == '\0') return 16;
    const std::string text(env);
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || value < kMinOrder || value > kMaxOrder)
        throw error("JTK_DEFAULT_ORDER must be an integer between " +
                    std::to_string(kMinOrder) + " and " + std::to_string(kMaxOrder) +
                    ", got '" + text + "'");
    return value;
}

std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) --e;
    return s.substr(b, e - b);
}

std::string file_stem(const std::string& path) {
    const std::size_t slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    const std::size_t dot = base.find_last_of('.');
    if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
    return base.empty() ? "custom" : base;
}

MapSpec map_from_phi_text(std::string name, const std::string& phi_text) {
    const ParsedExpr pe = parse_expression(phi_text, Dialect::ScalarSeries);
    return custom_map(std::move(name),
                      [pe](int order) { return eval_expression_series(pe, order); });
}

// --map takes a builtin name or a path to a file holding a scalar phi
// expression; --phi takes the expression inline.
MapSpec resolve_map(const std::string& map_arg, const std::string& phi_arg) {
    if (!phi_arg.empty() && !map_arg.empty())
        throw error("--map and --phi are mutually exclusive");
    if (!phi_arg.empty()) return map_from_phi_text("custom", phi_arg);
    if (map_arg.empty()) return builtin_map("minimal");
    if (is_builtin_map(map_arg)) return builtin_map(map_arg);
    std::ifstream f(map_arg);
    if (!f)
        throw error("map '" + map_arg +
                    "' is neither a builtin map nor a readable file; builtins are " +
                    [] {
                        std::string all;
                        for (const auto& n : builtin_map_names()) {
                            if (!all.empty()) all += ", ";
                            all += n;
                        }
                        return all;
                    }());
    std::string text((std::istreambuf_iterator<char>(f)),
                     std::istreambuf_iterator<char>());
    text = trimmed(text);
    if (text.empty()) throw error("map file '" + map_arg + "' is empty");
    return map_from_phi_text(file_stem(map_arg), text);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw error("cannot open output file '" + out_path + "'");
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string series_line(const char* name, const WSeries& s) {
    return std::string(name) + " = " + s.str() + "\n";
}

std::string matrix_block(const char* name, const PolyMatrix& m) {
    return std::string(name) + " =\n" + m.str() + "\n";
}

// Per-subcommand option storage.
struct CommonOpts {
    std::string map_arg, phi_arg;
    std::string format = "text";
    std::string out_path;
    int order = 0;   // 0: fall back to default_order()
};

void add_common(CLI::App* sub, CommonOpts& o, bool with_map = true) {
    if (with_map) {
        sub->add_option("--map", o.map_arg,
                        "builtin map name or path to a file with a phi expression");
        sub->add_option("--phi", o.phi_arg, "inline phi expression (scalar dialect)");
    }
    sub->add_option("--order", o.order, "series truncation order")
        ->check(CLI::Range(kMinOrder, kMaxOrder));
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out_path, "write the output to this file");
}

int pick_order(const CommonOpts& o) { return o.order > 0 ? o.order : default_order(); }

// Does the expression mention classical (J+, J-, J0) or deformed
// generators?  Decides which representation an eval runs against.
void scan_generators(const ExprPtr& e, bool& classical, bool& deformed) {
    if (!e) return;
    if (e->kind == ExprNode::Kind::Generator) {
        if (is_classical_gen(e->gen))
            classical = true;
        else
            deformed = true;
    }
    for (const auto& k : e->kids) scan_generators(k, classical, deformed);
}

int cmd_solve_map(const CommonOpts& o, std::ostream& out) {
    const MapSpec map = resolve_map(o.map_arg, o.phi_arg);
    const int order = pick_order(o);
    const ForwardSolution fwd = solve_forward(map, order);
    const InverseSolution inv = solve_inverse(map, order);
    const SevenEquationReport seven = check_seven_equations(map, fwd);

    std::string payload;
    if (o.format == "json") {
        json j{{"map", map.name},
               {"order", order},
               {"forward",
                {{"phi", series_json(fwd.phi)},
                 {"F2", series_json(fwd.F2)},
                 {"F3", series_json(fwd.F3)},
                 {"Ubar", series_json(fwd.Ubar)},
                 {"Vbar", series_json(fwd.Vbar)},
                 {"Wbar", series_json(fwd.Wbar)}}},
               {"inverse",
                {{"psi", series_json(inv.psi)},
                 {"g1", series_json(inv.g1)},
                 {"g1inv", series_json(inv.g1inv)},
                 {"G2", series_json(inv.G2)},
                 {"G3", series_json(inv.G3)},
                 {"Abar", series_json(inv.Abar)},
                 {"Bbar", series_json(inv.Bbar)},
                 {"Cbar", series_json(inv.Cbar)}}},
               {"determining_equations", seven.all_zero() ? "pass" : "fail"}};
        payload = dump(j);
    } else {
        std::ostringstream os;
        os << "map '" << map.name << "' solved to order " << order << "\n";
        os << series_line("phi ", fwd.phi);
        os << series_line("F2  ", fwd.F2);
        os << series_line("F3  ", fwd.F3);
        os << series_line("Ubar", fwd.Ubar);
        os << series_line("Vbar", fwd.Vbar);
        os << series_line("Wbar", fwd.Wbar);
        os << series_line("psi ", inv.psi);
        os << series_line("g1  ", inv.g1);
        os << series_line("g1in", inv.g1inv);
        os << series_line("G2  ", inv.G2);
        os << series_line("G3  ", inv.G3);
        os << series_line("Abar", inv.Abar);
        os << series_line("Bbar", inv.Bbar);
        os << series_line("Cbar", inv.Cbar);
        os << "determining equations: " << (seven.all_zero() ? "pass" : "fail") << "\n";
        payload = os.str();
    }
    emit(payload, o.out_path, out);
    return seven.all_zero() ? kOk : kCheckFailed;
}

int cmd_build_irrep(const CommonOpts& o, int two_j, std::ostream& out) {
    const MapSpec map = resolve_map(o.map_arg, o.phi_arg);
    const JordanianIrrep rep = jordanian_irrep(map, two_j);
    std::string payload;
    if (o.format == "json") {
        json j{{"map", map.name},   {"two_j", two_j},
               {"T", matrix_json(rep.T)}, {"Tinv", matrix_json(rep.Tinv)},
               {"H", matrix_json(rep.H)}, {"Y", matrix_json(rep.Y)},
               {"X", matrix_json(rep.X)}};
        payload = dump(j);
    } else {
        std::ostringstream os;
        os << "deformed irrep for map '" << map.name << "', two_j = " << two_j << "\n";
        os << matrix_block("T", rep.T) << matrix_block("Tinv", rep.Tinv)
           << matrix_block("H", rep.H) << matrix_block("Y", rep.Y)
           << matrix_block("X", rep.X);
        payload = os.str();
    }
    emit(payload, o.out_path, out);
    return kOk;
}

int cmd_rmatrix(const CommonOpts& o, int two_j1, int two_j2, std::ostream& out) {
    const PolyMatrix R = rmatrix(two_j1, two_j2);
    std::string payload;
    if (o.format == "json") {
        json j{{"two_j1", two_j1}, {"two_j2", two_j2}, {"R", matrix_json(R)}};
        payload = dump(j);
    } else {
        std::ostringstream os;
        os << "R-matrix on two_j = (" << two_j1 << ", " << two_j2 << ")\n"
           << matrix_block("R", R);
        payload = os.str();
    }
    emit(payload, o.out_path, out);
    return kOk;
}

int cmd_twist(const CommonOpts& o, int two_j1, int two_j2, std::ostream& out) {
    const MapSpec map = resolve_map(o.map_arg, o.phi_arg);
    const TwistSet ts = twist_general(map, two_j1, two_j2);
    std::string payload;
    if (o.format == "json") {
        json j{{"map", map.name},        {"two_j1", two_j1},
               {"two_j2", two_j2},       {"V", matrix_json(ts.V)},
               {"F", matrix_json(ts.F)}, {"FS", matrix_json(ts.FS)},
               {"R", matrix_json(ts.R)}};
        payload = dump(j);
    } else {
        std::ostringstream os;
        os << "twist for map '" << map.name << "' on two_j = (" << two_j1 << ", "
           << two_j2 << ")\n";
        os << matrix_block("V", ts.V) << matrix_block("F", ts.F)
           << matrix_block("FS", ts.FS) << matrix_block("R", ts.R);
        payload = os.str();
    }
    emit(payload, o.out_path, out);
    return kOk;
}

int cmd_similarity(const CommonOpts& o, const std::string& from_arg,
                   const std::string& to_arg, std::ostream& out) {
    const MapSpec from = resolve_map(from_arg, "");
    const MapSpec to = resolve_map(to_arg, "");
    const int order = pick_order(o);
    const SimilaritySeries lam = similarity(from, to, order);
    const MuSeries mu = mu_from_lambda(lam);
    std::string payload;
    if (o.format == "json") {
        json lam_j = json::array();
        for (const auto& c : lam.c) lam_j.push_back(c.str());
        json mu_j = json::array();
        for (const auto& d : mu.d) mu_j.push_back(d.str());
        json j{{"from", from.name},
               {"to", to.name},
               {"order", lam.order},
               {"lambda", std::move(lam_j)},
               {"mu", std::move(mu_j)}};
        payload = dump(j);
    } else {
        std::ostringstream os;
        os << "connecting series from '" << from.name << "' to '" << to.name
           << "', order " << lam.order << "\n";
        for (std::size_t k = 0; k < lam.c.size(); ++k)
            os << "  c" << (k + 1) << " = " << lam.c[k].str() << "\n";
        os << "companion series, order " << mu.order << "\n";
        for (std::size_t k = 0; k < mu.d.size(); ++k)
            os << "  d" << (k + 1) << " = " << mu.d[k].str() << "\n";
        payload = os.str();
    }
    emit(payload, o.out_path, out);
    return kOk;
}

int cmd_eval(const CommonOpts& o, const std::string& expr, const std::string& dialect,
             int two_j, std::ostream& out) {
    std::string payload;
    if (dialect == "scalar") {
        const ParsedExpr pe = parse_expression(expr, Dialect::ScalarSeries);
        const WSeries s = eval_expression_series(pe, pick_order(o));
        if (o.format == "json") {
            json j{{"dialect", "scalar"}, {"expression", expr}, {"value", series_json(s)}};
            payload = dump(j);
        } else {
            payload = expr + " = " + s.str() + "\n";
        }
    } else {
        const ParsedExpr pe = parse_expression(expr, Dialect::MatrixExpr);
        bool classical = false, deformed = false;
        scan_generators(pe.node, classical, deformed);
        PolyMatrix value;
        std::string rep_kind;
        if (classical && !deformed) {
            value = eval_expression(pe, classical_irrep(two_j));
            rep_kind = "classical";
        } else {
            const MapSpec map = resolve_map(o.map_arg, o.phi_arg);
            value = eval_expression(pe, jordanian_irrep(map, two_j));
            rep_kind = "map '" + map.name + "'";
        }
        if (o.format == "json") {
            json j{{"dialect", "matrix"},
                   {"expression", expr},
                   {"two_j", two_j},
                   {"value", matrix_json(value)}};
            payload = dump(j);
        } else {
            std::ostringstream os;
            os << expr << " on " << rep_kind << ", two_j = " << two_j << ":\n"
               << value.str() << "\n";
            payload = os.str();
        }
    }
    emit(payload, o.out_path, out);
    return kOk;
}

int cmd_verify(const CommonOpts& o, const std::string& suite, std::vector<int> spins,
               std::ostream& out) {
    if (!is_suite_name(suite)) {
        std::string all = "all";
        for (const auto& n : suite_names()) all += ", " + n;
        throw error("unknown suite '" + suite + "'; available: " + all);
    }
    const MapSpec map = resolve_map(o.map_arg, o.phi_arg);
    SuiteOptions opts = default_suite_options(map);
    if (o.order > 0) opts.order = o.order;
    if (!spins.empty()) {
        for (int s : spins)
            if (s < 0) throw error("--two-j values must be non-negative");
        std::sort(spins.begin(), spins.end());
        spins.erase(std::unique(spins.begin(), spins.end()), spins.end());
        opts.singles = spins;
        opts.pairs.clear();
        opts.triples.clear();
        for (std::size_t i = 0; i < spins.size(); ++i)
            for (std::size_t j = i; j < spins.size(); ++j)
                opts.pairs.push_back({spins[i], spins[j]});
        for (std::size_t i = 0; i < spins.size(); ++i)
            for (std::size_t j = i; j < spins.size(); ++j)
                for (std::size_t k = j; k < spins.size(); ++k)
                    opts.triples.push_back({spins[i], spins[j], spins[k]});
    }
    const CheckReport report = run_suite(suite, opts);
    const std::string payload =
        o.format == "json" ? dump(report_json(report)) : report_text(report);
    emit(payload, o.out_path, out);
    return report.verdict() ? kOk : kCheckFailed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engine for deformed symmetry maps, representations, "
                 "twists, and their verification"};
    app.name("jtk");
    app.require_subcommand(1);

    CommonOpts solve_o;
    CLI::App* solve = app.add_subcommand(
        "solve-map", "solve the determining equations for a map in both directions");
    add_common(solve, solve_o);

    CommonOpts irrep_o;
    int irrep_two_j = 0;
    CLI::App* irrep =
        app.add_subcommand("build-irrep", "build the deformed spin-j matrices");
    add_common(irrep, irrep_o);
    irrep->add_option("--two-j", irrep_two_j, "twice the spin")
        ->required()
        ->check(CLI::Range(0, 64));

    CommonOpts rmat_o;
    int rmat_j1 = 0, rmat_j2 = 0;
    CLI::App* rmat = app.add_subcommand("rmatrix", "triangular R-matrix on a spin pair");
    add_common(rmat, rmat_o, /*with_map=*/false);
    rmat->add_option("--two-j1", rmat_j1, "twice the first spin")
        ->required()
        ->check(CLI::Range(0, 16));
    rmat->add_option("--two-j2", rmat_j2, "twice the second spin")
        ->required()
        ->check(CLI::Range(0, 16));

    CommonOpts twist_o;
    int twist_j1 = 0, twist_j2 = 0;
    CLI::App* twist =
        app.add_subcommand("twist", "twist operator for a map on a spin pair");
    add_common(twist, twist_o);
    twist->add_option("--two-j1", twist_j1, "twice the first spin")
        ->required()
        ->check(CLI::Range(0, 16));
    twist->add_option("--two-j2", twist_j2, "twice the second spin")
        ->required()
        ->check(CLI::Range(0, 16));

    CommonOpts sim_o;
    std::string sim_from, sim_to;
    CLI::App* sim = app.add_subcommand(
        "similarity", "connecting and companion series between two maps");
    add_common(sim, sim_o, /*with_map=*/false);
    sim->add_option("--from", sim_from, "source map (builtin name or phi file)")
        ->required();
    sim->add_option("--to", sim_to, "target map (builtin name or phi file)")
        ->required();

    CommonOpts eval_o;
    std::string eval_expr, eval_dialect = "matrix";
    int eval_two_j = 1;
    CLI::App* eval =
        app.add_subcommand("eval", "parse and evaluate an expression exactly");
    add_common(eval, eval_o);
    eval->add_option("expression", eval_expr, "the expression to evaluate")->required();
    eval->add_option("--dialect", eval_dialect, "expression dialect")
        ->check(CLI::IsMember({"scalar", "matrix"}));
    eval->add_option("--two-j", eval_two_j, "twice the spin for matrix evaluation")
        ->check(CLI::Range(0, 64));

    CommonOpts verify_o;
    std::string verify_suite = "all";
    std::vector<int> verify_spins;
    CLI::App* verify =
        app.add_subcommand("verify", "run a verification suite and report results");
    add_common(verify, verify_o);
    verify->add_option("--suite", verify_suite, "suite name or 'all'");
    verify->add_option("--two-j", verify_spins,
                       "twice-spin values to exercise (repeatable; pairs and "
                       "triples are formed from the set)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (app.got_subcommand(solve)) return cmd_solve_map(solve_o, out);
        if (app.got_subcommand(irrep)) return cmd_build_irrep(irrep_o, irrep_two_j, out);
        if (app.got_subcommand(rmat)) return cmd_rmatrix(rmat_o, rmat_j1, rmat_j2, out);
        if (app.got_subcommand(twist)) return cmd_twist(twist_o, twist_j1, twist_j2, out);
        if (app.got_subcommand(sim)) return cmd_similarity(sim_o, sim_from, sim_to, out);
        if (app.got_subcommand(eval))
            return cmd_eval(eval_o, eval_expr, eval_dialect, eval_two_j, out);
        if (app.got_subcommand(verify))
            return cmd_verify(verify_o, verify_suite, verify_spins, out);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    err << "error: no subcommand selected\n";
    return kUsage;
}

} // namespace jtk
