#include "jtk/suites.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "jtk/equiv.hpp"
#include "jtk/error.hpp"
#include "jtk/hopf.hpp"
#include "jtk/irreps.hpp"

namespace jtk {

namespace {

std::string tag(int two_j) { return "[two_j=" + std::to_string(two_j) + "]"; }

std::string tag(int a, int b) {
    return "[two_j=(" + std::to_string(a) + "," + std::to_string(b) + ")]";
}

std::string tag(int a, int b, int c) {
    return "[two_j=(" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ")]";
}

void add_bool_check(CheckReport& out, std::string id, std::string anchor, bool pass,
                    std::string detail) {
    CheckResult c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.pass = pass;
    c.detail = std::move(detail);
    out.checks.push_back(std::move(c));
}

void add_matrix_check(CheckReport& out, std::string id, std::string anchor,
                      PolyMatrix residual) {
    CheckResult c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.pass = residual.is_zero();
    c.detail = c.pass ? "residual is exactly zero" : "nonzero residual";
    c.residual = std::move(residual);
    out.checks.push_back(std::move(c));
}

void add_series_check(CheckReport& out, std::string id, std::string anchor,
                      const WSeries& residual) {
    CheckResult c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.pass = residual.is_zero();
    c.detail = c.pass ? "series residual is exactly zero through degree " +
                            std::to_string(residual.order() - 1)
                      : "first nonzero coefficient at degree " +
                            std::to_string(residual.valuation());
    out.checks.push_back(std::move(c));
}

void add_residual_checks(CheckReport& out, const std::string& base,
                         const std::string& anchor, const ResidualReport& rr) {
    for (const auto& r : rr.residuals)
        add_matrix_check(out, base + " : " + r.name, anchor, r.value);
}

bool lambda_is_zero(const SimilaritySeries& lam) {
    return std::all_of(lam.c.begin(), lam.c.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

CheckReport suite_algebra(const SuiteOptions& o) {
    CheckReport rep;
    rep.suite = "algebra";
    rep.map = o.map.name;
    rep.spins = o.singles;

    const int eq_order = std::max(12, o.order);
    const ForwardSolution fwd = solve_forward(o.map, eq_order);
    const SevenEquationReport seven = check_seven_equations(o.map, fwd);
    for (std::size_t i = 0; i < seven.residuals.size(); ++i)
        add_series_check(rep, "algebra.map-equations : equation " + std::to_string(i + 1),
                         "the solved auxiliary series satisfy all seven defining "
                         "equations of the generator substitution",
                         seven.residuals[i]);

    if (o.map.name == "diag" || o.map.name == "contraction" || o.map.name == "minimal") {
        const ForwardSolution ref = closed_form_reference(o.map.name, eq_order);
        const auto cmp = [&](const char* nm, const WSeries& got, const WSeries& want) {
            add_bool_check(rep, std::string("algebra.closed-form : ") + nm,
                           "the solver reproduces the tabulated closed forms",
                           agrees_to(got, want, eq_order),
                           agrees_to(got, want, eq_order)
                               ? "matches the independent expansion"
                               : "diverges from the independent expansion");
        };
        cmp("F2", fwd.F2, ref.F2);
        cmp("F3", fwd.F3, ref.F3);
        cmp("Ubar", fwd.Ubar, ref.Ubar);
        cmp("Vbar", fwd.Vbar, ref.Vbar);
        cmp("Wbar", fwd.Wbar, ref.Wbar);
    }

    const InverseSolution inv = solve_inverse(o.map, eq_order);
    const WSeries one = WSeries::constant(rat(1), eq_order);
    add_series_check(rep, "algebra.duality : F2(psi) * G2",
                     "forward and inverse auxiliary series are reciprocal",
                     compose(fwd.F2, inv.psi) * inv.G2 - one);
    add_series_check(rep, "algebra.duality : F3(psi) * G3",
                     "forward and inverse auxiliary series are reciprocal",
                     compose(fwd.F3, inv.psi) * inv.G3 - one);
    add_series_check(rep, "algebra.duality : phi o psi",
                     "the map and its reversion compose to the identity",
                     compose(fwd.phi, inv.psi) - WSeries::identity(eq_order));
    add_series_check(rep, "algebra.duality : g1 * g1inv",
                     "the leading inverse series and its reciprocal multiply to one",
                     inv.g1 * inv.g1inv - one);

    for (int two_j : o.singles) {
        const JordanianIrrep r = jordanian_irrep(o.map, two_j);
        add_residual_checks(rep, "algebra.relations" + tag(two_j),
                            "the deformed matrices satisfy all defining relations",
                            verify_jordanian_relations(r));
        add_residual_checks(rep, "algebra.classical" + tag(two_j),
                            "the ladder matrices satisfy the classical relations",
                            verify_classical_relations(classical_irrep(two_j)));
        const int so = r.dim() + 2;
        WSeries f1(so);
        f1.set_coeff(0, rat(1));
        f1.set_coeff(1, rat(2));
        f1.set_coeff(2, rat(1));
        const std::vector<WSeries> fs{f1};
        const std::vector<WSeries> gs{WSeries::monomial(2, rat(1), so)};
        add_residual_checks(rep, "algebra.derivation" + tag(two_j),
                            "commutators with series of the generators act as "
                            "derivatives",
                            commutator_identity_checks(r, fs, gs));
    }
    return rep;
}

CheckReport suite_roundtrip(const SuiteOptions& o) {
    CheckReport rep;
    rep.suite = "roundtrip";
    rep.map = o.map.name;
    rep.spins = o.singles;
    for (int two_j : o.singles) {
        const ClassicalIrrep cl = classical_irrep(two_j);
        const JordanianIrrep r = jordanian_irrep(o.map, two_j);
        const int n = r.dim();
        const PolyMatrix id = PolyMatrix::identity(n);

        const ReconstructionReport rr = reconstruct_classical(o.map, r);
        const std::string anchor_img =
            "rebuilding the classical generators from the deformed matrices is exact";
        add_matrix_check(rep, "roundtrip.images" + tag(two_j) + " : J+", anchor_img,
                         rr.diff_Jp);
        add_matrix_check(rep, "roundtrip.images" + tag(two_j) + " : J0", anchor_img,
                         rr.diff_J0);
        add_matrix_check(rep, "roundtrip.images" + tag(two_j) + " : J-", anchor_img,
                         rr.diff_Jm);

        const std::string anchor_h0 =
            "at h = 0 the deformed matrices collapse onto the classical ones";
        add_matrix_check(rep, "roundtrip.h0" + tag(two_j) + " : T", anchor_h0,
                         eval_h0(r.T) - id);
        add_matrix_check(rep, "roundtrip.h0" + tag(two_j) + " : H", anchor_h0,
                         eval_h0(r.H) - cl.J0);
        add_matrix_check(rep, "roundtrip.h0" + tag(two_j) + " : Y", anchor_h0,
                         eval_h0(r.Y) - cl.Jm);
        add_matrix_check(rep, "roundtrip.h0" + tag(two_j) + " : X", anchor_h0,
                         eval_h0(r.X) - cl.Jp);

        add_matrix_check(rep, "roundtrip.unipotent" + tag(two_j),
                         "T - 1 is nilpotent of index at most the dimension",
                         pow(r.T - id, n));
    }
    return rep;
}

CheckReport suite_hopf(const SuiteOptions& o) {
    CheckReport rep;
    rep.suite = "hopf";
    rep.map = o.map.name;
    rep.spins = o.singles;
    for (int two_j : o.singles)
        add_residual_checks(rep, "hopf.axioms" + tag(two_j),
                            "counit and antipode axioms hold on every generator",
                            hopf_axiom_checks(jordanian_irrep(o.map, two_j)));
    for (const auto& [a, b] : o.pairs)
        add_residual_checks(rep, "hopf.coproduct" + tag(a, b),
                            "the coproduct images satisfy all defining relations",
                            coproduct_homomorphism_check(coproducts(o.map, a, b)));
    for (const auto& [a, b, c] : o.triples)
        add_residual_checks(rep, "hopf.coassociativity" + tag(a, b, c),
                            "iterating the coproduct on either slot agrees",
                            coassociativity_check(o.map, a, b, c));
    return rep;
}

CheckReport suite_twist(const SuiteOptions& o) {
    CheckReport rep;
    rep.suite = "twist";
    rep.map = o.map.name;
    rep.spins = o.singles;
    const MapSpec minimal = builtin_map("minimal");
    for (const auto& [a, b] : o.pairs) {
        const int N = std::max(8, a + b);
        const SimilaritySeries lam = similarity(minimal, o.map, N);
        const MuSeries mu = mu_from_lambda(lam);

        TwistSet ts;
        bool assembled = false;
        std::string note = "symmetric factor gate passed";
        try {
            ts = twist_general(o.map, a, b, lam, mu);
            assembled = true;
        } catch (const error& e) {
            note = e.what();
        }
        add_bool_check(rep, "twist.assembly" + tag(a, b),
                       "the twist assembles with a permutation-symmetric "
                       "residual factor",
                       assembled, note);
        if (!assembled) continue;

        add_residual_checks(rep, "twist.relation" + tag(a, b),
                            "conjugating the coproduct images by the twist "
                            "lands on primitive classical sums",
                            twist_relation_check(o.map, ts.F, a, b));

        const GenSet leg1 = gens(jordanian_irrep(o.map, a));
        const GenSet leg2 = gens(jordanian_irrep(o.map, b));
        const std::string anchor_leg =
            "the per-leg twist factor coincides with the similarity conjugator";
        add_matrix_check(rep, "twist.leg-operator" + tag(a, b) + " : leg 1", anchor_leg,
                         twist_leg_operator(mu, leg1, a + 1) - build_U(lam, a));
        add_matrix_check(rep, "twist.leg-operator" + tag(a, b) + " : leg 2", anchor_leg,
                         twist_leg_operator(mu, leg2, b + 1) - build_U(lam, b));

        if (a == b) {
            add_bool_check(rep, "twist.symmetric-factor" + tag(a, b),
                           "the residual factor is invariant under exchanging "
                           "equal legs",
                           is_flip_symmetric(ts.FS, a + 1),
                           is_flip_symmetric(ts.FS, a + 1) ? "flip-symmetric"
                                                           : "not flip-symmetric");
        } else {
            const TwistSet ts_sw = twist_general(o.map, b, a, lam, mu);
            add_matrix_check(rep, "twist.symmetric-factor" + tag(a, b),
                             "the residual factor is flip-covariant across "
                             "the swapped pair",
                             flip_conjugate(ts_sw.FS, b + 1, a + 1) - ts.FS);
        }

        const PolyMatrix id2 = PolyMatrix::identity((a + 1) * (b + 1));
        add_matrix_check(rep, "twist.h0" + tag(a, b) + " : V",
                         "the twist is the identity at h = 0", eval_h0(ts.V) - id2);
        add_matrix_check(rep, "twist.h0" + tag(a, b) + " : F",
                         "the twist is the identity at h = 0", eval_h0(ts.F) - id2);

        if (lambda_is_zero(lam))
            add_matrix_check(rep, "twist.elementary" + tag(a, b),
                             "with a trivial connecting series the twist "
                             "collapses to its elementary factor",
                             ts.F - ts.V);

        if (o.sabotage_zero_mu && !lambda_is_zero(lam)) {
            MuSeries bad;
            bad.order = mu.order;
            bad.d.assign(mu.d.size(), rat(0));
            bool flagged = false;
            std::string how = "sabotaged twist passed every gate";
            try {
                const TwistSet tsb = twist_general(o.map, a, b, lam, bad);
                if (!twist_relation_check(o.map, tsb.F, a, b).all_zero()) {
                    flagged = true;
                    how = "twisted coproduct failed to be primitive";
                } else if (!(twist_leg_operator(bad, leg1, a + 1) == build_U(lam, a))) {
                    flagged = true;
                    how = "leg operator diverged from the similarity conjugator";
                }
            } catch (const error&) {
                flagged = true;
                how = "assembly gate threw";
            }
            add_bool_check(rep, "twist.sabotage" + tag(a, b),
                           "a zeroed companion series must be caught by the gates",
                           flagged, how);
        }
    }
    return rep;
}

CheckReport suite_ybe(const SuiteOptions& o) {
    CheckReport rep;
    rep.suite = "ybe";
    rep.map = o.map.name;
    rep.spins = o.singles;
    for (const auto& [a, b] : o.pairs) {
        add_residual_checks(rep, "ybe.triangularity" + tag(a, b),
                            "the flip-conjugated R-matrix of the swapped pair "
                            "inverts R",
                            triangularity_check(a, b));
        add_residual_checks(rep, "ybe.intertwining" + tag(a, b),
                            "R intertwines the coproduct with its opposite",
                            intertwining_check(a, b));
        bool computed = false;
        std::string note = "gauge factors cancel";
        PolyMatrix diff;
        try {
            const TwistSet ts = twist_general(o.map, a, b);
            const TwistSet ts_sw = twist_general(o.map, b, a);
            diff = flip_conjugate(ts_sw.F, b + 1, a + 1) * inverse_unipotent(ts.F) -
                   ts.R;
            computed = true;
        } catch (const error& e) {
            note = e.what();
        }
        if (computed)
            add_matrix_check(rep, "ybe.gauge" + tag(a, b),
                             "the R-matrix built from the full twist equals the "
                             "one built from its elementary factor",
                             diff);
        else
            add_bool_check(rep, "ybe.gauge" + tag(a, b),
                           "the R-matrix built from the full twist equals the "
                           "one built from its elementary factor",
                           false, note);
    }
    for (const auto& [a, b, c] : o.triples)
        add_residual_checks(rep, "ybe.braid" + tag(a, b, c),
                            "the R-matrix satisfies the braid relation on "
                            "three legs",
                            ybe_check(a, b, c));
    return rep;
}

CheckReport suite_cocycle(const SuiteOptions& o) {
    CheckReport rep;
    rep.suite = "cocycle";
    rep.map = o.map.name;
    rep.spins = o.singles;
    for (const auto& [a, b, c] : o.triples)
        add_residual_checks(rep, "cocycle.identity" + tag(a, b, c),
                            "the twist satisfies the two-sided cocycle identity",
                            cocycle_check(o.map, a, b, c));
    return rep;
}

CheckReport suite_antipode(const SuiteOptions& o) {
    CheckReport rep;
    rep.suite = "antipode";
    rep.map = "minimal";
    rep.spins = o.singles;
    for (int two_j : o.singles)
        add_residual_checks(rep, "antipode" + tag(two_j),
                            "conjugators transport the antipode between the "
                            "deformed and classical structures",
                            antipode_checks(two_j));
    return rep;
}

CheckReport suite_similarity(const SuiteOptions& o) {
    CheckReport rep;
    rep.suite = "similarity";
    rep.map = o.map.name;
    rep.spins = o.singles;
    const int N = std::max(5, o.order);
    const std::vector<std::string> names = builtin_map_names();

    {
        const SimilaritySeries cm =
            similarity(builtin_map("contraction"), builtin_map("minimal"), N);
        const std::vector<Rational> frozen{rat(1, 2), rat(1, 4), rat(1, 8), rat(1, 24),
                                           rat(-1, 96)};
        bool ok = cm.c.size() >= frozen.size();
        for (std::size_t k = 0; ok && k < frozen.size(); ++k) ok = cm.c[k] == frozen[k];
        add_bool_check(rep, "similarity.frozen-coefficients",
                       "the contraction-to-minimal connecting series starts "
                       "1/2, 1/4, 1/8, 1/24, -1/96",
                       ok, ok ? "matches" : "coefficient mismatch");
    }

    for (const auto& from : names)
        for (const auto& to : names) {
            if (from == to) {
                const SimilaritySeries self =
                    similarity(builtin_map(from), builtin_map(from), N);
                add_bool_check(rep, "similarity.self[" + from + "]",
                               "a map connects to itself trivially",
                               lambda_is_zero(self),
                               lambda_is_zero(self) ? "all coefficients vanish"
                                                    : "nonzero coefficient found");
                continue;
            }
            bool agree = true;
            std::string note = "scalar and matrix extraction agree";
            try {
                lambda_oracle(
                    target_series(builtin_map(from), builtin_map(to), N + 2), N);
            } catch (const error& e) {
                agree = false;
                note = e.what();
            }
            add_bool_check(rep, "similarity.oracle[" + from + "->" + to + "]",
                           "two independent solvers produce the same "
                           "connecting series",
                           agree, note);
        }

    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            const SimilaritySeries ab =
                similarity(builtin_map(names[i]), builtin_map(names[j]), N);
            const SimilaritySeries ba =
                similarity(builtin_map(names[j]), builtin_map(names[i]), N);
            add_bool_check(rep,
                           "similarity.antisymmetry[" + names[i] + "," + names[j] + "]",
                           "reversing the direction negates the connecting series",
                           ab.c == ba.negated().c,
                           ab.c == ba.negated().c ? "coefficients negate exactly"
                                                  : "coefficient mismatch");
        }

    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            for (std::size_t k = j + 1; k < names.size(); ++k) {
                const WSeries ab =
                    target_series(builtin_map(names[i]), builtin_map(names[j]), N + 2);
                const WSeries bc =
                    target_series(builtin_map(names[j]), builtin_map(names[k]), N + 2);
                const WSeries ac =
                    target_series(builtin_map(names[i]), builtin_map(names[k]), N + 2);
                add_bool_check(rep,
                               "similarity.transitivity[" + names[i] + "," + names[j] +
                                   "," + names[k] + "]",
                               "connecting series compose along chains of maps",
                               agrees_to(compose(bc, ab), ac, N + 2),
                               "composition of the two hops matches the direct series");
            }

    const int two_j = 2;
    for (const auto& from : names)
        for (const auto& to : names) {
            if (from == to) continue;
            const SimilaritySeries lam = similarity(builtin_map(from), builtin_map(to), N);
            const PolyMatrix E = build_U(lam, two_j);
            const PolyMatrix Einv = inverse_unipotent(E);
            const GenSet ga = gens(jordanian_irrep(builtin_map(from), two_j));
            const GenSet gb = gens(jordanian_irrep(builtin_map(to), two_j));
            const std::string base = "similarity.intertwining[" + from + "->" + to + "]";
            const std::string anchor =
                "the conjugator maps one deformed representation onto the other";
            add_matrix_check(rep, base + " : T", anchor, Einv * gb.T * E - ga.T);
            add_matrix_check(rep, base + " : Tinv", anchor, Einv * gb.Tinv * E - ga.Tinv);
            add_matrix_check(rep, base + " : H", anchor, Einv * gb.H * E - ga.H);
            add_matrix_check(rep, base + " : Y", anchor, Einv * gb.Y * E - ga.Y);
            add_matrix_check(rep, base + " : X", anchor, Einv * gb.X * E - ga.X);
        }

    const MapSpec minimal = builtin_map("minimal");
    const GenSet gmin = gens(jordanian_irrep(minimal, 4));
    for (const auto& name : names) {
        const SimilaritySeries lam = similarity(minimal, builtin_map(name), std::max(8, N));
        const MuSeries mu = mu_from_lambda(lam);
        add_matrix_check(rep, "similarity.companion[" + name + "]",
                         "the companion series reproduces the conjugator on "
                         "the elementary representation",
                         twist_leg_operator(mu, gmin, 5) - build_U(lam, 4));
    }
    return rep;
}

} // namespace

SuiteOptions default_suite_options(const MapSpec& map) {
    SuiteOptions o;
    o.map = map;
    o.singles = {1, 2, 3, 4};
    for (int a = 1; a <= 4; ++a)
        for (int b = a; b <= 4; ++b) o.pairs.push_back({a, b});
    for (int a = 1; a <= 3; ++a)
        for (int b = a; b <= 3; ++b)
            for (int c = b; c <= 3; ++c) o.triples.push_back({a, b, c});
    return o;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"algebra", "roundtrip", "hopf",
                                                "twist",   "ybe",       "cocycle",
                                                "antipode", "similarity"};
    return names;
}

bool is_suite_name(const std::string& name) {
    if (name == "all") return true;
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

CheckReport run_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "algebra") return suite_algebra(opts);
    if (name == "roundtrip") return suite_roundtrip(opts);
    if (name == "hopf") return suite_hopf(opts);
    if (name == "twist") return suite_twist(opts);
    if (name == "ybe") return suite_ybe(opts);
    if (name == "cocycle") return suite_cocycle(opts);
    if (name == "antipode") return suite_antipode(opts);
    if (name == "similarity") return suite_similarity(opts);
    if (name == "all") {
        CheckReport rep;
        rep.suite = "all";
        rep.map = opts.map.name;
        rep.spins = opts.singles;
        for (const auto& sub : suite_names()) {
            CheckReport part = run_suite(sub, opts);
            for (auto& c : part.checks) rep.checks.push_back(std::move(c));
        }
        return rep;
    }
    throw error("unknown suite '" + name + "'");
}

} // namespace jtk
