// Coalgebra layer: coproducts and their axioms, twists and their gates, the
// triangular R-matrix, the cocycle identity, and the antipode conjugators.
#include <doctest.h>

#include <string>
#include <utility>
#include <vector>

#include "jtk/equiv.hpp"
#include "jtk/error.hpp"
#include "jtk/hopf.hpp"
#include "jtk/irreps.hpp"

using namespace jtk;

namespace {

const Residual& find_residual(const ResidualReport& report, const std::string& name) {
    for (const auto& r : report.residuals)
        if (r.name == name) return r;
    FAIL("missing residual: ", name);
    return report.residuals.front();
}

bool has_residual(const ResidualReport& report, const std::string& name) {
    for (const auto& r : report.residuals)
        if (r.name == name) return true;
    return false;
}

// Fill a matrix from a row-major table of h-polynomials.
PolyMatrix from_rows(int n, const std::vector<std::vector<HPoly>>& rows) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    return m;
}

const HPoly h1 = HPoly::h();
const HPoly h2 = HPoly::h(2);

} // namespace

TEST_CASE("coproduct matrices are the two-leg generator sums") {
    const MapSpec map = builtin_map("minimal");
    const CoproductSet set = coproducts(map, 1, 2);
    CHECK(set.two_j1 == 1);
    CHECK(set.two_j2 == 2);

    const GenSet a = gens(jordanian_irrep(map, 1));
    const GenSet b = gens(jordanian_irrep(map, 2));
    CHECK(set.leg1.T == a.T);
    CHECK(set.leg2.Y == b.Y);

    const PolyMatrix i2 = PolyMatrix::identity(2);
    const PolyMatrix i3 = PolyMatrix::identity(3);
    CHECK(set.dn.T == kron(a.T, b.T));
    CHECK(set.dn.Tinv == kron(a.Tinv, b.Tinv));
    CHECK(set.dn.H == kron(a.H, b.T) + kron(a.Tinv, b.H));
    CHECK(set.dn.Y == kron(a.Y, b.T) + kron(a.Tinv, b.Y));
    CHECK(set.dn.X == kron(a.X, i3) + kron(i2, b.X));

    const ClassicalIrrep ca = classical_irrep(1);
    const ClassicalIrrep cb = classical_irrep(2);
    CHECK(set.dc_Jp == kron(ca.Jp, i3) + kron(i2, cb.Jp));
    CHECK(set.dc_J0 == kron(ca.J0, i3) + kron(i2, cb.J0));
    CHECK(set.dc_Jm == kron(ca.Jm, i3) + kron(i2, cb.Jm));
}

TEST_CASE("the coproduct is an algebra homomorphism") {
    for (const auto& [name, a, b] :
         {std::tuple<const char*, int, int>{"minimal", 1, 1},
          {"minimal", 1, 2},
          {"minimal", 2, 2},
          {"contraction", 1, 1},
          {"diag", 1, 2}}) {
        CAPTURE(name);
        CAPTURE(a);
        CAPTURE(b);
        const CoproductSet set = coproducts(builtin_map(name), a, b);
        const ResidualReport report = coproduct_homomorphism_check(set);
        CHECK(report.residuals.size() == 8);
        CHECK(report.all_zero());
    }
}

TEST_CASE("counit and antipode axioms hold generator by generator") {
    for (const auto& [name, two_j] :
         {std::pair<const char*, int>{"minimal", 1}, {"minimal", 2}, {"minimal", 3},
          {"contraction", 2}, {"simple-plus", 1}}) {
        CAPTURE(name);
        CAPTURE(two_j);
        const JordanianIrrep rep = jordanian_irrep(builtin_map(name), two_j);
        const ResidualReport report = hopf_axiom_checks(rep);
        CHECK(report.residuals.size() == 20);   // 4 axioms x 5 generators
        CHECK(report.all_zero());
    }
    const ResidualReport named =
        hopf_axiom_checks(jordanian_irrep(builtin_map("minimal"), 1));
    CHECK(has_residual(named, "antipode axiom (S * id) on T"));
    CHECK(has_residual(named, "antipode axiom (id * S) on Y"));
    CHECK(has_residual(named, "counit axiom (eps * id) on X"));
    CHECK(has_residual(named, "counit axiom (id * eps) on H"));
}

TEST_CASE("the coproduct is coassociative on three legs") {
    CHECK(coassociativity_check(builtin_map("minimal"), 1, 1, 1).all_zero());
    CHECK(coassociativity_check(builtin_map("minimal"), 1, 1, 2).all_zero());
    CHECK(coassociativity_check(builtin_map("contraction"), 1, 1, 1).all_zero());
    const ResidualReport named = coassociativity_check(builtin_map("minimal"), 1, 1, 1);
    for (const auto* g : {"T", "Tinv", "H", "Y", "X"})
        CHECK(has_residual(named, std::string("coassociativity on ") + g));
}

TEST_CASE("elementary twist at the lowest spin pair in closed form") {
    const TwistSet ts = twist_minimal(1, 1);
    CHECK(ts.map.name == "minimal");
    CHECK(ts.dim1() == 2);
    CHECK(ts.dim2() == 2);

    const HPoly z;
    const HPoly one(1);
    const PolyMatrix V = from_rows(4, {{one, -h1, z, z},
                                       {z, one, z, z},
                                       {z, z, one, h1},
                                       {z, z, z, one}});
    CHECK(ts.V == V);
    // The elementary map's twist is its symmetric-free factor alone.
    CHECK(ts.F == ts.V);
    CHECK(ts.FS == PolyMatrix::identity(4));
    CHECK(ts.Vinv * ts.V == PolyMatrix::identity(4));
    CHECK(ts.Finv * ts.F == PolyMatrix::identity(4));

    const PolyMatrix R = from_rows(4, {{one, h1, -h1, h2},
                                       {z, one, z, h1},
                                       {z, z, one, -h1},
                                       {z, z, z, one}});
    CHECK(ts.R == R);
    CHECK(rmatrix(1, 1) == R);
}

TEST_CASE("elementary twist collapses for unequal spins too") {
    const TwistSet ts = twist_minimal(1, 2);
    CHECK(ts.F == ts.V);
    CHECK(ts.FS == PolyMatrix::identity(6));
    // And the general-assembly entry point reproduces it for the elementary
    // map, where the connecting series vanishes identically.
    const TwistSet tg = twist_general(builtin_map("minimal"), 1, 2);
    CHECK(tg.F == ts.F);
    CHECK(tg.FS == ts.FS);
    CHECK(tg.R == ts.R);
}

TEST_CASE("twisted classical coproducts become primitive") {
    const MapSpec minimal = builtin_map("minimal");
    for (const auto& [a, b] :
         {std::pair<int, int>{1, 1}, {1, 2}, {2, 2}, {1, 3}}) {
        CAPTURE(a);
        CAPTURE(b);
        const TwistSet ts = twist_minimal(a, b);
        const ResidualReport report = twist_relation_check(minimal, ts.F, a, b);
        CHECK(report.residuals.size() == 3);
        CHECK(report.all_zero());
    }
    const ResidualReport named =
        twist_relation_check(minimal, twist_minimal(1, 1).F, 1, 1);
    CHECK(has_residual(named, "twisted coproduct of J+ is primitive"));
    CHECK(has_residual(named, "twisted coproduct of J0 is primitive"));
    CHECK(has_residual(named, "twisted coproduct of J- is primitive"));
}

TEST_CASE("a broken twist fails the primitivity relation") {
    const MapSpec minimal = builtin_map("minimal");
    PolyMatrix F = twist_minimal(1, 1).F;
    F.at(0, 3) += h2;   // still unipotent upper-triangular, but wrong
    CHECK_FALSE(twist_relation_check(minimal, F, 1, 1).all_zero());
}

TEST_CASE("general twist for a map with a nonvanishing connecting series") {
    const MapSpec map = builtin_map("contraction");
    const TwistSet ts = twist_general(map, 1, 1);

    // The twisted coproduct relation certifies F.
    CHECK(twist_relation_check(map, ts.F, 1, 1).all_zero());
    // F genuinely differs from the elementary factor here.
    CHECK_FALSE(ts.F == ts.V);
    // The symmetric factor passes its gate.
    CHECK(is_flip_symmetric(ts.FS, 2));
    // Every factor is the identity at h = 0.
    CHECK(eval_h0(ts.V) == PolyMatrix::identity(4));
    CHECK(eval_h0(ts.F) == PolyMatrix::identity(4));
    CHECK(eval_h0(ts.FS) == PolyMatrix::identity(4));
    CHECK(eval_h0(ts.R) == PolyMatrix::identity(4));
    // Inverses are genuine.
    CHECK(ts.F * ts.Finv == PolyMatrix::identity(4));
    CHECK(ts.V * ts.Vinv == PolyMatrix::identity(4));

    // Relation also holds on a mixed pair for a second map.
    CHECK(twist_relation_check(builtin_map("diag"),
                               twist_general(builtin_map("diag"), 1, 2).F, 1, 2)
              .all_zero());
}

TEST_CASE("symmetric factor transforms covariantly under leg exchange") {
    const MapSpec map = builtin_map("contraction");
    const TwistSet ab = twist_general(map, 1, 2);
    const TwistSet ba = twist_general(map, 2, 1);
    CHECK(flip_conjugate(ba.FS, 3, 2) == ab.FS);
    // For equal spins covariance degenerates to the symmetry gate itself.
    const TwistSet sq = twist_general(map, 2, 2);
    CHECK(is_flip_symmetric(sq.FS, 3));
}

TEST_CASE("twist leg operator equals the connecting-series conjugator") {
    const MapSpec map = builtin_map("contraction");
    const SimilaritySeries lam = similarity(builtin_map("minimal"), map, 8);
    const MuSeries mu = mu_from_lambda(lam);

    for (int two_j = 1; two_j <= 3; ++two_j) {
        CAPTURE(two_j);
        const PolyMatrix U = build_U(lam, two_j);
        // The substitution identity makes the leg operator map-independent:
        // the same matrix comes out on either representation's generators.
        const GenSet g_map = gens(jordanian_irrep(map, two_j));
        const GenSet g_min = gens(jordanian_irrep(builtin_map("minimal"), two_j));
        CHECK(twist_leg_operator(mu, g_map, two_j + 1) == U);
        CHECK(twist_leg_operator(mu, g_min, two_j + 1) == U);
    }

    // A series of order n consumes coefficients up to degree n - 1, so the
    // largest honest request is mu.order + 1; one past that must throw.
    const GenSet g = gens(jordanian_irrep(map, 1));
    CHECK_THROWS_AS(twist_leg_operator(mu, g, mu.order + 2), error);
}

TEST_CASE("assembling the coproduct factor from primitive classical sums fails") {
    // The comparison assembly applies the connecting series to the primitive
    // classical coproduct.  On spin-1/2 legs the two assemblies agree (the
    // matrices are too small to see the difference), but from (1/2, 1) on an
    // obstruction must surface, either as a gate throw or as a failing
    // twisted-coproduct relation.
    const MapSpec map = builtin_map("contraction");
    const SimilaritySeries lam = similarity(builtin_map("minimal"), map, 8);
    const MuSeries mu = mu_from_lambda(lam);
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}}) {
        CAPTURE(a);
        CAPTURE(b);
        bool exposed = false;
        try {
            const TwistSet ts =
                twist_general(map, a, b, lam, mu, TwistAssembly::kCoproductMix);
            exposed = !twist_relation_check(map, ts.F, a, b).all_zero();
        } catch (const error&) {
            exposed = true;
        }
        CHECK(exposed);
    }
}

TEST_CASE("a zeroed companion series is caught") {
    const MapSpec map = builtin_map("contraction");
    const SimilaritySeries lam = similarity(builtin_map("minimal"), map, 8);
    const MuSeries mu = mu_from_lambda(lam);
    MuSeries zeroed = mu;
    for (auto& d : zeroed.d) d = rat(0);

    // Zeroing the companion series silently turns every leg operator into
    // the identity, so the twist loses its coproduct factor.  One of the
    // three detectors must fire: the symmetry gate, the leg-operator
    // comparison, or the twisted-coproduct relation.
    bool flagged = false;
    try {
        const TwistSet ts = twist_general(map, 1, 1, lam, zeroed);
        const GenSet g = gens(jordanian_irrep(map, 1));
        flagged = !(twist_leg_operator(zeroed, g, 2) == build_U(lam, 1)) ||
                  !twist_relation_check(map, ts.F, 1, 1).all_zero();
    } catch (const error&) {
        flagged = true;
    }
    CHECK(flagged);
}

TEST_CASE("triangularity, braid relation, and intertwining for the R-matrix") {
    for (const auto& [a, b] : {std::pair<int, int>{1, 1}, {1, 2}, {2, 2}}) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(triangularity_check(a, b).all_zero());
        CHECK(intertwining_check(a, b).all_zero());
    }
    CHECK(ybe_check(1, 1, 1).all_zero());
    CHECK(ybe_check(1, 1, 2).all_zero());
    CHECK(ybe_check(1, 2, 2).all_zero());
}

TEST_CASE("triangularity as a direct matrix identity") {
    const PolyMatrix r12 = rmatrix(1, 2);
    const PolyMatrix r21 = rmatrix(2, 1);
    CHECK(flip_conjugate(r12, 2, 3) * r21 == PolyMatrix::identity(6));
    CHECK(flip_conjugate(r21, 3, 2) * r12 == PolyMatrix::identity(6));
}

TEST_CASE("gauge invariance: both twists induce the same R-matrix") {
    const MapSpec map = builtin_map("contraction");
    const TwistSet sq = twist_general(map, 1, 1);
    // sigma(F) F^{-1} = sigma(V) V^{-1} because the symmetric factor is
    // exchange-covariant and cancels.
    CHECK(flip_conjugate(sq.F, 2, 2) * sq.Finv == sq.R);
    CHECK(flip_conjugate(sq.V, 2, 2) * sq.Vinv == sq.R);

    const TwistSet ab = twist_general(map, 1, 2);
    const TwistSet ba = twist_general(map, 2, 1);
    CHECK(flip_conjugate(ba.F, 3, 2) * ab.Finv == ab.R);
    CHECK(flip_conjugate(ba.V, 3, 2) * ab.Vinv == ab.R);
}

TEST_CASE("the cocycle identity holds on three legs") {
    CHECK(cocycle_check(builtin_map("minimal"), 1, 1, 1).all_zero());
    CHECK(cocycle_check(builtin_map("minimal"), 1, 1, 2).all_zero());
    CHECK(cocycle_check(builtin_map("contraction"), 1, 1, 1).all_zero());
    const ResidualReport named = cocycle_check(builtin_map("minimal"), 1, 1, 1);
    CHECK(has_residual(named, "twist cocycle identity"));
}

TEST_CASE("antipode conjugators and their exponent identity") {
    for (int two_j = 1; two_j <= 3; ++two_j) {
        CAPTURE(two_j);
        const AntipodeOps ops = antipode_conjugators(two_j);
        const int n = two_j + 1;
        CHECK(eval_h0(ops.G) == PolyMatrix::identity(n));
        CHECK(eval_h0(ops.Gtilde) == PolyMatrix::identity(n));
        // Both conjugators are built from the same nilpotent exponent.
        CHECK(ops.G == ops.Gtilde);
    }
}

TEST_CASE("antipode transport between deformed and classical structures") {
    for (int two_j = 1; two_j <= 3; ++two_j) {
        CAPTURE(two_j);
        const ResidualReport report = antipode_checks(two_j);
        CHECK(report.all_zero());
    }
    const ResidualReport named = antipode_checks(2);
    CHECK(has_residual(named, "conjugator exponents match"));
    CHECK(has_residual(named, "deformed conjugator at h = 0"));
    CHECK(has_residual(named, "classical conjugator at h = 0"));
    for (const auto* g : {"J+", "J0", "J-"}) {
        CHECK(has_residual(named,
                           std::string("image expression reproduces classical ") + g));
        CHECK(has_residual(named,
                           std::string("transported antipode on ") + g + " image"));
    }
    for (const auto* g : {"T", "H", "Y"}) {
        CHECK(has_residual(named,
                           std::string("antipode pullback closed form on ") + g));
        CHECK(has_residual(named,
                           std::string("transported deformed antipode on ") + g));
    }
    // The reversed-orientation residuals only appear on failure.
    CHECK_FALSE(has_residual(named,
                             "transported deformed antipode on T (reversed orientation)"));
    CHECK(find_residual(named, "conjugator exponents match").zero());
}
