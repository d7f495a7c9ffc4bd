#pragma once
// hopf.hpp -- coalgebra structure on tensor-product representations:
// coproducts and their axioms, the elementary two-leg twist, general
// map-dependent twists with their symmetric factor, the triangular
// R-matrix, cocycle verification, and the antipode conjugators.

#include "jtk/equiv.hpp"
#include "jtk/irreps.hpp"
#include "jtk/maps.hpp"
#include "jtk/pmatrix.hpp"

namespace jtk {

// Coproduct images on a two-leg space, together with the single-leg
// data they were assembled from.
struct CoproductSet {
    int two_j1 = 0, two_j2 = 0;
    MapSpec map;
    GenSet dn;                        // deformed coproduct images
    PolyMatrix dc_Jp, dc_Jm, dc_J0;   // primitive classical sums
    GenSet leg1, leg2;
    ClassicalIrrep cleg1, cleg2;
};

CoproductSet coproducts(const MapSpec& map, int two_j1, int two_j2);

// The deformed coproduct is an algebra map: all defining relations
// hold on its images.
ResidualReport coproduct_homomorphism_check(const CoproductSet& set);

// Counit/antipode axioms, generator by generator, via the explicit
// two-term coproduct sums.
ResidualReport hopf_axiom_checks(const JordanianIrrep& rep);

// (D (x) id) D = (id (x) D) D on a three-leg space.
ResidualReport coassociativity_check(const MapSpec& map, int two_j1, int two_j2,
                                     int two_j3);

// How the general twist's coproduct factor is assembled: from the
// substitution series on the deformed coproduct matrices (the form
// that passes every gate), or from the connecting series applied to
// primitive classical coproduct matrices (kept for comparison; fails
// the gates and is expected to throw).
enum class TwistAssembly { kTensorSquare, kCoproductMix };

struct TwistSet {
    int two_j1 = 0, two_j2 = 0;
    MapSpec map;
    PolyMatrix V, Vinv, F, Finv, FS, R;

    int dim1() const { return two_j1 + 1; }
    int dim2() const { return two_j2 + 1; }
};

// Twist for the elementary map: F = V = exp(-(TH) (x) hX).
TwistSet twist_minimal(int two_j1, int two_j2);

// Twist for an arbitrary map, assembled from the solved connecting
// series.  Throws a consistency error if the symmetric factor fails
// its permutation-symmetry gate (equal spins).
TwistSet twist_general(const MapSpec& map, int two_j1, int two_j2,
                       const SimilaritySeries& lam, const MuSeries& mu,
                       TwistAssembly assembly = TwistAssembly::kTensorSquare);
TwistSet twist_general(const MapSpec& map, int two_j1, int two_j2);

// exp(-mu(T - 1) H) for one leg; series_order must reach the
// nilpotency index of T - 1 and stay within mu's stored order.
PolyMatrix twist_leg_operator(const MuSeries& mu, const GenSet& g, int series_order);

// Triangular R-matrix on spins (j1, j2), elementary map: the
// two-factor form cross-checked against the flip-product form.
PolyMatrix rmatrix(int two_j1, int two_j2);

// F^{-1} Dn(J_delta) F - (J_delta (x) 1 + 1 (x) J_delta) for all three
// classical generators, where Dn(J_delta) evaluates the classical
// image expressions on the coproduct matrices.
ResidualReport twist_relation_check(const MapSpec& map, const PolyMatrix& F,
                                    int two_j1, int two_j2);

// R12 R13 R23 = R23 R13 R12 on three legs (elementary map).
ResidualReport ybe_check(int two_j1, int two_j2, int two_j3);

// Flip-conjugated R of the swapped pair times R is the identity.
ResidualReport triangularity_check(int two_j1, int two_j2);

// R Dn(Phi) = Dn^op(Phi) R for Phi in {T, H, Y}.
ResidualReport intertwining_check(int two_j1, int two_j2);

// ((Dn (x) id)F)(F (x) 1) = ((id (x) Dn)F)(1 (x) F) on three legs.
ResidualReport cocycle_check(const MapSpec& map, int two_j1, int two_j2, int two_j3);

// Conjugators transporting the antipode between the deformed and
// classical structures (elementary map).
struct AntipodeOps {
    PolyMatrix G, Gtilde;
};

AntipodeOps antipode_conjugators(int two_j);

// Exponent identity, transported-antipode residuals in both checked
// forms, and h = 0 limits; reversed-orientation residuals are appended
// only if the stated orientation fails, so the discrepancy is visible.
ResidualReport antipode_checks(int two_j);

} // namespace jtk
