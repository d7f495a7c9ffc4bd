#pragma once
// irreps.hpp -- finite-dimensional representations: the classical spin
// ladder matrices, their deformed counterparts built from a solved map,
// and exact verification of the defining relations in both directions.

#include <string>
#include <vector>

#include "jtk/maps.hpp"
#include "jtk/pmatrix.hpp"

namespace jtk {

// Classical spin-j triple (j stored as the integer 2j).  Entries are
// h-free; J0 is diagonal, Jm the unit lower shift, Jp the weighted
// upper shift.
struct ClassicalIrrep {
    int two_j = 0;
    PolyMatrix Jp, Jm, J0;

    int dim() const { return two_j + 1; }
};

// Deformed spin-j quintuple over Q[h], together with the map that
// produced it.
struct JordanianIrrep {
    int two_j = 0;
    MapSpec map;
    PolyMatrix T, Tinv, H, Y, X;

    int dim() const { return two_j + 1; }
};

// The five deformed generator matrices without provenance; coproduct
// legs and tensor-product representations are carried in this form.
struct GenSet {
    PolyMatrix T, Tinv, H, Y, X;
};

GenSet gens(const JordanianIrrep& rep);

ClassicalIrrep classical_irrep(int two_j);

// Deformed irrep through `map` on the standard classical basis, or on a
// caller-supplied classical triple (any basis with nilpotent Jp works).
JordanianIrrep jordanian_irrep(const MapSpec& map, int two_j);
JordanianIrrep jordanian_irrep_on(const MapSpec& map, const ClassicalIrrep& cl);

// One named residual matrix; zero means the relation holds exactly.
struct Residual {
    std::string name;
    PolyMatrix value;

    bool zero() const { return value.is_zero(); }
};

struct ResidualReport {
    std::vector<Residual> residuals;

    bool all_zero() const;
};

// Residuals of the deformed defining relations: the H/T, H/Tinv, H/Y,
// T/Y, Tinv/Y and X/Y commutators plus both T*Tinv orientations.
ResidualReport verify_jordanian_relations(const GenSet& g);
ResidualReport verify_jordanian_relations(const JordanianIrrep& rep);

// Residuals of the classical relations for an arbitrary triple.
ResidualReport verify_classical_relations(const ClassicalIrrep& cl);

// Images of the classical generators rebuilt from deformed matrices via
// a forward solution.
struct ClassicalImages {
    PolyMatrix Jp, J0, Jm;
};

ClassicalImages classical_images(const ForwardSolution& fwd, const GenSet& g);

// Round trip: rebuild the classical triple from a deformed irrep and
// report entrywise differences against the standard basis matrices.
struct ReconstructionReport {
    ClassicalImages images;
    PolyMatrix diff_Jp, diff_J0, diff_Jm;

    bool exact() const;
};

ReconstructionReport reconstruct_classical(const MapSpec& map, const JordanianIrrep& rep);

// Residuals of the two derivation identities, one per sample series:
// [H, f(T - 1)] = (T^2 - 1) f'(T - 1) and [J0, g(hJp)] = 2 hJp g'(hJp).
// Sample series must carry at least one order beyond the matrix
// nilpotency index so the derivatives stay exact.
ResidualReport commutator_identity_checks(const JordanianIrrep& rep,
                                          const std::vector<WSeries>& fs,
                                          const std::vector<WSeries>& gs);

} // namespace jtk
