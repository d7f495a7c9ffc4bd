#pragma once
// equiv.hpp -- similarity transformations between deformed structures
// built from different maps: the connecting series lambda solved two
// independent ways, the companion series mu, and the conjugating matrix
// built from either.

#include <string>
#include <vector>

#include "jtk/maps.hpp"
#include "jtk/pmatrix.hpp"
#include "jtk/rational.hpp"
#include "jtk/wseries.hpp"

namespace jtk {

// Coefficients c_1..c_order of the connecting series lambda(z); c[i]
// is the coefficient of z^{i+1}.
struct SimilaritySeries {
    std::string source, target;
    int order = 0;
    std::vector<Rational> c;

    // lambda as a series of the requested order; degrees beyond the
    // stored order are padded with zeros (callers must keep those
    // degrees multiplying vanishing matrix powers).
    WSeries as_series(int order) const;
    SimilaritySeries negated() const;
};

// Coefficients d_1..d_order of the companion series mu(s); d[i] is the
// coefficient of s^{i+1}.
struct MuSeries {
    int order = 0;
    std::vector<Rational> d;

    WSeries as_series(int order) const;
};

// rho = phi_target composed with the reversion of phi_source.
WSeries target_series(const MapSpec& source, const MapSpec& target, int order);

// Time-1 flow of the vector field -2 lambda(z) z d/dz applied to z;
// equals the conjugation action of the similarity matrix on hJp.
WSeries flow_time1(const SimilaritySeries& lam, int order);

// Solve flow_time1(lambda) = rho degree by degree (scalar method).
// Requires rho.order() >= N + 2.
SimilaritySeries lambda_solve(const WSeries& rho, int N);

// Independent matrix-level solver: conjugates hJp at spin (N+1)/2 and
// reads coefficients off the top row.  Cross-checks lambda_solve and
// throws, printing both results, on any mismatch.
SimilaritySeries lambda_oracle(const WSeries& rho, int N);

// lambda connecting `from` to `to`, with the names filled in.
SimilaritySeries similarity(const MapSpec& from, const MapSpec& to, int N);

// mu(s) = -(1+s) * lambda((1 - (1+s)^{-2})/2); the coefficient of
// s^{order+1} is carried only so matrix evaluation at nilpotency index
// order+1 is legal -- it multiplies a vanishing power there.
MuSeries mu_from_lambda(const SimilaritySeries& lam);

// exp(lambda(hJp) J0) on the spin-j classical matrices.  Requires
// lam.order >= two_j.
PolyMatrix build_U(const SimilaritySeries& lam, int two_j);

} // namespace jtk
