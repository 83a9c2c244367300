#pragma once

#include <cstdint>

#include "p1/bundle.hpp"

namespace p1 {

inline constexpr std::uint64_t kDefaultSeed = 20260819;

/// Certified factorization T = P * diag(t^D) * Q with P over k[t], Q over
/// k[t^-1], both of constant nonzero determinant. Every field is verified by
/// exact multiplication before a witness is handed out, so holding one is
/// proof that the bundle is isomorphic to the diagonal model diag(t^D); P and
/// Q double as trivializations of the bundle on the two charts.
struct BirkhoffWitness {
    LaurentMatrix p;
    SplittingType d;
    LaurentMatrix q;
};

/// Factor the transition matrix through its diagonal model. The search for
/// the chart-0 gauge runs over polynomial matrices of bounded degree with an
/// escalating bound; randomized tie-breaking is driven by the seed. Exhausting
/// the ladder raises InternalSearchFailure, which indicates a defect (a
/// factorization always exists).
BirkhoffWitness birkhoff_factorize(const TransitionBundle& e,
                                   std::uint64_t seed = kDefaultSeed);

/// Re-run the exact checks on a claimed witness against a transition matrix.
bool verify_witness(const BirkhoffWitness& w, const LaurentMatrix& T);

struct HNStep {
    int slope = 0;
    int rank = 0;
    bool operator==(const HNStep&) const = default;
};

/// Slope filtration data: strictly decreasing slopes with multiplicities, and
/// the coordinate change (from a factorization witness) in which the step of
/// slope >= i is spanned by the leading coordinates.
struct HNFiltration {
    std::vector<HNStep> steps;
    LaurentMatrix basis_p; // chart-0 coordinate change, T = basis_p * diag * basis_q
    LaurentMatrix basis_q; // chart-1 coordinate change
};

HNFiltration hn_filtration(const TransitionBundle& e, std::uint64_t seed = kDefaultSeed);

} // namespace p1
