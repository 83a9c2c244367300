#pragma once

#include "p1/birkhoff.hpp"

namespace p1 {

/// Morphism of bundles as chart-local data: m0 over k[t] on the first chart,
/// m1 over k[t^-1] on the second, each of shape target-rank x source-rank.
/// The pair is a bundle map exactly when m0 * T_source = T_target * m1.
struct BundleMorphism {
    TransitionBundle source;
    TransitionBundle target;
    LaurentMatrix m0;
    LaurentMatrix m1;
};

struct MorphismReport {
    bool valid = false;
    bool hn_preserved = false;
    bool operator==(const MorphismReport&) const = default;
};

/// valid: shapes, chart rings, and the overlap equation all hold.
/// hn_preserved: in diagonalizing coordinates of source and target, no block
/// maps a slope-a coordinate to a slope-b coordinate with b < a. Reported
/// false whenever the morphism is not valid.
MorphismReport validate_morphism(const BundleMorphism& f, std::uint64_t seed = kDefaultSeed);

/// Basis of Hom(E, F): one morphism per monomial block allowed by the
/// splitting types, transported out of diagonal coordinates; its size always
/// equals hom_dimension(E, F).
std::vector<BundleMorphism> hom_spanning_set(const TransitionBundle& e,
                                             const TransitionBundle& f,
                                             std::uint64_t seed = kDefaultSeed);

/// The two-term sequence witnessing that the slope filtration is not exact:
/// the degree -1 line bundle includes into the trivial rank-2 bundle with
/// quotient of degree +1, so the middle term's slope multiset {0,0} differs
/// from the outer terms' {-1,1} even though ranks and degrees agree.
struct EulerWitness {
    TransitionBundle sub;
    TransitionBundle mid;
    TransitionBundle quot;
    BundleMorphism inclusion;
    BundleMorphism projection;
    std::vector<int> mid_slopes;   // {0, 0}
    std::vector<int> outer_slopes; // {-1, 1}
};

EulerWitness euler_witness(const FieldDescriptor& field);

} // namespace p1
