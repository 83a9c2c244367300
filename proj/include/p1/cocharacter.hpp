#pragma once

#include <string>
#include <vector>

#include "p1/bundle.hpp"

namespace p1 {

enum class GroupFamily { GL, SL, PGL };

std::string to_string(GroupFamily family);

struct GroupTag {
    GroupFamily family = GroupFamily::GL;
    int n = 1;

    bool operator==(const GroupTag&) const = default;
};

/// Integer weight tuple of a diagonal one-parameter subgroup. SL tuples sum
/// to zero; PGL tuples are class representatives modulo the all-ones vector,
/// canonical form having minimum entry 0.
struct Cocharacter {
    GroupTag group;
    std::vector<int> weights;

    bool operator==(const Cocharacter&) const = default;
    bool is_dominant() const;
    std::string str() const;
};

/// Validates the lattice relations and, for PGL, rewrites the tuple to the
/// canonical minimum-zero representative.
Cocharacter make_cocharacter(GroupTag group, std::vector<int> weights);

/// Weights sorted weakly decreasing; the PGL representative is then shifted
/// so its last (minimal) entry is 0.
Cocharacter dominantize(const Cocharacter& chi);

/// Bundle associated to the diagonal one-parameter subgroup: weight m on a
/// coordinate contributes a t^-m transition entry, so weight 1 carries the
/// degree -1 line bundle.
TransitionBundle cocharacter_pushout(const Cocharacter& chi, const FieldDescriptor& field);

/// The unique dominant diagonal cocharacter whose pushout is isomorphic to E.
Cocharacter classify_bundle(const TransitionBundle& e);

/// Same weight tuple reinterpreted in the general linear lattice; projects
/// back to the argument's class and preserves dominance.
Cocharacter pgl_lift(const Cocharacter& chi);

} // namespace p1
