#pragma once

#include <map>

#include "p1/bundle.hpp"

namespace p1 {

/// Finite-dimensional integer-graded vector space, the combinatorial model of
/// a multiplicative-group representation. Weight i acts through z -> z^-i, so
/// weight -1 is the standard one-dimensional representation.
struct GradedVectorSpace {
    std::map<int, int> dims; // weight -> dimension, no zero entries

    int total_dim() const;
    void add(int weight, int dim);

    bool operator==(const GradedVectorSpace&) const = default;
};

struct FilGrDims {
    int fil_dim = 0; // sum of dimensions at weights >= i
    int gr_dim = 0;  // dimension at weight i exactly
    bool operator==(const FilGrDims&) const = default;
};

enum class GradedConstructionKind { Dual, Tensor, DirectSum };

/// Associated bundle: each weight-i dimension contributes a diagonal t^i, so
/// the weight multiset becomes the splitting type (weight -1 gives the
/// degree -1 line bundle). Blocks are ordered by descending weight.
TransitionBundle e_functor(const GradedVectorSpace& v, const FieldDescriptor& field);

/// Splitting multiplicities read back as weights; left inverse of e_functor
/// up to isomorphism of the bundle.
GradedVectorSpace inverse_e(const TransitionBundle& e);

FilGrDims fil_and_gr(const GradedVectorSpace& v, int i);

GradedVectorSpace graded_construction(GradedConstructionKind kind, const GradedVectorSpace& v);
GradedVectorSpace graded_construction(GradedConstructionKind kind, const GradedVectorSpace& v,
                                      const GradedVectorSpace& w);

} // namespace p1
