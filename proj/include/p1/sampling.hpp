#pragma once

#include <random>

#include "p1/bundle.hpp"
#include "p1/cocharacter.hpp"
#include "p1/graded.hpp"

namespace p1 {

/// Deterministic generators for the randomized suites. Every generator takes
/// the engine by reference so call sites control seeding and sharding.

Scalar sample_scalar(const FieldDescriptor& field, std::mt19937_64& rng, bool nonzero = false);

LaurentPoly sample_poly(const FieldDescriptor& field, std::mt19937_64& rng, int min_exp,
                        int max_exp, int max_terms);

/// Transition matrix with monomial-unit determinant and every entry exponent
/// inside [min_exp, max_exp]: a monomial diagonal stirred by unimodular
/// shears, resampled until the exponent window holds.
LaurentMatrix sample_transition(const FieldDescriptor& field, std::mt19937_64& rng, int n,
                                int min_exp, int max_exp);

TransitionBundle sample_bundle(const FieldDescriptor& field, std::mt19937_64& rng, int n,
                               int min_exp, int max_exp);

/// Invertible matrix with constant nonzero determinant and entries in the
/// requested chart ring (PolyInT or PolyInTInv): a product of shears, a
/// permutation, and a constant diagonal. `degree` bounds each shear entry's
/// exponent magnitude.
LaurentMatrix sample_unimodular(const FieldDescriptor& field, std::mt19937_64& rng, int n,
                                SubringClass ring, int degree);

GradedVectorSpace sample_graded(std::mt19937_64& rng, int max_weight, int max_total_dim);

Cocharacter sample_cocharacter(GroupTag group, std::mt19937_64& rng, int max_entry);

} // namespace p1
