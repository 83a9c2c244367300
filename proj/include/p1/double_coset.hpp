#pragma once

#include "p1/birkhoff.hpp"
#include "p1/cocharacter.hpp"

namespace p1 {

/// Certified normal form g = u * diag(t^lambda) * v for an invertible Laurent
/// matrix g: u over k[t^-1] and v over k[t], both with constant nonzero
/// determinant, lambda dominant. The rearrangement u^-1 * g * v^-1 = t^lambda
/// exhibits g as trivial away from each chart's origin.
struct DoubleCosetWitness {
    LaurentMatrix u;
    Cocharacter lambda;
    LaurentMatrix v;
};

/// The dominant weight tuple indexing the coset of g. Computed through the
/// chart swap t <-> t^-1, which turns left k[t^-1]-multipliers into the gauge
/// group the splitting engine already quotients by.
Cocharacter double_coset_type(const LaurentMatrix& g);

/// Type plus exact witness, transported from a factorization of the
/// chart-swapped matrix; the reversal permutation keeps lambda dominant.
DoubleCosetWitness double_coset_witnesses(const LaurentMatrix& g,
                                          std::uint64_t seed = kDefaultSeed);

bool verify_coset_witness(const DoubleCosetWitness& w, const LaurentMatrix& g);

} // namespace p1
