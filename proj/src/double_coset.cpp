#include "p1/double_coset.hpp"

#include <algorithm>

namespace p1 {

namespace {

Cocharacter lambda_from_swapped_type(const SplittingType& type, int n) {
    // the swapped-chart exponents come out weakly decreasing; negating and
    // reversing gives a weakly decreasing tuple again
    std::vector<int> weights;
    weights.reserve(type.exponents.size());
    for (auto it = type.exponents.rbegin(); it != type.exponents.rend(); ++it)
        weights.push_back(-*it);
    return Cocharacter{GroupTag{GroupFamily::GL, n}, std::move(weights)};
}

LaurentMatrix reversal_permutation(const FieldDescriptor& field, int n) {
    LaurentMatrix w(field, n, n);
    for (int i = 0; i < n; ++i) w.set(i, n - 1 - i, LaurentPoly(field, 1));
    return w;
}

} // namespace

Cocharacter double_coset_type(const LaurentMatrix& g) {
    const TransitionBundle swapped(invert_variable(g));
    return lambda_from_swapped_type(splitting_type(swapped), g.rows());
}

bool verify_coset_witness(const DoubleCosetWitness& w, const LaurentMatrix& g) {
    if (!all_entries_in(w.u, SubringClass::PolyInTInv)) return false;
    if (!all_entries_in(w.v, SubringClass::PolyInT)) return false;
    if (!ring_membership(determinant(w.u), SubringClass::ConstUnit)) return false;
    if (!ring_membership(determinant(w.v), SubringClass::ConstUnit)) return false;
    if (!w.lambda.is_dominant()) return false;
    const auto diag = LaurentMatrix::diagonal_monomials(g.field(), w.lambda.weights);
    if (w.u * diag * w.v != g) return false;
    // uniformization form: conjugating the multipliers away leaves t^lambda
    return inverse(w.u) * g * inverse(w.v) == diag;
}

DoubleCosetWitness double_coset_witnesses(const LaurentMatrix& g, std::uint64_t seed) {
    const TransitionBundle swapped(invert_variable(g));
    const BirkhoffWitness b = birkhoff_factorize(swapped, seed);

    // swap charts back: the factorization becomes g = u' * diag(t^-D) * v'
    // with u' over k[t^-1] and v' over k[t]; -D is weakly increasing, so a
    // reversal permutation on both sides of the diagonal restores dominance
    const FieldDescriptor field = g.field();
    const int n = g.rows();
    const LaurentMatrix w0 = reversal_permutation(field, n);
    const LaurentMatrix u = invert_variable(b.p) * w0;
    const LaurentMatrix v = w0 * invert_variable(b.q);

    DoubleCosetWitness witness{u, lambda_from_swapped_type(b.d, n), v};
    if (!verify_coset_witness(witness, g))
        fail(ErrorKind::InternalSearchFailure, "transported factorization failed the recheck");
    return witness;
}

} // namespace p1
