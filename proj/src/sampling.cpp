#include "p1/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace p1 {

Scalar sample_scalar(const FieldDescriptor& field, std::mt19937_64& rng, bool nonzero) {
    for (;;) {
        Scalar s(field, 0);
        if (field.kind == FieldKind::PrimeField) {
            std::uniform_int_distribution<long> pick(0, field.characteristic - 1);
            s = Scalar(field, pick(rng));
        } else {
            std::uniform_int_distribution<long> num(-9, 9);
            std::uniform_int_distribution<long> den(1, 4);
            s = Scalar(field, num(rng), den(rng));
        }
        if (!nonzero || !s.is_zero()) return s;
    }
}

LaurentPoly sample_poly(const FieldDescriptor& field, std::mt19937_64& rng, int min_exp,
                        int max_exp, int max_terms) {
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<int> exp(min_exp, max_exp);
    LaurentPoly p(field);
    const int k = count(rng);
    for (int i = 0; i < k; ++i) p.add_term(exp(rng), sample_scalar(field, rng));
    return p;
}

namespace {

// shear with one off-diagonal entry; determinant 1 regardless of the entry
LaurentMatrix shear(const FieldDescriptor& field, std::mt19937_64& rng, int n,
                    int min_exp, int max_exp) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    int r = pick(rng), c = pick(rng);
    while (c == r) c = pick(rng);
    LaurentMatrix m = LaurentMatrix::identity(field, n);
    m.set(r, c, sample_poly(field, rng, min_exp, max_exp, 2));
    return m;
}

LaurentMatrix permutation_matrix(const FieldDescriptor& field, std::mt19937_64& rng, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    LaurentMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, perm[i], LaurentPoly(field, 1));
    return m;
}

} // namespace

LaurentMatrix sample_transition(const FieldDescriptor& field, std::mt19937_64& rng, int n,
                                int min_exp, int max_exp) {
    std::uniform_int_distribution<int> diag_exp(min_exp, max_exp);
    std::uniform_int_distribution<int> num_shears(0, 3);
    for (;;) {
        std::vector<int> exponents(n);
        for (int& e : exponents) e = diag_exp(rng);
        LaurentMatrix m = LaurentMatrix::diagonal_monomials(field, exponents);
        const int k = num_shears(rng);
        for (int i = 0; i < k && n > 1; ++i) {
            LaurentMatrix s = shear(field, rng, n, -1, 1);
            m = (rng() & 1) ? m * s : s * m;
        }
        if (m.min_exponent() >= min_exp && m.max_exponent() <= max_exp) return m;
    }
}

TransitionBundle sample_bundle(const FieldDescriptor& field, std::mt19937_64& rng, int n,
                               int min_exp, int max_exp) {
    return TransitionBundle(sample_transition(field, rng, n, min_exp, max_exp));
}

LaurentMatrix sample_unimodular(const FieldDescriptor& field, std::mt19937_64& rng, int n,
                                SubringClass ring, int degree) {
    if (ring != SubringClass::PolyInT && ring != SubringClass::PolyInTInv)
        fail(ErrorKind::InvalidArgument, "multipliers live in a chart ring");
    const int lo = ring == SubringClass::PolyInT ? 0 : -degree;
    const int hi = ring == SubringClass::PolyInT ? degree : 0;
    LaurentMatrix m = permutation_matrix(field, rng, n);
    std::uniform_int_distribution<int> num_shears(1, 3);
    const int k = num_shears(rng);
    for (int i = 0; i < k && n > 1; ++i) {
        LaurentMatrix s = shear(field, rng, n, lo, hi);
        m = (rng() & 1) ? m * s : s * m;
    }
    // constant diagonal keeps the determinant constant and nonzero
    LaurentMatrix d(field, n, n);
    for (int i = 0; i < n; ++i) d.set(i, i, LaurentPoly::term(sample_scalar(field, rng, true), 0));
    return m * d;
}

GradedVectorSpace sample_graded(std::mt19937_64& rng, int max_weight, int max_total_dim) {
    std::uniform_int_distribution<int> weight(-max_weight, max_weight);
    std::uniform_int_distribution<int> total(1, max_total_dim);
    GradedVectorSpace v;
    const int k = total(rng);
    for (int i = 0; i < k; ++i) v.add(weight(rng), 1);
    return v;
}

Cocharacter sample_cocharacter(GroupTag group, std::mt19937_64& rng, int max_entry) {
    std::uniform_int_distribution<int> entry(-max_entry, max_entry);
    std::vector<int> w(group.n);
    for (int& x : w) x = entry(rng);
    if (group.family == GroupFamily::SL && group.n > 0) {
        const int sum = std::accumulate(w.begin(), w.end() - 1, 0);
        w.back() = -sum;
    }
    return make_cocharacter(group, std::move(w));
}

} // namespace p1
