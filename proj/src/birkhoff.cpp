#include "p1/birkhoff.hpp"

#include <algorithm>
#include <random>

#include "p1/linsolve.hpp"

namespace p1 {

bool verify_witness(const BirkhoffWitness& w, const LaurentMatrix& T) {
    if (w.p.rows() != T.rows() || w.q.rows() != T.rows()) return false;
    if (w.d.rank() != T.rows()) return false;
    if (!all_entries_in(w.p, SubringClass::PolyInT)) return false;
    if (!all_entries_in(w.q, SubringClass::PolyInTInv)) return false;
    if (!ring_membership(determinant(w.p), SubringClass::ConstUnit)) return false;
    if (!ring_membership(determinant(w.q), SubringClass::ConstUnit)) return false;
    if (!std::is_sorted(w.d.exponents.rbegin(), w.d.exponents.rend())) return false;
    const auto diag = LaurentMatrix::diagonal_monomials(T.field(), w.d.exponents);
    return w.p * diag * w.q == T;
}

namespace {

// rows of the bounded-degree gauge: solutions p of "p * T has its j-th entry
// exponent capped by cap", encoded over the coefficients of p
std::vector<std::vector<LaurentPoly>> gauge_row_space(const LaurentMatrix& T, int cap,
                                                      int degree) {
    const int n = T.rows();
    const FieldDescriptor field = T.field();
    const int max_exp = T.max_exponent();
    const int min_exp = T.min_exponent();

    // unknowns x[k][e] = coefficient of t^e in p_k, e in [0, degree]
    const auto var = [&](int k, int e) { return k * (degree + 1) + e; };
    const int num_vars = n * (degree + 1);

    std::vector<std::vector<Scalar>> rows;
    const Scalar zero(field, 0);
    for (int j = 0; j < n; ++j)
        for (int f = cap + 1; f <= degree + max_exp; ++f) {
            std::vector<Scalar> row(num_vars, zero);
            bool nonzero = false;
            const int e_lo = std::max(0, f - max_exp);
            const int e_hi = std::min(degree, f - min_exp);
            for (int e = e_lo; e <= e_hi; ++e)
                for (int k = 0; k < n; ++k) {
                    Scalar c = T.at(k, j).coefficient(f - e);
                    if (!c.is_zero()) {
                        row[var(k, e)] = std::move(c);
                        nonzero = true;
                    }
                }
            if (nonzero) rows.push_back(std::move(row));
        }

    std::vector<std::vector<LaurentPoly>> basis;
    for (const auto& vec : kernel_basis(field, std::move(rows), num_vars)) {
        std::vector<LaurentPoly> poly_row(n, LaurentPoly(field));
        for (int k = 0; k < n; ++k)
            for (int e = 0; e <= degree; ++e) poly_row[k].add_term(e, vec[var(k, e)]);
        basis.push_back(std::move(poly_row));
    }
    return basis;
}

} // namespace

BirkhoffWitness birkhoff_factorize(const TransitionBundle& e, std::uint64_t seed) {
    const LaurentMatrix& T = e.transition();
    const int n = e.rank();
    const FieldDescriptor field = e.field();
    const SplittingType type = splitting_type(e);
    const int spread = type.exponents.front() - type.exponents.back();

    std::mt19937_64 rng(seed);
    for (int degree = std::max(1, spread), step = 0; step < 16; degree *= 2, ++step) {
        // one independent row pick per diagonal slot; any independent picks
        // have constant determinant automatically, because det(gauge * T) is
        // exponent-capped by the degree of det(T) while det(gauge) is in k[t]
        PolyRankTracker tracker(field, n);
        LaurentMatrix gauge(field, n, n); // the inverse-side gauge, rows picked below
        bool ok = true;
        // caps descend with i, so the row spaces are nested; filling the
        // tightest row first means each later row has a strictly larger
        // space to dodge the span of the earlier picks
        for (int i = n - 1; i >= 0 && ok; --i) {
            const auto basis = gauge_row_space(T, type.exponents[i], degree);
            bool picked = false;
            for (const auto& row : basis) {
                if (!tracker.try_add(row)) continue;
                for (int k = 0; k < n; ++k) gauge.set(i, k, row[k]);
                picked = true;
                break;
            }
            for (int attempt = 0; attempt < 200 && !picked && !basis.empty(); ++attempt) {
                std::vector<LaurentPoly> row(n, LaurentPoly(field));
                for (const auto& b : basis) {
                    std::uniform_int_distribution<long> coef(-4, 4);
                    const Scalar c(field, coef(rng));
                    if (c.is_zero()) continue;
                    for (int k = 0; k < n; ++k)
                        row[k] += b[k] * LaurentPoly::term(c, 0);
                }
                if (tracker.try_add(row)) {
                    for (int k = 0; k < n; ++k) gauge.set(i, k, row[k]);
                    picked = true;
                }
            }
            ok = picked;
        }
        if (!ok) continue;

        std::vector<int> neg;
        for (int a : type.exponents) neg.push_back(-a);
        BirkhoffWitness w{inverse(gauge), type, (gauge * T).row_shifted(neg)};
        if (verify_witness(w, T)) return w;
    }
    fail(ErrorKind::InternalSearchFailure, "gauge degree ladder exhausted");
}

HNFiltration hn_filtration(const TransitionBundle& e, std::uint64_t seed) {
    BirkhoffWitness w = birkhoff_factorize(e, seed);
    HNFiltration out{{}, w.p, w.q};
    for (int a : w.d.exponents) {
        if (!out.steps.empty() && out.steps.back().slope == a)
            ++out.steps.back().rank;
        else
            out.steps.push_back(HNStep{a, 1});
    }
    return out;
}

} // namespace p1
