#include "p1/bundle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "p1/config.hpp"
#include "p1/linsolve.hpp"

namespace p1 {

TransitionBundle::TransitionBundle(LaurentMatrix T) : transition_(std::move(T)), degree_(0) {
    if (!transition_.is_square())
        fail(ErrorKind::NotABundle, "transition matrix must be square");
    const LaurentPoly det = determinant(transition_);
    if (!ring_membership(det, SubringClass::MonomialUnit))
        fail(ErrorKind::NotABundle,
             "transition determinant must be a monomial unit, got " + det.str());
    degree_ = det.min_exponent();
}

int SplittingType::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

std::string SplittingType::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i) os << ',';
        os << exponents[i];
    }
    os << ')';
    return os.str();
}

TransitionBundle make_bundle(LaurentMatrix T) { return TransitionBundle(std::move(T)); }

TransitionBundle twist(const TransitionBundle& e, int m) {
    return TransitionBundle(e.transition().shifted(m));
}

namespace detail {

std::vector<int> truncated_h0_profile(const LaurentMatrix& T, int m_lo, int m_hi, int B) {
    const int n = T.rows();
    const FieldDescriptor field = T.field();
    const int min_exp = T.min_exponent();
    const int max_exp = T.max_exponent();
    const int num_vars = n * (B + 1);

    // unknowns x[e][j] = coefficient of t^e in the j-th chart-1 component,
    // e in [-B, 0]; a section of the twist by m is T*s1 with no exponent
    // below -m, so the constraint rows for twist m are exactly the layers
    // f <= -m-1 of "coefficient of t^f in (T*s1)_i vanishes"
    const auto col = [&](int e, int j) { return (e + B) * n + j; };

    const int f_min = min_exp - B;
    const int f_top = std::min(max_exp, -m_lo - 1); // deepest layer any twist needs

    IncrementalRank elim(field);
    // rank_after[f - f_min] = rank once layers up to f are absorbed
    std::vector<int> rank_after;
    rank_after.reserve(std::max(0, f_top - f_min + 1));
    for (int f = f_min; f <= f_top; ++f) {
        for (int i = 0; i < n; ++i) {
            SparseRow row;
            const int e_lo = std::max(-B, f - max_exp);
            const int e_hi = std::min(0, f - min_exp);
            for (int e = e_lo; e <= e_hi; ++e)
                for (int j = 0; j < n; ++j) {
                    Scalar c = T.at(i, j).coefficient(f - e);
                    if (!c.is_zero()) row.emplace_back(col(e, j), std::move(c));
                }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            elim.add_row(std::move(row));
        }
        rank_after.push_back(elim.rank());
    }

    std::vector<int> dims;
    dims.reserve(m_hi - m_lo + 1);
    for (int m = m_lo; m <= m_hi; ++m) {
        const int threshold = -m - 1; // constraints are layers f <= threshold
        int rank = 0;
        if (threshold >= f_min)
            rank = rank_after[std::min(threshold, f_top) - f_min];
        dims.push_back(num_vars - rank);
    }
    return dims;
}

std::vector<int> stable_h0_profile(const LaurentMatrix& T, int m_lo, int m_hi) {
    const int n = T.rows();
    const int range = T.max_exponent() - T.min_exponent();
    int B = n * range + std::max(m_hi, 0) - std::min(m_lo, 0) + 1;
    std::vector<int> prev = truncated_h0_profile(T, m_lo, m_hi, B);
    for (int step = 0; step < 24; ++step) {
        B *= 2;
        std::vector<int> cur = truncated_h0_profile(T, m_lo, m_hi, B);
        if (cur == prev) return cur;
        prev = std::move(cur);
    }
    fail(ErrorKind::InternalSearchFailure, "section dimensions never stabilized");
}

} // namespace detail

int h0_dimension(const TransitionBundle& e) {
    return detail::stable_h0_profile(e.transition(), 0, 0).front();
}

namespace {

// decode the multiset {a_i} from section dimensions of twists in [-W-1, W];
// empty result means the window was too narrow
std::vector<int> decode_splitting(const std::vector<int>& dims, int W, int n, int degree) {
    const auto h0 = [&](int m) { return dims[m + W + 1]; };
    // count_ge(v) = #{i : a_i >= v}, read off as a section-count difference
    std::vector<int> exponents;
    int total = 0, weighted = 0;
    for (int v = W; v >= -W; --v) {
        const int count_ge = h0(-v) - h0(-v - 1);
        const int count_gt = (v == W) ? 0 : h0(-v - 1) - h0(-v - 2);
        const int mult = count_ge - count_gt;
        if (mult < 0) return {};
        for (int r = 0; r < mult; ++r) exponents.push_back(v);
        total += mult;
        weighted += mult * v;
    }
    if (total != n || weighted != degree) return {};
    // certify: the decoded type must reproduce every dimension in the window
    for (int m = -W - 1; m <= W; ++m) {
        int expect = 0;
        for (int a : exponents) expect += std::max(0, a + m + 1);
        if (expect != h0(m)) return {};
    }
    return exponents;
}

} // namespace

SplittingType splitting_type(const TransitionBundle& e) {
    const LaurentMatrix& T = e.transition();
    const int n = e.rank();
    const int mag = std::max({std::abs(T.min_exponent()), std::abs(T.max_exponent()), 1});
    for (int W = n * mag + 1; W <= (1 << 20); W *= 2) {
        std::vector<int> dims = detail::stable_h0_profile(T, -W - 1, W);
        std::vector<int> exponents = decode_splitting(dims, W, n, e.degree());
        if (!exponents.empty()) return SplittingType{std::move(exponents)};
    }
    fail(ErrorKind::InternalSearchFailure, "splitting window escalation exhausted");
}

CohomologyDims cohomology_of_type(const SplittingType& type) {
    CohomologyDims out;
    for (int a : type.exponents) {
        out.h0 += std::max(0, a + 1);
        out.h1 += std::max(0, -a - 1);
    }
    return out;
}

CohomologyDims cohomology_dims(const TransitionBundle& e) {
    CohomologyDims out = cohomology_of_type(splitting_type(e));
#if P1_EXPENSIVE_CHECKS
    if (out.h0 != h0_dimension(e))
        fail(ErrorKind::InternalSearchFailure, "section count disagrees with splitting type");
#endif
    return out;
}

namespace {

TransitionBundle dual_bundle(const TransitionBundle& e) {
    return TransitionBundle(inverse(e.transition()).transpose());
}

TransitionBundle tensor_bundle(const TransitionBundle& e, const TransitionBundle& f) {
    const LaurentMatrix& A = e.transition();
    const LaurentMatrix& B = f.transition();
    const int na = A.rows(), nb = B.rows();
    LaurentMatrix out(A.field(), na * nb, na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l)
                    out.set(i * nb + k, j * nb + l, A.at(i, j) * B.at(k, l));
    return TransitionBundle(std::move(out));
}

TransitionBundle direct_sum_bundle(const TransitionBundle& e, const TransitionBundle& f) {
    const LaurentMatrix& A = e.transition();
    const LaurentMatrix& B = f.transition();
    const int na = A.rows(), nb = B.rows();
    LaurentMatrix out(A.field(), na + nb, na + nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) out.set(i, j, A.at(i, j));
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) out.set(na + i, na + j, B.at(i, j));
    return TransitionBundle(std::move(out));
}

TransitionBundle exterior2_bundle(const TransitionBundle& e) {
    const LaurentMatrix& A = e.transition();
    const int n = A.rows();
    if (n < 2) fail(ErrorKind::DimensionMismatch, "wedge square needs rank at least 2");
    std::vector<std::pair<int, int>> basis; // pairs i < j, lexicographic
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) basis.emplace_back(i, j);
    const int m = static_cast<int>(basis.size());
    LaurentMatrix out(A.field(), m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            const auto [i, j] = basis[r];
            const auto [k, l] = basis[c];
            out.set(r, c, A.at(i, k) * A.at(j, l) - A.at(i, l) * A.at(j, k));
        }
    return TransitionBundle(std::move(out));
}

TransitionBundle sym2_bundle(const TransitionBundle& e) {
    const LaurentMatrix& A = e.transition();
    const int n = A.rows();
    std::vector<std::pair<int, int>> basis; // pairs i <= j
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) basis.emplace_back(i, j);
    const int m = static_cast<int>(basis.size());
    LaurentMatrix out(A.field(), m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            const auto [i, j] = basis[r];
            const auto [k, l] = basis[c];
            // action on the monomial x_k x_l, read off in the x_i x_j basis
            LaurentPoly v = A.at(i, k) * A.at(j, l);
            if (i != j) v += A.at(j, k) * A.at(i, l);
            out.set(r, c, std::move(v));
        }
    return TransitionBundle(std::move(out));
}

} // namespace

TransitionBundle bundle_construction(ConstructionKind kind, const TransitionBundle& e) {
    switch (kind) {
        case ConstructionKind::Dual: return dual_bundle(e);
        case ConstructionKind::Exterior2: return exterior2_bundle(e);
        case ConstructionKind::Sym2: return sym2_bundle(e);
        default:
            fail(ErrorKind::InvalidArgument, "construction needs a second bundle");
    }
}

TransitionBundle bundle_construction(ConstructionKind kind, const TransitionBundle& e,
                                     const TransitionBundle& f) {
    if (e.field() != f.field())
        fail(ErrorKind::FieldMismatch, "constructions need one common field");
    switch (kind) {
        case ConstructionKind::Tensor: return tensor_bundle(e, f);
        case ConstructionKind::DirectSum: return direct_sum_bundle(e, f);
        default:
            fail(ErrorKind::InvalidArgument, "construction takes a single bundle");
    }
}

bool is_semistable(const TransitionBundle& e) {
    const SplittingType type = splitting_type(e);
    return type.exponents.front() == type.exponents.back();
}

int hom_dimension_of_types(const SplittingType& a, const SplittingType& b) {
    int total = 0;
    for (int ai : a.exponents)
        for (int bj : b.exponents) total += std::max(0, bj - ai + 1);
    return total;
}

int hom_dimension(const TransitionBundle& e, const TransitionBundle& f) {
    if (e.field() != f.field())
        fail(ErrorKind::FieldMismatch, "hom dimension needs one common field");
    return hom_dimension_of_types(splitting_type(e), splitting_type(f));
}

} // namespace p1
