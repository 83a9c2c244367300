#include "p1/matrix.hpp"

#include <algorithm>

#include "p1/config.hpp"

namespace p1 {

LaurentMatrix::LaurentMatrix(const FieldDescriptor& field, int rows, int cols)
    : desc_(field), rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0)
        fail(ErrorKind::DimensionMismatch, "matrix dimensions must be positive");
    entries_.assign(static_cast<std::size_t>(rows) * cols, LaurentPoly(field));
}

int LaurentMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        fail(ErrorKind::DimensionMismatch, "matrix index out of range");
    return r * cols_ + c;
}

LaurentMatrix LaurentMatrix::identity(const FieldDescriptor& field, int n) {
    LaurentMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, LaurentPoly(field, 1));
    return m;
}

LaurentMatrix LaurentMatrix::diagonal_monomials(const FieldDescriptor& field,
                                                const std::vector<int>& exponents) {
    const int n = static_cast<int>(exponents.size());
    LaurentMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, LaurentPoly::monomial(field, 1, exponents[i]));
    return m;
}

void LaurentMatrix::set(int r, int c, LaurentPoly value) {
    if (value.field() != desc_)
        fail(ErrorKind::FieldMismatch, "entry field differs from matrix field");
    entries_[index(r, c)] = std::move(value);
}

int LaurentMatrix::min_exponent() const {
    int m = 0;
    bool seen = false;
    for (const auto& e : entries_)
        if (!e.is_zero()) {
            m = seen ? std::min(m, e.min_exponent()) : e.min_exponent();
            seen = true;
        }
    return m;
}

int LaurentMatrix::max_exponent() const {
    int m = 0;
    bool seen = false;
    for (const auto& e : entries_)
        if (!e.is_zero()) {
            m = seen ? std::max(m, e.max_exponent()) : e.max_exponent();
            seen = true;
        }
    return m;
}

LaurentMatrix LaurentMatrix::transpose() const {
    LaurentMatrix out(desc_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
    return out;
}

LaurentMatrix LaurentMatrix::substitute_t_inverse() const {
    LaurentMatrix out(desc_, rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(r, c, at(r, c).substitute_t_inverse());
    return out;
}

LaurentMatrix LaurentMatrix::shifted(int shift) const {
    LaurentMatrix out(desc_, rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(r, c, at(r, c).shifted(shift));
    return out;
}

LaurentMatrix LaurentMatrix::row_shifted(const std::vector<int>& shifts) const {
    if (static_cast<int>(shifts.size()) != rows_)
        fail(ErrorKind::DimensionMismatch, "one shift per row required");
    LaurentMatrix out(desc_, rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(r, c, at(r, c).shifted(shifts[r]));
    return out;
}

bool LaurentMatrix::operator==(const LaurentMatrix& other) const {
    if (desc_ != other.desc_ || rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != other.entries_[i]) return false;
    return true;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.field() != b.field())
        fail(ErrorKind::FieldMismatch, "multiplying matrices over different fields");
    if (a.cols() != b.rows())
        fail(ErrorKind::DimensionMismatch, "inner dimensions disagree");
    LaurentMatrix out(a.field(), a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) {
            LaurentPoly acc(a.field());
            for (int k = 0; k < a.cols(); ++k) {
                if (a.at(r, k).is_zero() || b.at(k, c).is_zero()) continue;
                acc += a.at(r, k) * b.at(k, c);
            }
            out.set(r, c, std::move(acc));
        }
    return out;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.field() != b.field())
        fail(ErrorKind::FieldMismatch, "adding matrices over different fields");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(ErrorKind::DimensionMismatch, "shape mismatch in matrix sum");
    LaurentMatrix out(a.field(), a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c) + b.at(r, c));
    return out;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.field() != b.field())
        fail(ErrorKind::FieldMismatch, "subtracting matrices over different fields");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(ErrorKind::DimensionMismatch, "shape mismatch in matrix difference");
    LaurentMatrix out(a.field(), a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c) - b.at(r, c));
    return out;
}

namespace {

// Subset dynamic program over column sets: division-free, one pass per row.
LaurentPoly det_subset_dp(const LaurentMatrix& a) {
    const int n = a.rows();
    const FieldDescriptor field = a.field();
    // minor[S] = signed minor of first popcount(S) rows on column set S
    std::vector<LaurentPoly> minor(std::size_t(1) << n, LaurentPoly(field));
    minor[0] = LaurentPoly(field, 1);
    for (int r = 0; r < n; ++r) {
        // iterate sets of size r downward so each is consumed once
        for (std::uint32_t s = (1u << n) - 1; s + 1 > 0; --s) {
            if (__builtin_popcount(s) != r || minor[s].is_zero()) continue;
            int sign = 1;
            for (int c = 0; c < n; ++c) {
                if (s & (1u << c)) continue;
                if (!a.at(r, c).is_zero()) {
                    LaurentPoly contrib = a.at(r, c) * minor[s];
                    if (sign < 0) contrib = -contrib;
                    minor[s | (1u << c)] += contrib;
                }
                sign = -sign;
            }
            if (r + 1 < n) minor[s] = LaurentPoly(field); // free early
        }
    }
    return minor[(1u << n) - 1];
}

LaurentPoly det_cofactor(const LaurentMatrix& a, std::vector<int>& cols) {
    const FieldDescriptor field = a.field();
    const int r = a.rows() - static_cast<int>(cols.size());
    if (cols.empty()) return LaurentPoly(field, 1);
    LaurentPoly acc(field);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const int c = cols[k];
        if (a.at(r, c).is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        LaurentPoly sub = det_cofactor(a, rest);
        LaurentPoly contrib = a.at(r, c) * sub;
        if (k % 2 == 1) contrib = -contrib;
        acc += contrib;
    }
    return acc;
}

} // namespace

LaurentPoly determinant(const LaurentMatrix& a) {
    if (!a.is_square()) fail(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    if (a.rows() <= 6) return det_subset_dp(a);
    std::vector<int> cols(a.cols());
    for (int c = 0; c < a.cols(); ++c) cols[c] = c;
    return det_cofactor(a, cols);
}

LaurentMatrix inverse(const LaurentMatrix& a) {
    if (!a.is_square()) fail(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    const LaurentPoly det = determinant(a);
    if (!ring_membership(det, SubringClass::MonomialUnit))
        fail(ErrorKind::NotAUnit, "determinant is not a monomial unit: " + det.str());
    const int d = det.min_exponent();
    const Scalar c = det.coefficient(d);
    const LaurentPoly det_inv = LaurentPoly::term(c.inverse(), -d);

    const int n = a.rows();
    LaurentMatrix out(a.field(), n, n);
    if (n == 1) {
        out.set(0, 0, det_inv);
    } else {
        // adjugate via cofactors
        for (int r = 0; r < n; ++r)
            for (int col = 0; col < n; ++col) {
                LaurentMatrix sub(a.field(), n - 1, n - 1);
                for (int i = 0, si = 0; i < n; ++i) {
                    if (i == r) continue;
                    for (int j = 0, sj = 0; j < n; ++j) {
                        if (j == col) continue;
                        sub.set(si, sj, a.at(i, j));
                        ++sj;
                    }
                    ++si;
                }
                LaurentPoly cof = determinant(sub) * det_inv;
                if ((r + col) % 2 == 1) cof = -cof;
                out.set(col, r, std::move(cof)); // transposed placement
            }
    }
#if P1_EXPENSIVE_CHECKS
    if (out * a != LaurentMatrix::identity(a.field(), n))
        fail(ErrorKind::InternalSearchFailure, "inverse verification failed");
#endif
    return out;
}

LaurentMatrix invert_variable(const LaurentMatrix& a) {
    return a.substitute_t_inverse();
}

bool all_entries_in(const LaurentMatrix& a, SubringClass ring) {
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (!ring_membership(a.at(r, c), ring)) return false;
    return true;
}

} // namespace p1
