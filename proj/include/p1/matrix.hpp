#pragma once

#include <vector>

#include "p1/laurent.hpp"

namespace p1 {

/// Dense matrix over k[t, t^-1], row-major. All entries share one field.
class LaurentMatrix {
  public:
    LaurentMatrix(const FieldDescriptor& field, int rows, int cols);

    static LaurentMatrix identity(const FieldDescriptor& field, int n);
    /// diag(c * t^(e_i)) with unit coefficient.
    static LaurentMatrix diagonal_monomials(const FieldDescriptor& field,
                                            const std::vector<int>& exponents);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldDescriptor& field() const { return desc_; }

    const LaurentPoly& at(int r, int c) const { return entries_[index(r, c)]; }
    void set(int r, int c, LaurentPoly value);

    bool is_square() const { return rows_ == cols_; }

    /// Extremes over all nonzero entries; 0 for the zero matrix.
    int min_exponent() const;
    int max_exponent() const;

    LaurentMatrix transpose() const;
    /// Entry-wise t -> t^-1.
    LaurentMatrix substitute_t_inverse() const;
    /// Multiply every entry by t^shift.
    LaurentMatrix shifted(int shift) const;
    /// Scale row r by t^shift.
    LaurentMatrix row_shifted(const std::vector<int>& shifts) const;

    bool operator==(const LaurentMatrix& other) const;
    bool operator!=(const LaurentMatrix& other) const { return !(*this == other); }

  private:
    int index(int r, int c) const;

    FieldDescriptor desc_;
    int rows_;
    int cols_;
    std::vector<LaurentPoly> entries_;
};

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);

/// Exact determinant. Division-free subset expansion for n <= 6, recursive
/// cofactor expansion above.
LaurentPoly determinant(const LaurentMatrix& a);

/// Exact inverse; requires det to be a monomial unit c*t^d (NotAUnit
/// otherwise). The product A * A^-1 is re-checked exactly when expensive
/// checks are enabled.
LaurentMatrix inverse(const LaurentMatrix& a);

/// Entry-wise exponent negation e -> -e (chart swap t <-> t^-1).
LaurentMatrix invert_variable(const LaurentMatrix& a);

bool all_entries_in(const LaurentMatrix& a, SubringClass ring);

} // namespace p1
