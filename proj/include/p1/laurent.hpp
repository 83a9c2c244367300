#pragma once

#include <map>
#include <string>
#include <string_view>

#include "p1/scalar.hpp"

namespace p1 {

/// Which subring of k[t,t^-1] a Laurent polynomial is tested against.
enum class SubringClass {
    PolyInT,      // k[t]: all exponents >= 0
    PolyInTInv,   // k[t^-1]: all exponents <= 0
    ConstUnit,    // nonzero constant
    MonomialUnit, // single nonzero term c*t^d
};

/// Element of k[t, t^-1] with exact coefficients. Canonical form stores no
/// zero coefficients; the zero polynomial has an empty term map.
class LaurentPoly {
  public:
    explicit LaurentPoly(const FieldDescriptor& field) : desc_(field) {}
    LaurentPoly(const FieldDescriptor& field, long constant);

    /// Single term c * t^e.
    static LaurentPoly term(const Scalar& c, int exponent);
    static LaurentPoly monomial(const FieldDescriptor& field, long c, int exponent);

    const FieldDescriptor& field() const { return desc_; }
    const std::map<int, Scalar>& terms() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    int term_count() const { return static_cast<int>(coeffs_.size()); }

    /// Lowest/highest exponent with nonzero coefficient; only valid when nonzero.
    int min_exponent() const;
    int max_exponent() const;

    Scalar coefficient(int exponent) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly& operator*=(const LaurentPoly& other) { return *this = *this * other; }
    LaurentPoly& operator*=(const Scalar& c);

    /// t -> t^-1 on every term.
    LaurentPoly substitute_t_inverse() const;
    /// Multiply by t^shift.
    LaurentPoly shifted(int shift) const;

    bool operator==(const LaurentPoly& other) const;
    bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

    /// Canonical text form, descending exponents: "3*t^2 - 1/2*t^-1".
    std::string str() const;

    /// Add c * t^e, dropping the entry if the sum cancels.
    void add_term(int exponent, const Scalar& c);

  private:
    FieldDescriptor desc_;
    std::map<int, Scalar> coeffs_;
};

bool ring_membership(const LaurentPoly& p, SubringClass ring);

/// Parse the canonical text form. Accepts integer, "p/q" and residue
/// coefficients, "t", "t^e" and "c*t^e" factors, with arbitrary spacing.
LaurentPoly parse_laurent(std::string_view text, const FieldDescriptor& field);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

} // namespace p1
