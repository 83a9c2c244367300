#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "p1/error.hpp"

namespace p1 {

enum class FieldKind { Rationals, PrimeField };

/// Base field of every computation: exact rationals or a prime field F_p
/// with word-size p.
struct FieldDescriptor {
    FieldKind kind = FieldKind::Rationals;
    std::uint32_t characteristic = 0; // 0 for Q, prime p otherwise

    static FieldDescriptor rationals() { return {FieldKind::Rationals, 0}; }
    static FieldDescriptor prime_field(std::uint32_t p);

    bool operator==(const FieldDescriptor&) const = default;
};

std::string to_string(const FieldDescriptor& field);

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; prime-field residues live in [0, p).
class Scalar {
  public:
    Scalar() : desc_(FieldDescriptor::rationals()), rat_(0) {}

    /// Integer n interpreted in the given field.
    Scalar(const FieldDescriptor& field, long n);
    /// Fraction num/den; over F_p this is num * den^-1.
    Scalar(const FieldDescriptor& field, long num, long den);
    /// Exact rational over Q.
    Scalar(const FieldDescriptor& field, const mpq_class& value);

    const FieldDescriptor& field() const { return desc_; }

    bool is_zero() const;
    bool is_one() const;

    /// Rational value; only valid over Q.
    const mpq_class& rational() const { return rat_; }
    /// Residue in [0, p); only valid over F_p.
    std::uint64_t residue() const { return res_; }

    Scalar operator-() const;
    Scalar inverse() const; // DivisionByZero on 0

    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    /// "p/q" over Q, the residue digit string over F_p.
    std::string str() const;

  private:
    void require_same_field(const Scalar& other) const;

    FieldDescriptor desc_;
    mpq_class rat_;          // kind == Rationals
    std::uint64_t res_ = 0;  // kind == PrimeField
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace p1
