#include "p1/scalar.hpp"

#include <ostream>

namespace p1 {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotABundle: return "NotABundle";
    case ErrorKind::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
    case ErrorKind::InternalSearchFailure: return "InternalSearchFailure";
    }
    return "UnknownError";
}

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1;
    base %= p;
    while (exp) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

} // namespace

FieldDescriptor FieldDescriptor::prime_field(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
        fail(ErrorKind::InvalidArgument, "characteristic must be a prime < 2^31, got " + std::to_string(p));
    return {FieldKind::PrimeField, p};
}

std::string to_string(const FieldDescriptor& field) {
    if (field.kind == FieldKind::Rationals) return "Q";
    return "F" + std::to_string(field.characteristic);
}

Scalar::Scalar(const FieldDescriptor& field, long n) : desc_(field) {
    if (desc_.kind == FieldKind::Rationals) {
        rat_ = n;
    } else {
        const std::int64_t p = desc_.characteristic;
        std::int64_t r = n % p;
        if (r < 0) r += p;
        res_ = static_cast<std::uint64_t>(r);
    }
}

Scalar::Scalar(const FieldDescriptor& field, long num, long den) : Scalar(field, num) {
    if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
    *this /= Scalar(field, den);
}

Scalar::Scalar(const FieldDescriptor& field, const mpq_class& value) : desc_(field) {
    if (desc_.kind != FieldKind::Rationals)
        fail(ErrorKind::FieldMismatch, "rational literal used over a prime field");
    rat_ = value;
    rat_.canonicalize();
}

bool Scalar::is_zero() const {
    return desc_.kind == FieldKind::Rationals ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return desc_.kind == FieldKind::Rationals ? rat_ == 1 : res_ == 1;
}

void Scalar::require_same_field(const Scalar& other) const {
    if (desc_ != other.desc_)
        fail(ErrorKind::FieldMismatch,
             to_string(desc_) + " vs " + to_string(other.desc_));
}

Scalar Scalar::operator-() const {
    Scalar out(*this);
    if (desc_.kind == FieldKind::Rationals) {
        out.rat_ = -rat_;
    } else if (res_ != 0) {
        out.res_ = desc_.characteristic - res_;
    }
    return out;
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    Scalar out(*this);
    if (desc_.kind == FieldKind::Rationals) {
        out.rat_ = 1 / rat_;
    } else {
        // Fermat: a^(p-2) mod p
        out.res_ = mod_pow(res_, desc_.characteristic - 2, desc_.characteristic);
    }
    return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
    require_same_field(other);
    if (desc_.kind == FieldKind::Rationals) {
        rat_ += other.rat_;
    } else {
        res_ += other.res_;
        if (res_ >= desc_.characteristic) res_ -= desc_.characteristic;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
    require_same_field(other);
    if (desc_.kind == FieldKind::Rationals) {
        rat_ -= other.rat_;
    } else {
        res_ += desc_.characteristic - other.res_;
        if (res_ >= desc_.characteristic) res_ -= desc_.characteristic;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
    require_same_field(other);
    if (desc_.kind == FieldKind::Rationals) {
        rat_ *= other.rat_;
    } else {
        res_ = res_ * other.res_ % desc_.characteristic;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
    return *this *= other.inverse();
}

bool Scalar::operator==(const Scalar& other) const {
    if (desc_ != other.desc_) return false;
    return desc_.kind == FieldKind::Rationals ? rat_ == other.rat_ : res_ == other.res_;
}

std::string Scalar::str() const {
    if (desc_.kind == FieldKind::Rationals) return rat_.get_str();
    return std::to_string(res_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

} // namespace p1
