#include "p1/laurent.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace p1 {

LaurentPoly::LaurentPoly(const FieldDescriptor& field, long constant) : desc_(field) {
    add_term(0, Scalar(field, constant));
}

LaurentPoly LaurentPoly::term(const Scalar& c, int exponent) {
    LaurentPoly p(c.field());
    p.add_term(exponent, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const FieldDescriptor& field, long c, int exponent) {
    return term(Scalar(field, c), exponent);
}

int LaurentPoly::min_exponent() const {
    if (is_zero()) fail(ErrorKind::InvalidArgument, "min_exponent of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (is_zero()) fail(ErrorKind::InvalidArgument, "max_exponent of zero polynomial");
    return coeffs_.rbegin()->first;
}

Scalar LaurentPoly::coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Scalar(desc_, 0) : it->second;
}

void LaurentPoly::add_term(int exponent, const Scalar& c) {
    if (c.field() != desc_)
        fail(ErrorKind::FieldMismatch, "coefficient field differs from polynomial field");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(desc_);
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    if (desc_ != other.desc_)
        fail(ErrorKind::FieldMismatch, "adding polynomials over different fields");
    for (const auto& [e, c] : other.coeffs_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    if (desc_ != other.desc_)
        fail(ErrorKind::FieldMismatch, "subtracting polynomials over different fields");
    for (const auto& [e, c] : other.coeffs_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.field() != b.field())
        fail(ErrorKind::FieldMismatch, "multiplying polynomials over different fields");
    LaurentPoly out(a.field());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const Scalar& c) {
    if (c.field() != desc_)
        fail(ErrorKind::FieldMismatch, "scaling polynomial by foreign scalar");
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [e, v] : coeffs_) v *= c;
    return *this;
}

LaurentPoly LaurentPoly::substitute_t_inverse() const {
    LaurentPoly out(desc_);
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(-e, c);
    return out;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
    LaurentPoly out(desc_);
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + shift, c);
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
    return desc_ == other.desc_ && coeffs_ == other.coeffs_;
}

bool ring_membership(const LaurentPoly& p, SubringClass ring) {
    switch (ring) {
    case SubringClass::PolyInT:
        return p.is_zero() || p.min_exponent() >= 0;
    case SubringClass::PolyInTInv:
        return p.is_zero() || p.max_exponent() <= 0;
    case SubringClass::ConstUnit:
        return p.term_count() == 1 && p.min_exponent() == 0;
    case SubringClass::MonomialUnit:
        return p.term_count() == 1;
    }
    return false;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending exponents
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const int e = it->first;
        Scalar c = it->second;
        std::string sign;
        if (desc_.kind == FieldKind::Rationals && c.rational() < 0) {
            sign = first ? "-" : " - ";
            c = -c;
        } else {
            sign = first ? "" : " + ";
        }
        os << sign;
        const bool coeff_is_one = c.is_one();
        if (e == 0) {
            os << c.str();
        } else {
            if (!coeff_is_one) os << c.str() << "*";
            os << (e == 1 ? "t" : "t^" + std::to_string(e));
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.str();
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void error(const std::string& what) {
        fail(ErrorKind::ParseError,
             what + " at position " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
    }
};

long parse_integer(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    bool neg = cur.consume('-');
    if (!neg) cur.consume('+');
    cur.skip_ws();
    std::string digits;
    while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
        digits.push_back(cur.text[cur.pos++]);
    if (digits.empty()) {
        cur.pos = start;
        cur.error("expected integer");
    }
    try {
        long v = std::stol(digits);
        return neg ? -v : v;
    } catch (const std::out_of_range&) {
        cur.pos = start;
        cur.error("integer out of range");
    }
}

// term := coefficient ['*'? t-power] | ['-'|'+'] t-power
void parse_term(Cursor& cur, const FieldDescriptor& field, LaurentPoly& acc, bool negate) {
    Scalar coeff(field, 1);
    bool saw_coeff = false;

    char c = cur.peek();
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t mark = cur.pos;
        bool neg = cur.consume('-');
        if (!neg) cur.consume('+');
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            cur.pos = mark;
            long num = parse_integer(cur);
            long den = 1;
            if (cur.consume('/')) den = parse_integer(cur);
            if (den == 0) cur.error("zero denominator");
            coeff = Scalar(field, num, den);
            saw_coeff = true;
        } else if (cur.peek() == 't') {
            // bare sign in front of t
            if (neg) coeff = -coeff;
        } else {
            cur.error("expected coefficient or t");
        }
    }

    int exponent = 0;
    bool saw_t = false;
    cur.consume('*');
    if (cur.peek() == 't') {
        ++cur.pos;
        saw_t = true;
        exponent = 1;
        if (cur.consume('^')) exponent = static_cast<int>(parse_integer(cur));
    }
    if (!saw_coeff && !saw_t) cur.error("expected term");
    if (negate) coeff = -coeff;
    acc.add_term(exponent, coeff);
}

} // namespace

LaurentPoly parse_laurent(std::string_view text, const FieldDescriptor& field) {
    Cursor cur{text};
    LaurentPoly acc(field);
    if (cur.done()) cur.error("empty polynomial");
    parse_term(cur, field, acc, false);
    while (!cur.done()) {
        bool negate;
        if (cur.consume('+')) {
            negate = false;
        } else if (cur.consume('-')) {
            negate = true;
        } else {
            cur.error("expected '+' or '-'");
        }
        parse_term(cur, field, acc, negate);
    }
    return acc;
}

} // namespace p1
