#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "p1/laurent.hpp"
#include "p1/matrix.hpp"
#include "p1/scalar.hpp"
#include "test_support.hpp"

using namespace p1;
using p1::testing::lp;
using p1::testing::make_matrix;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor F5 = FieldDescriptor::prime_field(5);

Scalar random_scalar(const FieldDescriptor& field, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    if (field.kind == FieldKind::PrimeField)
        return Scalar(field, num(rng));
    std::uniform_int_distribution<long> den(1, 12);
    return Scalar(field, num(rng), den(rng));
}

LaurentPoly random_poly(const FieldDescriptor& field, std::mt19937_64& rng,
                        int min_exp = -3, int max_exp = 3) {
    std::uniform_int_distribution<int> exp(min_exp, max_exp);
    std::uniform_int_distribution<int> count(0, 4);
    LaurentPoly p(field);
    const int k = count(rng);
    for (int i = 0; i < k; ++i) p.add_term(exp(rng), random_scalar(field, rng));
    return p;
}

LaurentMatrix random_matrix(const FieldDescriptor& field, int n, std::mt19937_64& rng) {
    LaurentMatrix m(field, n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.set(r, c, random_poly(field, rng));
    return m;
}

} // namespace

TEST_CASE("rational scalar arithmetic") {
    Scalar half(Q, 1, 2), third(Q, 1, 3);
    CHECK(half + third == Scalar(Q, 5, 6));
    CHECK(half * Scalar(Q, 0) == Scalar(Q, 0));
    CHECK(-half == Scalar(Q, -1, 2));
    CHECK(half.inverse() == Scalar(Q, 2));
    CHECK(Scalar(Q, -4, -6) == Scalar(Q, 2, 3)); // canonical reduction
    CHECK_THROWS_AS(Scalar(Q, 0).inverse(), Error);
    CHECK_THROWS_AS(half + Scalar(F5, 1), Error);
}

TEST_CASE("prime field scalar arithmetic") {
    CHECK(Scalar(F5, 2).inverse() == Scalar(F5, 3));
    CHECK(Scalar(F5, 4) + Scalar(F5, 3) == Scalar(F5, 2));
    CHECK(Scalar(F5, -1) == Scalar(F5, 4));
    CHECK(Scalar(F5, 2) * Scalar(F5, 3) == Scalar(F5, 1));
    CHECK(Scalar(F5, 1, 2) == Scalar(F5, 3)); // fraction = num * den^-1
    CHECK_THROWS_AS(Scalar(F5, 5).inverse(), Error);
    CHECK_THROWS_AS(FieldDescriptor::prime_field(6), Error);
    CHECK_THROWS_AS(FieldDescriptor::prime_field(0), Error);
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937_64 rng(7001);
    for (const auto& field : {Q, F5}) {
        for (int i = 0; i < 200; ++i) {
            Scalar a = random_scalar(field, rng);
            Scalar b = random_scalar(field, rng);
            Scalar c = random_scalar(field, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Scalar(field, 0));
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(field, 1));
        }
    }
}

TEST_CASE("laurent polynomial arithmetic") {
    CHECK(lp("1 + t", Q) * lp("1 - t", Q) == lp("1 - t^2", Q));
    CHECK(lp("t^-1", Q) * lp("t", Q) == lp("1", Q));
    CHECK(lp("2*t", F5) * lp("3*t^-1", F5) == lp("1", F5));
    CHECK((lp("t + 1", Q) - lp("t", Q)) == lp("1", Q));
    CHECK((lp("t", Q) - lp("t", Q)).is_zero());
    CHECK(lp("0", Q).is_zero());
    CHECK_THROWS_AS(lp("t", Q) + lp("t", F5), Error);
}

TEST_CASE("laurent exponent range and shifts") {
    LaurentPoly p = lp("3*t^2 - 1/2*t^-1", Q);
    CHECK(p.min_exponent() == -1);
    CHECK(p.max_exponent() == 2);
    CHECK(p.shifted(3) == lp("3*t^5 - 1/2*t^2", Q));
    CHECK(p.substitute_t_inverse() == lp("-1/2*t + 3*t^-2", Q));
    CHECK_THROWS_AS(LaurentPoly(Q).min_exponent(), Error);
}

TEST_CASE("laurent text form round trips") {
    CHECK(lp("3*t^2 - 1/2*t^-1", Q).str() == "3*t^2 - 1/2*t^-1");
    CHECK(lp("-t + 1", Q).str() == "-t + 1");
    CHECK(LaurentPoly(Q).str() == "0");
    CHECK(lp("4*t^3", F5).str() == "4*t^3");

    std::mt19937_64 rng(7002);
    for (const auto& field : {Q, F5}) {
        for (int i = 0; i < 200; ++i) {
            LaurentPoly p = random_poly(field, rng);
            CHECK(parse_laurent(p.str(), field) == p);
        }
    }
}

TEST_CASE("laurent parse errors carry position context") {
    CHECK_THROWS_AS(parse_laurent("t^", Q), Error);
    CHECK_THROWS_AS(parse_laurent("3**t", Q), Error);
    CHECK_THROWS_AS(parse_laurent("", Q), Error);
    CHECK_THROWS_AS(parse_laurent("1/0", Q), Error);
    try {
        parse_laurent("t + #", Q);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
    }
}

TEST_CASE("ring membership") {
    CHECK(ring_membership(lp("t^2 + 1", Q), SubringClass::PolyInT));
    CHECK_FALSE(ring_membership(lp("t^-1", Q), SubringClass::PolyInT));
    CHECK(ring_membership(lp("3*t^4", Q), SubringClass::MonomialUnit));
    CHECK(ring_membership(lp("t^-2 + 1", Q), SubringClass::PolyInTInv));
    CHECK(ring_membership(lp("5", Q), SubringClass::ConstUnit));
    CHECK_FALSE(ring_membership(lp("t", Q), SubringClass::ConstUnit));
    CHECK_FALSE(ring_membership(LaurentPoly(Q), SubringClass::MonomialUnit));
    CHECK(ring_membership(LaurentPoly(Q), SubringClass::PolyInT));
    CHECK(ring_membership(LaurentPoly(Q), SubringClass::PolyInTInv));
}

TEST_CASE("matrix multiply") {
    auto dt = LaurentMatrix::diagonal_monomials(Q, {1});
    auto dti = LaurentMatrix::diagonal_monomials(Q, {-1});
    CHECK(dt * dti == LaurentMatrix::identity(Q, 1));

    auto shear_up = make_matrix(Q, {{"1", "t"}, {"0", "1"}});
    auto shear_down = make_matrix(Q, {{"1", "-t"}, {"0", "1"}});
    CHECK(shear_up * shear_down == LaurentMatrix::identity(Q, 2));

    std::mt19937_64 rng(7003);
    for (int i = 0; i < 30; ++i) {
        auto a = random_matrix(Q, 3, rng);
        CHECK(a * LaurentMatrix::identity(Q, 3) == a);
        CHECK(LaurentMatrix::identity(Q, 3) * a == a);
    }
    CHECK_THROWS_AS(dt * shear_up, Error);
}

TEST_CASE("matrix determinant") {
    CHECK(determinant(LaurentMatrix::diagonal_monomials(Q, {2, -1})) == lp("t", Q));
    CHECK(determinant(make_matrix(Q, {{"t", "1"}, {"0", "t^-1"}})) == lp("1", Q));
    CHECK(determinant(make_matrix(Q, {{"1", "1"}, {"1", "1"}})).is_zero());

    // multiplicativity, also exercising the cofactor path at n = 7
    std::mt19937_64 rng(7004);
    for (const auto& field : {Q, F5}) {
        for (int n : {2, 3, 7}) {
            auto a = random_matrix(field, n, rng);
            auto b = random_matrix(field, n, rng);
            CHECK(determinant(a * b) == determinant(a) * determinant(b));
        }
    }
}

TEST_CASE("matrix inverse") {
    auto a = make_matrix(Q, {{"t", "1"}, {"0", "t^-1"}});
    CHECK(inverse(a) == make_matrix(Q, {{"t^-1", "-1"}, {"0", "t"}}));
    CHECK(inverse(LaurentMatrix::diagonal_monomials(Q, {3, -2})) ==
          LaurentMatrix::diagonal_monomials(Q, {-3, 2}));
    CHECK_THROWS_AS(inverse(make_matrix(Q, {{"1", "1"}, {"1", "1"}})), Error);
    try {
        inverse(make_matrix(Q, {{"1", "1"}, {"1", "1"}}));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAUnit);
    }

    std::mt19937_64 rng(7005);
    for (const auto& field : {Q, F5}) {
        for (int i = 0; i < 20; ++i) {
            // random product of shears and a monomial diagonal is always a unit
            auto m = LaurentMatrix::diagonal_monomials(field, {1, 0, -2});
            for (int s = 0; s < 4; ++s) {
                std::uniform_int_distribution<int> pick(0, 2);
                int r = pick(rng), c = pick(rng);
                if (r == c) continue;
                auto shear = LaurentMatrix::identity(field, 3);
                shear.set(r, c, random_poly(field, rng));
                m = m * shear;
            }
            CHECK(m * inverse(m) == LaurentMatrix::identity(field, 3));
            CHECK(inverse(m) * m == LaurentMatrix::identity(field, 3));
        }
    }
}

TEST_CASE("invert variable") {
    CHECK(invert_variable(LaurentMatrix::diagonal_monomials(Q, {2, -1})) ==
          LaurentMatrix::diagonal_monomials(Q, {-2, 1}));
    CHECK(invert_variable(make_matrix(Q, {{"t", "1"}, {"0", "t^-1"}})) ==
          make_matrix(Q, {{"t^-1", "1"}, {"0", "t"}}));

    std::mt19937_64 rng(7006);
    for (int i = 0; i < 30; ++i) {
        auto a = random_matrix(Q, 3, rng);
        auto b = random_matrix(Q, 3, rng);
        CHECK(invert_variable(invert_variable(a)) == a);
        CHECK(invert_variable(a * b) == invert_variable(a) * invert_variable(b));
    }
}

TEST_CASE("matrix entry and shape validation") {
    CHECK_THROWS_AS(LaurentMatrix(Q, 0, 2), Error);
    LaurentMatrix m(Q, 2, 2);
    CHECK_THROWS_AS(m.set(0, 0, lp("1", F5)), Error);
    CHECK_THROWS_AS(m + LaurentMatrix(Q, 2, 3), Error);
    CHECK_THROWS_AS(determinant(LaurentMatrix(Q, 2, 3)), Error);
}
