#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "p1/cocharacter.hpp"
#include "p1/double_coset.hpp"
#include "p1/sampling.hpp"
#include "test_support.hpp"

using namespace p1;
using p1::testing::make_matrix;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor F5 = FieldDescriptor::prime_field(5);

Cocharacter gl(std::vector<int> w) {
    const int n = static_cast<int>(w.size());
    return make_cocharacter(GroupTag{GroupFamily::GL, n}, std::move(w));
}

} // namespace

TEST_CASE("cocharacter construction and lattice relations") {
    CHECK(gl({1, 0}).weights == std::vector<int>{1, 0});
    CHECK(make_cocharacter(GroupTag{GroupFamily::SL, 2}, {-1, 1}).weights ==
          std::vector<int>{-1, 1});
    CHECK_THROWS_AS(make_cocharacter(GroupTag{GroupFamily::SL, 2}, {1, 1}), Error);
    // projective tuples normalize to the minimum-zero representative
    CHECK(make_cocharacter(GroupTag{GroupFamily::PGL, 2}, {3, 1}).weights ==
          std::vector<int>{2, 0});
    CHECK_THROWS_AS(make_cocharacter(GroupTag{GroupFamily::PGL, 1}, {0}), Error);
    CHECK_THROWS_AS(make_cocharacter(GroupTag{GroupFamily::GL, 2}, {1}), Error);
}

TEST_CASE("dominantize") {
    CHECK(dominantize(gl({0, 2, -1})).weights == std::vector<int>{2, 0, -1});
    CHECK(dominantize(make_cocharacter(GroupTag{GroupFamily::PGL, 2}, {1, 3})).weights ==
          std::vector<int>{2, 0});
    CHECK(dominantize(make_cocharacter(GroupTag{GroupFamily::SL, 2}, {-1, 1})).weights ==
          std::vector<int>{1, -1});
    CHECK(dominantize(gl({2, 0, -1})).is_dominant());
}

TEST_CASE("pushout bundles") {
    CHECK(splitting_type(cocharacter_pushout(gl({1, 0}), Q)) == SplittingType{{0, -1}});
    CHECK(cocharacter_pushout(gl({0, 0, 0}), Q).transition() ==
          LaurentMatrix::identity(Q, 3));
    CHECK(splitting_type(cocharacter_pushout(gl({-2}), Q)) == SplittingType{{2}});
    CHECK_THROWS_AS(cocharacter_pushout(
                        make_cocharacter(GroupTag{GroupFamily::SL, 2}, {1, -1}), Q),
                    Error);
}

TEST_CASE("bundles classify to dominant weight tuples") {
    CHECK(classify_bundle(make_bundle(LaurentMatrix::diagonal_monomials(Q, {-1}))).weights ==
          std::vector<int>{1});
    CHECK(classify_bundle(make_bundle(LaurentMatrix::identity(Q, 2))).weights ==
          std::vector<int>{0, 0});
    CHECK(classify_bundle(make_bundle(LaurentMatrix::diagonal_monomials(Q, {2, -1})))
              .weights == std::vector<int>{1, -2});

    // round trips in both directions
    std::mt19937_64 rng(15001);
    for (int i = 0; i < 20; ++i) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const Cocharacter chi = sample_cocharacter(GroupTag{GroupFamily::GL, n}, rng, 3);
        CHECK(classify_bundle(cocharacter_pushout(chi, Q)) == dominantize(chi));
    }
    for (int i = 0; i < 8; ++i) {
        const TransitionBundle e = sample_bundle(Q, rng, 2, -2, 2);
        CHECK(splitting_type(cocharacter_pushout(classify_bundle(e), Q)) ==
              splitting_type(e));
    }
}

TEST_CASE("determinant-one transitions classify to sum-zero tuples") {
    std::mt19937_64 rng(15002);
    for (int i = 0; i < 10; ++i) {
        LaurentMatrix m = sample_transition(Q, rng, 2, -2, 2);
        const LaurentPoly det = determinant(m);
        // rescale one row to make the determinant exactly 1
        const int d = det.min_exponent();
        const Scalar c = det.coefficient(d);
        LaurentMatrix fixed(Q, 2, 2);
        for (int j = 0; j < 2; ++j) {
            fixed.set(0, j, m.at(0, j).shifted(-d) * LaurentPoly::term(c.inverse(), 0));
            fixed.set(1, j, m.at(1, j));
        }
        const Cocharacter chi = classify_bundle(make_bundle(fixed));
        CHECK(chi.weights[0] + chi.weights[1] == 0);
    }
}

TEST_CASE("projective lifting") {
    CHECK(pgl_lift(make_cocharacter(GroupTag{GroupFamily::PGL, 2}, {1, 0})) == gl({1, 0}));
    CHECK(pgl_lift(make_cocharacter(GroupTag{GroupFamily::PGL, 3}, {2, 1, 0})) ==
          gl({2, 1, 0}));
    CHECK_THROWS_AS(pgl_lift(gl({1, 0})), Error);

    // lift then project is the identity on classes; dominance survives
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= a; ++b) {
            const auto rep = make_cocharacter(GroupTag{GroupFamily::PGL, 3}, {a, b, 0});
            const Cocharacter lifted = pgl_lift(dominantize(rep));
            CHECK(lifted.group.family == GroupFamily::GL);
            CHECK(lifted.is_dominant());
            CHECK(make_cocharacter(GroupTag{GroupFamily::PGL, 3}, lifted.weights) ==
                  dominantize(rep));
        }
}

TEST_CASE("coset types of the pinned examples") {
    CHECK(double_coset_type(make_matrix(Q, {{"t^2", "0"}, {"0", "t^-1"}})).weights ==
          std::vector<int>{2, -1});
    CHECK(double_coset_type(make_matrix(Q, {{"t", "1"}, {"0", "t^-1"}})).weights ==
          std::vector<int>{0, 0});
    CHECK_THROWS_AS(double_coset_type(make_matrix(Q, {{"1", "1"}, {"1", "1"}})), Error);

    // left multiplication by a chart-infinity unit preserves the type
    const LaurentMatrix g = make_matrix(Q, {{"t", "1"}, {"0", "t^-1"}});
    const LaurentMatrix u = make_matrix(Q, {{"1", "t^-1"}, {"0", "1"}});
    CHECK(double_coset_type(u * g) == double_coset_type(g));
}

TEST_CASE("diagonal normal forms") {
    std::mt19937_64 rng(15003);
    for (int i = 0; i < 20; ++i) {
        const int n = 1 + static_cast<int>(rng() % 3);
        std::vector<int> lambda(n);
        for (int& x : lambda) x = static_cast<int>(rng() % 7) - 3;
        const auto g = LaurentMatrix::diagonal_monomials(Q, lambda);
        const Cocharacter expect =
            dominantize(make_cocharacter(GroupTag{GroupFamily::GL, n}, lambda));
        CHECK(double_coset_type(g) == expect);
        const DoubleCosetWitness w = double_coset_witnesses(g, 15003 + i);
        CHECK(w.lambda == expect);
        CHECK(verify_coset_witness(w, g));
    }
}

TEST_CASE("coset witnesses for the pinned examples") {
    // the hand witness: matrices over the right rings whose product is g
    const LaurentMatrix g = make_matrix(Q, {{"t", "1"}, {"0", "t^-1"}});
    const DoubleCosetWitness hand{make_matrix(Q, {{"0", "1"}, {"-1", "t^-1"}}),
                                  make_cocharacter(GroupTag{GroupFamily::GL, 2}, {0, 0}),
                                  make_matrix(Q, {{"1", "0"}, {"t", "1"}})};
    CHECK(verify_coset_witness(hand, g));

    const DoubleCosetWitness computed = double_coset_witnesses(g);
    CHECK(computed.lambda.weights == std::vector<int>{0, 0});
    CHECK(verify_coset_witness(computed, g));

    // identity multipliers on a diagonal input
    const auto diag = LaurentMatrix::diagonal_monomials(Q, {2, -1});
    const DoubleCosetWitness w = double_coset_witnesses(diag);
    CHECK(w.lambda.weights == std::vector<int>{2, -1});
    CHECK(verify_coset_witness(w, diag));
}

TEST_CASE("coset type is invariant under chart-ring multipliers") {
    std::mt19937_64 rng(15004);
    for (const auto& field : {Q, F5}) {
        for (int i = 0; i < 6; ++i) {
            const int n = 2 + static_cast<int>(rng() % 2);
            const LaurentMatrix g = sample_transition(field, rng, n, -2, 2);
            const LaurentMatrix u =
                sample_unimodular(field, rng, n, SubringClass::PolyInTInv, 2);
            const LaurentMatrix v = sample_unimodular(field, rng, n, SubringClass::PolyInT, 2);
            CHECK(double_coset_type(u * g * v) == double_coset_type(g));

            const DoubleCosetWitness w = double_coset_witnesses(u * g * v, 15004 + i);
            CHECK(verify_coset_witness(w, u * g * v));
        }
    }
}
