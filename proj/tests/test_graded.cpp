#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "p1/graded.hpp"
#include "p1/sampling.hpp"

using namespace p1;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

GradedVectorSpace graded(std::initializer_list<std::pair<int, int>> entries) {
    GradedVectorSpace v;
    for (const auto& [w, d] : entries) v.add(w, d);
    return v;
}

} // namespace

TEST_CASE("associated bundle of a graded space") {
    // weight -1 is the standard representation and lands on degree -1
    CHECK(splitting_type(e_functor(graded({{-1, 1}}), Q)) == SplittingType{{-1}});
    CHECK(splitting_type(e_functor(graded({{0, 1}}), Q)) == SplittingType{{0}});
    const TransitionBundle e = e_functor(graded({{1, 1}, {0, 2}}), Q);
    CHECK(e.transition() == LaurentMatrix::diagonal_monomials(Q, {1, 0, 0}));
    CHECK(splitting_type(e) == SplittingType{{1, 0, 0}});
    CHECK_THROWS_AS(e_functor(GradedVectorSpace{}, Q), Error);
}

TEST_CASE("weights read back from a bundle") {
    CHECK(inverse_e(e_functor(graded({{2, 2}, {-1, 1}}), Q)) == graded({{2, 2}, {-1, 1}}));
    CHECK(inverse_e(TransitionBundle(LaurentMatrix::identity(Q, 3))) == graded({{0, 3}}));

    std::mt19937_64 rng(11001);
    for (int i = 0; i < 50; ++i) {
        const GradedVectorSpace v = sample_graded(rng, 3, 4);
        CHECK(inverse_e(e_functor(v, Q)) == v);
    }
}

TEST_CASE("filtration and graded-piece dimensions") {
    const GradedVectorSpace v = graded({{2, 2}, {0, 1}, {-1, 1}});
    CHECK(fil_and_gr(v, 0) == FilGrDims{3, 1});
    CHECK(fil_and_gr(v, -5) == FilGrDims{4, 0});
    CHECK(fil_and_gr(v, 3) == FilGrDims{0, 0});
    CHECK(fil_and_gr(v, 2) == FilGrDims{2, 2});
}

TEST_CASE("graded constructions") {
    CHECK(graded_construction(GradedConstructionKind::Dual, graded({{1, 2}})) ==
          graded({{-1, 2}}));
    CHECK(graded_construction(GradedConstructionKind::Tensor, graded({{1, 1}}),
                              graded({{-1, 1}})) == graded({{0, 1}}));
    CHECK(graded_construction(GradedConstructionKind::DirectSum, graded({{1, 1}}),
                              graded({{1, 2}, {0, 1}})) == graded({{1, 3}, {0, 1}}));

    std::mt19937_64 rng(11002);
    for (int i = 0; i < 10; ++i) {
        const GradedVectorSpace v = sample_graded(rng, 2, 3);
        const GradedVectorSpace w = sample_graded(rng, 2, 3);
        const auto tensored = graded_construction(GradedConstructionKind::Tensor, v, w);
        CHECK(splitting_type(e_functor(tensored, Q)) ==
              splitting_type(bundle_construction(ConstructionKind::Tensor, e_functor(v, Q),
                                                 e_functor(w, Q))));
    }
}

TEST_CASE("hom dimensions through the graded dictionary") {
    std::mt19937_64 rng(11003);
    for (int i = 0; i < 10; ++i) {
        const GradedVectorSpace v = sample_graded(rng, 2, 3);
        const GradedVectorSpace w = sample_graded(rng, 2, 3);
        int expect = 0, weight_preserving = 0;
        for (const auto& [wa, da] : v.dims)
            for (const auto& [wb, db] : w.dims) {
                expect += da * db * std::max(0, wb - wa + 1);
                if (wa == wb) weight_preserving += da * db;
            }
        const int hom = hom_dimension(e_functor(v, Q), e_functor(w, Q));
        CHECK(hom == expect);
        // maps of graded spaces preserve weights, so the bundle side is at
        // least as big: the functor is faithful but not full
        CHECK(hom >= weight_preserving);
    }
}
