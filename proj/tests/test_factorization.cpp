#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "p1/birkhoff.hpp"
#include "p1/linsolve.hpp"
#include "p1/morphism.hpp"
#include "p1/sampling.hpp"
#include "test_support.hpp"

using namespace p1;
using p1::testing::make_matrix;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor F5 = FieldDescriptor::prime_field(5);

} // namespace

TEST_CASE("factorization of the pinned examples") {
    const auto diag = make_bundle(make_matrix(Q, {{"t^2", "0"}, {"0", "t^-1"}}));
    BirkhoffWitness w = birkhoff_factorize(diag);
    CHECK(w.d == SplittingType{{2, -1}});
    CHECK(verify_witness(w, diag.transition()));

    const auto upper = make_bundle(make_matrix(Q, {{"t", "1"}, {"0", "t^-1"}}));
    w = birkhoff_factorize(upper);
    CHECK(w.d == SplittingType{{1, -1}});
    CHECK(verify_witness(w, upper.transition()));

    const auto lower = make_bundle(make_matrix(Q, {{"t", "0"}, {"1", "t^-1"}}));
    w = birkhoff_factorize(lower);
    CHECK(w.d == SplittingType{{0, 0}});
    CHECK(verify_witness(w, lower.transition()));
}

TEST_CASE("witness checks validate known factorizations and reject fakes") {
    // hand factorizations of the pinned examples
    CHECK(verify_witness(BirkhoffWitness{make_matrix(Q, {{"1", "t"}, {"0", "1"}}),
                                         SplittingType{{1, -1}},
                                         LaurentMatrix::identity(Q, 2)},
                         make_matrix(Q, {{"t", "1"}, {"0", "t^-1"}})));
    CHECK(verify_witness(BirkhoffWitness{make_matrix(Q, {{"t", "-1"}, {"1", "0"}}),
                                         SplittingType{{0, 0}},
                                         make_matrix(Q, {{"1", "t^-1"}, {"0", "1"}})},
                         make_matrix(Q, {{"t", "0"}, {"1", "t^-1"}})));
    // wrong diagonal
    CHECK_FALSE(verify_witness(BirkhoffWitness{LaurentMatrix::identity(Q, 2),
                                               SplittingType{{1, -1}},
                                               LaurentMatrix::identity(Q, 2)},
                               make_matrix(Q, {{"t", "1"}, {"0", "t^-1"}})));
    // right product, wrong rings
    CHECK_FALSE(verify_witness(BirkhoffWitness{make_matrix(Q, {{"1", "0"}, {"0", "t"}}),
                                               SplittingType{{0, 0}},
                                               make_matrix(Q, {{"t", "1"}, {"0", "t^-2"}})},
                               make_matrix(Q, {{"t", "1"}, {"0", "t^-1"}})));
}

TEST_CASE("factorization of random bundles") {
    std::mt19937_64 rng(13001);
    for (const auto& field : {Q, F5}) {
        for (int i = 0; i < 12; ++i) {
            const int n = 2 + static_cast<int>(rng() % 3);
            const TransitionBundle e = sample_bundle(field, rng, n, -3, 3);
            const BirkhoffWitness w = birkhoff_factorize(e, 13001 + i);
            CHECK(verify_witness(w, e.transition()));
            CHECK(w.d == splitting_type(e));
        }
    }
}

TEST_CASE("slope filtration steps") {
    const auto e = make_bundle(LaurentMatrix::diagonal_monomials(Q, {2, 2, 0, -1}));
    const HNFiltration hn = hn_filtration(e);
    CHECK(hn.steps == std::vector<HNStep>{{2, 2}, {0, 1}, {-1, 1}});

    const auto semistable = make_bundle(LaurentMatrix::diagonal_monomials(Q, {1, 1}));
    CHECK(hn_filtration(semistable).steps == std::vector<HNStep>{{1, 2}});

    const auto o5 = make_bundle(LaurentMatrix::diagonal_monomials(Q, {5}));
    CHECK(hn_filtration(o5).steps == std::vector<HNStep>{{5, 1}});

    // the coordinate change really diagonalizes the transition
    const auto mixed = make_bundle(make_matrix(Q, {{"t", "1"}, {"0", "t^-1"}}));
    const HNFiltration h = hn_filtration(mixed);
    CHECK(inverse(h.basis_p) * mixed.transition() * inverse(h.basis_q) ==
          LaurentMatrix::diagonal_monomials(Q, {1, -1}));
}

TEST_CASE("morphism validation") {
    const auto e = make_bundle(make_matrix(Q, {{"t", "1"}, {"0", "t^-1"}}));
    const auto id = BundleMorphism{e, e, LaurentMatrix::identity(Q, 2),
                                   LaurentMatrix::identity(Q, 2)};
    CHECK(validate_morphism(id) == MorphismReport{true, true});

    // nothing nonzero maps a degree-1 line into the trivial rank-2 bundle
    const auto o1 = make_bundle(LaurentMatrix::diagonal_monomials(Q, {1}));
    const auto triv2 = make_bundle(LaurentMatrix::identity(Q, 2));
    LaurentMatrix m0(Q, 2, 1), m1(Q, 2, 1);
    m0.set(0, 0, LaurentPoly(Q, 1));
    m1.set(0, 0, LaurentPoly(Q, 1));
    CHECK(hom_dimension(o1, triv2) == 0);
    CHECK_FALSE(validate_morphism(BundleMorphism{o1, triv2, m0, m1}).valid);

    // wrong chart ring: the overlap equation alone is not enough
    const auto o0 = make_bundle(LaurentMatrix::identity(Q, 1));
    LaurentMatrix bad(Q, 1, 1);
    bad.set(0, 0, p1::testing::lp("t^-1", Q));
    CHECK_FALSE(validate_morphism(BundleMorphism{o0, o0, bad, bad}).valid);
}

TEST_CASE("hom spanning sets are valid, slope-respecting, and independent") {
    std::mt19937_64 rng(13002);
    for (int i = 0; i < 4; ++i) {
        const TransitionBundle e = sample_bundle(Q, rng, 2, -2, 2);
        const TransitionBundle f = sample_bundle(Q, rng, 2, -2, 2);
        const auto maps = hom_spanning_set(e, f, 13002 + i);
        CHECK(static_cast<int>(maps.size()) == hom_dimension(e, f));
        IncrementalRank indep(Q);
        int idx = 0;
        for (const auto& g : maps) {
            CHECK(validate_morphism(g, 13002 + i) == MorphismReport{true, true});
            // flatten chart-0 coefficients to check linear independence
            SparseRow flat;
            for (int r = 0; r < g.m0.rows(); ++r)
                for (int c = 0; c < g.m0.cols(); ++c)
                    for (const auto& [exp, coef] : g.m0.at(r, c).terms())
                        flat.emplace_back(((r * g.m0.cols() + c) * 64) + exp + 32, coef);
            std::sort(flat.begin(), flat.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            CHECK(indep.add_row(std::move(flat)));
            ++idx;
        }
        CHECK(indep.rank() == static_cast<int>(maps.size()));
    }
}

TEST_CASE("two-term sequence with mismatched slope multisets") {
    for (const auto& field : {Q, F5}) {
        const EulerWitness w = euler_witness(field);
        CHECK(splitting_type(w.sub) == SplittingType{{-1}});
        CHECK(splitting_type(w.mid) == SplittingType{{0, 0}});
        CHECK(splitting_type(w.quot) == SplittingType{{1}});
        CHECK(validate_morphism(w.inclusion) == MorphismReport{true, true});
        CHECK(validate_morphism(w.projection) == MorphismReport{true, true});
        CHECK((w.projection.m0 * w.inclusion.m0).at(0, 0).is_zero());
        CHECK(w.mid_slopes == std::vector<int>{0, 0});
        CHECK(w.outer_slopes == std::vector<int>{-1, 1});
        // ranks and degrees agree, the slope multisets do not
        CHECK(w.sub.rank() + w.quot.rank() == w.mid.rank());
        CHECK(w.sub.degree() + w.quot.degree() == w.mid.degree());
        CHECK(w.mid_slopes != w.outer_slopes);
    }
}
