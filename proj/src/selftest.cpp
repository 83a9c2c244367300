#include "p1/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "p1/birkhoff.hpp"
#include "p1/cocharacter.hpp"
#include "p1/double_coset.hpp"
#include "p1/graded.hpp"
#include "p1/morphism.hpp"
#include "p1/sampling.hpp"

namespace p1 {

namespace {

struct Recorder {
    std::string suite;
    int passed = 0;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what) {
        if (ok)
            ++passed;
        else
            failures.push_back(suite + ": " + what);
    }
};

std::vector<FieldDescriptor> both_fields() {
    return {FieldDescriptor::rationals(), FieldDescriptor::prime_field(5)};
}

void suite_scalars(std::uint64_t seed, Recorder& rec) {
    std::mt19937_64 rng(seed);
    for (const auto& field : both_fields()) {
        for (int i = 0; i < 10; ++i) {
            Scalar a = sample_scalar(field, rng);
            Scalar b = sample_scalar(field, rng);
            Scalar c = sample_scalar(field, rng);
            rec.check((a + b) * c == a * c + b * c, "distributivity");
            rec.check(a + (b + c) == (a + b) + c, "associativity of +");
            Scalar d = sample_scalar(field, rng, true);
            rec.check(d * d.inverse() == Scalar(field, 1), "multiplicative inverse");
        }
    }
}

void suite_laurent(std::uint64_t seed, Recorder& rec) {
    std::mt19937_64 rng(seed);
    for (const auto& field : both_fields()) {
        for (int i = 0; i < 10; ++i) {
            LaurentPoly a = sample_poly(field, rng, -4, 4, 4);
            LaurentPoly b = sample_poly(field, rng, -4, 4, 4);
            rec.check(parse_laurent(a.str(), field) == a, "text round trip");
            rec.check(a * b == b * a, "commutativity of *");
            rec.check(a.substitute_t_inverse().substitute_t_inverse() == a,
                      "chart swap is an involution");
        }
    }
}

void suite_matrix(std::uint64_t seed, Recorder& rec) {
    std::mt19937_64 rng(seed);
    for (const auto& field : both_fields()) {
        for (int n = 2; n <= 3; ++n) {
            LaurentMatrix u = sample_unimodular(field, rng, n, SubringClass::PolyInT, 2);
            LaurentMatrix v = sample_unimodular(field, rng, n, SubringClass::PolyInTInv, 2);
            rec.check(inverse(u) * u == LaurentMatrix::identity(field, n), "left inverse");
            rec.check(determinant(u * v) == determinant(u) * determinant(v),
                      "determinant multiplicativity");
        }
    }
}

void suite_factorization(std::uint64_t seed, Recorder& rec) {
    std::mt19937_64 rng(seed);
    for (const auto& field : both_fields()) {
        for (int n = 2; n <= 3; ++n) {
            TransitionBundle e = sample_bundle(field, rng, n, -2, 2);
            BirkhoffWitness w = birkhoff_factorize(e, seed + n);
            rec.check(verify_witness(w, e.transition()), "witness verifies");
            rec.check(w.d == splitting_type(e), "witness diagonal matches splitting type");

            LaurentMatrix p = sample_unimodular(field, rng, n, SubringClass::PolyInT, 2);
            LaurentMatrix q = sample_unimodular(field, rng, n, SubringClass::PolyInTInv, 2);
            TransitionBundle gauged = make_bundle(p * e.transition() * q);
            rec.check(splitting_type(gauged) == splitting_type(e),
                      "splitting type is gauge invariant");
        }
    }
}

void suite_cohomology(std::uint64_t seed, Recorder& rec) {
    std::mt19937_64 rng(seed);
    FieldDescriptor q = FieldDescriptor::rationals();
    for (int a = -3; a <= 3; ++a) {
        TransitionBundle line = make_bundle(LaurentMatrix::diagonal_monomials(q, {a}));
        CohomologyDims dims = cohomology_dims(line);
        rec.check(dims.h0 == std::max(0, a + 1) && dims.h1 == std::max(0, -a - 1),
                  "line bundle dimensions");
    }
    for (int i = 0; i < 4; ++i) {
        TransitionBundle e = sample_bundle(q, rng, 2, -2, 2);
        rec.check(cohomology_dims(e).h0 == h0_dimension(e),
                  "closed form agrees with the section oracle");
    }
}

void suite_constructions(std::uint64_t seed, Recorder& rec) {
    std::mt19937_64 rng(seed);
    for (const auto& field : both_fields()) {
        TransitionBundle e = sample_bundle(field, rng, 2, -2, 2);
        TransitionBundle f = sample_bundle(field, rng, 2, -2, 2);
        SplittingType a = splitting_type(e);
        SplittingType b = splitting_type(f);

        std::vector<int> expect;
        for (int x : a.exponents)
            for (int y : b.exponents) expect.push_back(x + y);
        std::sort(expect.rbegin(), expect.rend());
        rec.check(splitting_type(bundle_construction(ConstructionKind::Tensor, e, f)).exponents ==
                      expect,
                  "tensor splitting arithmetic");

        std::vector<int> dual_expect;
        for (int x : a.exponents) dual_expect.push_back(-x);
        std::sort(dual_expect.rbegin(), dual_expect.rend());
        rec.check(splitting_type(bundle_construction(ConstructionKind::Dual, e)).exponents ==
                      dual_expect,
                  "dual splitting arithmetic");

        TransitionBundle sum = bundle_construction(ConstructionKind::DirectSum, e, f);
        rec.check(sum.rank() == e.rank() + f.rank() && sum.degree() == e.degree() + f.degree(),
                  "direct sum bookkeeping");
    }
}

void suite_morphisms(std::uint64_t seed, Recorder& rec) {
    std::mt19937_64 rng(seed);
    for (const auto& field : both_fields()) {
        TransitionBundle e = sample_bundle(field, rng, 2, -1, 1);
        TransitionBundle f = sample_bundle(field, rng, 2, -1, 1);
        auto span = hom_spanning_set(e, f, seed);
        rec.check(static_cast<int>(span.size()) == hom_dimension(e, f),
                  "spanning set size equals hom dimension");
        bool all_good = true;
        for (const auto& m : span) {
            MorphismReport report = validate_morphism(m, seed);
            all_good = all_good && report.valid && report.hn_preserved;
        }
        rec.check(all_good, "spanning morphisms are valid and filtration compatible");

        EulerWitness euler = euler_witness(field);
        rec.check(euler.mid_slopes == std::vector<int>({0, 0}) &&
                      euler.outer_slopes == std::vector<int>({-1, 1}),
                  "slope multisets of the euler sequence");
    }
}

void suite_graded(std::uint64_t seed, Recorder& rec) {
    std::mt19937_64 rng(seed);
    FieldDescriptor q = FieldDescriptor::rationals();
    for (int i = 0; i < 8; ++i) {
        GradedVectorSpace v = sample_graded(rng, 3, 5);
        rec.check(inverse_e(e_functor(v, q)) == v, "graded round trip");
    }
    GradedVectorSpace standard;
    standard.add(-1, 1);
    rec.check(splitting_type(e_functor(standard, q)).exponents == std::vector<int>({-1}),
              "standard representation lands on the degree -1 line bundle");
}

void suite_torsors(std::uint64_t seed, Recorder& rec) {
    std::mt19937_64 rng(seed);
    FieldDescriptor q = FieldDescriptor::rationals();
    for (int i = 0; i < 8; ++i) {
        Cocharacter chi = sample_cocharacter({GroupFamily::GL, 2 + (i % 2)}, rng, 3);
        rec.check(classify_bundle(cocharacter_pushout(chi, q)) == dominantize(chi),
                  "classification inverts the pushout");
    }
    for (int i = 0; i < 4; ++i) {
        Cocharacter chi = sample_cocharacter({GroupFamily::PGL, 3}, rng, 3);
        Cocharacter lift = pgl_lift(chi);
        rec.check(make_cocharacter(chi.group, lift.weights) == chi, "lift projects back");
    }
}

void suite_cosets(std::uint64_t seed, Recorder& rec) {
    std::mt19937_64 rng(seed);
    for (const auto& field : both_fields()) {
        Cocharacter lambda = sample_cocharacter({GroupFamily::GL, 2}, rng, 2);
        LaurentMatrix g = LaurentMatrix::diagonal_monomials(field, lambda.weights);
        rec.check(double_coset_type(g) == dominantize(lambda), "diagonal normal form");

        LaurentMatrix u = sample_unimodular(field, rng, 2, SubringClass::PolyInTInv, 2);
        LaurentMatrix v = sample_unimodular(field, rng, 2, SubringClass::PolyInT, 2);
        LaurentMatrix moved = u * g * v;
        rec.check(double_coset_type(moved) == double_coset_type(g),
                  "type is a coset invariant");
        DoubleCosetWitness w = double_coset_witnesses(moved, seed);
        rec.check(verify_coset_witness(w, moved), "coset witness verifies");
    }
}

using Suite = void (*)(std::uint64_t, Recorder&);

struct NamedSuite {
    const char* name;
    Suite fn;
};

const NamedSuite kSuites[] = {
    {"scalars", suite_scalars},       {"laurent", suite_laurent},
    {"matrix", suite_matrix},         {"factorization", suite_factorization},
    {"cohomology", suite_cohomology}, {"constructions", suite_constructions},
    {"morphisms", suite_morphisms},   {"graded", suite_graded},
    {"torsors", suite_torsors},       {"cosets", suite_cosets},
};

std::uint64_t derive_seed(std::uint64_t root, std::size_t index) {
    // splitmix64 step keeps shard seeds decorrelated even for adjacent roots
    std::uint64_t z = root + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

SelftestReport run_selftest(std::uint64_t root_seed, int workers) {
    const std::size_t count = std::size(kSuites);
    std::vector<Recorder> recorders(count);
    for (std::size_t i = 0; i < count; ++i) recorders[i].suite = kSuites[i].name;

    int thread_count = std::max(1, std::min<int>(workers, static_cast<int>(count)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                kSuites[i].fn(derive_seed(root_seed, i), recorders[i]);
            } catch (const std::exception& e) {
                recorders[i].failures.push_back(std::string(recorders[i].suite) +
                                                ": unexpected error: " + e.what());
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(thread_count) - 1);
    for (int w = 1; w < thread_count; ++w) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    SelftestReport report;
    for (const Recorder& rec : recorders) {
        report.passed += rec.passed;
        report.failed += static_cast<int>(rec.failures.size());
        report.failures.insert(report.failures.end(), rec.failures.begin(), rec.failures.end());
    }
    return report;
}

} // namespace p1
