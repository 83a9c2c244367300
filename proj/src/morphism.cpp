#include "p1/morphism.hpp"

#include <algorithm>

namespace p1 {

MorphismReport validate_morphism(const BundleMorphism& f, std::uint64_t seed) {
    const int ns = f.source.rank();
    const int nt = f.target.rank();
    MorphismReport report;
    if (f.m0.rows() != nt || f.m0.cols() != ns || f.m1.rows() != nt || f.m1.cols() != ns)
        return report;
    if (f.source.field() != f.target.field() || f.m0.field() != f.source.field() ||
        f.m1.field() != f.source.field())
        return report;
    if (!all_entries_in(f.m0, SubringClass::PolyInT) ||
        !all_entries_in(f.m1, SubringClass::PolyInTInv))
        return report;
    if (f.m0 * f.source.transition() != f.target.transition() * f.m1) return report;
    report.valid = true;

    // in diagonal coordinates the map must never drop slope
    const BirkhoffWitness ws = birkhoff_factorize(f.source, seed);
    const BirkhoffWitness wt = birkhoff_factorize(f.target, seed);
    const LaurentMatrix diag_m0 = inverse(wt.p) * f.m0 * ws.p;
    report.hn_preserved = true;
    for (int j = 0; j < nt && report.hn_preserved; ++j)
        for (int i = 0; i < ns; ++i)
            if (wt.d.exponents[j] < ws.d.exponents[i] && !diag_m0.at(j, i).is_zero()) {
                report.hn_preserved = false;
                break;
            }
    return report;
}

std::vector<BundleMorphism> hom_spanning_set(const TransitionBundle& e,
                                             const TransitionBundle& f, std::uint64_t seed) {
    const FieldDescriptor field = e.field();
    if (field != f.field())
        fail(ErrorKind::FieldMismatch, "hom spaces need one common field");
    const BirkhoffWitness we = birkhoff_factorize(e, seed);
    const BirkhoffWitness wf = birkhoff_factorize(f, seed);
    const LaurentMatrix pe_inv = inverse(we.p);
    const LaurentMatrix qf_inv = inverse(wf.q);

    std::vector<BundleMorphism> maps;
    for (int j = 0; j < f.rank(); ++j)
        for (int i = 0; i < e.rank(); ++i) {
            const int gap = wf.d.exponents[j] - we.d.exponents[i];
            for (int c = 0; c <= gap; ++c) {
                // the single block t^c from slot i to slot j, moved out of
                // diagonal coordinates on each chart
                LaurentMatrix block0(field, f.rank(), e.rank());
                block0.set(j, i, LaurentPoly::monomial(field, 1, c));
                LaurentMatrix block1(field, f.rank(), e.rank());
                block1.set(j, i, LaurentPoly::monomial(field, 1, c - gap));
                maps.push_back(BundleMorphism{e, f, wf.p * block0 * pe_inv,
                                              qf_inv * block1 * we.q});
            }
        }
    return maps;
}

EulerWitness euler_witness(const FieldDescriptor& field) {
    const TransitionBundle sub(LaurentMatrix::diagonal_monomials(field, {-1}));
    const TransitionBundle mid(LaurentMatrix::identity(field, 2));
    const TransitionBundle quot(LaurentMatrix::diagonal_monomials(field, {1}));

    LaurentMatrix inc0(field, 2, 1), inc1(field, 2, 1);
    inc0.set(0, 0, LaurentPoly(field, 1));
    inc0.set(1, 0, LaurentPoly::monomial(field, 1, 1));
    inc1.set(0, 0, LaurentPoly::monomial(field, 1, -1));
    inc1.set(1, 0, LaurentPoly(field, 1));

    LaurentMatrix proj0(field, 1, 2), proj1(field, 1, 2);
    proj0.set(0, 0, LaurentPoly::monomial(field, 1, 1));
    proj0.set(0, 1, LaurentPoly(field, -1));
    proj1.set(0, 0, LaurentPoly(field, 1));
    proj1.set(0, 1, -LaurentPoly::monomial(field, 1, -1));

    EulerWitness w{sub,
                   mid,
                   quot,
                   BundleMorphism{sub, mid, inc0, inc1},
                   BundleMorphism{mid, quot, proj0, proj1},
                   {0, 0},
                   {-1, 1}};
    if (!validate_morphism(w.inclusion).valid || !validate_morphism(w.projection).valid)
        fail(ErrorKind::InternalSearchFailure, "assembled sequence maps failed validation");
    if ((w.projection.m0 * w.inclusion.m0).at(0, 0) != LaurentPoly(field) ||
        (w.projection.m1 * w.inclusion.m1).at(0, 0) != LaurentPoly(field))
        fail(ErrorKind::InternalSearchFailure, "sequence does not compose to zero");
    return w;
}

} // namespace p1
