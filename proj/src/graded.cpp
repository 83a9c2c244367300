#include "p1/graded.hpp"

namespace p1 {

int GradedVectorSpace::total_dim() const {
    int total = 0;
    for (const auto& [w, d] : dims) total += d;
    return total;
}

void GradedVectorSpace::add(int weight, int dim) {
    if (dim == 0) return;
    if (dim < 0) fail(ErrorKind::InvalidArgument, "graded dimensions must be nonnegative");
    auto it = dims.find(weight);
    if (it == dims.end())
        dims.emplace(weight, dim);
    else
        it->second += dim;
}

TransitionBundle e_functor(const GradedVectorSpace& v, const FieldDescriptor& field) {
    if (v.dims.empty())
        fail(ErrorKind::InvalidArgument, "the zero representation carries no bundle");
    std::vector<int> exponents;
    for (auto it = v.dims.rbegin(); it != v.dims.rend(); ++it)
        for (int r = 0; r < it->second; ++r) exponents.push_back(it->first);
    return TransitionBundle(LaurentMatrix::diagonal_monomials(field, exponents));
}

GradedVectorSpace inverse_e(const TransitionBundle& e) {
    GradedVectorSpace v;
    for (int a : splitting_type(e).exponents) v.add(a, 1);
    return v;
}

FilGrDims fil_and_gr(const GradedVectorSpace& v, int i) {
    FilGrDims out;
    for (const auto& [w, d] : v.dims) {
        if (w >= i) out.fil_dim += d;
        if (w == i) out.gr_dim = d;
    }
    return out;
}

GradedVectorSpace graded_construction(GradedConstructionKind kind, const GradedVectorSpace& v) {
    if (kind != GradedConstructionKind::Dual)
        fail(ErrorKind::InvalidArgument, "construction needs a second graded space");
    GradedVectorSpace out;
    for (const auto& [w, d] : v.dims) out.add(-w, d);
    return out;
}

GradedVectorSpace graded_construction(GradedConstructionKind kind, const GradedVectorSpace& v,
                                      const GradedVectorSpace& w) {
    GradedVectorSpace out;
    switch (kind) {
        case GradedConstructionKind::Tensor:
            for (const auto& [wa, da] : v.dims)
                for (const auto& [wb, db] : w.dims) out.add(wa + wb, da * db);
            return out;
        case GradedConstructionKind::DirectSum:
            out = v;
            for (const auto& [wb, db] : w.dims) out.add(wb, db);
            return out;
        default:
            fail(ErrorKind::InvalidArgument, "construction takes a single graded space");
    }
}

} // namespace p1
