#include "p1/cocharacter.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace p1 {

std::string to_string(GroupFamily family) {
    switch (family) {
        case GroupFamily::GL: return "GL";
        case GroupFamily::SL: return "SL";
        case GroupFamily::PGL: return "PGL";
    }
    return "?";
}

bool Cocharacter::is_dominant() const {
    return std::is_sorted(weights.rbegin(), weights.rend());
}

std::string Cocharacter::str() const {
    std::ostringstream os;
    os << to_string(group.family) << group.n << " (";
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i) os << ',';
        os << weights[i];
    }
    os << ')';
    return os.str();
}

Cocharacter make_cocharacter(GroupTag group, std::vector<int> weights) {
    if (group.n < 1 || static_cast<int>(weights.size()) != group.n)
        fail(ErrorKind::InvalidArgument, "weight tuple length must match the rank parameter");
    if (group.family != GroupFamily::GL && group.n < 2)
        fail(ErrorKind::InvalidArgument, "special and projective families need n >= 2");
    if (group.family == GroupFamily::SL &&
        std::accumulate(weights.begin(), weights.end(), 0) != 0)
        fail(ErrorKind::InvalidArgument, "special linear weights must sum to zero");
    if (group.family == GroupFamily::PGL) {
        const int low = *std::min_element(weights.begin(), weights.end());
        for (int& w : weights) w -= low;
    }
    return Cocharacter{group, std::move(weights)};
}

Cocharacter dominantize(const Cocharacter& chi) {
    std::vector<int> w = chi.weights;
    std::sort(w.rbegin(), w.rend());
    if (chi.group.family == GroupFamily::PGL) {
        const int low = w.back();
        for (int& x : w) x -= low;
    }
    return Cocharacter{chi.group, std::move(w)};
}

TransitionBundle cocharacter_pushout(const Cocharacter& chi, const FieldDescriptor& field) {
    if (chi.group.family != GroupFamily::GL)
        fail(ErrorKind::UnsupportedGroup,
             "pushout bundles are materialized for the general linear family only");
    std::vector<int> exponents;
    exponents.reserve(chi.weights.size());
    for (int m : chi.weights) exponents.push_back(-m);
    return TransitionBundle(LaurentMatrix::diagonal_monomials(field, exponents));
}

Cocharacter classify_bundle(const TransitionBundle& e) {
    const SplittingType type = splitting_type(e);
    std::vector<int> w;
    w.reserve(type.exponents.size());
    for (auto it = type.exponents.rbegin(); it != type.exponents.rend(); ++it)
        w.push_back(-*it);
    return Cocharacter{GroupTag{GroupFamily::GL, e.rank()}, std::move(w)};
}

Cocharacter pgl_lift(const Cocharacter& chi) {
    if (chi.group.family != GroupFamily::PGL)
        fail(ErrorKind::UnsupportedGroup, "lifting applies to projective classes");
    // lift the canonical minimum-zero representative of the class
    std::vector<int> w = chi.weights;
    const int low = *std::min_element(w.begin(), w.end());
    for (int& x : w) x -= low;
    return Cocharacter{GroupTag{GroupFamily::GL, chi.group.n}, std::move(w)};
}

} // namespace p1
