#pragma once

#include <vector>

#include "p1/matrix.hpp"

namespace p1 {

/// Rank-n vector bundle on the projective line, presented by its transition
/// matrix T between the charts Spec k[t] and Spec k[t^-1]. Sections glue by
/// s0 = T * s1, so diag(t^a) carries the degree-a line bundle.
class TransitionBundle {
  public:
    /// Validates that det(T) is a monomial unit (NotABundle otherwise).
    explicit TransitionBundle(LaurentMatrix T);

    int rank() const { return transition_.rows(); }
    const FieldDescriptor& field() const { return transition_.field(); }
    const LaurentMatrix& transition() const { return transition_; }

    /// d in det(T) = c * t^d; equals the degree of the bundle.
    int degree() const { return degree_; }

  private:
    LaurentMatrix transition_;
    int degree_;
};

/// Decomposition exponents a_1 >= ... >= a_n.
struct SplittingType {
    std::vector<int> exponents;

    int rank() const { return static_cast<int>(exponents.size()); }
    int degree() const;

    bool operator==(const SplittingType&) const = default;
    std::string str() const;
};

struct CohomologyDims {
    int h0 = 0;
    int h1 = 0;
    bool operator==(const CohomologyDims&) const = default;
};

enum class ConstructionKind { Dual, Tensor, Exterior2, Sym2, DirectSum };

TransitionBundle make_bundle(LaurentMatrix T);

/// Tensor by the degree-m line bundle: transition t^m * T.
TransitionBundle twist(const TransitionBundle& e, int m);

/// dim over k of the global sections, by exact elimination on truncated
/// chart-1 coefficient vectors with an escalating degree bound.
int h0_dimension(const TransitionBundle& e);

/// The unique weakly decreasing exponents with E isomorphic to the
/// corresponding sum of line bundles, reconstructed from section dimensions
/// of twists across a window wide enough to be self-consistent.
SplittingType splitting_type(const TransitionBundle& e);

/// h0 = sum max(0, a_i + 1), h1 = sum max(0, -a_i - 1); h0 is cross-checked
/// against the section oracle when expensive checks are enabled.
CohomologyDims cohomology_dims(const TransitionBundle& e);

/// Closed forms on splitting types, for callers that already paid for them.
CohomologyDims cohomology_of_type(const SplittingType& type);

TransitionBundle bundle_construction(ConstructionKind kind, const TransitionBundle& e);
TransitionBundle bundle_construction(ConstructionKind kind, const TransitionBundle& e,
                                     const TransitionBundle& f);

/// Constant splitting type.
bool is_semistable(const TransitionBundle& e);

/// dim Hom(E, F) = h0 of dual(E) tensor F = sum max(0, b_j - a_i + 1).
int hom_dimension(const TransitionBundle& e, const TransitionBundle& f);
int hom_dimension_of_types(const SplittingType& a, const SplittingType& b);

namespace detail {

/// dims[m - m_lo] = dim of sections of twist(E, m) with chart-1 exponents
/// truncated to [-B, 0]. One incremental elimination serves the whole window
/// because the twist-m constraint rows form a prefix of the twist-(m-1) rows.
std::vector<int> truncated_h0_profile(const LaurentMatrix& T, int m_lo, int m_hi, int B);

/// The truncated profile iterated over doubling B until it is stable across
/// two consecutive rungs; returns the stable dims.
std::vector<int> stable_h0_profile(const LaurentMatrix& T, int m_lo, int m_hi);

} // namespace detail

} // namespace p1
