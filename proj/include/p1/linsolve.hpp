#pragma once

#include <map>
#include <utility>
#include <vector>

#include "p1/laurent.hpp"

namespace p1 {

/// Sparse vector over one field: (column, coefficient) sorted by column,
/// coefficients nonzero.
using SparseRow = std::vector<std::pair<int, Scalar>>;

/// Incremental Gaussian elimination over k. Rows arrive one at a time and the
/// running rank is readable after each, which lets a caller slice one big
/// elimination into nested subsystems (rank of every prefix for free).
class IncrementalRank {
  public:
    explicit IncrementalRank(const FieldDescriptor& field) : desc_(field) {}

    /// Reduce against the current echelon basis; absorb if independent.
    /// Returns true when the rank grew.
    bool add_row(SparseRow row);

    int rank() const { return rank_; }
    const FieldDescriptor& field() const { return desc_; }

  private:
    FieldDescriptor desc_;
    std::map<int, SparseRow> pivots_; // lead column -> row normalized to lead 1
    int rank_ = 0;
};

/// Basis of {x : A x = 0} for a dense scalar matrix given by rows. Basis
/// vectors have length cols; empty result means trivial kernel.
std::vector<std::vector<Scalar>> kernel_basis(const FieldDescriptor& field,
                                              std::vector<std::vector<Scalar>> rows,
                                              int cols);

/// Rank tracker for rows of Laurent polynomials, exact over the fraction
/// field k(t). Cross-multiplication keeps every entry polynomial; rows are
/// rescaled by monomial units to keep exponents near zero.
class PolyRankTracker {
  public:
    PolyRankTracker(const FieldDescriptor& field, int width)
        : desc_(field), width_(width) {}

    /// True when the row is independent of everything absorbed so far.
    bool try_add(std::vector<LaurentPoly> row);

    int rank() const { return static_cast<int>(echelon_.size()); }

  private:
    struct EchelonRow {
        int lead;
        std::vector<LaurentPoly> entries;
    };

    FieldDescriptor desc_;
    int width_;
    std::vector<EchelonRow> echelon_; // sorted by lead column
};

} // namespace p1
