#include "p1/linsolve.hpp"

#include <algorithm>

namespace p1 {

namespace {

// a -= c * b on sorted sparse rows
SparseRow axpy(const SparseRow& a, const Scalar& c, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(c * b[j].second));
            ++j;
        } else {
            Scalar v = a[i].second - c * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i, ++j;
        }
    }
    return out;
}

} // namespace

bool IncrementalRank::add_row(SparseRow row) {
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) break;
        row = axpy(row, row.front().second, it->second);
    }
    if (row.empty()) return false;
    const Scalar lead_inv = row.front().second.inverse();
    for (auto& [col, v] : row) v = v * lead_inv;
    const int lead = row.front().first;
    pivots_.emplace(lead, std::move(row));
    ++rank_;
    return true;
}

std::vector<std::vector<Scalar>> kernel_basis(const FieldDescriptor& field,
                                              std::vector<std::vector<Scalar>> rows,
                                              int cols) {
    const Scalar zero(field, 0);
    // reduced row echelon form with recorded pivot columns
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const Scalar inv = rows[r][c].inverse();
        for (int j = c; j < cols; ++j) rows[r][j] = rows[r][j] * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Scalar f = rows[i][c];
            for (int j = c; j < cols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> x(cols, zero);
        x[c] = Scalar(field, 1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = -rows[i][c];
        basis.push_back(std::move(x));
    }
    return basis;
}

bool PolyRankTracker::try_add(std::vector<LaurentPoly> row) {
    if (static_cast<int>(row.size()) != width_)
        fail(ErrorKind::DimensionMismatch, "row width mismatch in rank tracker");

    auto lead_of = [&](const std::vector<LaurentPoly>& r) {
        for (int j = 0; j < width_; ++j)
            if (!r[j].is_zero()) return j;
        return width_;
    };

    // keep exponents near zero and the lead coefficient at 1
    auto normalize = [&](std::vector<LaurentPoly>& r, int lead) {
        int shift = 0;
        bool seen = false;
        for (const auto& e : r)
            if (!e.is_zero()) {
                shift = seen ? std::min(shift, e.min_exponent()) : e.min_exponent();
                seen = true;
            }
        const Scalar c = r[lead].coefficient(r[lead].max_exponent()).inverse();
        for (auto& e : r) e = e.shifted(-shift) * LaurentPoly::term(c, 0);
    };

    // reduce at the row's current lead; the first nonzero index strictly
    // advances per step because stored rows vanish before their own lead
    int lead = lead_of(row);
    while (lead < width_) {
        auto pos = std::lower_bound(echelon_.begin(), echelon_.end(), lead,
                                    [](const EchelonRow& x, int l) { return x.lead < l; });
        if (pos == echelon_.end() || pos->lead != lead) break;
        const LaurentPoly a = row[lead];
        const LaurentPoly b = pos->entries[lead];
        for (int j = lead; j < width_; ++j) row[j] = row[j] * b - a * pos->entries[j];
        lead = lead_of(row);
    }
    if (lead == width_) return false;
    normalize(row, lead);
    EchelonRow er{lead, std::move(row)};
    auto pos = std::lower_bound(echelon_.begin(), echelon_.end(), er,
                                [](const EchelonRow& x, const EchelonRow& y) {
                                    return x.lead < y.lead;
                                });
    echelon_.insert(pos, std::move(er));
    return true;
}

} // namespace p1
