#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qflag/laurent.hpp"

namespace qflag {

// Rank over the fraction field of the Laurent ring, by Bareiss
// fraction-free elimination with exact divisions. Pivot choice: minimal
// support size, then lexicographic position.
long long span_rank(std::vector<std::vector<Laurent>> rows);

// Dense column-reduction solver over an exact field (LaurentFrac or
// Rational). Built once from a list of column vectors; express() then
// answers membership queries against their span.
template <class F>
class SpanSolver {
public:
    SpanSolver() = default;

    // columns: the candidate basis vectors, all of the same length.
    explicit SpanSolver(std::vector<std::vector<F>> columns) {
        const size_t m = columns.empty() ? 0 : columns[0].size();
        const size_t d = columns.size();
        trans_.assign(d, std::vector<F>());
        for (size_t t = 0; t < d; ++t) {
            if (columns[t].size() != m) throw std::invalid_argument("ragged columns");
            std::vector<F> u = columns[t];
            std::vector<F> coord(d, F(0));
            coord[t] = F(1);
            for (size_t s = 0; s < reduced_.size(); ++s) {
                const auto& [r, us] = reduced_[s];
                if (u[r] == F(0)) continue;
                F factor = u[r] / us[r];
                for (size_t p = 0; p < m; ++p) u[p] -= factor * us[p];
                for (size_t p = 0; p < d; ++p) coord[p] -= factor * trans_[s][p];
            }
            // pick the pivot row with the sparsest remaining choice: here
            // simply the first nonzero entry
            size_t pivot = m;
            for (size_t p = 0; p < m; ++p)
                if (!(u[p] == F(0))) { pivot = p; break; }
            if (pivot == m) {
                dependent_.push_back(t);
                continue;
            }
            trans_[reduced_.size()] = std::move(coord);
            reduced_.emplace_back(pivot, std::move(u));
        }
        ncols_ = d;
        ambient_ = m;
    }

    size_t rank() const { return reduced_.size(); }
    bool independent() const { return dependent_.empty(); }
    const std::vector<size_t>& dependent_columns() const { return dependent_; }

    // Coefficients c with v = sum_t c_t * column_t, or nullopt when v is
    // outside the span. Requires an independent column set.
    std::optional<std::vector<F>> express(std::vector<F> v) const {
        if (!dependent_.empty())
            throw std::invalid_argument("express needs an independent basis");
        if (v.size() != ambient_) throw std::invalid_argument("dimension mismatch");
        std::vector<F> gamma(reduced_.size(), F(0));
        for (size_t s = 0; s < reduced_.size(); ++s) {
            const auto& [r, us] = reduced_[s];
            if (v[r] == F(0)) continue;
            F factor = v[r] / us[r];
            for (size_t p = 0; p < ambient_; ++p) v[p] -= factor * us[p];
            gamma[s] = factor;
        }
        for (const auto& x : v)
            if (!(x == F(0))) return std::nullopt;
        std::vector<F> out(ncols_, F(0));
        for (size_t s = 0; s < reduced_.size(); ++s)
            for (size_t t = 0; t < ncols_; ++t)
                out[t] += gamma[s] * trans_[s][t];
        return out;
    }

    bool contains(const std::vector<F>& v) const {
        std::vector<F> u = v;
        for (size_t s = 0; s < reduced_.size(); ++s) {
            const auto& [r, us] = reduced_[s];
            if (u[r] == F(0)) continue;
            F factor = u[r] / us[r];
            for (size_t p = 0; p < ambient_; ++p) u[p] -= factor * us[p];
        }
        for (const auto& x : u)
            if (!(x == F(0))) return false;
        return true;
    }

private:
    // reduced_[s] = (pivot row, reduced column u_s); trans_[s] expresses
    // u_s in the original columns.
    std::vector<std::pair<size_t, std::vector<F>>> reduced_;
    std::vector<std::vector<F>> trans_;
    std::vector<size_t> dependent_;
    size_t ncols_ = 0;
    size_t ambient_ = 0;
};

// Basis of the (right) nullspace of the matrix with the given rows, over
// an exact field. Vectors come out with the free coordinate set to 1, in
// column order.
template <class F>
std::vector<std::vector<F>> nullspace(std::vector<std::vector<F>> rows, size_t ncols) {
    // Gauss-Jordan to reduced row echelon form
    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t sel = rows.size();
        for (size_t r = rank; r < rows.size(); ++r)
            if (!(rows[r][col] == F(0))) { sel = r; break; }
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        F inv = F(1) / rows[rank][col];
        for (size_t c = col; c < ncols; ++c) rows[rank][c] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == F(0)) continue;
            F f = rows[r][col];
            for (size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<F>> out;
    for (size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(ncols, F(0));
        v[free] = F(1);
        for (size_t s = 0; s < pivot_col.size(); ++s)
            v[pivot_col[s]] = F(0) - rows[s][free];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace qflag
