#include "qflag/linalg.hpp"

namespace qflag {

long long span_rank(std::vector<std::vector<Laurent>> rows) {
    if (rows.empty()) return 0;
    const size_t ncols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != ncols) throw std::invalid_argument("ragged matrix");
    Laurent prev(1);
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t best = rows.size();
        for (size_t r = rank; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            if (best == rows.size() ||
                rows[r][col].support_size() < rows[best][col].support_size())
                best = r;
        }
        if (best == rows.size()) continue;
        std::swap(rows[rank], rows[best]);
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            for (size_t c = col + 1; c < ncols; ++c) {
                Laurent t = rows[rank][col] * rows[r][c] - rows[r][col] * rows[rank][c];
                rows[r][c] = t.is_zero() ? t : t.exact_div(prev);
            }
            rows[r][col] = Laurent();
        }
        prev = rows[rank][col];
        ++rank;
    }
    return static_cast<long long>(rank);
}

}  // namespace qflag
