#include "flexrig/linear.hpp"

#include "flexrig/errors.hpp"

namespace flexrig {

std::optional<LinearSolution> linear_solve(std::vector<std::vector<Rational>> rows,
                                           std::vector<Rational> rhs) {
    const size_t m = rows.size();
    if (rhs.size() != m) throw DimensionMismatch("rhs length does not match row count");
    size_t n = 0;
    if (m > 0) {
        n = rows[0].size();
        for (const auto& r : rows)
            if (r.size() != n) throw DimensionMismatch("ragged coefficient matrix");
    }

    // Reduced row echelon form with first-nonzero pivoting.
    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < m; ++col) {
        size_t sel = rank;
        while (sel < m && rows[sel][col].is_zero()) ++sel;
        if (sel == m) continue;
        std::swap(rows[sel], rows[rank]);
        std::swap(rhs[sel], rhs[rank]);
        Rational inv = rows[rank][col].inv();
        for (size_t j = col; j < n; ++j) rows[rank][j] *= inv;
        rhs[rank] *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            Rational f = rows[i][col];
            for (size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
            rhs[i] -= f * rhs[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (size_t i = rank; i < m; ++i)
        if (!rhs[i].is_zero()) return std::nullopt;

    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    LinearSolution sol;
    sol.particular.assign(n, Rational(0));
    for (size_t r = 0; r < rank; ++r) sol.particular[pivot_col[r]] = rhs[r];

    for (size_t col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[col] = Rational(1);
        for (size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][col];
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

} // namespace flexrig
