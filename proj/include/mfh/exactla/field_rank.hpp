#pragma once

#include <vector>

#include "mfh/exactla/matrix.hpp"
#include "mfh/exactnum/field.hpp"

namespace mfh {

/// Rank by Gaussian elimination over any exact field type providing
/// is_zero(x), inverse(x), +, -, *.
template <class T>
std::size_t rank_in_place(std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && is_zero(rows[piv][c])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const T inv = inverse(rows[rank][c]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (is_zero(rows[i][c])) continue;
            const T f = rows[i][c] * inv;
            for (std::size_t k = c; k < ncols; ++k)
                if (!is_zero(rows[rank][k])) rows[i][k] = rows[i][k] - f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Exact rank; all entries must lie in one field (std::invalid_argument otherwise).
std::size_t rank_over_field(const Matrix<FieldScalar>& m);

}  // namespace mfh
