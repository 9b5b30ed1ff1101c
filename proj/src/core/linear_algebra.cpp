#include "kstab/linear_algebra.hpp"

#include <utility>

namespace kstab {

std::vector<RationalRow> row_echelon(std::vector<RationalRow> rows)
{
    if (rows.empty()) {
        return rows;
    }
    const std::size_t cols = rows[0].size();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[lead], rows[pivot]);
        const Rational inv = 1 / rows[lead][col];
        for (auto& x : rows[lead]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][col] == 0) {
                continue;
            }
            const Rational factor = rows[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                rows[r][c] -= factor * rows[lead][c];
            }
        }
        ++lead;
    }
    rows.resize(lead);
    return rows;
}

std::size_t rank(std::vector<RationalRow> rows)
{
    return row_echelon(std::move(rows)).size();
}

bool in_row_space(const std::vector<RationalRow>& rref_basis, const RationalRow& v)
{
    RationalRow residual = v;
    for (const auto& row : rref_basis) {
        std::size_t pivot = 0;
        while (row[pivot] == 0) {
            ++pivot;
        }
        if (residual[pivot] == 0) {
            continue;
        }
        const Rational factor = residual[pivot];
        for (std::size_t c = pivot; c < residual.size(); ++c) {
            residual[c] -= factor * row[c];
        }
    }
    for (const auto& x : residual) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

} // namespace kstab
