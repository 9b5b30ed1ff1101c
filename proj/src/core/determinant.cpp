#include "kstab/determinant.hpp"

#include "kstab/error.hpp"

#include <string>
#include <utility>

namespace kstab {

MultiPoly det_symbolic(const PolyMatrix& matrix)
{
    const std::size_t n = matrix.size();
    if (n == 0) {
        throw InputError("determinant of an empty matrix");
    }
    for (const auto& row : matrix) {
        if (row.size() != n) {
            throw InputError("determinant needs a square matrix");
        }
    }
    if (n > kMaxDeterminantSize) {
        throw SizeError("symbolic determinant limited to " + std::to_string(kMaxDeterminantSize)
                        + "x" + std::to_string(kMaxDeterminantSize) + ", got "
                        + std::to_string(n) + "x" + std::to_string(n));
    }
    const std::size_t arity = matrix[0][0].arity();
    for (const auto& row : matrix) {
        for (const auto& entry : row) {
            if (entry.arity() != arity) {
                throw InputError("matrix entries have inconsistent arity");
            }
        }
    }

    PolyMatrix m = matrix;
    bool negate = false;
    MultiPoly previous = MultiPoly::constant(arity, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].is_zero()) {
                ++pivot;
            }
            if (pivot == n) {
                return MultiPoly(arity);
            }
            std::swap(m[k], m[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly numerator = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divide_exact(numerator, previous);
            }
        }
        previous = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

} // namespace kstab
