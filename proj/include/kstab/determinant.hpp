#pragma once

#include "kstab/multipoly.hpp"

#include <vector>

namespace kstab {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

inline constexpr std::size_t kMaxDeterminantSize = 7;

/// Determinant by fraction-free (Bareiss) elimination with exact polynomial division.
/// Square, nonempty, at most 7x7, all entries of one arity.
MultiPoly det_symbolic(const PolyMatrix& matrix);

} // namespace kstab
