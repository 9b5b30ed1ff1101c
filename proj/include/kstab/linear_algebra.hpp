#pragma once

#include "kstab/rational.hpp"

#include <vector>

namespace kstab {

using RationalRow = std::vector<Rational>;

/// Reduced row echelon form of the row span: zero rows dropped, each pivot 1,
/// pivot columns cleared in every other row. Canonical for a given row space.
std::vector<RationalRow> row_echelon(std::vector<RationalRow> rows);

std::size_t rank(std::vector<RationalRow> rows);

/// True if `v` lies in the span of an RREF basis produced by row_echelon.
bool in_row_space(const std::vector<RationalRow>& rref_basis, const RationalRow& v);

} // namespace kstab
