#pragma once

#include "kstab/monomial.hpp"

#include <map>
#include <vector>

namespace kstab::detail {

using IntVector = std::vector<long long>;

/// Facet normals of conv(points) + orthant: primitive, nonnegative, sorted, and
/// always including the n unit vectors.
std::vector<IntVector> facet_normals(std::vector<IntVector> points, std::size_t n);

/// H-representations of sum c_i P(a_i) for a fixed list of ideals and varying c.
/// Facet normals depend only on which c_i are positive (the normal fan of a Minkowski
/// sum ignores positive scaling), so they are computed once per support and cached.
class MixedPolyhedron {
public:
    explicit MixedPolyhedron(std::vector<MonomialIdeal> ideals);

    std::size_t arity() const noexcept { return arity_; }

    /// Inequalities of sum c_i P(a_i); zero exponents drop their factor.
    std::vector<HalfSpace> inequalities(const std::vector<Rational>& exponents);

    /// Minimal generators of {v : v + 1 interior to sum c_i P(a_i)}.
    MonomialIdeal multiplier_ideal(const std::vector<Rational>& exponents);

private:
    const std::vector<IntVector>& normals_for(unsigned mask);

    std::size_t arity_;
    std::vector<MonomialIdeal> ideals_;
    std::map<unsigned, std::vector<IntVector>> cache_;
};

} // namespace kstab::detail
