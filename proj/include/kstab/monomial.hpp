#pragma once

#include "kstab/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kstab {

using ExponentVector = std::vector<long>;

inline constexpr std::size_t kMaxMonomialArity = 4;

/// Monomial ideal in n variables, stored by its minimal generating set (sorted).
/// The unit ideal is generated by the zero vector.
class MonomialIdeal {
public:
    /// Drops non-minimal generators. Throws InputError on an empty list, negative
    /// exponents or mismatched lengths.
    MonomialIdeal(std::size_t arity, std::vector<ExponentVector> generators);

    static MonomialIdeal unit(std::size_t arity);
    static MonomialIdeal principal(ExponentVector exponents);

    std::size_t arity() const noexcept { return arity_; }
    const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
    bool is_unit() const;

    bool contains_monomial(const ExponentVector& v) const;
    /// other ⊆ *this
    bool contains(const MonomialIdeal& other) const;
    /// Componentwise maximum over the generators.
    ExponentVector generator_max() const;

    std::string to_string() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::size_t arity_;
    std::vector<ExponentVector> gens_;
};

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal times_monomial(const MonomialIdeal& a, const ExponentVector& m);
/// Re-reads `a` in `arity` variables, its own variables placed starting at `offset`.
MonomialIdeal embed(const MonomialIdeal& a, std::size_t offset, std::size_t arity);

/// <normal, x> >= offset
struct HalfSpace {
    std::vector<Rational> normal;
    Rational offset;

    bool is_coordinate_bound() const;
    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// conv(generators) + nonnegative orthant, as an exact H-representation. Normals are
/// nonnegative primitive integer vectors and each unit normal e_i appears exactly once.
struct NewtonPolyhedron {
    MonomialIdeal source;
    std::vector<HalfSpace> inequalities;

    bool contains(const std::vector<Rational>& x) const;
    bool interior_contains(const std::vector<Rational>& x) const;
};

/// Throws SizeError for more than kMaxMonomialArity variables.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a);

struct WeightedFactor {
    MonomialIdeal ideal;
    Rational exponent;
};

/// a_1^{c_1} ... a_l^{c_l}: shared arity, exponents >= 0, at least one factor.
class WeightedIdealProduct {
public:
    explicit WeightedIdealProduct(std::vector<WeightedFactor> factors);

    std::size_t arity() const noexcept { return arity_; }
    const std::vector<WeightedFactor>& factors() const noexcept { return factors_; }

private:
    std::size_t arity_ = 0;
    std::vector<WeightedFactor> factors_;
};

/// x^v is in the multiplier ideal iff v + (1,...,1) is interior to sum c_i P(a_i).
MonomialIdeal multiplier_ideal(const WeightedIdealProduct& product);

/// Largest c with (1,...,1) in c P(a). Throws InputError for the unit ideal.
Rational lct_monomial(const MonomialIdeal& a);

struct SummationResult {
    bool holds = false;
    /// Smallest splitting denominator D at which the right side reached the left side.
    long witness_denominator = 0;
    MonomialIdeal lhs;
    MonomialIdeal rhs;
    /// Set when holds == false: a right-side generator outside the left side.
    std::optional<ExponentVector> counterexample;
};

inline constexpr long kDefaultDenominatorBound = 24;

/// Compares I(a0^c0 (sum parts)^c) with the union over splittings c_1 + ... + c_l = c
/// (denominators dividing D) of I(a0^c0 prod parts_i^{c_i}). D runs over multiples of
/// denom(c); acceptance needs the right side at D and 2D (both <= denom_bound) to equal
/// the left side. Throws StabilizationError when that never happens (inconclusive).
SummationResult summation_check(const MonomialIdeal& a0, const Rational& c0,
                                const std::vector<MonomialIdeal>& parts, const Rational& c,
                                long denom_bound = kDefaultDenominatorBound);

struct LawOutcome {
    std::string law;
    int instances = 0;
    int failures = 0;
    std::string counterexample;

    bool passed() const { return failures == 0; }
};

struct LawReport {
    std::vector<LawOutcome> laws;

    bool all_passed() const;
};

/// Seeded random checks of three multiplier-ideal laws, `count` instances each:
/// "divisor" I(x^d * a^c) = x^d I(a^c); "inclusion" a ⊆ b implies I(a^c) ⊆ I(b^c);
/// "product" ideals in disjoint variables give I(a^c b^c') = I(a^c) I(b^c').
LawReport law_checks(std::uint64_t seed, int count);

} // namespace kstab
