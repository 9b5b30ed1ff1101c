#pragma once

#include "kstab/flag_df.hpp"
#include "kstab/monomial.hpp"
#include "kstab/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace kstab {

/// Seeded generator for the random test corpora. Draws are plain modular reductions of
/// mt19937_64 output, so a seed gives the same corpus with any standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    long uniform(long lo, long hi);

private:
    std::mt19937_64 engine_;
};

/// Random ideal with 1..max_generators generators, exponents in [0, max_exponent].
/// Proper (never the unit ideal).
MonomialIdeal random_ideal(Rng& rng, std::size_t arity, int max_generators, long max_exponent);

/// p/q with 1 <= q <= max_denominator and 0 < p/q <= max_value.
Rational random_exponent(Rng& rng, long max_denominator, long max_value);

/// Valid flag: M in [1, max_length], points p0.. (1..max_points of them), multiplicities in
/// [0, max_multiplicity], nondecreasing in j, D_M != 0.
FlagIdealP1 random_flag(Rng& rng, int max_length, int max_points, long max_multiplicity);

struct SummationInstance {
    MonomialIdeal a0;
    Rational c0;
    std::vector<MonomialIdeal> parts;
    Rational c;
};

/// n <= 3, l <= 3 parts, c in {1/2, 1, 3/2, 2}, c0 in {0, 1/2, 1}.
SummationInstance random_summation_instance(Rng& rng);

} // namespace kstab
