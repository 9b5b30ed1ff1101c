#pragma once

#include "kstab/rational.hpp"
#include "kstab/unipoly.hpp"

#include <span>
#include <vector>

namespace kstab {

struct Sample {
    long k;
    Rational value;
};

/// Samples at strictly increasing positive k, each a multiple of `base`.
class SampleGrid {
public:
    SampleGrid() = default;
    explicit SampleGrid(std::vector<Sample> entries, long base = 1);

    const std::vector<Sample>& entries() const noexcept { return entries_; }
    long base() const noexcept { return base_; }
    std::size_t size() const noexcept { return entries_.size(); }

private:
    std::vector<Sample> entries_;
    long base_ = 1;
};

/// Unique polynomial of degree < samples.size() through all samples (Newton form,
/// converted to the monomial basis). Requires at least 2 samples with distinct k.
UniPoly interpolate(std::span<const Sample> samples);
inline UniPoly interpolate(const SampleGrid& grid) { return interpolate(std::span<const Sample>(grid.entries())); }

struct StableFit {
    UniPoly poly;
    std::size_t onset_index = 0;
    long onset_k = 0;
};

/// Finds the degree <= degree_bound polynomial that agrees with every sample from
/// some index onward. Windows are runs of degree_bound + 2 consecutive samples; a window
/// "vanishes" when its (degree_bound+1)-th divided difference is zero. At least the two
/// trailing windows must vanish. Throws StabilizationError naming the largest k otherwise.
StableFit stabilized_fit(std::span<const Sample> samples, int degree_bound);
inline StableFit stabilized_fit(const SampleGrid& grid, int degree_bound)
{
    return stabilized_fit(std::span<const Sample>(grid.entries()), degree_bound);
}

/// Coefficient of k^{n+1} k'^n in w(k) k' N(k') - w(k') k N(k).
/// Needs deg w <= n+1 and deg N == n.
Rational df_coefficient(const UniPoly& w, const UniPoly& N, int n);

} // namespace kstab
