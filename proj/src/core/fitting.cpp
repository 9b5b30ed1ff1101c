#include "kstab/fitting.hpp"

#include "kstab/error.hpp"

#include <set>
#include <string>

namespace kstab {

SampleGrid::SampleGrid(std::vector<Sample> entries, long base)
    : entries_(std::move(entries)), base_(base)
{
    if (base_ < 1) {
        throw InputError("sample grid base divisibility must be positive");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const long k = entries_[i].k;
        if (k < 1) {
            throw InputError("sample grid k values must be positive");
        }
        if (k % base_ != 0) {
            throw InputError("sample grid k=" + std::to_string(k) + " is not a multiple of "
                             + std::to_string(base_));
        }
        if (i > 0 && entries_[i - 1].k >= k) {
            throw InputError("sample grid k values must be strictly increasing");
        }
    }
}

namespace {

// Top-order divided difference f[x_0, ..., x_m] of the given samples.
Rational top_divided_difference(std::span<const Sample> window)
{
    std::vector<Rational> table;
    table.reserve(window.size());
    for (const auto& s : window) {
        table.push_back(s.value);
    }
    for (std::size_t order = 1; order < window.size(); ++order) {
        for (std::size_t i = window.size() - 1; i >= order; --i) {
            table[i] = (table[i] - table[i - 1])
                       / Rational(window[i].k - window[i - order].k);
        }
    }
    return table.back();
}

} // namespace

UniPoly interpolate(std::span<const Sample> samples)
{
    if (samples.size() < 2) {
        throw InputError("interpolation needs at least 2 samples");
    }
    std::set<long> seen;
    for (const auto& s : samples) {
        if (!seen.insert(s.k).second) {
            throw InputError("duplicate sample at k=" + std::to_string(s.k));
        }
    }

    // Newton divided differences, then Horner-style expansion into the monomial basis.
    const std::size_t n = samples.size();
    std::vector<Rational> dd;
    dd.reserve(n);
    for (const auto& s : samples) {
        dd.push_back(s.value);
    }
    for (std::size_t order = 1; order < n; ++order) {
        for (std::size_t i = n - 1; i >= order; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(samples[i].k - samples[i - order].k);
        }
    }
    UniPoly result = UniPoly::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        result *= UniPoly{Rational(-samples[i].k), Rational(1)};
        result += UniPoly::constant(dd[i]);
    }
    return result;
}

StableFit stabilized_fit(std::span<const Sample> samples, int degree_bound)
{
    if (degree_bound < 0) {
        throw InputError("degree bound must be nonnegative");
    }
    const std::size_t window = static_cast<std::size_t>(degree_bound) + 2;
    if (samples.size() < window + 1) {
        const long largest = samples.empty() ? 0 : samples.back().k;
        throw StabilizationError("grid too short: a degree <= " + std::to_string(degree_bound)
                                     + " fit needs " + std::to_string(window + 1) + " samples, tried up to k="
                                     + std::to_string(largest),
                                 largest);
    }
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (samples[i - 1].k >= samples[i].k) {
            throw InputError("stabilized fit needs strictly increasing k");
        }
    }

    const std::size_t windows = samples.size() - window + 1;
    std::size_t onset = windows;
    while (onset > 0
           && top_divided_difference(samples.subspan(onset - 1, window)) == 0) {
        --onset;
    }
    if (windows - onset < 2) {
        throw StabilizationError("grid too short: no polynomial stabilization of degree <= "
                                     + std::to_string(degree_bound) + " up to k="
                                     + std::to_string(samples.back().k),
                                 samples.back().k);
    }

    // Overlapping vanishing windows share degree_bound + 1 points, so one polynomial
    // passes through every sample from the onset on.
    const auto tail = samples.subspan(samples.size() - window + 1);
    StableFit fit{interpolate(tail), onset, samples[onset].k};
    for (std::size_t i = onset; i < samples.size(); ++i) {
        if (fit.poly(samples[i].k) != samples[i].value) {
            throw StabilizationError("stabilized fit disagrees with sample at k="
                                         + std::to_string(samples[i].k),
                                     samples.back().k);
        }
    }
    return fit;
}

Rational df_coefficient(const UniPoly& w, const UniPoly& N, int n)
{
    if (n < 0) {
        throw InputError("dimension n must be nonnegative");
    }
    if (w.degree() > n + 1) {
        throw InputError("weight polynomial degree " + std::to_string(w.degree())
                         + " exceeds n+1 = " + std::to_string(n + 1));
    }
    if (N.degree() != n) {
        throw InputError("section-count polynomial must have degree n = " + std::to_string(n));
    }
    // In w(k) k' N(k') the k^{n+1} k'^n term is w_{n+1} * N_{n-1};
    // in w(k') k N(k) it is w_n * N_n.
    const Rational lower = n >= 1 ? N.coefficient(static_cast<std::size_t>(n - 1)) : Rational(0);
    return w.coefficient(static_cast<std::size_t>(n + 1)) * lower
           - w.coefficient(static_cast<std::size_t>(n)) * N.coefficient(static_cast<std::size_t>(n));
}

} // namespace kstab
