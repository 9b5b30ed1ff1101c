#pragma once

#include "kstab/fitting.hpp"
#include "kstab/rational.hpp"
#include "kstab/unipoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace kstab {

/// Effective divisor on P^1 as point label -> multiplicity. Zero entries are dropped.
class PointDivisor {
public:
    PointDivisor() = default;
    explicit PointDivisor(std::map<std::string, long> multiplicities);

    long at(const std::string& point) const;
    long degree() const noexcept { return degree_; }
    bool is_zero() const noexcept { return mult_.empty(); }
    const std::map<std::string, long>& multiplicities() const noexcept { return mult_; }

    friend bool operator==(const PointDivisor&, const PointDivisor&) = default;

private:
    std::map<std::string, long> mult_;
    long degree_ = 0;
};

/// I_1 ⊇ ... ⊇ I_M on P^1 with I_j = O(-D_j); D_1 <= ... <= D_M pointwise, D_M != 0.
struct FlagIdealP1 {
    std::vector<PointDivisor> divisors;

    std::size_t length() const noexcept { return divisors.size(); }
    /// Every point label carrying positive multiplicity somewhere in the flag.
    std::vector<std::string> points() const;
};

/// Throws InputError unless the flag is a nontrivial increasing chain.
void validate_flag(const FlagIdealP1& flag);

/// D~_0, ..., D~_{M ks}: pointwise ks-fold (min,+) power of (0, D_1(p), ..., D_M(p)).
struct TildeFamily {
    long ks = 0;
    std::vector<PointDivisor> divisors;
};

TildeFamily tilde_divisors(const FlagIdealP1& flag, long ks);

/// deg D~_j for j = 0..M ks.
std::vector<long> tilde_degrees(const FlagIdealP1& flag, long ks);

/// dim F_j = h^0(P^1, O(2k) - D~_j) for j = 0..M ks s.
std::vector<long> filtration_dimensions(const FlagIdealP1& flag, long k, const Rational& s);

/// Total weight w(k) = sum_{j>=1} dim F_j - N M k s with N = 2k+1. Needs k >= 1 and k s a positive integer.
Integer weight(const FlagIdealP1& flag, long k, const Rational& s);

struct GridSpec {
    std::vector<long> multipliers{2, 3, 4, 5, 6, 8};
    std::vector<long> holdout{10, 12};
    long k_max = 480;
};

struct DFReport {
    Rational s;
    SampleGrid k_grid;
    long base_divisibility = 1;
    std::size_t onset_index = 0;
    UniPoly w_poly;
    UniPoly N_poly;
    Rational DF;
    Rational DF0;
    Rational inferred_Lbar_sq;
    bool semiampleness_checked = false;
};

/// Samples w(k) at k = d {2,3,4,5,6,8} with d = denom(s) P for P = 1, 2, ..., takes the first
/// P where the degree <= 2 fit stabilizes and also predicts the holdout points, and reads
/// DF off the fit. Throws StabilizationError when d * max(holdout) would exceed k_max.
DFReport donaldson_futaki(const FlagIdealP1& flag, const Rational& s, const GridSpec& grid = {});

} // namespace kstab
