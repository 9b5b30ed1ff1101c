#pragma once

#include "kstab/arrangement.hpp"
#include "kstab/multipoly.hpp"
#include "kstab/rational.hpp"

#include <string_view>
#include <vector>

namespace kstab {

inline constexpr int kMaxGammaK = 6;
inline constexpr int kMaxVeroneseK = 3;

struct GammaSample {
    int k = 0;
    int n_points = 0; ///< N = 2k + 1 = h^0(P^1, O(2k))
    Rational gamma_k;

    friend bool operator==(const GammaSample&, const GammaSample&) = default;
};

enum class Verdict { stable, semistable_not_stable, not_semistable };

std::string_view to_string(Verdict v);
/// stable iff gamma > 1, semistable_not_stable iff gamma == 1.
Verdict classify(const Rational& gamma);

/// Which lattice algorithm computes the braid lct inside gamma_at_k.
enum class LatticeRoute { partition, matrix };

/// det of the (2k+1)x(2k+1) matrix with rows (1, u_i, ..., u_i^{2k}); k in [0, 3].
MultiPoly veronese_determinant(int k);

/// k times the lct of the braid arrangement on 2k+1 variables. k in [1, kMaxGammaK];
/// the matrix route is limited to k <= 3.
GammaSample gamma_at_k(int k, LatticeRoute route = LatticeRoute::partition);

struct GammaReport {
    std::vector<GammaSample> samples;
    Rational gamma;
    Verdict verdict = Verdict::not_semistable;
    /// Every sample matched 2k/(2k+1) and the sequence was strictly increasing.
    bool monotone_certificate = false;
};

/// Samples for k = 1..k_max. gamma is the limit of the certified closed form 2k/(2k+1).
GammaReport gamma_report(int k_max);

} // namespace kstab
