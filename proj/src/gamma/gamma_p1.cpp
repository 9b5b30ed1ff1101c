#include "kstab/gamma_p1.hpp"

#include "kstab/determinant.hpp"
#include "kstab/error.hpp"

#include <string>

namespace kstab {

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::stable:
        return "stable";
    case Verdict::semistable_not_stable:
        return "semistable_not_stable";
    case Verdict::not_semistable:
        return "not_semistable";
    }
    return "unknown";
}

Verdict classify(const Rational& gamma)
{
    if (gamma > 1) {
        return Verdict::stable;
    }
    return gamma == 1 ? Verdict::semistable_not_stable : Verdict::not_semistable;
}

MultiPoly veronese_determinant(int k)
{
    if (k < 0) {
        throw InputError("veronese_determinant needs k >= 0");
    }
    if (k > kMaxVeroneseK) {
        throw SizeError("veronese_determinant supports k <= " + std::to_string(kMaxVeroneseK)
                        + " (matrix size 2k+1 <= 7), got k=" + std::to_string(k));
    }
    const std::size_t n = static_cast<std::size_t>(2 * k + 1);
    PolyMatrix m(n, std::vector<MultiPoly>(n, MultiPoly(n)));
    for (std::size_t i = 0; i < n; ++i) {
        Exponents e(n, 0);
        for (std::size_t p = 0; p < n; ++p) {
            e[i] = static_cast<unsigned>(p);
            m[i][p] = MultiPoly::term(e, 1);
        }
    }
    return det_symbolic(m);
}

GammaSample gamma_at_k(int k, LatticeRoute route)
{
    if (k < 1) {
        throw InputError("gamma_at_k needs k >= 1, got " + std::to_string(k));
    }
    if (k > kMaxGammaK) {
        throw InputError("k=" + std::to_string(k) + " exceeds the cap k <= " + std::to_string(kMaxGammaK));
    }
    const int n = 2 * k + 1;
    Rational lct;
    if (route == LatticeRoute::partition) {
        lct = lct_braid(n).value;
    } else {
        if (k > kMaxVeroneseK) {
            throw InputError("matrix lattice route supports k <= " + std::to_string(kMaxVeroneseK));
        }
        lct = lct_central(braid_arrangement(n)).value;
    }
    // D_k enters with coefficient 1/k, so lct((1/k) D_k) = k * lct(D_k).
    return GammaSample{k, n, lct * k};
}

GammaReport gamma_report(int k_max)
{
    if (k_max < 1) {
        throw InputError("gamma_report needs k_max >= 1");
    }
    if (k_max > kMaxGammaK) {
        throw InputError("k_max=" + std::to_string(k_max) + " exceeds the cap k <= "
                         + std::to_string(kMaxGammaK));
    }
    GammaReport report;
    bool certified = true;
    for (int k = 1; k <= k_max; ++k) {
        GammaSample s = gamma_at_k(k);
        certified = certified && s.gamma_k == ratio(2 * k, 2 * k + 1);
        if (!report.samples.empty()) {
            certified = certified && report.samples.back().gamma_k < s.gamma_k;
        }
        report.samples.push_back(std::move(s));
    }
    if (!certified) {
        throw std::logic_error("gamma samples do not follow 2k/(2k+1)");
    }
    // 2k/(2k+1) = 1 - 1/(2k+1) increases strictly to 1, so the liminf is 1.
    report.monotone_certificate = true;
    report.gamma = 1;
    report.verdict = classify(report.gamma);
    return report;
}

} // namespace kstab
