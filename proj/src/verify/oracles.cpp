#include "kstab/oracles.hpp"

#include "kstab/error.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace kstab::oracle {

std::vector<std::map<std::string, long>> tilde_by_compositions(const FlagIdealP1& flag, long ks)
{
    const long m = static_cast<long>(flag.divisors.size());
    const auto points = flag.points();
    auto level = [&](long j, const std::string& p) { return j == 0 ? 0L : flag.divisors[static_cast<std::size_t>(j - 1)].at(p); };

    std::vector<std::map<std::string, long>> best(static_cast<std::size_t>(m * ks + 1));
    std::vector<long> parts(static_cast<std::size_t>(ks), 0);
    while (true) {
        long j = 0;
        for (long x : parts) {
            j += x;
        }
        for (const auto& p : points) {
            long cost = 0;
            for (long x : parts) {
                cost += level(x, p);
            }
            auto [it, inserted] = best[static_cast<std::size_t>(j)].try_emplace(p, cost);
            if (!inserted) {
                it->second = std::min(it->second, cost);
            }
        }
        std::size_t i = 0;
        while (i < parts.size() && parts[i] == m) {
            parts[i] = 0;
            ++i;
        }
        if (i == parts.size()) {
            break;
        }
        ++parts[i];
    }
    for (auto& entry : best) {
        for (auto it = entry.begin(); it != entry.end();) {
            it = it->second == 0 ? entry.erase(it) : std::next(it);
        }
    }
    return best;
}

Integer weight_by_counting(const FlagIdealP1& flag, long k, const Rational& s)
{
    const Rational ks_q = s * k;
    if (!is_integer(ks_q)) {
        throw InputError("k*s must be an integer");
    }
    const long ks = ks_q.get_num().get_si();
    const std::size_t m = flag.divisors.size();
    const auto points = flag.points();
    constexpr long kNone = std::numeric_limits<long>::max();

    // best[j][p] over multisets of parts, i.e. counts c_1..c_M with c_0 = ks - sum.
    std::vector<std::vector<long>> best(m * static_cast<std::size_t>(ks) + 1,
                                        std::vector<long>(points.size(), kNone));
    std::vector<long> counts(m, 0);
    auto visit = [&] {
        long j = 0;
        for (std::size_t i = 0; i < m; ++i) {
            j += static_cast<long>(i + 1) * counts[i];
        }
        for (std::size_t p = 0; p < points.size(); ++p) {
            long cost = 0;
            for (std::size_t i = 0; i < m; ++i) {
                cost += counts[i] * flag.divisors[i].at(points[p]);
            }
            auto& slot = best[static_cast<std::size_t>(j)][p];
            slot = std::min(slot, cost);
        }
    };
    auto rec = [&](auto&& self, std::size_t i, long remaining) -> void {
        if (i == m) {
            visit();
            return;
        }
        for (long c = 0; c <= remaining; ++c) {
            counts[i] = c;
            self(self, i + 1, remaining - c);
        }
        counts[i] = 0;
    };
    rec(rec, 0, ks);

    const long sections = 2 * k + 1;
    Integer m_sum = 0;
    for (std::size_t j = 1; j < best.size(); ++j) {
        long degree = 0;
        for (long x : best[j]) {
            degree += x;
        }
        // sections of O(2k) vanishing to the prescribed orders: 2k + 1 - deg when nonnegative
        m_sum += std::max(0L, sections - degree);
    }
    return m_sum - Integer(sections) * Integer(static_cast<long>(m)) * Integer(ks);
}

namespace {

Rational det3(const std::array<std::array<Rational, 3>, 3>& a)
{
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
           - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
           + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

} // namespace

std::optional<Rational> df0_from_samples(const std::vector<std::pair<long, Integer>>& samples)
{
    if (samples.size() < 3) {
        return std::nullopt;
    }
    std::array<std::array<Rational, 3>, 3> a;
    std::array<Rational, 3> b;
    for (std::size_t r = 0; r < 3; ++r) {
        const Rational k = samples[r].first;
        a[r] = {k * k, k, Rational(1)};
        b[r] = Rational(samples[r].second);
    }
    const Rational d = det3(a);
    std::array<Rational, 3> coeff;
    for (std::size_t c = 0; c < 3; ++c) {
        auto m = a;
        for (std::size_t r = 0; r < 3; ++r) {
            m[r][c] = b[r];
        }
        coeff[c] = det3(m) / d;
    }
    for (const auto& [k, w] : samples) {
        const Rational kk = k;
        if (coeff[0] * kk * kk + coeff[1] * kk + coeff[2] != Rational(w)) {
            return std::nullopt;
        }
    }
    return 4 * (coeff[0] - 2 * coeff[1]);
}

Rational df_by_expansion(const UniPoly& w, const UniPoly& N, int n)
{
    // variables (k, k')
    auto lift = [](const UniPoly& p, std::size_t var) {
        MultiPoly out(2);
        for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
            Exponents e(2, 0);
            e[var] = static_cast<unsigned>(i);
            out += MultiPoly::term(e, p.coefficients()[i]);
        }
        return out;
    };
    const MultiPoly k = MultiPoly::variable(2, 0);
    const MultiPoly kp = MultiPoly::variable(2, 1);
    const MultiPoly form = lift(w, 0) * kp * lift(N, 1) - lift(w, 1) * k * lift(N, 0);
    return form.coefficient({static_cast<unsigned>(n + 1), static_cast<unsigned>(n)});
}

bool in_multiplier_ideal_2d(const MonomialIdeal& a, const Rational& c, const ExponentVector& v)
{
    if (a.arity() != 2 || v.size() != 2) {
        throw InputError("2d oracle needs two variables");
    }
    if (c == 0) {
        return true;
    }
    // x = (v+1)/c must strictly dominate some point of conv(G).
    const Rational x1 = Rational(v[0] + 1) / c;
    const Rational x2 = Rational(v[1] + 1) / c;
    const auto& gens = a.generators();
    // Lowest second coordinate of conv(G) on the vertical line q_1 = t, for t just below x1:
    // by continuity it is enough to evaluate at t = x1 and require some point with q_1 < x1.
    std::optional<Rational> lowest;
    bool left_of_line = false;
    for (const auto& g : gens) {
        if (Rational(g[0]) < x1) {
            left_of_line = true;
        }
    }
    if (!left_of_line) {
        return false;
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const Rational gi1 = gens[i][0];
        const Rational gi2 = gens[i][1];
        if (gi1 <= x1) {
            lowest = lowest ? std::min(*lowest, gi2) : gi2;
        }
        for (std::size_t j = 0; j < gens.size(); ++j) {
            const Rational gj1 = gens[j][0];
            const Rational gj2 = gens[j][1];
            if (gi1 <= x1 && x1 <= gj1 && gi1 < gj1) {
                const Rational t = (x1 - gi1) / (gj1 - gi1);
                const Rational y = gi2 + t * (gj2 - gi2);
                lowest = lowest ? std::min(*lowest, y) : y;
            }
        }
    }
    return lowest && *lowest < x2;
}

} // namespace kstab::oracle
