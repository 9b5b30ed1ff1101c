#include "kstab/flag_df.hpp"

#include "kstab/error.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace kstab {

PointDivisor::PointDivisor(std::map<std::string, long> multiplicities)
{
    for (auto& [point, m] : multiplicities) {
        if (m < 0) {
            throw InputError("negative multiplicity at point \"" + point + "\"");
        }
        if (m > 0) {
            degree_ += m;
            mult_.emplace(point, m);
        }
    }
}

long PointDivisor::at(const std::string& point) const
{
    auto it = mult_.find(point);
    return it == mult_.end() ? 0 : it->second;
}

std::vector<std::string> FlagIdealP1::points() const
{
    std::set<std::string> all;
    for (const auto& d : divisors) {
        for (const auto& [p, m] : d.multiplicities()) {
            all.insert(p);
        }
    }
    return {all.begin(), all.end()};
}

void validate_flag(const FlagIdealP1& flag)
{
    if (flag.divisors.empty()) {
        throw InputError("flag needs M >= 1 divisors");
    }
    for (std::size_t j = 1; j < flag.divisors.size(); ++j) {
        for (const auto& p : flag.points()) {
            if (flag.divisors[j - 1].at(p) > flag.divisors[j].at(p)) {
                throw InputError("flag is not increasing at point \"" + p + "\" between D_"
                                 + std::to_string(j) + " and D_" + std::to_string(j + 1));
            }
        }
    }
    if (flag.divisors.back().is_zero()) {
        throw InputError("trivial configuration (blowup is isomorphism)");
    }
}

namespace {

constexpr long kUnreachable = std::numeric_limits<long>::max() / 4;

// ks-fold (min,+) power of (seq_0 = 0, seq_1, ..., seq_M), indices 0..M ks.
std::vector<long> min_plus_power(const std::vector<long>& seq, long ks)
{
    const std::size_t m = seq.size() - 1;
    std::vector<long> cur{0};
    std::vector<long> next;
    for (long step = 0; step < ks; ++step) {
        next.assign(cur.size() + m, kUnreachable);
        for (std::size_t a = 0; a < cur.size(); ++a) {
            for (std::size_t b = 0; b <= m; ++b) {
                next[a + b] = std::min(next[a + b], cur[a] + seq[b]);
            }
        }
        cur.swap(next);
    }
    return cur;
}

std::vector<long> point_sequence(const FlagIdealP1& flag, const std::string& p)
{
    std::vector<long> seq{0};
    for (const auto& d : flag.divisors) {
        seq.push_back(d.at(p));
    }
    return seq;
}

long checked_ks(long k, const Rational& s)
{
    if (k < 1) {
        throw InputError("k must be a positive integer");
    }
    if (s <= 0) {
        throw InputError("s must be positive");
    }
    const Rational ks = s * k;
    if (!is_integer(ks)) {
        throw InputError("k*s = " + to_string(ks) + " is not an integer");
    }
    return ks.get_num().get_si();
}

} // namespace

TildeFamily tilde_divisors(const FlagIdealP1& flag, long ks)
{
    validate_flag(flag);
    if (ks < 1) {
        throw InputError("ks must be a positive integer");
    }
    const std::size_t length = flag.divisors.size() * static_cast<std::size_t>(ks) + 1;
    std::vector<std::map<std::string, long>> mults(length);
    for (const auto& p : flag.points()) {
        const auto power = min_plus_power(point_sequence(flag, p), ks);
        for (std::size_t j = 0; j < length; ++j) {
            mults[j][p] = power[j];
        }
    }
    TildeFamily family{ks, {}};
    family.divisors.reserve(length);
    for (auto& m : mults) {
        family.divisors.emplace_back(std::move(m));
    }
    return family;
}

std::vector<long> tilde_degrees(const FlagIdealP1& flag, long ks)
{
    validate_flag(flag);
    if (ks < 1) {
        throw InputError("ks must be a positive integer");
    }
    std::vector<long> total(flag.divisors.size() * static_cast<std::size_t>(ks) + 1, 0);
    for (const auto& p : flag.points()) {
        const auto power = min_plus_power(point_sequence(flag, p), ks);
        for (std::size_t j = 0; j < total.size(); ++j) {
            total[j] += power[j];
        }
    }
    return total;
}

std::vector<long> filtration_dimensions(const FlagIdealP1& flag, long k, const Rational& s)
{
    const long ks = checked_ks(k, s);
    auto dims = tilde_degrees(flag, ks);
    for (auto& d : dims) {
        // h^0(P^1, O(e)) = max(0, e + 1) with e = 2k - deg D~_j
        d = std::max(0L, 2 * k + 1 - d);
    }
    return dims;
}

Integer weight(const FlagIdealP1& flag, long k, const Rational& s)
{
    const long ks = checked_ks(k, s);
    const auto dims = filtration_dimensions(flag, k, s);
    Integer m = 0;
    for (std::size_t j = 1; j < dims.size(); ++j) {
        m += dims[j];
    }
    const long n_sections = 2 * k + 1;
    return m - Integer(n_sections) * Integer(static_cast<long>(flag.divisors.size())) * Integer(ks);
}

DFReport donaldson_futaki(const FlagIdealP1& flag, const Rational& s, const GridSpec& grid)
{
    validate_flag(flag);
    if (s <= 0) {
        throw InputError("s must be positive");
    }
    if (grid.multipliers.size() < 5) {
        throw InputError("k grid needs at least 5 points");
    }
    if (!std::is_sorted(grid.multipliers.begin(), grid.multipliers.end()) || grid.multipliers.front() < 1) {
        throw InputError("k grid multipliers must be positive and increasing");
    }
    long reach = grid.multipliers.back();
    for (long h : grid.holdout) {
        reach = std::max(reach, h);
    }

    const long k0 = s.get_den().get_si();
    long largest_tried = 0;
    for (long period = 1; k0 * period * reach <= grid.k_max; ++period) {
        const long base = k0 * period;
        std::vector<Sample> samples;
        for (long m : grid.multipliers) {
            samples.push_back({base * m, Rational(weight(flag, base * m, s))});
        }
        largest_tried = base * reach;
        StableFit fit;
        try {
            fit = stabilized_fit(samples, 2);
        } catch (const StabilizationError&) {
            continue;
        }
        const bool holds_out = std::all_of(grid.holdout.begin(), grid.holdout.end(), [&](long h) {
            return fit.poly(base * h) == Rational(weight(flag, base * h, s));
        });
        if (!holds_out) {
            continue;
        }

        DFReport report;
        report.s = s;
        report.k_grid = SampleGrid(std::move(samples), base);
        report.base_divisibility = base;
        report.onset_index = fit.onset_index;
        report.w_poly = fit.poly;
        report.N_poly = UniPoly{Rational(1), Rational(2)};
        report.DF = df_coefficient(report.w_poly, report.N_poly, 1);
        // 2 ((n+1)!)^2 / (-K_{P^1})^1 = 2 * 4 / 2
        report.DF0 = 4 * report.DF;
        report.inferred_Lbar_sq = 2 * report.w_poly.coefficient(2);
        return report;
    }
    throw StabilizationError("grid too short: w(k) did not stabilize up to k="
                                 + std::to_string(largest_tried) + "; increase --k-max",
                             largest_tried);
}

} // namespace kstab
