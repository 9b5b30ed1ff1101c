#include "kstab/corpus.hpp"

#include "kstab/error.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace kstab {

long Rng::uniform(long lo, long hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

MonomialIdeal random_ideal(Rng& rng, std::size_t arity, int max_generators, long max_exponent)
{
    const int count = static_cast<int>(rng.uniform(1, max_generators));
    std::vector<ExponentVector> gens;
    for (int g = 0; g < count; ++g) {
        ExponentVector e(arity);
        long total = 0;
        for (auto& x : e) {
            x = rng.uniform(0, max_exponent);
            total += x;
        }
        if (total == 0) {
            e[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(arity) - 1))] = 1;
        }
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(arity, std::move(gens));
}

Rational random_exponent(Rng& rng, long max_denominator, long max_value)
{
    const long q = rng.uniform(1, max_denominator);
    const long p = rng.uniform(1, q * max_value);
    return ratio(p, q);
}

FlagIdealP1 random_flag(Rng& rng, int max_length, int max_points, long max_multiplicity)
{
    const int length = static_cast<int>(rng.uniform(1, max_length));
    const int points = static_cast<int>(rng.uniform(1, max_points));
    while (true) {
        std::vector<std::vector<long>> rows(static_cast<std::size_t>(length),
                                            std::vector<long>(static_cast<std::size_t>(points)));
        for (int p = 0; p < points; ++p) {
            // Sorted draws give a nondecreasing multiplicity sequence at each point.
            std::vector<long> seq(static_cast<std::size_t>(length));
            for (auto& x : seq) {
                x = rng.uniform(0, max_multiplicity);
            }
            std::sort(seq.begin(), seq.end());
            for (int j = 0; j < length; ++j) {
                rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)] = seq[static_cast<std::size_t>(j)];
            }
        }
        FlagIdealP1 flag;
        for (const auto& row : rows) {
            std::map<std::string, long> m;
            for (int p = 0; p < points; ++p) {
                m["p" + std::to_string(p)] = row[static_cast<std::size_t>(p)];
            }
            flag.divisors.emplace_back(std::move(m));
        }
        if (!flag.divisors.back().is_zero()) {
            return flag;
        }
    }
}

SummationInstance random_summation_instance(Rng& rng)
{
    static const Rational kCs[] = {ratio(1, 2), Rational(1), ratio(3, 2), Rational(2)};
    static const Rational kC0s[] = {Rational(0), ratio(1, 2), Rational(1)};
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    const int l = static_cast<int>(rng.uniform(1, 3));
    SummationInstance inst{rng.uniform(0, 2) == 0 ? MonomialIdeal::unit(n) : random_ideal(rng, n, 2, 2),
                           kC0s[rng.uniform(0, 2)], {}, kCs[rng.uniform(0, 3)]};
    for (int i = 0; i < l; ++i) {
        inst.parts.push_back(random_ideal(rng, n, 3, 2));
    }
    return inst;
}

} // namespace kstab
