#include "kstab/corpus.hpp"
#include "kstab/monomial.hpp"

#include <sstream>

namespace kstab {

bool LawReport::all_passed() const
{
    for (const auto& law : laws) {
        if (!law.passed()) {
            return false;
        }
    }
    return true;
}

namespace {

void record(LawOutcome& outcome, bool ok, const std::string& instance)
{
    ++outcome.instances;
    if (!ok) {
        ++outcome.failures;
        if (outcome.counterexample.empty()) {
            outcome.counterexample = instance;
        }
    }
}

std::string describe(const MonomialIdeal& a, const Rational& c)
{
    return a.to_string() + "^" + to_string(c);
}

} // namespace

LawReport law_checks(std::uint64_t seed, int count)
{
    Rng rng(seed);
    LawOutcome divisor{"divisor", 0, 0, {}};
    LawOutcome inclusion{"inclusion", 0, 0, {}};
    LawOutcome product{"product", 0, 0, {}};

    for (int i = 0; i < count; ++i) {
        // I(x^d * a^c) = x^d I(a^c)
        {
            const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
            const auto a = random_ideal(rng, n, 4, 3);
            const auto c = random_exponent(rng, 6, 3);
            ExponentVector d(n);
            for (auto& x : d) {
                x = rng.uniform(0, 2);
            }
            const auto lhs = multiplier_ideal(
                WeightedIdealProduct({{MonomialIdeal::principal(d), Rational(1)}, {a, c}}));
            const auto rhs = times_monomial(multiplier_ideal(WeightedIdealProduct({{a, c}})), d);
            record(divisor, lhs == rhs,
                   describe(MonomialIdeal::principal(d), 1) + " * " + describe(a, c));
        }
        // a ⊆ b  =>  I(a^c) ⊆ I(b^c); a is built from multiples of generators of b.
        {
            const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
            const auto b = random_ideal(rng, n, 4, 3);
            std::vector<ExponentVector> gens;
            const long picks = rng.uniform(1, 4);
            for (long t = 0; t < picks; ++t) {
                ExponentVector g = b.generators()[static_cast<std::size_t>(
                    rng.uniform(0, static_cast<long>(b.generators().size()) - 1))];
                for (auto& x : g) {
                    x += rng.uniform(0, 2);
                }
                gens.push_back(std::move(g));
            }
            const MonomialIdeal a(n, std::move(gens));
            const auto c = random_exponent(rng, 6, 3);
            const bool ok = b.contains(a)
                            && multiplier_ideal(WeightedIdealProduct({{b, c}}))
                                   .contains(multiplier_ideal(WeightedIdealProduct({{a, c}})));
            record(inclusion, ok, describe(a, c) + " in " + describe(b, c));
        }
        // Disjoint variable blocks: the multiplier ideal factors.
        {
            const auto n1 = static_cast<std::size_t>(rng.uniform(1, 2));
            const auto n2 = static_cast<std::size_t>(rng.uniform(1, 3 - static_cast<long>(n1)));
            const auto a = random_ideal(rng, n1, 4, 3);
            const auto b = random_ideal(rng, n2, 4, 3);
            const auto c = random_exponent(rng, 6, 3);
            const auto c2 = random_exponent(rng, 6, 3);
            const std::size_t n = n1 + n2;
            const auto joint = multiplier_ideal(
                WeightedIdealProduct({{embed(a, 0, n), c}, {embed(b, n1, n), c2}}));
            const auto split = ideal_product(embed(multiplier_ideal(WeightedIdealProduct({{a, c}})), 0, n),
                                             embed(multiplier_ideal(WeightedIdealProduct({{b, c2}})), n1, n));
            record(product, joint == split, describe(a, c) + " (x) " + describe(b, c2));
        }
    }
    return LawReport{{divisor, inclusion, product}};
}

} // namespace kstab
