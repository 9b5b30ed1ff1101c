#include "mixed_polyhedron.hpp"

#include "kstab/error.hpp"

#include <map>
#include <string>

namespace kstab {

namespace {

// Calls visit(parts) for every composition of `total` into `slots` nonnegative parts.
template <typename Visitor>
void for_each_composition(long total, std::size_t slots, Visitor&& visit)
{
    std::vector<long> parts(slots, 0);
    auto rec = [&](auto&& self, std::size_t i, long remaining) -> void {
        if (i + 1 == slots) {
            parts[i] = remaining;
            visit(parts);
            return;
        }
        for (long x = 0; x <= remaining; ++x) {
            parts[i] = x;
            self(self, i + 1, remaining - x);
        }
    };
    rec(rec, 0, total);
}

std::optional<ExponentVector> escaping_generator(const MonomialIdeal& outer, const MonomialIdeal& inner)
{
    for (const auto& g : inner.generators()) {
        if (!outer.contains_monomial(g)) {
            return g;
        }
    }
    return std::nullopt;
}

} // namespace

SummationResult summation_check(const MonomialIdeal& a0, const Rational& c0,
                                const std::vector<MonomialIdeal>& parts, const Rational& c,
                                long denom_bound)
{
    if (parts.empty()) {
        throw InputError("summation check needs at least one summand ideal");
    }
    if (denom_bound < 1) {
        throw InputError("denominator bound must be at least 1");
    }
    if (c < 0 || c0 < 0) {
        throw InputError("summation exponents must be nonnegative");
    }
    for (const auto& p : parts) {
        if (p.arity() != a0.arity()) {
            throw InputError("summation ideals must share one arity");
        }
    }

    MonomialIdeal total = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        total = ideal_sum(total, parts[i]);
    }
    const MonomialIdeal lhs = multiplier_ideal(WeightedIdealProduct({{a0, c0}, {total, c}}));

    std::vector<MonomialIdeal> factors{a0};
    factors.insert(factors.end(), parts.begin(), parts.end());
    detail::MixedPolyhedron mixed(std::move(factors));

    std::map<long, MonomialIdeal> memo;
    auto rhs_at = [&](long denom) -> const MonomialIdeal& {
        if (auto it = memo.find(denom); it != memo.end()) {
            return it->second;
        }
        const long numerator = Rational(c * denom).get_num().get_si();
        std::vector<ExponentVector> gens;
        std::vector<Rational> exponents(parts.size() + 1);
        exponents[0] = c0;
        for_each_composition(numerator, parts.size(), [&](const std::vector<long>& split) {
            for (std::size_t i = 0; i < split.size(); ++i) {
                exponents[i + 1] = ratio(split[i], denom);
            }
            const auto term = mixed.multiplier_ideal(exponents);
            gens.insert(gens.end(), term.generators().begin(), term.generators().end());
        });
        return memo.emplace(denom, MonomialIdeal(a0.arity(), std::move(gens))).first->second;
    };

    const long step = c.get_den().get_si();
    for (long denom = step; 2 * denom <= denom_bound; denom += step) {
        for (long d : {denom, 2 * denom}) {
            const MonomialIdeal& rhs = rhs_at(d);
            if (auto bad = escaping_generator(lhs, rhs)) {
                return SummationResult{false, d, lhs, rhs, bad};
            }
            if (!(rhs == lhs)) {
                break;
            }
            if (d == 2 * denom) {
                return SummationResult{true, denom, lhs, rhs, std::nullopt};
            }
        }
    }
    throw StabilizationError("summation check inconclusive: right side did not reach the left side "
                             "for splitting denominators up to " + std::to_string(denom_bound),
                             denom_bound);
}

} // namespace kstab
