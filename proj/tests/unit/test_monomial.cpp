#include "kstab/corpus.hpp"
#include "kstab/error.hpp"
#include "kstab/monomial.hpp"
#include "kstab/oracles.hpp"

#include <doctest.h>

using namespace kstab;

namespace {

MonomialIdeal ideal2(std::vector<ExponentVector> gens) { return MonomialIdeal(2, std::move(gens)); }

MonomialIdeal power(const MonomialIdeal& a, int e)
{
    MonomialIdeal out = MonomialIdeal::unit(a.arity());
    for (int i = 0; i < e; ++i) {
        out = ideal_product(out, a);
    }
    return out;
}

std::vector<HalfSpace> non_coordinate(const NewtonPolyhedron& p)
{
    std::vector<HalfSpace> out;
    for (const auto& h : p.inequalities) {
        if (!h.is_coordinate_bound()) {
            out.push_back(h);
        }
    }
    return out;
}

} // namespace

TEST_CASE("monomial ideal basics")
{
    const auto m = ideal2({{1, 0}, {0, 1}, {1, 1}});
    CHECK(m.generators().size() == 2);
    CHECK(m.to_string() == "(x, y)");
    CHECK(power(m, 2).to_string() == "(x^2, x*y, y^2)");
    CHECK(MonomialIdeal::unit(2).to_string() == "(1)");
    CHECK(m.contains_monomial({3, 0}));
    CHECK_FALSE(m.contains_monomial({0, 0}));
    CHECK(m.contains(power(m, 3)));
    CHECK_FALSE(power(m, 3).contains(m));
    CHECK_THROWS_AS(MonomialIdeal(2, {{1, -1}}), InputError);
    CHECK_THROWS_AS(MonomialIdeal(2, {{1, 0, 0}}), InputError);
}

TEST_CASE("newton polyhedra")
{
    const auto simplex = newton_polyhedron(ideal2({{1, 0}, {0, 1}}));
    const auto faces = non_coordinate(simplex);
    REQUIRE(faces.size() == 1);
    CHECK(faces[0].normal == std::vector<Rational>{1, 1});
    CHECK(faces[0].offset == 1);

    const auto cusp = non_coordinate(newton_polyhedron(ideal2({{2, 0}, {0, 3}})));
    REQUIRE(cusp.size() == 1);
    CHECK(cusp[0].normal == std::vector<Rational>{3, 2});
    CHECK(cusp[0].offset == 6);

    const auto orthant = newton_polyhedron(MonomialIdeal::unit(2));
    CHECK(non_coordinate(orthant).empty());
    CHECK(orthant.contains({0, 0}));
    CHECK_THROWS_AS(newton_polyhedron(MonomialIdeal::unit(5)), SizeError);
}

TEST_CASE("multiplier ideal examples")
{
    const auto m = ideal2({{1, 0}, {0, 1}});
    CHECK(multiplier_ideal(WeightedIdealProduct({{m, 2}})) == m);
    CHECK(multiplier_ideal(WeightedIdealProduct({{m, ratio(3, 2)}})).is_unit());
    CHECK(multiplier_ideal(WeightedIdealProduct({{MonomialIdeal::unit(2), 7}})).is_unit());
}

TEST_CASE("lct examples")
{
    CHECK(lct_monomial(ideal2({{1, 0}, {0, 1}})) == 2);
    CHECK(lct_monomial(ideal2({{2, 0}, {0, 3}})) == ratio(5, 6));
    CHECK(lct_monomial(MonomialIdeal::principal({1, 0})) == 1);
    CHECK_THROWS_AS(lct_monomial(MonomialIdeal::unit(2)), InputError);
}

TEST_CASE("multiplier ideal is unit exactly below the lct")
{
    Rng rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_ideal(rng, 2 + static_cast<std::size_t>(trial % 2), 3, 4);
        const Rational lct = lct_monomial(a);
        CHECK(multiplier_ideal(WeightedIdealProduct({{a, lct - ratio(1, 12)}})).is_unit());
        CHECK_FALSE(multiplier_ideal(WeightedIdealProduct({{a, lct}})).is_unit());
        CHECK_FALSE(multiplier_ideal(WeightedIdealProduct({{a, lct + ratio(1, 12)}})).is_unit());
    }
}

TEST_CASE("multiplier ideals shrink as c grows and contain the ideal power")
{
    Rng rng(202);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_ideal(rng, 2, 3, 3);
        const Rational c = random_exponent(rng, 4, 3);
        const auto lower = multiplier_ideal(WeightedIdealProduct({{a, c}}));
        const auto upper = multiplier_ideal(WeightedIdealProduct({{a, c + ratio(1, 3)}}));
        CHECK(lower.contains(upper));
        CHECK(multiplier_ideal(WeightedIdealProduct({{a, 1}})).contains(a));
    }
}

TEST_CASE("scan agrees with the two-variable membership oracle")
{
    Rng rng(303);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_ideal(rng, 2, 3, 4);
        const Rational c = random_exponent(rng, 3, 3);
        const auto ideal = multiplier_ideal(WeightedIdealProduct({{a, c}}));
        for (long x = 0; x <= 10; ++x) {
            for (long y = 0; y <= 10; ++y) {
                const bool expected = oracle::in_multiplier_ideal_2d(a, c, {x, y});
                CHECK(ideal.contains_monomial({x, y}) == expected);
            }
        }
    }
}

TEST_CASE("summation examples")
{
    const auto x = MonomialIdeal::principal({1, 0});
    const auto y = MonomialIdeal::principal({0, 1});
    const auto unit = MonomialIdeal::unit(2);

    const auto r = summation_check(unit, 0, {x, y}, 2);
    CHECK(r.holds);
    // Splittings with D = 1 only give (x^2, x*y, y^2); (1/2, 3/2) and (3/2, 1/2) are needed.
    CHECK(r.witness_denominator == 2);
    CHECK(r.lhs == ideal2({{1, 0}, {0, 1}}));

    const auto zero = summation_check(unit, 0, {x, y}, 0);
    CHECK(zero.holds);
    CHECK(zero.lhs.is_unit());

    const auto factored = summation_check(x, 1, {x, MonomialIdeal::principal({0, 2})}, 1);
    CHECK(factored.holds);

    CHECK_THROWS_AS(summation_check(unit, 0, {}, 1), InputError);
    CHECK_THROWS_AS(summation_check(unit, 0, {x}, -1), InputError);
}

TEST_CASE("summation holds on seeded instances")
{
    Rng rng(404);
    for (int trial = 0; trial < 10; ++trial) {
        const auto inst = random_summation_instance(rng);
        CHECK(summation_check(inst.a0, inst.c0, inst.parts, inst.c).holds);
    }
}

TEST_CASE("law checks")
{
    const auto report = law_checks(7, 20);
    CHECK(report.laws.size() == 3);
    CHECK(report.all_passed());
    for (const auto& law : report.laws) {
        CHECK(law.instances == 20);
    }

    // Divisor law instance: I((x) (x,y)^2) = x I((x,y)^2).
    const auto m = ideal2({{1, 0}, {0, 1}});
    const auto x = MonomialIdeal::principal({1, 0});
    CHECK(multiplier_ideal(WeightedIdealProduct({{x, 1}, {m, 2}})) == times_monomial(m, {1, 0}));

    // Inclusion: (x^2, y^2) in (x, y) gives I(a^2) in I(b^2); I(a^2) = (x, y)^3.
    const auto a = ideal2({{2, 0}, {0, 2}});
    const auto ia = multiplier_ideal(WeightedIdealProduct({{a, 2}}));
    CHECK(ia == power(m, 3));
    CHECK(multiplier_ideal(WeightedIdealProduct({{m, 2}})).contains(ia));

    // Separated variables: each half-weight factor is trivial.
    const auto bx = embed(MonomialIdeal::principal({1}), 0, 2);
    const auto by = embed(MonomialIdeal::principal({1}), 1, 2);
    CHECK(multiplier_ideal(WeightedIdealProduct({{bx, ratio(1, 2)}, {by, ratio(1, 2)}})).is_unit());
}
