#include "kstab/corpus.hpp"
#include "kstab/error.hpp"
#include "kstab/flag_df.hpp"
#include "kstab/oracles.hpp"

#include <doctest.h>

using namespace kstab;

namespace {

PointDivisor at_p(long m) { return m == 0 ? PointDivisor{} : PointDivisor({{"p", m}}); }

FlagIdealP1 flag_of(std::initializer_list<long> mults)
{
    FlagIdealP1 flag;
    for (long m : mults) {
        flag.divisors.push_back(at_p(m));
    }
    return flag;
}

} // namespace

TEST_CASE("flag validation")
{
    CHECK_NOTHROW(validate_flag(flag_of({0, 1})));
    CHECK_THROWS_AS(validate_flag(flag_of({2, 1})), InputError);
    CHECK_THROWS_AS(validate_flag(flag_of({0, 0})), InputError);
    CHECK_THROWS_AS(validate_flag(FlagIdealP1{}), InputError);
    CHECK_THROWS_AS(PointDivisor({{"p", -1}}), InputError);
}

TEST_CASE("tilde divisors")
{
    const long k = 5;
    const auto single = tilde_divisors(flag_of({1}), k);
    REQUIRE(single.divisors.size() == static_cast<std::size_t>(k + 1));
    for (long j = 0; j <= k; ++j) {
        CHECK(single.divisors[static_cast<std::size_t>(j)] == at_p(j));
    }
    const auto two = tilde_divisors(flag_of({0, 1}), k);
    REQUIRE(two.divisors.size() == static_cast<std::size_t>(2 * k + 1));
    for (long j = 0; j <= 2 * k; ++j) {
        CHECK(two.divisors[static_cast<std::size_t>(j)] == at_p(std::max(0L, j - k)));
    }
}

TEST_CASE("min-plus power matches composition enumeration")
{
    Rng rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        const auto flag = random_flag(rng, 3, 3, 4);
        const long ks = 1 + trial % 5;
        const auto fam = tilde_divisors(flag, ks);
        const auto brute = oracle::tilde_by_compositions(flag, ks);
        REQUIRE(fam.divisors.size() == brute.size());
        for (std::size_t j = 0; j < brute.size(); ++j) {
            CHECK(fam.divisors[j].multiplicities() == brute[j]);
        }
        CHECK(fam.divisors.front().is_zero());
        CHECK(fam.divisors.back() == PointDivisor([&] {
                  std::map<std::string, long> m;
                  for (const auto& [pt, x] : flag.divisors.back().multiplicities()) {
                      m[pt] = x * ks;
                  }
                  return m;
              }()));
    }
}

TEST_CASE("weights")
{
    for (long k = 1; k <= 10; ++k) {
        CHECK(weight(flag_of({1}), k, 1) == -(k * k + k) / 2);
        CHECK(weight(flag_of({2}), k, 1) == -k * k - k);
        const auto dims = filtration_dimensions(flag_of({3}), k, 1);
        CHECK(dims.front() == 2 * k + 1);
    }
    CHECK_THROWS_AS(weight(flag_of({1}), 3, ratio(1, 2)), InputError);
}

TEST_CASE("weights match direct counting and are nonpositive")
{
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const auto flag = random_flag(rng, 3, 3, 4);
        for (long k = 1; k <= 6; ++k) {
            const Integer w = weight(flag, k, 1);
            CHECK(w == oracle::weight_by_counting(flag, k, 1));
            CHECK(w <= 0);
        }
    }
}

TEST_CASE("donaldson-futaki closed forms")
{
    const auto point = donaldson_futaki(flag_of({1}), 1);
    CHECK(point.w_poly == UniPoly{0, ratio(-1, 2), ratio(-1, 2)});
    CHECK(point.N_poly == UniPoly{1, 2});
    CHECK(point.DF == ratio(1, 2));
    CHECK(point.DF0 == 2);
    CHECK_FALSE(point.semiampleness_checked);

    const auto boundary = donaldson_futaki(flag_of({1}), 2);
    CHECK(boundary.DF == 0);
    CHECK(boundary.DF0 == 0);
    CHECK(boundary.w_poly.to_string() == "-2*k^2 - k");

    for (long a = 2; a <= 5; ++a) {
        CHECK(donaldson_futaki(flag_of({a}), 1).DF0 == 4 * (2 - ratio(2, a)));
    }
    CHECK(donaldson_futaki(flag_of({0, 1}), 1).DF0 == 2);
}

TEST_CASE("stretching a flag is the same as scaling s")
{
    // (M = a, D_j = j p, s) has the same weights as (M = 1, D = p, a s).
    for (long a = 2; a <= 3; ++a) {
        FlagIdealP1 stretched;
        for (long j = 1; j <= a; ++j) {
            stretched.divisors.push_back(at_p(j));
        }
        for (long k = 1; k <= 8; ++k) {
            CHECK(weight(stretched, k, 1) == weight(flag_of({1}), k, a));
        }
        CHECK(donaldson_futaki(stretched, 1).DF0 == donaldson_futaki(flag_of({1}), a).DF0);
    }
}

TEST_CASE("fit reproduces weights beyond the sampling grid")
{
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const auto flag = random_flag(rng, 3, 3, 4);
        const auto report = donaldson_futaki(flag, 1);
        CHECK(report.w_poly.degree() <= 2);
        CHECK(report.DF0 >= 0);
        for (long m = 9; m <= 16; ++m) {
            const long k = report.base_divisibility * m;
            CHECK(report.w_poly(k) == Rational(weight(flag, k, 1)));
        }
    }
}

TEST_CASE("grid cap reports stabilization failure")
{
    GridSpec tight;
    tight.k_max = 10;
    CHECK_THROWS_AS(donaldson_futaki(flag_of({1}), 1, tight), StabilizationError);
}
