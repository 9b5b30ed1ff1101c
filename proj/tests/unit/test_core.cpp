#include "kstab/determinant.hpp"
#include "kstab/error.hpp"
#include "kstab/fitting.hpp"
#include "kstab/linear_algebra.hpp"
#include "kstab/multipoly.hpp"
#include "kstab/rational.hpp"
#include "kstab/unipoly.hpp"

#include <doctest.h>

#include <random>

using namespace kstab;

TEST_CASE("rational parse and print")
{
    CHECK(to_string(ratio(6, 4)) == "3/2");
    CHECK(to_string(ratio(-4, 2)) == "-2");
    CHECK(parse_rational("-7/21") == ratio(-1, 3));
    CHECK(parse_rational("+5") == 5);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK_THROWS_AS(ratio(1, 0), InputError);
    CHECK(floor(ratio(-3, 2)) == -2);
    CHECK(ceil(ratio(-3, 2)) == -1);
    CHECK(floor(ratio(7, 7)) == 1);
}

TEST_CASE("unipoly arithmetic and printing")
{
    const UniPoly p{0, ratio(-1, 2), ratio(-1, 2)};
    CHECK(p.to_string() == "-1/2*k^2 - 1/2*k");
    CHECK(p(3) == -6);
    CHECK(p.degree() == 2);
    CHECK(UniPoly{}.degree() == -1);
    CHECK((p - p).is_zero());
    CHECK((UniPoly{1, 1} * UniPoly{-1, 1}) == UniPoly{-1, 0, 1});
}

TEST_CASE("interpolation examples")
{
    const std::vector<Sample> squares{{1, 1}, {2, 4}, {3, 9}, {4, 16}};
    CHECK(interpolate(squares) == UniPoly{0, 0, 1});
    const std::vector<Sample> line{{1, 3}, {2, 5}};
    CHECK(interpolate(line) == UniPoly{1, 2});
    const std::vector<Sample> dup{{1, 1}, {1, 2}};
    CHECK_THROWS_AS(interpolate(dup), InputError);
    const std::vector<Sample> one{{1, 1}};
    CHECK_THROWS_AS(interpolate(one), InputError);
}

TEST_CASE("interpolate then evaluate round-trips")
{
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> coeffs;
        const int deg = static_cast<int>(gen() % 5);
        for (int i = 0; i <= deg; ++i) {
            coeffs.push_back(ratio(static_cast<long>(gen() % 21) - 10, 1 + static_cast<long>(gen() % 6)));
        }
        const UniPoly p(coeffs);
        std::vector<Sample> samples;
        for (long k = 1; k <= deg + 2; ++k) {
            samples.push_back({k * 3, p(k * 3)});
        }
        CHECK(interpolate(samples) == p);
    }
}

TEST_CASE("stabilized fit finds the eventual polynomial")
{
    std::vector<Sample> samples;
    for (long k = 1; k <= 8; ++k) {
        // Agrees with k^2 from k = 3 on.
        samples.push_back({k, k < 3 ? Rational(100) : Rational(k * k)});
    }
    const auto fit = stabilized_fit(samples, 2);
    CHECK(fit.poly == UniPoly{0, 0, 1});
    CHECK(fit.onset_k == 3);

    std::vector<Sample> bumpy;
    for (long k = 1; k <= 8; ++k) {
        bumpy.push_back({k, k % 2 == 0 ? Rational(k * k) : Rational(k * k + 1)});
    }
    CHECK_THROWS_AS(stabilized_fit(bumpy, 2), StabilizationError);

    const std::vector<Sample> short_grid{{1, 1}, {2, 4}, {3, 9}, {4, 16}};
    CHECK_THROWS_AS(stabilized_fit(short_grid, 2), StabilizationError);
}

TEST_CASE("sample grid validation")
{
    CHECK_THROWS_AS(SampleGrid({{2, 1}, {2, 1}}, 1), InputError);
    CHECK_THROWS_AS(SampleGrid({{3, 1}}, 2), InputError);
    CHECK_THROWS_AS(SampleGrid({{0, 1}}, 1), InputError);
    CHECK(SampleGrid({{2, 1}, {4, 1}}, 2).size() == 2);
}

TEST_CASE("df coefficient examples")
{
    const UniPoly w{0, ratio(-1, 2), ratio(-1, 2)};
    const UniPoly N{1, 2};
    CHECK(df_coefficient(w, N, 1) == ratio(1, 2));
    CHECK(df_coefficient(UniPoly{}, N, 1) == 0);
    CHECK(df_coefficient(UniPoly{0, -1, -2}, UniPoly{1, 2}, 1) == 0);
    CHECK(df_coefficient(UniPoly{0, 0, 1}, UniPoly{1, 2}, 1) == 1);
}

TEST_CASE("df coefficient is bilinear in w")
{
    std::mt19937_64 gen(11);
    const UniPoly N{1, 2};
    for (int trial = 0; trial < 20; ++trial) {
        auto rnd = [&] { return ratio(static_cast<long>(gen() % 19) - 9, 1 + static_cast<long>(gen() % 4)); };
        const UniPoly a{rnd(), rnd(), rnd()};
        const UniPoly b{rnd(), rnd(), rnd()};
        const Rational x = rnd();
        CHECK(df_coefficient(a + x * b, N, 1) == df_coefficient(a, N, 1) + x * df_coefficient(b, N, 1));
    }
}

TEST_CASE("symbolic determinant")
{
    const auto u = MultiPoly::variable(2, 0);
    const auto v = MultiPoly::variable(2, 1);
    const auto one = MultiPoly::constant(2, 1);
    const PolyMatrix m{{one, u}, {one, v}};
    CHECK(det_symbolic(m) == v - u);
    CHECK(vandermonde_product(3).size() == 6);
    CHECK(vandermonde_product(5).size() == 120);
    CHECK_THROWS_AS(det_symbolic(PolyMatrix{{one, u}}), InputError);
}

TEST_CASE("determinant is alternating on random 3x3 matrices")
{
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 10; ++trial) {
        PolyMatrix m(3, std::vector<MultiPoly>(3, MultiPoly::constant(2, 0)));
        for (auto& row : m) {
            for (auto& e : row) {
                e = MultiPoly::term({static_cast<unsigned>(gen() % 2), static_cast<unsigned>(gen() % 2)},
                                    static_cast<long>(gen() % 7) - 3)
                    + MultiPoly::constant(2, static_cast<long>(gen() % 5) - 2);
            }
        }
        PolyMatrix swapped = m;
        std::swap(swapped[0], swapped[2]);
        CHECK(det_symbolic(swapped) == -det_symbolic(m));
        PolyMatrix repeated = m;
        repeated[1] = repeated[0];
        CHECK(det_symbolic(repeated).is_zero());
    }
}

TEST_CASE("row echelon and rank")
{
    const std::vector<RationalRow> rows{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(rank(rows) == 2);
    const auto basis = row_echelon(rows);
    CHECK(basis.size() == 2);
    CHECK(in_row_space(basis, {1, 3, 4}));
    CHECK_FALSE(in_row_space(basis, {0, 0, 1}));
}

TEST_CASE("documented interpolation and fit values")
{
    const std::vector<Sample> quad{{0, 1}, {1, 3}, {2, 7}};
    CHECK(interpolate(quad) == UniPoly{1, 1, 1});
    const std::vector<Sample> weight{{6, -21}, {12, -78}, {18, -171}};
    CHECK(interpolate(weight) == UniPoly{0, ratio(-1, 2), ratio(-1, 2)});
    const std::vector<Sample> flat{{1, 5}, {2, 5}};
    CHECK(interpolate(flat) == UniPoly{5});

    std::vector<Sample> w;
    std::vector<Sample> constant;
    std::vector<Sample> cubes;
    for (long k = 2; k <= 8; ++k) {
        w.push_back({k, ratio(-(k * k + k), 2)});
        constant.push_back({k, 4});
    }
    for (long k = 1; k <= 6; ++k) {
        cubes.push_back({k, k * k * k});
    }
    const auto fit = stabilized_fit(w, 2);
    CHECK(fit.poly == UniPoly{0, ratio(-1, 2), ratio(-1, 2)});
    CHECK(fit.onset_k == 2);
    CHECK(stabilized_fit(constant, 2).poly.degree() == 0);
    CHECK_THROWS_AS(stabilized_fit(cubes, 2), StabilizationError);
}

TEST_CASE("documented determinants")
{
    const auto u = MultiPoly::variable(1, 0);
    CHECK(det_symbolic(PolyMatrix{{u}}) == u);
    PolyMatrix m;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto x = MultiPoly::variable(3, i);
        m.push_back({MultiPoly::constant(3, 1), x, x * x});
    }
    const auto v = [](std::size_t i) { return MultiPoly::variable(3, i); };
    CHECK(det_symbolic(m) == (v(1) - v(0)) * (v(2) - v(0)) * (v(2) - v(1)));
}
