#include "kstab/arrangement.hpp"
#include "kstab/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace kstab;

namespace {

CentralArrangement coordinate_forms(std::size_t n)
{
    std::vector<RationalRow> rows;
    for (std::size_t i = 0; i < n; ++i) {
        RationalRow r(n, 0);
        r[i] = 1;
        rows.push_back(r);
    }
    return CentralArrangement::from_rows(n, rows);
}

} // namespace

TEST_CASE("lattice of the braid arrangement on three variables")
{
    const auto flats = intersection_lattice(braid_arrangement(3));
    REQUIRE(flats.size() == 4);
    CHECK(std::count_if(flats.begin(), flats.end(), [](const Flat& f) { return f.rank == 1 && f.count == 1; }) == 3);
    CHECK(std::count_if(flats.begin(), flats.end(), [](const Flat& f) { return f.rank == 2 && f.count == 3; }) == 1);
}

TEST_CASE("single hyperplane and coordinate forms")
{
    const auto single = CentralArrangement::from_rows(3, {{1, 2, 3}});
    const auto flats = intersection_lattice(single);
    REQUIRE(flats.size() == 1);
    CHECK(flats[0].rank == 1);
    CHECK(lct_central(single).value == 1);

    for (std::size_t n = 1; n <= 5; ++n) {
        const auto lattice = intersection_lattice(coordinate_forms(n));
        CHECK(lattice.size() == (std::size_t{1} << n) - 1);
        for (const auto& f : lattice) {
            CHECK(f.rank == f.count);
            CHECK(f.hyperplanes.size() == static_cast<std::size_t>(f.count));
        }
    }
}

TEST_CASE("lct examples")
{
    const auto braid3 = lct_central(braid_arrangement(3));
    CHECK(braid3.value == ratio(2, 3));
    REQUIRE(braid3.minimizers.size() == 1);
    CHECK(braid3.minimizers[0].rank == 2);
    CHECK(braid3.minimizers[0].count == 3);

    const auto lines = CentralArrangement::from_rows(2, {{1, 0}, {0, 1}, {1, 1}});
    const auto cert = lct_central(lines);
    CHECK(cert.value == ratio(2, 3));
    REQUIRE(cert.minimizers.size() == 1);
    CHECK(cert.minimizers[0].count == 3);

    CHECK(lct_braid(2).value == 1);
    CHECK(lct_braid(3).value == ratio(2, 3));
    CHECK(lct_braid(7).value == ratio(2, 7));
    CHECK(lct_braid(13).value == ratio(2, 13));
    CHECK_THROWS_AS(lct_braid(1), InputError);
    CHECK_THROWS_AS(lct_braid(14), SizeError);
}

TEST_CASE("braid partition walk matches the generic lattice")
{
    for (int g = 2; g <= 6; ++g) {
        auto generic = intersection_lattice(braid_arrangement(g));
        auto fast = braid_flats(g);
        CHECK(generic.size() == fast.size());
        CHECK(generic == fast);
        CHECK(lct_central(braid_arrangement(g)) == lct_braid(g));
    }
    CHECK(lct_central(braid_arrangement(7)) == lct_braid(7));
    CHECK(braid_flats(5).size() == 51);  // Bell(5) - 1
}

TEST_CASE("hyperplane count of a flat is at most rank(rank+1)/2 in the braid case")
{
    for (int g = 2; g <= 7; ++g) {
        for (const auto& f : braid_flats(g)) {
            CHECK(f.count <= f.rank * (f.rank + 1) / 2);
        }
    }
}

TEST_CASE("braid pair index is lexicographic")
{
    CHECK(braid_pair_index(4, 0, 1) == 0);
    CHECK(braid_pair_index(4, 0, 3) == 2);
    CHECK(braid_pair_index(4, 1, 2) == 3);
    CHECK(braid_pair_index(4, 2, 3) == 5);
}

TEST_CASE("lct is invariant under GL changes of coordinates and permutations")
{
    std::mt19937_64 gen(17);
    const auto base = braid_arrangement(4);
    const std::size_t n = base.ambient_dim();
    const auto reference = lct_central(base).value;
    for (int trial = 0; trial < 5; ++trial) {
        // Unit lower-triangular change of variables is invertible.
        std::vector<RationalRow> t(n, RationalRow(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            t[i][i] = 1;
            for (std::size_t j = 0; j < i; ++j) {
                t[i][j] = static_cast<long>(gen() % 7) - 3;
            }
        }
        std::vector<RationalRow> rows;
        for (const auto& form : base.forms()) {
            RationalRow r(n, 0);
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t i = 0; i < n; ++i) {
                    r[j] += form.coefficients()[i] * t[i][j];
                }
            }
            rows.push_back(r);
        }
        std::shuffle(rows.begin(), rows.end(), gen);
        CHECK(lct_central(CentralArrangement::from_rows(n, rows)).value == reference);
    }
}

TEST_CASE("arrangement validation")
{
    CHECK_THROWS_AS(CentralArrangement::from_rows(0, {}), InputError);
    CHECK_THROWS_AS(CentralArrangement::from_rows(2, {}), InputError);
    CHECK_THROWS_AS(CentralArrangement::from_rows(2, {{1, 0, 0}}), InputError);
    CHECK_THROWS_AS(CentralArrangement::from_rows(2, {{1, 1}, {2, 2}}), InputError);
    CHECK_THROWS_AS(CentralArrangement::from_rows(2, {{0, 0}}), InputError);
    LatticeOptions tiny;
    tiny.max_candidates = 3;
    CHECK_THROWS_AS(intersection_lattice(braid_arrangement(5), tiny), SizeError);
}

TEST_CASE("diagonal discrepancy")
{
    CHECK(diagonal_discrepancy(3, ratio(2, 3)) == -1);
    CHECK(diagonal_discrepancy(5, 0) == 3);
    CHECK(diagonal_discrepancy(4, ratio(2, 4)) == -1);
    for (int g = 2; g <= 9; ++g) {
        CHECK(diagonal_discrepancy(g, ratio(2, g)) == -1);
    }
}
