#include "kstab/error.hpp"
#include "kstab/gamma_p1.hpp"
#include "kstab/multipoly.hpp"

#include <doctest.h>

using namespace kstab;

TEST_CASE("veronese determinant is the vandermonde product")
{
    CHECK(veronese_determinant(0) == MultiPoly::constant(1, 1));
    for (int k = 1; k <= 2; ++k) {
        const auto det = veronese_determinant(k);
        const auto v = vandermonde_product(static_cast<std::size_t>(2 * k + 1));
        CHECK((det == v || det == -v));
    }
    CHECK_THROWS_AS(veronese_determinant(4), SizeError);
    CHECK_THROWS_AS(veronese_determinant(-1), InputError);
}

TEST_CASE("gamma samples")
{
    CHECK(gamma_at_k(1).gamma_k == ratio(2, 3));
    CHECK(gamma_at_k(3).gamma_k == ratio(6, 7));
    CHECK(gamma_at_k(3).n_points == 7);
    CHECK(gamma_at_k(2, LatticeRoute::matrix).gamma_k == ratio(4, 5));
    CHECK(gamma_at_k(3, LatticeRoute::matrix) == gamma_at_k(3));
    CHECK_THROWS_AS(gamma_at_k(0), InputError);
    CHECK_THROWS_AS(gamma_at_k(7), InputError);
}

TEST_CASE("gamma report")
{
    const auto report = gamma_report(4);
    REQUIRE(report.samples.size() == 4);
    CHECK(report.samples[3].gamma_k == ratio(8, 9));
    CHECK(report.gamma == 1);
    CHECK(report.verdict == Verdict::semistable_not_stable);
    CHECK(report.monotone_certificate);

    const auto single = gamma_report(1);
    CHECK(single.samples.size() == 1);
    CHECK(single.gamma == 1);
    CHECK(single.verdict == Verdict::semistable_not_stable);

    for (int k = 1; k < 6; ++k) {
        CHECK(gamma_at_k(k).gamma_k < gamma_at_k(k + 1).gamma_k);
    }
}

TEST_CASE("verdict thresholds")
{
    CHECK(classify(ratio(5, 4)) == Verdict::stable);
    CHECK(classify(1) == Verdict::semistable_not_stable);
    CHECK(classify(ratio(1, 2)) == Verdict::not_semistable);
    CHECK(to_string(Verdict::semistable_not_stable) == "semistable_not_stable");
}
