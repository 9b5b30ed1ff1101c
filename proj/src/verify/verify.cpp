#include "kstab/verify.hpp"

#include "kstab/arrangement.hpp"
#include "kstab/corpus.hpp"
#include "kstab/error.hpp"
#include "kstab/flag_df.hpp"
#include "kstab/gamma_p1.hpp"
#include "kstab/json_io.hpp"
#include "kstab/monomial.hpp"
#include "kstab/oracles.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace kstab::verify {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void fail(const std::string& why)
    {
        if (passed) {
            detail << why;
        }
        passed = false;
    }
};

Rational expected_rational(std::string_view key)
{
    return parse_rational(expected(key));
}

FlagIdealP1 point_flag(std::vector<long> levels)
{
    FlagIdealP1 flag;
    for (long m : levels) {
        flag.divisors.emplace_back(std::map<std::string, long>{{"p", m}});
    }
    return flag;
}

std::vector<FlagIdealP1> flag_corpus(const Options& options)
{
    Rng rng(options.seed);
    std::vector<FlagIdealP1> corpus;
    const int count = options.quick ? 30 : 100;
    for (int i = 0; i < count; ++i) {
        corpus.push_back(random_flag(rng, 3, 3, 4));
    }
    return corpus;
}

// ---------------------------------------------------------------------------------------

Outcome braid_lct(const Options& options)
{
    Outcome out;
    const auto start = Clock::now();
    const int g_fast = options.quick ? 6 : 9;
    const int g_matrix = options.quick ? 6 : 7;
    for (int g = 2; g <= g_fast; ++g) {
        const auto cert = lct_braid(g);
        const std::string key = "lct_braid/g=" + std::to_string(g);
        if (cert.value != expected_rational(key) || cert.value != ratio(2, g)) {
            out.fail("lct_braid(" + std::to_string(g) + ") = " + to_string(cert.value));
        }
        if (g <= g_matrix && !(lct_central(braid_arrangement(g)) == cert)) {
            out.fail("matrix-rank certificate differs from partition certificate at g=" + std::to_string(g));
        }
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (seconds >= 10.0) {
        out.fail("runtime over 10 s");
    }
    if (out.passed) {
        out.detail << "2/g for g=2.." << g_fast << "; identical certificates for g=2.." << g_matrix;
    }
    return out;
}

Outcome discrepancy(const Options& options)
{
    Outcome out;
    const int g_max = options.quick ? 6 : 9;
    for (int g = 2; g <= g_max; ++g) {
        const Rational a = diagonal_discrepancy(g, lct_braid(g).value);
        if (a != expected_rational("discrepancy/at_threshold")) {
            out.fail("a(F) = " + to_string(a) + " at g=" + std::to_string(g));
        }
    }
    if (out.passed) {
        out.detail << "a(F) = -1 at c = 2/g for g=2.." << g_max;
    }
    return out;
}

Outcome berman_gibbs(const Options& options)
{
    Outcome out;
    const int k_max = options.quick ? 3 : 4;
    for (int k = 1; k <= k_max; ++k) {
        const auto sample = gamma_at_k(k);
        if (sample.gamma_k != expected_rational("gamma_k/k=" + std::to_string(k))
            || sample.gamma_k != ratio(2 * k, 2 * k + 1)) {
            out.fail("gamma_" + std::to_string(k) + " = " + to_string(sample.gamma_k));
        }
    }
    const auto report = gamma_report(k_max);
    if (report.gamma != expected_rational("gamma/P1")) {
        out.fail("gamma = " + to_string(report.gamma));
    }
    if (to_string(report.verdict) != expected("verdict/P1")) {
        out.fail("verdict " + std::string(to_string(report.verdict)));
    }
    if (out.passed) {
        out.detail << "gamma_k = 2k/(2k+1) for k=1.." << k_max << "; gamma = 1; semistable_not_stable";
    }
    return out;
}

Outcome vandermonde(const Options&)
{
    Outcome out;
    for (int k = 1; k <= 2; ++k) {
        const auto det = veronese_determinant(k);
        const auto prod = vandermonde_product(static_cast<std::size_t>(2 * k + 1));
        if (!(det == prod) && !(det == -prod)) {
            out.fail("determinant differs from the Vandermonde product at k=" + std::to_string(k));
        }
        if (std::to_string(det.size()) != expected("vandermonde/terms/k=" + std::to_string(k))) {
            out.fail("unexpected term count " + std::to_string(det.size()));
        }
    }
    if (out.passed) {
        out.detail << "det = +/- prod_{i<j}(u_i - u_j) for k=1,2";
    }
    return out;
}

// One closed-form flag case: library DF0, oracle DF0 and the frozen value must agree.
void check_df_case(Outcome& out, const std::string& key, const FlagIdealP1& flag, const Rational& s, long period)
{
    std::vector<std::pair<long, Integer>> samples;
    const long base = period * s.get_den().get_si();
    for (long t = 1; t <= 6; ++t) {
        samples.emplace_back(base * t, oracle::weight_by_counting(flag, base * t, s));
    }
    const auto oracle_df0 = oracle::df0_from_samples(samples);
    const auto report = donaldson_futaki(flag, s);
    const Rational want = expected_rational(key);
    if (!oracle_df0 || *oracle_df0 != want) {
        out.fail(key + ": oracle disagrees with the frozen value");
    } else if (report.DF0 != want) {
        out.fail(key + ": DF0 = " + to_string(report.DF0) + ", expected " + to_string(want));
    }
}

Outcome flag_closed_forms(const Options&)
{
    Outcome out;
    const auto point = point_flag({1});
    const auto report = donaldson_futaki(point, 1);
    if (report.w_poly.to_string() != expected("w_poly/point/s=1")) {
        out.fail("w(k) = " + report.w_poly.to_string());
    }
    check_df_case(out, "DF0/point/s=1", point, 1, 1);
    for (long a = 2; a <= 5; ++a) {
        check_df_case(out, "DF0/fat_point/a=" + std::to_string(a), point_flag({a}), 1, a);
        if (expected_rational("DF0/fat_point/a=" + std::to_string(a)) != 4 * (2 - ratio(2, a))) {
            out.fail("frozen value disagrees with 4(2 - 2/a) at a=" + std::to_string(a));
        }
    }
    check_df_case(out, "DF0/point/s=2", point, 2, 1);
    check_df_case(out, "DF0/two_step/s=1", point_flag({0, 1}), 1, 1);
    if (out.passed) {
        out.detail << "w = -(k^2+k)/2; DF0 = 2, 4, 16/3, 6, 32/5, 0, 2 (library, counting oracle and table agree)";
    }
    return out;
}

struct CorpusRun {
    std::vector<FlagIdealP1> flags;
    std::vector<std::optional<DFReport>> reports;
    std::vector<std::string> errors;
};

CorpusRun run_corpus(const Options& options)
{
    CorpusRun run{flag_corpus(options), {}, {}};
    for (const auto& flag : run.flags) {
        try {
            run.reports.emplace_back(donaldson_futaki(flag, 1));
            run.errors.emplace_back();
        } catch (const std::exception& e) {
            run.reports.emplace_back(std::nullopt);
            run.errors.emplace_back(e.what());
        }
    }
    return run;
}

Outcome weight_sign(const CorpusRun& run)
{
    Outcome out;
    for (std::size_t i = 0; i < run.flags.size(); ++i) {
        const auto& report = run.reports[i];
        if (!report) {
            out.fail("flag " + std::to_string(i) + " did not stabilize: " + run.errors[i] + " "
                     + io::flag_to_json(run.flags[i]).dump());
            continue;
        }
        if (report->w_poly.degree() > 2) {
            out.fail("flag " + std::to_string(i) + " fitted degree > 2");
        }
        for (const auto& sample : report->k_grid.entries()) {
            if (sample.value > 0) {
                out.fail("w(" + std::to_string(sample.k) + ") > 0 for flag " + io::flag_to_json(run.flags[i]).dump());
            }
        }
    }
    if (out.passed) {
        out.detail << run.flags.size() << " flags: w(k) <= 0 on every grid point, degree <= 2 fits";
    }
    return out;
}

Outcome min_plus(const Options& options)
{
    Outcome out;
    Rng rng(options.seed + 7);
    const int count = options.quick ? 60 : 200;
    for (int i = 0; i < count; ++i) {
        const auto flag = random_flag(rng, 3, 3, 4);
        const long ks = rng.uniform(1, 6);
        const auto family = tilde_divisors(flag, ks);
        const auto brute = oracle::tilde_by_compositions(flag, ks);
        bool same = family.divisors.size() == brute.size();
        for (std::size_t j = 0; same && j < brute.size(); ++j) {
            same = family.divisors[j].multiplicities() == brute[j];
        }
        if (!same) {
            out.fail("mismatch at ks=" + std::to_string(ks) + " for " + io::flag_to_json(flag).dump());
        }
    }
    if (out.passed) {
        out.detail << count << " instances agree with composition enumeration";
    }
    return out;
}

Outcome df_nonnegative(const CorpusRun& run)
{
    Outcome out;
    int negatives = 0;
    Rational lowest = 0;
    bool first = true;
    for (std::size_t i = 0; i < run.flags.size(); ++i) {
        const auto& report = run.reports[i];
        if (!report) {
            out.fail("no DF for flag " + std::to_string(i));
            continue;
        }
        if (first || report->DF0 < lowest) {
            lowest = report->DF0;
            first = false;
        }
        if (report->DF0 < 0) {
            ++negatives;
            out.fail("counterexample: DF0 = " + to_string(report->DF0) + " for "
                     + io::flag_to_json(run.flags[i], Rational(1)).dump());
        }
    }
    if (out.passed) {
        out.detail << "DF0 >= 0 on " << run.flags.size() << " flags (min " << to_string(lowest)
                   << "); consistency probe, semiampleness unchecked";
    } else {
        out.detail << " (" << negatives << " negative)";
    }
    return out;
}

Outcome summation(const Options& options)
{
    Outcome out;
    Rng rng(options.seed + 9);
    const int count = options.quick ? 8 : 25;
    long worst = 0;
    for (int i = 0; i < count; ++i) {
        const auto inst = random_summation_instance(rng);
        std::string where = "instance " + std::to_string(i) + " a0=" + inst.a0.to_string() + "^" + to_string(inst.c0)
                            + " c=" + to_string(inst.c);
        try {
            const auto result = summation_check(inst.a0, inst.c0, inst.parts, inst.c, kDefaultDenominatorBound);
            if (!result.holds) {
                out.fail("false at " + where);
            }
            worst = std::max(worst, result.witness_denominator);
        } catch (const StabilizationError&) {
            out.fail("inconclusive at " + where);
        }
    }
    if (out.passed) {
        out.detail << count << " instances hold; largest witness denominator " << worst;
    }
    return out;
}

Outcome laws(const Options& options)
{
    Outcome out;
    const int count = options.quick ? 15 : 50;
    const auto report = law_checks(options.seed + 10, count);
    for (const auto& law : report.laws) {
        if (!law.passed()) {
            out.fail("law " + law.law + " failed on " + law.counterexample);
        }
    }
    const MonomialIdeal maximal(2, {{1, 0}, {0, 1}});
    const auto spot = multiplier_ideal(WeightedIdealProduct({{maximal, 2}}));
    if (spot.to_string() != expected("multiplier/(x,y)^2")) {
        out.fail("I((x,y)^2) = " + spot.to_string());
    }
    const MonomialIdeal cusp(2, {{2, 0}, {0, 3}});
    if (lct_monomial(cusp) != expected_rational("lct_monomial/(x^2,y^3)")) {
        out.fail("lct((x^2,y^3)) = " + to_string(lct_monomial(cusp)));
    }
    if (out.passed) {
        out.detail << "divisor, inclusion and product laws on " << count
                   << " instances each; I((x,y)^2) = (x, y); lct(x^2,y^3) = 5/6";
    }
    return out;
}

} // namespace

std::vector<CriterionResult> run_all(const Options& options)
{
    std::vector<CriterionResult> results;
    std::optional<CorpusRun> corpus;
    auto shared_corpus = [&]() -> const CorpusRun& {
        if (!corpus) {
            corpus = run_corpus(options);
        }
        return *corpus;
    };

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"braid lct equals 2/g on both lattice routes", [&] { return braid_lct(options); }},
        {"diagonal discrepancy is -1 at the threshold", [&] { return discrepancy(options); }},
        {"Berman-Gibbs invariant of P^1", [&] { return berman_gibbs(options); }},
        {"Veronese determinant is the Vandermonde product", [&] { return vandermonde(options); }},
        {"flag-ideal DF closed forms", [&] { return flag_closed_forms(options); }},
        {"weight sign and polynomiality on the flag corpus", [&] { return weight_sign(shared_corpus()); }},
        {"min-plus power equals composition enumeration", [&] { return min_plus(options); }},
        {"DF0 >= 0 consistency probe on the flag corpus", [&] { return df_nonnegative(shared_corpus()); }},
        {"summation formula on random monomial instances", [&] { return summation(options); }},
        {"multiplier ideal laws and spot values", [&] { return laws(options); }},
    };

    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = Clock::now();
        CriterionResult r;
        r.id = "C" + std::to_string(i + 1);
        r.title = criteria[i].first;
        try {
            Outcome outcome = criteria[i].second();
            r.passed = outcome.passed;
            r.detail = outcome.detail.str();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

nlohmann::json scorecard(const Options& options, const std::vector<CriterionResult>& results, bool with_timings)
{
    nlohmann::json criteria = nlohmann::json::array();
    bool all = true;
    for (const auto& r : results) {
        nlohmann::json entry{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}};
        if (with_timings) {
            entry["runtime_ms"] = static_cast<long>(r.seconds * 1000.0);
        }
        criteria.push_back(std::move(entry));
        all = all && r.passed;
    }
    return nlohmann::json{{"seed", options.seed},
                          {"quick", options.quick},
                          {"criteria", std::move(criteria)},
                          {"all_passed", all}};
}

} // namespace kstab::verify
