// kstab: command-line front end. Structured output is JSON on stdout; errors go to
// stderr. Exit codes: 0 success, 2 input error, 3 size or stabilization limit.

#include "kstab/arrangement.hpp"
#include "kstab/error.hpp"
#include "kstab/flag_df.hpp"
#include "kstab/gamma_p1.hpp"
#include "kstab/json_io.hpp"
#include "kstab/monomial.hpp"
#include "kstab/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using kstab::io::json;

constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;

json read_json(const std::string& path)
{
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            throw kstab::InputError("cannot open " + path);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw kstab::InputError("malformed JSON in " + path + ": " + e.what());
    }
}

std::string render_text(const json& j, int indent = 0)
{
    std::ostringstream os;
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_structured()) {
                os << pad << key << ":\n" << render_text(value, indent + 2);
            } else {
                os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
            }
        }
    } else if (j.is_array()) {
        bool flat = std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
        if (flat) {
            os << pad << j.dump() << '\n';
        } else {
            for (const auto& item : j) {
                os << pad << "-\n" << render_text(item, indent + 2);
            }
        }
    } else {
        os << pad << j.dump() << '\n';
    }
    return os.str();
}

void emit(const json& j, const std::string& format)
{
    if (format == "text") {
        std::cout << render_text(j);
    } else {
        std::cout << j.dump(2) << '\n';
    }
}

kstab::LatticeOptions lattice_options()
{
    kstab::LatticeOptions options;
    if (const char* env = std::getenv("KSTAB_MAX_FLATS")) {
        try {
            options.max_candidates = std::stoull(env);
        } catch (const std::exception&) {
            throw kstab::InputError("KSTAB_MAX_FLATS must be a positive integer");
        }
    }
    return options;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations for log canonical thresholds, Berman-Gibbs stability and "
                 "Donaldson-Futaki invariants"};
    app.require_subcommand(1, 1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    auto* lct_arr = app.add_subcommand("lct-arrangement", "lct at the origin of a central arrangement");
    std::string arr_file;
    lct_arr->add_option("--file", arr_file, "Arrangement JSON ('-' for stdin)")->required();

    auto* lct_br = app.add_subcommand("lct-braid", "lct of the braid arrangement on g variables");
    int g = 0;
    lct_br->add_option("--g", g, "Number of variables")->required();

    auto* gamma = app.add_subcommand("gamma-p1", "Berman-Gibbs invariant of P^1");
    int gamma_k = 0;
    int gamma_k_max = 0;
    auto* k_opt = gamma->add_option("--k", gamma_k, "Single sample k");
    auto* kmax_opt = gamma->add_option("--k-max", gamma_k_max, "Full report for k = 1..k-max");
    k_opt->excludes(kmax_opt);
    kmax_opt->excludes(k_opt);

    auto* df = app.add_subcommand("df", "Donaldson-Futaki invariant of a flag-ideal test configuration");
    std::string flag_file;
    std::string s_text;
    long df_k_max = kstab::GridSpec{}.k_max;
    df->add_option("--flag", flag_file, "Flag JSON ('-' for stdin)")->required();
    df->add_option("--s", s_text, "Blowup parameter s as p/q (overrides the file)");
    df->add_option("--k-max", df_k_max, "Largest k the sampling grid may use");

    auto* summ = app.add_subcommand("check-summation", "Summation formula for monomial multiplier ideals");
    std::string summ_file;
    long denom_bound = kstab::kDefaultDenominatorBound;
    summ->add_option("--file", summ_file, "Instance JSON ('-' for stdin)")->required();
    summ->add_option("--denom-bound", denom_bound, "Largest splitting denominator");

    auto* mult = app.add_subcommand("multiplier-ideal", "Multiplier ideal of a weighted monomial product");
    std::string mult_file;
    mult->add_option("--file", mult_file, "Product JSON ('-' for stdin)")->required();

    auto* verify = app.add_subcommand("verify", "Run every acceptance suite and print a scorecard");
    kstab::verify::Options verify_options;
    bool timings = false;
    verify->add_option("--seed", verify_options.seed, "Corpus seed");
    verify->add_flag("--quick", verify_options.quick, "Smaller corpora (g <= 6, k <= 3)");
    verify->add_flag("--timings", timings, "Include per-criterion runtimes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*lct_arr) {
            const auto arr = kstab::io::arrangement_from_json(read_json(arr_file));
            emit(kstab::io::to_json(kstab::lct_central(arr, lattice_options())), format);
        } else if (*lct_br) {
            emit(kstab::io::to_json(kstab::lct_braid(g)), format);
        } else if (*gamma) {
            if (k_opt->count() > 0) {
                emit(kstab::io::to_json(kstab::gamma_at_k(gamma_k)), format);
            } else if (kmax_opt->count() > 0) {
                emit(kstab::io::to_json(kstab::gamma_report(gamma_k_max)), format);
            } else {
                throw kstab::InputError("gamma-p1 needs --k or --k-max");
            }
        } else if (*df) {
            auto input = kstab::io::flag_from_json(read_json(flag_file));
            kstab::Rational s = 1;
            if (!s_text.empty()) {
                s = kstab::parse_rational(s_text);
            } else if (input.s) {
                s = *input.s;
            }
            kstab::GridSpec grid;
            grid.k_max = df_k_max;
            emit(kstab::io::to_json(kstab::donaldson_futaki(input.flag, s, grid)), format);
        } else if (*summ) {
            const json j = read_json(summ_file);
            if (!j.is_object() || !j.contains("parts") || !j["parts"].is_array()) {
                throw kstab::InputError("field 'parts': expected an array of ideals");
            }
            std::vector<kstab::MonomialIdeal> parts;
            for (std::size_t i = 0; i < j["parts"].size(); ++i) {
                parts.push_back(kstab::io::ideal_from_json(j["parts"][i], "parts[" + std::to_string(i) + "]"));
            }
            if (parts.empty()) {
                throw kstab::InputError("field 'parts': expected at least one ideal");
            }
            const auto a0 = j.contains("a0") ? kstab::io::ideal_from_json(j["a0"], "a0")
                                             : kstab::MonomialIdeal::unit(parts[0].arity());
            const auto c0 = j.contains("c0") ? kstab::io::rational_from_json(j["c0"], "c0") : kstab::Rational(0);
            if (!j.contains("c")) {
                throw kstab::InputError("field 'c': missing");
            }
            const auto c = kstab::io::rational_from_json(j["c"], "c");
            emit(kstab::io::to_json(kstab::summation_check(a0, c0, parts, c, denom_bound)), format);
        } else if (*mult) {
            const auto product = kstab::io::product_from_json(read_json(mult_file));
            const auto ideal = kstab::multiplier_ideal(product);
            emit(json{{"multiplier_ideal", kstab::io::to_json(ideal)}, {"text", ideal.to_string()}}, format);
        } else if (*verify) {
            const auto results = kstab::verify::run_all(verify_options);
            const json card = kstab::verify::scorecard(verify_options, results, timings);
            emit(card, format);
            return card["all_passed"].get<bool>() ? 0 : 1;
        }
    } catch (const kstab::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const kstab::StabilizationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitLimit;
    } catch (const kstab::SizeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitLimit;
    }
    return 0;
}
