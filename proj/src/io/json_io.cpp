#include "kstab/json_io.hpp"

#include "kstab/error.hpp"

#include <algorithm>

namespace kstab::io {

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& what)
{
    throw InputError("field '" + field + "': " + what);
}

const json& require(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object()) {
        bad_field(where.empty() ? "<root>" : where, "expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        bad_field(where.empty() ? key : where + "." + key, "missing");
    }
    return *it;
}

long integer_from_json(const json& j, const std::string& field)
{
    if (!j.is_number_integer()) {
        bad_field(field, "expected an integer");
    }
    return j.get<long>();
}

json number_list(const std::vector<std::size_t>& xs)
{
    json out = json::array();
    for (auto x : xs) {
        out.push_back(x);
    }
    return out;
}

} // namespace

json to_json(const Rational& q)
{
    return to_string(q);
}

Rational rational_from_json(const json& j, const std::string& field)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (!j.is_string()) {
        bad_field(field, "expected a rational string \"p/q\"");
    }
    try {
        return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
        bad_field(field, e.what());
    }
}

CentralArrangement arrangement_from_json(const json& j)
{
    const long n = integer_from_json(require(j, "n", ""), "n");
    if (n < 1) {
        bad_field("n", "ambient dimension must be positive");
    }
    const json& forms = require(j, "forms", "");
    if (!forms.is_array() || forms.empty()) {
        bad_field("forms", "expected a nonempty array of coefficient lists");
    }
    std::vector<RationalRow> rows;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const std::string where = "forms[" + std::to_string(i) + "]";
        if (!forms[i].is_array() || forms[i].size() != static_cast<std::size_t>(n)) {
            bad_field(where, "expected " + std::to_string(n) + " coefficients");
        }
        RationalRow row;
        for (std::size_t c = 0; c < forms[i].size(); ++c) {
            row.push_back(rational_from_json(forms[i][c], where + "[" + std::to_string(c) + "]"));
        }
        if (std::all_of(row.begin(), row.end(), [](const Rational& x) { return x == 0; })) {
            bad_field(where, "linear form is zero");
        }
        rows.push_back(std::move(row));
    }
    return CentralArrangement::from_rows(static_cast<std::size_t>(n), std::move(rows));
}

json arrangement_to_json(const CentralArrangement& arr)
{
    json forms = json::array();
    for (const auto& f : arr.forms()) {
        json row = json::array();
        for (const auto& x : f.coefficients()) {
            row.push_back(to_json(x));
        }
        forms.push_back(std::move(row));
    }
    return json{{"n", arr.ambient_dim()}, {"forms", std::move(forms)}};
}

json to_json(const Flat& flat)
{
    return json{{"rank", flat.rank}, {"count", flat.count}, {"hyperplanes", number_list(flat.hyperplanes)}};
}

json to_json(const LctCertificate& cert)
{
    json mins = json::array();
    for (const auto& f : cert.minimizers) {
        mins.push_back(to_json(f));
    }
    return json{{"lct", to_json(cert.value)}, {"minimizers", std::move(mins)}};
}

json to_json(const GammaSample& sample)
{
    return json{{"k", sample.k}, {"N", sample.n_points}, {"gamma_k", to_json(sample.gamma_k)}};
}

json to_json(const GammaReport& report)
{
    json samples = json::array();
    for (const auto& s : report.samples) {
        samples.push_back(to_json(s));
    }
    return json{{"samples", std::move(samples)},
                {"gamma", to_json(report.gamma)},
                {"verdict", std::string(to_string(report.verdict))},
                {"monotone_certificate", report.monotone_certificate}};
}

FlagInput flag_from_json(const json& j)
{
    const long m = integer_from_json(require(j, "M", ""), "M");
    if (m < 1) {
        bad_field("M", "must be at least 1");
    }
    const json& points = require(j, "points", "");
    if (!points.is_array()) {
        bad_field("points", "expected an array of labels");
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!points[i].is_string()) {
            bad_field("points[" + std::to_string(i) + "]", "expected a string label");
        }
        labels.push_back(points[i].get<std::string>());
    }
    const json& divisors = require(j, "divisors", "");
    if (!divisors.is_array() || divisors.size() != static_cast<std::size_t>(m)) {
        bad_field("divisors", "expected an array of M = " + std::to_string(m) + " divisors");
    }
    FlagInput input;
    for (std::size_t d = 0; d < divisors.size(); ++d) {
        const std::string where = "divisors[" + std::to_string(d) + "]";
        if (!divisors[d].is_object()) {
            bad_field(where, "expected an object mapping point labels to multiplicities");
        }
        std::map<std::string, long> mult;
        for (const auto& [label, value] : divisors[d].items()) {
            if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
                bad_field(where + "." + label, "unknown point label");
            }
            const long x = integer_from_json(value, where + "." + label);
            if (x < 0) {
                bad_field(where + "." + label, "multiplicity must be nonnegative");
            }
            mult[label] = x;
        }
        input.flag.divisors.emplace_back(std::move(mult));
    }
    if (auto it = j.find("s"); it != j.end()) {
        input.s = rational_from_json(*it, "s");
    }
    return input;
}

json flag_to_json(const FlagIdealP1& flag, const std::optional<Rational>& s)
{
    json divisors = json::array();
    for (const auto& d : flag.divisors) {
        json entry = json::object();
        for (const auto& p : flag.points()) {
            entry[p] = d.at(p);
        }
        divisors.push_back(std::move(entry));
    }
    json out{{"M", flag.length()}, {"points", flag.points()}, {"divisors", std::move(divisors)}};
    if (s) {
        out["s"] = to_json(*s);
    }
    return out;
}

json to_json(const DFReport& report)
{
    json grid = json::array();
    for (const auto& sample : report.k_grid.entries()) {
        grid.push_back(json{{"k", sample.k}, {"w", to_json(sample.value)}});
    }
    json w = json::array();
    for (std::size_t i = 0; i <= 2; ++i) {
        w.push_back(to_json(report.w_poly.coefficient(i)));
    }
    return json{{"s", to_json(report.s)},
                {"k_grid", std::move(grid)},
                {"base_divisibility", report.base_divisibility},
                {"w_poly", std::move(w)},
                {"w_poly_text", report.w_poly.to_string()},
                {"N_poly", json::array({to_json(report.N_poly.coefficient(0)), to_json(report.N_poly.coefficient(1))})},
                {"DF", to_json(report.DF)},
                {"DF0", to_json(report.DF0)},
                {"inferred_Lbar_sq", to_json(report.inferred_Lbar_sq)},
                {"semiampleness_checked", report.semiampleness_checked}};
}

MonomialIdeal ideal_from_json(const json& j, const std::string& field)
{
    const long n = integer_from_json(require(j, "n", field), field + ".n");
    if (n < 1) {
        bad_field(field + ".n", "arity must be positive");
    }
    const json& gens = require(j, "generators", field);
    if (!gens.is_array() || gens.empty()) {
        bad_field(field + ".generators", "expected a nonempty array of exponent vectors");
    }
    std::vector<ExponentVector> out;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const std::string where = field + ".generators[" + std::to_string(g) + "]";
        if (!gens[g].is_array() || gens[g].size() != static_cast<std::size_t>(n)) {
            bad_field(where, "expected " + std::to_string(n) + " exponents");
        }
        ExponentVector e;
        for (std::size_t c = 0; c < gens[g].size(); ++c) {
            const long x = integer_from_json(gens[g][c], where + "[" + std::to_string(c) + "]");
            if (x < 0) {
                bad_field(where, "exponents must be nonnegative");
            }
            e.push_back(x);
        }
        out.push_back(std::move(e));
    }
    return MonomialIdeal(static_cast<std::size_t>(n), std::move(out));
}

json to_json(const MonomialIdeal& ideal)
{
    return json{{"n", ideal.arity()}, {"generators", ideal.generators()}};
}

WeightedIdealProduct product_from_json(const json& j)
{
    const json& factors = require(j, "factors", "");
    if (!factors.is_array() || factors.empty()) {
        bad_field("factors", "expected a nonempty array");
    }
    std::vector<WeightedFactor> out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::string where = "factors[" + std::to_string(i) + "]";
        out.push_back({ideal_from_json(require(factors[i], "ideal", where), where + ".ideal"),
                       rational_from_json(require(factors[i], "c", where), where + ".c")});
    }
    return WeightedIdealProduct(std::move(out));
}

json to_json(const NewtonPolyhedron& poly)
{
    json ineqs = json::array();
    for (const auto& h : poly.inequalities) {
        json normal = json::array();
        for (const auto& x : h.normal) {
            normal.push_back(to_json(x));
        }
        ineqs.push_back(json{{"normal", std::move(normal)}, {"offset", to_json(h.offset)}});
    }
    return json{{"ideal", to_json(poly.source)}, {"inequalities", std::move(ineqs)}};
}

json to_json(const SummationResult& result)
{
    json out{{"holds", result.holds},
             {"witness_denominator", result.witness_denominator},
             {"lhs", to_json(result.lhs)},
             {"rhs", to_json(result.rhs)}};
    if (result.counterexample) {
        out["counterexample"] = *result.counterexample;
    }
    return out;
}

} // namespace kstab::io
