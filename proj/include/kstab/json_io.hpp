#pragma once

#include "kstab/arrangement.hpp"
#include "kstab/flag_df.hpp"
#include "kstab/gamma_p1.hpp"
#include "kstab/monomial.hpp"

#include <json.hpp>

#include <optional>

namespace kstab::io {

using nlohmann::json;

/// Rationals travel as "p/q" strings; integers are accepted on input as well.
json to_json(const Rational& q);
Rational rational_from_json(const json& j, const std::string& field);

CentralArrangement arrangement_from_json(const json& j);
json arrangement_to_json(const CentralArrangement& arr);
json to_json(const Flat& flat);
json to_json(const LctCertificate& cert);

json to_json(const GammaSample& sample);
json to_json(const GammaReport& report);

struct FlagInput {
    FlagIdealP1 flag;
    std::optional<Rational> s;
};
/// {"M": 2, "points": ["p","q"], "divisors": [{"p":0,"q":1}, ...], "s": "1"}.
/// Validates shape only; call validate_flag for the chain conditions.
FlagInput flag_from_json(const json& j);
json flag_to_json(const FlagIdealP1& flag, const std::optional<Rational>& s = std::nullopt);
json to_json(const DFReport& report);

MonomialIdeal ideal_from_json(const json& j, const std::string& field = "ideal");
json to_json(const MonomialIdeal& ideal);
WeightedIdealProduct product_from_json(const json& j);
json to_json(const NewtonPolyhedron& poly);
json to_json(const SummationResult& result);

} // namespace kstab::io
