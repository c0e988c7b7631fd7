// JSON (de)serialization for every file format the tools speak. All
// numbers travel as exact rational strings ("-73/4", "5"); an optional
// decimal rendering exists for human-readable output only.
#pragma once

#include <string>

#include <json.hpp>

#include "posvote/birkhoff.hpp"
#include "posvote/paradox.hpp"
#include "posvote/reachability.hpp"
#include "posvote/voting.hpp"

namespace posvote {

using Json = nlohmann::ordered_json;

struct NumberStyle {
    int decimals = -1;  // -1 renders exact rationals; >= 0 renders approximations
    bool approximate() const { return decimals >= 0; }
    std::string render(const Rational& r) const {
        return approximate() ? r.to_decimal(decimals) : r.to_string();
    }
};

// Accepts a rational string or a JSON integer; anything else is a ParseError.
Rational rational_from_json(const Json& j);

Json vector_to_json(const RatVector& v, const NumberStyle& style = {});
RatVector vector_from_json(const Json& j);

Json matrix_rows_to_json(const RatMatrix& m, const NumberStyle& style = {});
RatMatrix matrix_rows_from_json(const Json& j);

// {"n": 4, "ballots": [{"ranking": [2,3,4,1], "count": "8"}, ...]}
Profile profile_from_json(const Json& j);
Json profile_to_json(const Profile& p, const NumberStyle& style = {});

// {"weights": ["3/2", "1/2", "-1/2", "-3/2"]}
WeightVector weights_from_json(const Json& j);
Json weights_to_json(const WeightVector& w, const NumberStyle& style = {});

// {"weights": [[...], ...], "results": [[...], ...]}
TargetSpec target_spec_from_json(const Json& j);

// [{"perm": [2,3,4,1], "coeff": "71/296"}, ...]
Json perm_combination_to_json(const PermCombination& combo, const NumberStyle& style = {});

// Blocks as nested arrays, e.g. [[3],[2],[4],[1]].
Json ranking_to_json(const Ranking& r);

// Command-line ranking grammar: "2,4,3,1" is strict; "2;4,3;1" ties 4 and 3.
Ranking parse_ranking_arg(const std::string& s);

Json report_to_json(const ReachabilityReport& report, const NumberStyle& style = {});
Json certificate_to_json(const SaariCertificate& cert, const NumberStyle& style = {});

// Reads and parses a JSON document; failures raise ParseError.
Json load_json_file(const std::string& path);

}  // namespace posvote
