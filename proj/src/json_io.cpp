#include "posvote/json_io.hpp"

#include <cctype>
#include <fstream>

namespace posvote {

namespace {

void expect(bool ok, const std::string& msg) {
    if (!ok) throw ParseError(msg);
}

int int_from_json(const Json& j, const std::string& what) {
    expect(j.is_number_integer(), what + " must be an integer");
    return j.get<int>();
}

std::vector<int> int_array_from_json(const Json& j, const std::string& what) {
    expect(j.is_array(), what + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(int_from_json(e, what + " entry"));
    return out;
}

Permutation permutation_from_json(const Json& j, const std::string& what) {
    try {
        return Permutation(int_array_from_json(j, what));
    } catch (const std::invalid_argument& e) {
        throw ParseError(what + ": " + e.what());
    }
}

}  // namespace

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("expected a rational string or integer, got " + j.dump());
}

Json vector_to_json(const RatVector& v, const NumberStyle& style) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(style.render(x));
    return out;
}

RatVector vector_from_json(const Json& j) {
    expect(j.is_array() && !j.empty(), "expected a nonempty array of rationals");
    RatVector v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i]);
    return v;
}

Json matrix_rows_to_json(const RatMatrix& m, const NumberStyle& style) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i), style));
    return out;
}

RatMatrix matrix_rows_from_json(const Json& j) {
    expect(j.is_array() && !j.empty(), "matrix must be a nonempty array of rows");
    std::vector<RatVector> rows;
    for (const auto& row : j) rows.push_back(vector_from_json(row));
    RatMatrix m(rows.size(), rows[0].dim());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        expect(rows[i].dim() == rows[0].dim(), "matrix rows must have equal length");
        for (std::size_t c = 0; c < rows[i].dim(); ++c) m.at(i, c) = rows[i][c];
    }
    return m;
}

Profile profile_from_json(const Json& j) {
    expect(j.is_object() && j.contains("n") && j.contains("ballots"),
           "profile must be an object with \"n\" and \"ballots\"");
    int n = int_from_json(j["n"], "profile n");
    expect(j["ballots"].is_array(), "profile ballots must be an array");
    std::vector<std::pair<Permutation, Rational>> ballots;
    for (const auto& entry : j["ballots"]) {
        expect(entry.is_object() && entry.contains("ranking") && entry.contains("count"),
               "each ballot needs \"ranking\" and \"count\"");
        Permutation sigma = permutation_from_json(entry["ranking"], "ballot ranking");
        expect(sigma.n() == n, "ballot ranking length must equal n");
        ballots.emplace_back(std::move(sigma), rational_from_json(entry["count"]));
    }
    try {
        return Profile::from_ballots(n, ballots);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("profile: ") + e.what());
    }
}

Json profile_to_json(const Profile& p, const NumberStyle& style) {
    Json ballots = Json::array();
    for (const auto& [sigma, count] : p.nonzero_ballots()) {
        Json entry;
        entry["ranking"] = sigma.word();
        entry["count"] = style.render(count);
        ballots.push_back(std::move(entry));
    }
    Json out;
    out["n"] = p.n();
    out["ballots"] = std::move(ballots);
    return out;
}

WeightVector weights_from_json(const Json& j) {
    expect(j.is_object() && j.contains("weights"),
           "weights file must be an object with \"weights\"");
    try {
        return WeightVector(vector_from_json(j["weights"]));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("weights: ") + e.what());
    }
}

Json weights_to_json(const WeightVector& w, const NumberStyle& style) {
    Json out;
    out["weights"] = vector_to_json(w.vec(), style);
    return out;
}

TargetSpec target_spec_from_json(const Json& j) {
    expect(j.is_object() && j.contains("weights") && j.contains("results"),
           "target spec must be an object with \"weights\" and \"results\"");
    expect(j["weights"].is_array() && j["results"].is_array(),
           "target spec weights/results must be arrays");
    TargetSpec spec;
    try {
        for (const auto& w : j["weights"]) spec.weights.emplace_back(vector_from_json(w));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("target spec weights: ") + e.what());
    }
    for (const auto& r : j["results"]) spec.results.push_back(vector_from_json(r));
    return spec;
}

Json perm_combination_to_json(const PermCombination& combo, const NumberStyle& style) {
    Json out = Json::array();
    for (const auto& term : combo) {
        Json entry;
        entry["perm"] = term.perm.word();
        entry["coeff"] = style.render(term.coeff);
        out.push_back(std::move(entry));
    }
    return out;
}

Json ranking_to_json(const Ranking& r) {
    Json out = Json::array();
    for (const auto& block : r.blocks()) out.push_back(block);
    return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

int candidate_from_token(const std::string& tok) {
    expect(!tok.empty(), "empty candidate in ranking");
    for (char c : tok) expect(std::isdigit(static_cast<unsigned char>(c)) != 0,
                              "invalid candidate '" + tok + "' in ranking");
    return std::stoi(tok);
}

}  // namespace

Ranking parse_ranking_arg(const std::string& s) {
    std::vector<std::vector<int>> blocks;
    if (s.find(';') == std::string::npos) {
        for (const auto& tok : split(s, ',')) blocks.push_back({candidate_from_token(tok)});
    } else {
        for (const auto& part : split(s, ';')) {
            std::vector<int> block;
            for (const auto& tok : split(part, ',')) block.push_back(candidate_from_token(tok));
            blocks.push_back(std::move(block));
        }
    }
    try {
        return Ranking(std::move(blocks));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("ranking: ") + e.what());
    }
}

Json report_to_json(const ReachabilityReport& report, const NumberStyle& style) {
    Json out;
    if (!report.profile_id.empty()) out["profile"] = report.profile_id;
    out["n"] = report.n;
    out["zero_total"] = report.zero_total;
    Json t = Json::array();
    for (const auto& tk : report.t) t.push_back(vector_to_json(tk, style));
    out["t"] = std::move(t);
    Json reachable = Json::array();
    for (const auto& entry : report.reachable) {
        Json e;
        e["ranking"] = ranking_to_json(entry.ranking);
        e["b"] = vector_to_json(entry.b, style);
        e["weights"] = vector_to_json(entry.weight.vec(), style);
        reachable.push_back(std::move(e));
    }
    out["reachable"] = std::move(reachable);
    out["unreachable_count"] = report.unreachable_count;
    out["bound"] = Json{{"max", report.strict_bound}, {"attained", report.bound_attained}};
    return out;
}

Json certificate_to_json(const SaariCertificate& cert, const NumberStyle& style) {
    Json out;
    out["profile"] = profile_to_json(cert.profile, style);
    Json entries = Json::array();
    for (const auto& [pi, w] : cert.weight_of) {
        Json e;
        e["ranking"] = ranking_to_json(Ranking(pi));
        e["weights"] = vector_to_json(w.vec(), style);
        entries.push_back(std::move(e));
    }
    out["entries"] = std::move(entries);
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

}  // namespace posvote
