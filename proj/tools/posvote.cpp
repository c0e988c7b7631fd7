// posvote: tally positional elections exactly, synthesize profiles with
// prescribed outcomes, decompose doubly stochastic matrices, and explore
// every ranking a profile can reach.
//
// Exit codes: 0 success, 1 domain failure (singular system, unreachable
// ranking), 2 I/O or parse failure.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "posvote/json_io.hpp"

namespace {

using posvote::Json;
using posvote::NumberStyle;

struct Options {
    int decimals = -1;
    std::string output_path;
};

void emit(const Json& doc, const Options& opt) {
    std::string text = doc.dump(2) + "\n";
    if (!opt.output_path.empty()) {
        std::ofstream out(opt.output_path);
        if (!out) throw posvote::ParseError("cannot write '" + opt.output_path + "'");
        out << text;
    }
    std::cout << text;
}

Json with_style_marker(Json doc, const NumberStyle& style) {
    if (style.approximate() && doc.is_object()) {
        doc["approximate_decimals"] = style.decimals;
    }
    return doc;
}

int run_tally(const std::string& profile_path, const std::string& weights_path,
              const Options& opt) {
    NumberStyle style{opt.decimals};
    posvote::Profile p = posvote::profile_from_json(posvote::load_json_file(profile_path));
    posvote::WeightVector w = posvote::weights_from_json(posvote::load_json_file(weights_path));
    posvote::TallyMatrix q = posvote::build_tally_matrix(p);
    posvote::ResultsVector r = posvote::tally(q, w);
    Json doc;
    doc["results"] = posvote::vector_to_json(r, style);
    doc["ranking"] = posvote::ranking_to_json(posvote::face_of(r));
    emit(with_style_marker(std::move(doc), style), opt);
    return 0;
}

int run_synthesize(const std::string& spec_path, bool alternate, std::uint64_t alt_seed,
                   const Options& opt) {
    NumberStyle style{opt.decimals};
    posvote::TargetSpec spec =
        posvote::target_spec_from_json(posvote::load_json_file(spec_path));
    posvote::RatMatrix q = posvote::construct_q(spec);
    posvote::Profile p = alternate ? posvote::synthesize_alternate_profile(spec, alt_seed)
                                   : posvote::synthesize_profile(spec);

    posvote::TallyMatrix qp = posvote::build_tally_matrix(p);
    Json checks = Json::array();
    for (std::size_t k = 0; k < spec.weights.size(); ++k) {
        posvote::ResultsVector r = posvote::tally(qp, spec.weights[k]);
        Json c;
        c["weight_index"] = k + 1;
        c["result"] = posvote::vector_to_json(r, style);
        c["matches_target"] = r == spec.results[k];
        checks.push_back(std::move(c));
    }
    Json doc;
    doc["profile"] = posvote::profile_to_json(p, style);
    doc["q"] = posvote::matrix_rows_to_json(q, style);
    doc["verification"] = std::move(checks);
    emit(with_style_marker(std::move(doc), style), opt);
    return 0;
}

int run_saari(int n, const Options& opt) {
    NumberStyle style{opt.decimals};
    posvote::SaariCertificate cert = posvote::saari_profile(n);
    emit(with_style_marker(posvote::certificate_to_json(cert, style), style), opt);
    return 0;
}

int run_decompose(const std::string& matrix_path, const Options& opt) {
    NumberStyle style{opt.decimals};
    Json doc = posvote::load_json_file(matrix_path);
    if (doc.is_object() && doc.contains("matrix")) doc = doc["matrix"];
    posvote::RatMatrix m = posvote::matrix_rows_from_json(doc);
    posvote::PermCombination combo = posvote::is_doubly_stochastic(m)
                                         ? posvote::bvn_decompose(m)
                                         : posvote::expand_in_permutations(m);
    emit(posvote::perm_combination_to_json(combo, style), opt);
    return 0;
}

int run_reachable(const std::string& profile_path, bool include_ties, const Options& opt) {
    NumberStyle style{opt.decimals};
    posvote::Profile p = posvote::profile_from_json(posvote::load_json_file(profile_path));
    posvote::ReachabilityReport report =
        posvote::enumerate_reachable(posvote::build_tally_matrix(p), !include_ties);
    report.profile_id = profile_path;
    emit(with_style_marker(posvote::report_to_json(report, style), style), opt);
    return 0;
}

int run_pick_weights(const std::string& profile_path, const std::string& ranking_arg,
                     const Options& opt) {
    NumberStyle style{opt.decimals};
    posvote::Profile p = posvote::profile_from_json(posvote::load_json_file(profile_path));
    posvote::Ranking target = posvote::parse_ranking_arg(ranking_arg);
    if (target.n() != p.n()) {
        throw posvote::ParseError("ranking names " + std::to_string(target.n()) +
                                  " candidates but the profile has " + std::to_string(p.n()));
    }
    posvote::TallyMatrix q = posvote::build_tally_matrix(p);
    auto t = posvote::prefix_sums(q);
    posvote::FaceReachability fr = posvote::is_face_reachable(t, target);
    if (!fr.reachable) {
        std::cout << "unreachable\n";
        std::cerr << "ranking " << ranking_arg << " is not reachable from this profile\n";
        return 1;
    }
    posvote::WeightVector w = posvote::weight_from_coefficients(p.n(), fr.b);
    Json doc;
    doc["ranking"] = posvote::ranking_to_json(target);
    doc["b"] = posvote::vector_to_json(fr.b, style);
    doc["weights"] = posvote::vector_to_json(w.vec(), style);
    emit(with_style_marker(std::move(doc), style), opt);
    return 0;
}

int run_explore(const std::string& profile_path, std::uint64_t trials, std::uint64_t seed,
                const Options& opt) {
    NumberStyle style{opt.decimals};
    posvote::Profile p = posvote::profile_from_json(posvote::load_json_file(profile_path));
    auto rankings = posvote::random_explore(posvote::build_tally_matrix(p), trials, seed);
    Json arr = Json::array();
    for (const auto& r : rankings) arr.push_back(posvote::ranking_to_json(r));
    Json doc;
    doc["trials"] = trials;
    doc["seed"] = seed;
    doc["rankings"] = std::move(arr);
    emit(with_style_marker(std::move(doc), style), opt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact positional-voting toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--decimal", opt.decimals,
                   "render numbers as k-digit decimal approximations (output is marked)");
    app.add_option("-o,--output", opt.output_path, "also write the JSON output to this file");

    std::string profile_path, weights_path, spec_path, matrix_path, ranking_arg;
    int saari_n = 4;
    bool include_ties = false;
    bool alternate = false;
    std::uint64_t alt_seed = 1, trials = 10000, seed = 0;

    auto* tally = app.add_subcommand("tally", "tally a profile under a weighting vector");
    tally->add_option("-p,--profile", profile_path, "profile JSON file")->required();
    tally->add_option("-w,--weights", weights_path, "weights JSON file")->required();

    auto* synth = app.add_subcommand(
        "synthesize", "build a profile realizing prescribed (weight, result) pairs");
    synth->add_option("-s,--spec", spec_path, "target spec JSON file")->required();
    synth->add_flag("--alternate", alternate, "emit a different profile with the same tallies");
    synth->add_option("--alt-seed", alt_seed, "seed for --alternate");

    auto* saari = app.add_subcommand(
        "saari", "profile + weights realizing every ranking that does not put candidate 1 last");
    saari->add_option("-n", saari_n, "number of candidates (3..8; sizes past 6 get slow)")
        ->required();

    auto* decomp = app.add_subcommand(
        "decompose", "write a matrix with equal row/column sums as a combination of permutations");
    decomp->add_option("-m,--matrix", matrix_path, "matrix JSON file")->required();

    auto* reach = app.add_subcommand("reachable", "enumerate every achievable societal ranking");
    reach->add_option("-p,--profile", profile_path, "profile JSON file")->required();
    reach->add_flag("--ties", include_ties, "also enumerate tied rankings (n <= 5)");

    auto* pick = app.add_subcommand("pick-weights",
                                    "find a weighting vector that realizes a chosen ranking");
    pick->add_option("-p,--profile", profile_path, "profile JSON file")->required();
    pick->add_option("-r,--ranking", ranking_arg, "target, e.g. \"2,4,3,1\" or \"2;4,3;1\"")
        ->required();

    auto* explore = app.add_subcommand("explore", "sample random weightings and record rankings");
    explore->add_option("-p,--profile", profile_path, "profile JSON file")->required();
    explore->add_option("--trials", trials, "number of random draws");
    explore->add_option("--seed", seed, "RNG seed")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (tally->parsed()) return run_tally(profile_path, weights_path, opt);
        if (synth->parsed()) return run_synthesize(spec_path, alternate, alt_seed, opt);
        if (saari->parsed()) return run_saari(saari_n, opt);
        if (decomp->parsed()) return run_decompose(matrix_path, opt);
        if (reach->parsed()) return run_reachable(profile_path, include_ties, opt);
        if (pick->parsed()) return run_pick_weights(profile_path, ranking_arg, opt);
        if (explore->parsed()) return run_explore(profile_path, trials, seed, opt);
    } catch (const posvote::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
