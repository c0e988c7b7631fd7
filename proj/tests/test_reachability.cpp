#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "posvote/paradox.hpp"
#include "posvote/reachability.hpp"
#include "test_support.hpp"

using namespace posvote;
using testsup::perm;
using testsup::rat;
using testsup::rvec;

namespace {

bool contains_strict(const ReachabilityReport& report, const Permutation& pi) {
    Ranking target(pi);
    for (const auto& entry : report.reachable) {
        if (entry.ranking == target) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("weight_basis matches the published generators") {
    auto v4 = weight_basis(4);
    REQUIRE(v4.size() == 3);
    CHECK(v4[0].vec() == rvec({"1/4", "1/4", "1/4", "-3/4"}));
    CHECK(v4[1].vec() == rvec({"1/2", "1/2", "-1/2", "-1/2"}));
    CHECK(v4[2].vec() == rvec({"3/4", "-1/4", "-1/4", "-1/4"}));

    auto v2 = weight_basis(2);
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].vec() == rvec({"1/2", "-1/2"}));

    CHECK_THROWS_AS(weight_basis(1), std::invalid_argument);
}

TEST_CASE("every closed-cone weight expands over the basis with gap coefficients") {
    std::mt19937_64 rng(401);
    auto basis = weight_basis(5);
    for (int trial = 0; trial < 30; ++trial) {
        WeightVector w = testsup::random_weight(rng, 5);
        RatVector back(5);
        for (int k = 1; k <= 4; ++k) {
            Rational a = w[static_cast<std::size_t>(5 - k - 1)] -
                         w[static_cast<std::size_t>(5 - k)];
            CHECK(a.sign() >= 0);
            back += a * basis[static_cast<std::size_t>(k - 1)].vec();
        }
        CHECK(back == w.vec());
    }
}

TEST_CASE("prefix_sums of the election example") {
    TallyMatrix q = build_tally_matrix(testsup::example_election_profile());
    auto t = prefix_sums(q);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == rvec({"5", "16", "0", "17"}));
    CHECK(t[1] == rvec({"12", "16", "31", "17"}));
    CHECK(t[2] == rvec({"20", "31", "38", "25"}));

    auto ti = prefix_sums(TallyMatrix::from_matrix(RatMatrix::identity(3)));
    CHECK(ti[0] == rvec({"1", "0", "0"}));
    CHECK(ti[1] == rvec({"1", "1", "0"}));

    auto tj = prefix_sums(TallyMatrix::from_matrix(RatMatrix::constant(4, rat("1/4"))));
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(tj[k][i] == Rational(static_cast<long>(k) + 1, 4));
        }
    }
}

TEST_CASE("is_face_reachable on the election example") {
    TallyMatrix q = build_tally_matrix(testsup::example_election_profile());
    auto t = prefix_sums(q);

    auto fr = is_face_reachable(t, Ranking(perm({2, 4, 3, 1})));
    REQUIRE(fr.reachable);
    RatVector y(4);
    for (std::size_t k = 0; k < 3; ++k) y += fr.b[k] * t[k];
    CHECK(face_of(y) == Ranking(perm({2, 4, 3, 1})));

    // the worked witness also lands there
    RatVector named = rat("3/5") * t[0] + rat("1/5") * t[1] + rat("1/5") * t[2];
    CHECK(named == rvec({"47/5", "19", "69/5", "93/5"}));
    CHECK(face_of(named) == Ranking(perm({2, 4, 3, 1})));

    CHECK(is_face_reachable(t, Ranking(perm({3, 2, 4, 1}))).reachable);  // Borda's outcome
    CHECK(is_face_reachable(t, Ranking(perm({4, 2, 1, 3}))).reachable);  // plurality's
}

TEST_CASE("is_face_reachable on the flat matrix") {
    auto t = prefix_sums(TallyMatrix::from_matrix(RatMatrix::constant(4, rat("1/4"))));
    for (std::uint64_t ell = 1; ell <= factorial(4); ++ell) {
        CHECK_FALSE(is_face_reachable(t, Ranking(perm_unrank(4, ell))).reachable);
    }
    Ranking all_tied(std::vector<std::vector<int>>{{1, 2, 3, 4}});
    CHECK(is_face_reachable(t, all_tied).reachable);
}

TEST_CASE("enumerate_reachable on the election example") {
    TallyMatrix q = build_tally_matrix(testsup::example_election_profile());
    ReachabilityReport report = enumerate_reachable(q);
    CHECK(report.strict_bound == 18);
    CHECK(report.strict_reachable_count <= 18);
    CHECK(contains_strict(report, perm({3, 2, 4, 1})));
    CHECK(contains_strict(report, perm({4, 2, 1, 3})));
    CHECK(contains_strict(report, perm({2, 4, 3, 1})));
    CHECK_FALSE(report.zero_total);
    CHECK(report.reachable.size() + report.unreachable_count == factorial(4));

    // soundness: each witness pair re-verifies through the exact tally
    for (const auto& entry : report.reachable) {
        RatVector y(4);
        for (std::size_t k = 0; k < 3; ++k) y += entry.b[k] * report.t[k];
        CHECK(face_of(y) == entry.ranking);
        CHECK(face_of(tally(q, entry.weight)) == entry.ranking);
    }
}

TEST_CASE("enumerate_reachable agrees with the lower-bound certificate at n=3") {
    SaariCertificate cert = saari_profile(3);
    ReachabilityReport report = enumerate_reachable(build_tally_matrix(cert.profile));
    CHECK(report.strict_reachable_count == 4);
    CHECK(report.bound_attained);
    for (const auto& [pi, w] : cert.weight_of) CHECK(contains_strict(report, pi));
}

TEST_CASE("single-ballot profiles reach exactly their own ranking") {
    Permutation sigma = perm({3, 1, 2});
    Profile p = Profile::from_ballots(3, {{sigma, Rational(1)}});
    ReachabilityReport report = enumerate_reachable(build_tally_matrix(p));
    CHECK(report.strict_reachable_count == 1);
    CHECK(contains_strict(report, sigma));

    Permutation sigma5 = perm({5, 2, 4, 1, 3});
    Profile p5 = Profile::from_ballots(5, {{sigma5, Rational(3)}});
    ReachabilityReport r5 = enumerate_reachable(build_tally_matrix(p5));
    CHECK(r5.strict_reachable_count == 1);
    CHECK(contains_strict(r5, sigma5));
    CHECK(r5.strict_bound == 96);
}

TEST_CASE("tied faces enumerate when requested") {
    // constant tally matrix: the only achievable outcome is the full tie
    std::vector<std::pair<Permutation, Rational>> everyone;
    for (std::uint64_t ell = 1; ell <= 6; ++ell) {
        everyone.emplace_back(perm_unrank(3, ell), Rational(1));
    }
    TallyMatrix q = build_tally_matrix(Profile::from_ballots(3, everyone));
    ReachabilityReport report = enumerate_reachable(q, /*strict_only=*/false);
    REQUIRE(report.reachable.size() == 1);
    CHECK(report.reachable[0].ranking == Ranking(std::vector<std::vector<int>>{{1, 2, 3}}));
    CHECK(report.strict_reachable_count == 0);

    // the election profile reaches tied faces between its strict chambers,
    // and their witnesses verify just like the strict ones
    TallyMatrix qe = build_tally_matrix(testsup::example_election_profile());
    ReachabilityReport full = enumerate_reachable(qe, false);
    bool has_tie = false;
    for (const auto& entry : full.reachable) {
        has_tie = has_tie || !entry.ranking.is_strict();
        CHECK(face_of(tally(qe, entry.weight)) == entry.ranking);
    }
    CHECK(has_tie);
}

TEST_CASE("all_rankings enumerates ordered set partitions") {
    CHECK(all_rankings(1).size() == 1);
    CHECK(all_rankings(2).size() == 3);
    CHECK(all_rankings(3).size() == 13);
    CHECK(all_rankings(4).size() == 75);
    CHECK_THROWS_AS(all_rankings(6), std::invalid_argument);
}

TEST_CASE("zero-total profiles are flagged") {
    Profile p = Profile::from_ballots(
        3, {{perm({1, 2, 3}), Rational(1)}, {perm({3, 2, 1}), Rational(-1)}});
    ReachabilityReport report = enumerate_reachable(build_tally_matrix(p));
    CHECK(report.zero_total);
}

TEST_CASE("weight_from_coefficients") {
    CHECK(weight_from_coefficients(4, rvec({"3/5", "1/5", "1/5"})).vec() ==
          rvec({"3/5", "0", "-1/5", "-2/5"}));
    CHECK(weight_from_coefficients(4, rvec({"1", "0", "0"})).vec() ==
          rvec({"3/4", "-1/4", "-1/4", "-1/4"}));
    CHECK(weight_from_coefficients(4, rvec({"1", "1", "1"})).vec() ==
          rvec({"3/2", "1/2", "-1/2", "-3/2"}));

    CHECK_THROWS_AS(weight_from_coefficients(4, rvec({"0", "0", "0"})), std::invalid_argument);
    CHECK_THROWS_AS(weight_from_coefficients(4, rvec({"1", "-1", "1"})), std::invalid_argument);
    CHECK_THROWS_AS(weight_from_coefficients(4, rvec({"1", "1"})), std::invalid_argument);
}

TEST_CASE("witness weights land in the same face as the t combination") {
    std::mt19937_64 rng(419);
    std::uniform_int_distribution<long> coef(0, 9);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + trial % 2;
        TallyMatrix q = build_tally_matrix(testsup::random_profile(rng, n, false));
        auto t = prefix_sums(q);
        RatVector b(static_cast<std::size_t>(n - 1));
        long total = 0;
        for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(n); ++k) {
            long c = coef(rng);
            b[k] = Rational(c);
            total += c;
        }
        if (total == 0) continue;
        RatVector y(static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < b.dim(); ++k) y += b[k] * t[k];
        WeightVector w = weight_from_coefficients(n, b);
        CHECK(face_of(tally(q, w)) == face_of(y));
    }
}

TEST_CASE("random_explore stays inside the exact reachable set") {
    TallyMatrix q = build_tally_matrix(testsup::example_election_profile());
    auto sampled = random_explore(q, 4000, 42);
    CHECK(sampled.count(Ranking(perm({2, 4, 3, 1}))) == 1);

    ReachabilityReport report = enumerate_reachable(q);
    for (const auto& r : sampled) {
        if (!r.is_strict()) continue;
        CHECK(contains_strict(report, r.as_permutation()));
    }

    // determinism under a fixed seed
    CHECK(random_explore(q, 500, 7) == random_explore(q, 500, 7));

    // flat matrix: every draw ties everyone
    auto flat = random_explore(TallyMatrix::from_matrix(RatMatrix::constant(4, rat("1/4"))),
                               200, 3);
    REQUIRE(flat.size() == 1);
    CHECK(*flat.begin() == Ranking(std::vector<std::vector<int>>{{1, 2, 3, 4}}));
}

TEST_CASE("random_explore saturates the lower-bound profile at n=3") {
    SaariCertificate cert = saari_profile(3);
    TallyMatrix q = build_tally_matrix(cert.profile);
    auto sampled = random_explore(q, 10000, 11);
    ReachabilityReport report = enumerate_reachable(q);

    std::size_t strict_sampled = 0;
    for (const auto& r : sampled) {
        if (!r.is_strict()) continue;
        ++strict_sampled;
        CHECK(contains_strict(report, r.as_permutation()));
    }
    if (strict_sampled != report.strict_reachable_count) {
        WARN("sampling missed some reachable rankings (possible but unlikely)");
    }
}

TEST_CASE("strict counts respect the upper bound on random profiles") {
    std::mt19937_64 rng(421);
    for (int trial = 0; trial < 40; ++trial) {
        Profile p = testsup::random_profile(rng, 3, true);
        CHECK(enumerate_reachable(build_tally_matrix(p)).strict_reachable_count <= 4);
    }
    for (int trial = 0; trial < 10; ++trial) {
        Profile p = testsup::random_profile(rng, 4, true);
        CHECK(enumerate_reachable(build_tally_matrix(p)).strict_reachable_count <= 18);
    }
}

TEST_CASE("LP reachability agrees with the grid oracle at n=3") {
    std::mt19937_64 rng(431);
    for (int trial = 0; trial < 8; ++trial) {
        TallyMatrix q = build_tally_matrix(testsup::random_profile(rng, 3, true));
        auto t = prefix_sums(q);
        for (std::uint64_t ell = 1; ell <= 6; ++ell) {
            Ranking target(perm_unrank(3, ell));
            bool grid_reachable = false;
            for (long i = 0; i <= 200 && !grid_reachable; ++i) {
                RatVector y = Rational(i, 200) * t[0] + Rational(200 - i, 200) * t[1];
                grid_reachable = face_of(y) == target;
            }
            auto fr = is_face_reachable(t, target);
            if (grid_reachable) CHECK(fr.reachable);
            if (fr.reachable) {
                RatVector y = fr.b[0] * t[0] + fr.b[1] * t[1];
                CHECK(face_of(y) == target);
            }
        }
    }
}
