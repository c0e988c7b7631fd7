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

TEST_CASE("construct_q reproduces the worked example") {
    CHECK(construct_q(testsup::synthesis_example_spec()) == testsup::synthesis_example_q());
}

TEST_CASE("construct_q postconditions on small specs") {
    // identity-mapping targets: Q w_k = w_k and unit row/column sums
    TargetSpec fixed;
    fixed.weights = weight_basis(4);
    for (const auto& w : fixed.weights) fixed.results.push_back(w.vec());
    RatMatrix q = construct_q(fixed);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(mat_vec(q, fixed.weights[k].vec()) == fixed.results[k]);
    }

    TargetSpec small;
    small.weights = {WeightVector(rvec({"1", "0", "-1"})), WeightVector(rvec({"2", "-1", "-1"}))};
    small.results = {rvec({"0", "1", "-1"}), rvec({"-3", "2", "1"})};
    RatMatrix qs = construct_q(small);
    CHECK(mat_vec(qs, small.weights[0].vec()) == small.results[0]);
    CHECK(mat_vec(qs, small.weights[1].vec()) == small.results[1]);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(qs.row_sum(i) == Rational(1));
        CHECK(qs.col_sum(i) == Rational(1));
    }
}

TEST_CASE("target spec validation") {
    TargetSpec bad;
    bad.weights = {WeightVector(rvec({"1", "0", "-1"})), WeightVector(rvec({"2", "0", "-2"}))};
    bad.results = {rvec({"0", "1", "-1"}), rvec({"0", "1", "-1"})};
    CHECK_THROWS_AS(construct_q(bad), std::invalid_argument);  // dependent weights

    TargetSpec unbalanced;
    unbalanced.weights = {WeightVector(rvec({"1", "0", "-1"})),
                          WeightVector(rvec({"2", "-1", "-1"}))};
    unbalanced.results = {rvec({"0", "1", "-1"}), rvec({"1", "1", "1"})};
    CHECK_THROWS_AS(construct_q(unbalanced), std::invalid_argument);  // result not sum-zero

    TargetSpec short_spec;
    short_spec.weights = {WeightVector(rvec({"1", "0", "-1"}))};
    short_spec.results = {rvec({"0", "1", "-1"})};
    CHECK_THROWS_AS(construct_q(short_spec), std::invalid_argument);  // needs n-1 pairs
}

TEST_CASE("synthesize_profile satisfies every tally equation") {
    TargetSpec spec = testsup::synthesis_example_spec();
    Profile p = synthesize_profile(spec);
    TallyMatrix q = build_tally_matrix(p);
    CHECK(q.m == testsup::synthesis_example_q());
    for (std::size_t k = 0; k < spec.weights.size(); ++k) {
        CHECK(tally(q, spec.weights[k]) == spec.results[k]);
    }
}

TEST_CASE("synthesize_alternate_profile changes the profile but not the tallies") {
    TargetSpec spec = testsup::synthesis_example_spec();
    Profile p = synthesize_profile(spec);
    for (std::uint64_t seed : {1ull, 7ull, 99ull}) {
        Profile alt = synthesize_alternate_profile(spec, seed);
        CHECK_FALSE(alt == p);
        TallyMatrix q = build_tally_matrix(alt);
        CHECK(q.m == testsup::synthesis_example_q());
        for (std::size_t k = 0; k < spec.weights.size(); ++k) {
            CHECK(tally(q, spec.weights[k]) == spec.results[k]);
        }
    }
}

TEST_CASE("random specs synthesize exactly") {
    std::mt19937_64 rng(307);
    for (int n = 3; n <= 5; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            TargetSpec spec = testsup::random_target_spec(rng, n);
            Profile p = synthesize_profile(spec);
            TallyMatrix q = build_tally_matrix(p);
            for (std::size_t k = 0; k < spec.weights.size(); ++k) {
                CHECK(tally(q, spec.weights[k]) == spec.results[k]);
            }
        }
    }
}

TEST_CASE("scale_to_dominate") {
    WeightVector w3(rvec({"1", "0", "-1"}));
    CHECK(scale_to_dominate(w3, RatVector(3)) == Rational(0));

    RatVector x = rvec({"-2", "1", "1"});
    CHECK(scale_to_dominate(w3, x) == Rational(6));
    CHECK(WeightVector(Rational(6) * w3.vec() + x).is_strict());
    CHECK(Rational(6) * w3.vec() + x == rvec({"4", "1", "-5"}));

    WeightVector w4(rvec({"3", "1", "-1", "-3"}));
    RatVector alt = rvec({"1", "-1", "1", "-1"});
    CHECK(scale_to_dominate(w4, alt) == rat("3/2"));
    CHECK(rat("3/2") * w4.vec() + alt == rvec({"11/2", "1/2", "-1/2", "-11/2"}));

    CHECK_THROWS_AS(scale_to_dominate(WeightVector(rvec({"1", "1", "-2"})), x),
                    std::invalid_argument);
    CHECK_THROWS_AS(scale_to_dominate(w3, rvec({"1", "1", "1"})), std::invalid_argument);
}

TEST_CASE("scaled weights stay strict") {
    std::mt19937_64 rng(311);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + trial % 3;
        WeightVector w = testsup::random_strict_weight(rng, n);
        RatVector x = testsup::random_sum_zero(rng, static_cast<std::size_t>(n));
        Rational eta = scale_to_dominate(w, x);
        CHECK(WeightVector(eta * w.vec() + x).is_strict());
        CHECK(WeightVector(Rational(2) * eta * w.vec() + x).is_strict());
    }
}

TEST_CASE("lower-bound construction covers every allowed ranking at n=3") {
    SaariConstruction con(3, {WeightVector(rvec({"1", "0", "-1"})),
                              WeightVector(rvec({"3", "1", "-4"}))});
    SaariCertificate cert = con.certificate();
    CHECK(cert.weight_of.size() == 4);  // 3! - 2!

    std::vector<Permutation> expected = {perm({1, 2, 3}), perm({1, 3, 2}), perm({2, 1, 3}),
                                         perm({3, 1, 2})};
    TallyMatrix q = build_tally_matrix(cert.profile);
    for (const auto& pi : expected) {
        auto it = cert.weight_of.find(pi);
        REQUIRE(it != cert.weight_of.end());
        CHECK(it->second.is_strict());
        CHECK(face_of(tally(q, it->second)) == Ranking(pi));
    }
}

TEST_CASE("lower-bound construction at n=4 with default base") {
    SaariCertificate cert = saari_profile(4);
    CHECK(cert.weight_of.size() == 18);  // 4! - 3!
    TallyMatrix q = build_tally_matrix(cert.profile);
    for (const auto& [pi, w] : cert.weight_of) {
        CHECK(pi.at(4) != 1);
        CHECK(w.is_strict());
        CHECK(w.vec().sum().is_zero());
        CHECK(face_of(tally(q, w)) == Ranking(pi));
    }
}

TEST_CASE("rankings fixing the dummy candidate score n-k points per place") {
    SaariConstruction con(4);
    TallyMatrix q = con.tally_matrix();
    for (std::uint64_t ell = 1; ell <= factorial(4); ++ell) {
        Permutation pi = perm_unrank(4, ell);
        if (pi.at(4) != 4) continue;
        RatVector s = tally(q, con.weight_for(pi));
        for (int k = 1; k <= 3; ++k) {
            CHECK(s[static_cast<std::size_t>(pi.at(k) - 1)] == Rational(4 - k));
        }
        CHECK(s[3] == Rational(-6));  // -binom(4,2)
    }
}

TEST_CASE("weight_for hits the exact chamber targets") {
    SaariConstruction con(3, {WeightVector(rvec({"1", "0", "-1"})),
                              WeightVector(rvec({"3", "1", "-4"}))});
    TallyMatrix q = con.tally_matrix();

    // pi fixing candidate 3 last: scores are n - place_of(k), candidate 3
    // bottoms out at -binom(3,2)
    Permutation pi = perm({2, 1, 3});
    RatVector s = tally(q, con.weight_for(pi));
    CHECK(s == rvec({"1", "2", "-3"}));
    CHECK(face_of(s) == Ranking(pi));

    // pi sending 3 to the middle: candidate 3 lands at n - place + 1/2
    Permutation mid = perm({3, 1, 2});
    RatVector sm = tally(q, con.weight_for(mid));
    CHECK(sm == rvec({"2", "-9/2", "5/2"}));
    CHECK(face_of(sm) == Ranking(mid));

    CHECK_THROWS_AS(con.weight_for(perm({2, 3, 1})), std::invalid_argument);  // 1 last
    CHECK_THROWS_AS(con.weight_for(perm({3, 2, 1})), std::invalid_argument);
}

TEST_CASE("nonpositive_prefix_shift") {
    Permutation id3 = Permutation::identity(3);
    CHECK(nonpositive_prefix_shift(RatVector(3), id3) == 0);

    RatVector h = rvec({"1", "-1", "0"});
    CHECK(nonpositive_prefix_shift(h, id3) == 1);

    // oracle: enumerate all rotations and check the chosen one
    auto prefix_ok = [](const RatVector& v, const Permutation& order, int m) {
        int n = order.n();
        Rational s;
        for (int k = 1; k < n; ++k) {
            int pos = (m + k - 1) % n + 1;
            s += v[static_cast<std::size_t>(order.at(pos) - 1)];
            if (s.sign() > 0) return false;
        }
        return true;
    };
    CHECK(prefix_ok(h, id3, 1));
    CHECK_FALSE(prefix_ok(h, id3, 0));

    CHECK_THROWS_AS(nonpositive_prefix_shift(rvec({"1", "1", "1"}), id3),
                    std::invalid_argument);

    std::mt19937_64 rng(313);
    for (int trial = 0; trial < 100; ++trial) {
        RatVector v = testsup::random_sum_zero(rng, 5);
        std::uniform_int_distribution<std::uint64_t> pick(1, factorial(5));
        Permutation order = perm_unrank(5, pick(rng));
        int m = nonpositive_prefix_shift(v, order);
        CHECK(prefix_ok(v, order, m));

        // nonzero h: some rotated prefix must be strictly negative
        bool strict = false;
        Rational s;
        for (int k = 1; k < 5; ++k) {
            int pos = (m + k - 1) % 5 + 1;
            s += v[static_cast<std::size_t>(order.at(pos) - 1)];
            strict = strict || s.sign() < 0;
        }
        CHECK(strict);
    }
}
