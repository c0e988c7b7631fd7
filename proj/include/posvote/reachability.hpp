// Exact enumeration of the societal rankings a fixed profile can
// produce: the cone generators of Wbar, the prefix column sums of the
// tally matrix, LP-based face intersection tests with rational
// witnesses, and the randomized sampler.
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "posvote/simplex.hpp"
#include "posvote/voting.hpp"

namespace posvote {

// v_1, ..., v_{n-1}: conical generators of Wbar. v_k has its first n-k
// entries equal to k/n and its last k entries equal to -(n-k)/n.
std::vector<WeightVector> weight_basis(int n);

// t_k = sum of the first k columns of the tally matrix, k = 1..n-1.
std::vector<RatVector> prefix_sums(const TallyMatrix& q);

struct FaceReachability {
    bool reachable = false;
    RatVector b;  // simplex coefficients over t_1..t_{n-1} when reachable
};

// Decides whether some convex combination of the t vectors lies in the
// (relatively open) face of `target`: block scores exactly equal inside
// blocks and strictly decreasing across blocks.
FaceReachability is_face_reachable(const std::vector<RatVector>& t, const Ranking& target);

struct ReachableEntry {
    Ranking ranking;
    RatVector b;
    WeightVector weight;
};

struct ReachabilityReport {
    std::string profile_id;
    int n = 0;
    std::vector<RatVector> t;
    std::vector<ReachableEntry> reachable;
    std::uint64_t unreachable_count = 0;
    std::uint64_t strict_reachable_count = 0;
    std::uint64_t strict_bound = 0;  // n! - (n-1)!
    bool bound_attained = false;
    bool zero_total = false;  // the t construction degenerates when N == 0
};

// Tests every strict ranking (and, with strict_only off, every ordered
// set partition; that variant needs n <= 5). Witness weights are
// rebuilt from the LP coefficients via weight_from_coefficients.
ReachabilityReport enumerate_reachable(const TallyMatrix& q, bool strict_only = true);

// w = sum_k b_k v_{n-k}; the tally of w lands in the same face as the
// convex combination sum_k b_k t_k. Requires b >= 0, b != 0.
WeightVector weight_from_coefficients(int n, const RatVector& b);

// Random rational probability vectors over the t vectors; returns every
// face hit. Deterministic for a fixed seed.
std::set<Ranking> random_explore(const TallyMatrix& q, std::uint64_t trials, std::uint64_t seed);

// All ordered set partitions of 1..n, deterministic order.
std::vector<Ranking> all_rankings(int n);

}  // namespace posvote
