// Constructive paradox machinery: profiles realizing prescribed
// (weight -> result) pairs, a profile whose weight choices realize every
// ranking that does not place candidate 1 last, dominance rescaling of
// weights, and the prefix-sum cyclic shift.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "posvote/linalg.hpp"
#include "posvote/voting.hpp"

namespace posvote {

// n-1 weighting vectors (linearly independent, in Wbar) paired with the
// sum-zero results each one must produce.
struct TargetSpec {
    std::vector<WeightVector> weights;
    std::vector<RatVector> results;

    int n() const { return weights.empty() ? 0 : static_cast<int>(weights[0].dim()); }
    void validate() const;  // throws std::invalid_argument
};

// The unique matrix with Q w_k = r_k for all targets and Q 1 = 1; its
// columns also sum to 1. Throws std::domain_error when the weights are
// dependent (singular system).
RatMatrix construct_q(const TargetSpec& spec);

// A profile whose tally matrix is construct_q(spec), so that weight w_k
// elects result r_k exactly, for every k.
Profile synthesize_profile(const TargetSpec& spec);

// A different profile with the same tally matrix: adds a nonzero element
// of the kernel of p -> Q_p, chosen from the seed. Exhibits the
// "infinitely many profiles" freedom.
Profile synthesize_alternate_profile(const TargetSpec& spec, std::uint64_t seed);

// Smallest documented eta so that eta * w + x keeps strictly decreasing
// entries for every eta >= eta0 (returns 3 max|x| / min-gap(w); zero when
// x is the zero vector, in which case any positive eta works).
Rational scale_to_dominate(const WeightVector& w, const RatVector& x);

struct SaariCertificate {
    Profile profile;
    // Keyed by every strict ranking pi with pi(n) != 1; each stored
    // weight tallies the profile into exactly C_pi.
    std::map<Permutation, WeightVector> weight_of;
};

// The lower-bound construction: a fixed profile, plus a per-ranking
// weight recipe covering all (n-1) * (n-1)! strict rankings that do not
// place candidate 1 last.
class SaariConstruction {
public:
    explicit SaariConstruction(int n);
    SaariConstruction(int n, std::vector<WeightVector> base_weights);

    int n() const { return n_; }
    const Profile& profile() const { return profile_; }
    const TallyMatrix& tally_matrix() const { return q_; }
    // Base weights after the dominance rescaling of the first one.
    const std::vector<WeightVector>& base_weights() const { return base_; }

    // Strict weight whose tally realizes pi; requires pi(n) != 1.
    WeightVector weight_for(const Permutation& pi) const;

    // All coverable rankings with verified weights. Verification failure
    // is a logic error (the construction guarantees it).
    SaariCertificate certificate() const;

private:
    int n_;
    std::vector<WeightVector> base_;
    Profile profile_;
    TallyMatrix q_;
};

// Convenience: default-base construction, fully verified certificate.
SaariCertificate saari_profile(int n);

// Index m maximizing the prefix sums of h along `order` (first maximizer);
// the rotation of `order` starting after position m has every proper
// prefix sum <= 0. Requires sum(h) == 0.
int nonpositive_prefix_shift(const RatVector& h, const Permutation& order);

}  // namespace posvote
