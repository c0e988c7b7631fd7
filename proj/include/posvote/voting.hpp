// Profiles, the tally map r = Q_p w, weighting vectors (weakly decreasing,
// sum zero), and societal rankings read off as ordered set partitions of
// the candidates. Vote counts are arbitrary rationals: negative and
// fractional ballots are first-class.
#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "posvote/linalg.hpp"
#include "posvote/permutation.hpp"

namespace posvote {

using ResultsVector = RatVector;

// A point-assignment vector in the closed cone Wbar: entries weakly
// decreasing and summing to zero. Strict members (all gaps positive)
// never produce ties from strict preference orders alone.
class WeightVector {
public:
    explicit WeightVector(RatVector w);

    std::size_t dim() const { return w_.dim(); }
    const RatVector& vec() const { return w_; }
    const Rational& operator[](std::size_t i) const { return w_[i]; }

    bool is_strict() const;
    // Smallest gap between successive entries; zero iff not strict.
    Rational min_gap() const;

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.w_ == b.w_;
    }

private:
    RatVector w_;
};

// Subtracts the mean from a weakly decreasing vector, landing in Wbar.
// The induced ranking is unchanged for every profile.
WeightVector project_sum_zero(const RatVector& y);

// An ordered set partition of the candidates: blocks[k] is the set tied
// for (k+1)-th place. All blocks singleton <=> a strict ranking.
class Ranking {
public:
    explicit Ranking(std::vector<std::vector<int>> blocks);
    explicit Ranking(const Permutation& strict);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    bool is_strict() const;
    Permutation as_permutation() const;  // throws unless strict

    friend bool operator==(const Ranking& a, const Ranking& b) {
        return a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const Ranking& a, const Ranking& b) { return !(a == b); }
    friend bool operator<(const Ranking& a, const Ranking& b) {
        return a.blocks_ < b.blocks_;
    }

private:
    int n_;
    std::vector<std::vector<int>> blocks_;  // candidates ascending within a block
};

// Candidates grouped by exactly equal score, blocks ordered by
// strictly decreasing score.
Ranking face_of(const ResultsVector& r);

// Rational vote counts indexed by the n! lexicographically ranked
// permutations. Dense storage; n is capped at 8.
class Profile {
public:
    static constexpr int kMaxCandidates = 8;

    Profile(int n, RatVector counts);  // counts.dim() must be n!
    static Profile zero(int n);
    static Profile from_ballots(int n,
                                const std::vector<std::pair<Permutation, Rational>>& ballots);

    int n() const { return n_; }
    std::uint64_t size() const { return counts_.dim(); }
    const RatVector& counts() const { return counts_; }
    const Rational& count(std::uint64_t ell) const { return counts_[ell - 1]; }  // 1-based
    const Rational& count(const Permutation& sigma) const { return count(sigma.rank()); }
    Rational& count_mut(std::uint64_t ell) { return counts_[ell - 1]; }
    Rational total() const { return counts_.sum(); }

    // Sparse view of the nonzero ballots, in rank order.
    std::vector<std::pair<Permutation, Rational>> nonzero_ballots() const;

    friend bool operator==(const Profile& a, const Profile& b) {
        return a.n_ == b.n_ && a.counts_ == b.counts_;
    }

private:
    int n_;
    RatVector counts_;
};

// Q_p with its common row/column sum (the total ballot count).
struct TallyMatrix {
    int n = 0;
    RatMatrix m;
    Rational total;

    // Validates equal row and column sums.
    static TallyMatrix from_matrix(RatMatrix q);
};

// Entry (i,j) counts the voters ranking candidate i in place j.
TallyMatrix build_tally_matrix(const Profile& p);

ResultsVector tally(const TallyMatrix& q, const WeightVector& w);

// R_sigma w: the points candidate i receives from one ballot sigma.
RatVector permute_weight(const Permutation& sigma, const WeightVector& w);

// Shift and rescale into nonnegative integer counts; every weighting
// vector in Wbar sees the same face.
Profile to_nonneg_integer_profile(const Profile& p);

// A nonnegative unit-mass profile whose tally matrix is the shifted and
// rescaled (doubly stochastic) version of Q_p; faces again agree.
Profile to_stochastic_profile(const Profile& p);

}  // namespace posvote
