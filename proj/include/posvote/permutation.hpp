// Permutations of candidates 1..n in one-line notation: entry k is the
// candidate placed k-th. Lexicographic rank/unrank over one-line words
// gives the canonical indexing of ballots.
#pragma once

#include <cstdint>
#include <vector>

#include "posvote/linalg.hpp"

namespace posvote {

std::uint64_t factorial(int n);  // n <= 20

class Permutation {
public:
    // Validates that word is a bijection on 1..word.size().
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    // Applies a cycle (c1 c2 ... ck) to the identity: c1 -> c2 -> ... -> c1.
    static Permutation from_cycle(int n, const std::vector<int>& cycle);

    int n() const { return static_cast<int>(word_.size()); }
    // Candidate in place k (1-based).
    int at(int place) const { return word_[static_cast<std::size_t>(place - 1)]; }
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    // Place of a candidate, i.e. inverse image (1-based).
    int place_of(int candidate) const;

    // 1-based lexicographic rank among the n! one-line words.
    std::uint64_t rank() const;

    // Matrix R with R(i,j) = 1 iff candidate i sits in place j.
    RatMatrix matrix() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.word_ == b.word_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.word_ < b.word_;
    }

private:
    std::vector<int> word_;
};

// Inverse of Permutation::rank; ell in [1, n!].
Permutation perm_unrank(int n, std::uint64_t ell);

// Entry i of the result is v[sigma^-1(i)], i.e. R_sigma v.
RatVector permute_entries(const Permutation& sigma, const RatVector& v);

}  // namespace posvote
