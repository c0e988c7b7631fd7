// Birkhoff-von Neumann machinery: shift/scale row/column-constant
// matrices to doubly stochastic form, decompose doubly stochastic
// matrices into convex combinations of permutation matrices, and expand
// arbitrary equal-sum matrices in the permutation-matrix spanning set.
#pragma once

#include <utility>
#include <vector>

#include "posvote/linalg.hpp"
#include "posvote/permutation.hpp"

namespace posvote {

struct PermTerm {
    Permutation perm;
    Rational coeff;
};

// Terms are kept in lexicographic-rank order with distinct permutations.
using PermCombination = std::vector<PermTerm>;

RatMatrix evaluate_combination(const PermCombination& combo, int n);

bool is_doubly_stochastic(const RatMatrix& m);

// Record of the affine normalization P = scale * (S - m_min * J).
struct ShiftScale {
    Rational m_min;     // minimum entry of S
    Rational row_sum;   // common row/column sum t
    Rational scale;     // (t - n * m_min)^-1, unused for constant matrices
    bool is_constant_matrix = false;

    // Reconstructs S from the normalized matrix.
    RatMatrix undo(const RatMatrix& p) const;
};

// Requires all row and column sums equal; the all-equal-entries matrix
// maps to (1/n) J with the flag set.
std::pair<ShiftScale, RatMatrix> shift_scale_to_stochastic(const RatMatrix& s);

// Convex combination of permutation matrices reconstructing p exactly.
// Term count is at most (n-1)^2 + 1, and at most (n-1)^2 when p has a
// zero entry (n >= 3). Greedy matching-and-subtract, followed by an
// exact affine (Caratheodory) reduction if the greedy pass overshoots.
PermCombination bvn_decompose(const RatMatrix& p);

// Linear (possibly negative) combination of permutation matrices equal
// to s; requires equal row/column sums.
PermCombination expand_in_permutations(const RatMatrix& s);

// The n cyclic shifts; their permutation matrices sum to J.
std::vector<Permutation> cyclic_permutations(int n);

// The (n-1)^2 + 1 permutation matrices {R_(i,j,n)} u {R_(i,n)} u {I}
// (cycle notation) that span the equal-row/column-sum matrices.
std::vector<RatMatrix> mn_basis(int n);

// +1 at (i,j) and (n,n), -1 at (i,n) and (n,j); 1 <= i,j <= n-1.
RatMatrix b_matrix(int n, int i, int j);

}  // namespace posvote
