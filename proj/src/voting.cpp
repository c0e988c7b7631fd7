#include "posvote/voting.hpp"

#include <algorithm>
#include <stdexcept>

#include "posvote/birkhoff.hpp"

namespace posvote {

WeightVector::WeightVector(RatVector w) : w_(std::move(w)) {
    if (w_.dim() < 2) throw std::invalid_argument("WeightVector: need at least 2 entries");
    for (std::size_t i = 0; i + 1 < w_.dim(); ++i) {
        if (w_[i] < w_[i + 1]) {
            throw std::invalid_argument("WeightVector: entries must be weakly decreasing");
        }
    }
    if (!w_.sum().is_zero()) {
        throw std::invalid_argument("WeightVector: entries must sum to zero");
    }
}

bool WeightVector::is_strict() const {
    for (std::size_t i = 0; i + 1 < w_.dim(); ++i) {
        if (w_[i] == w_[i + 1]) return false;
    }
    return true;
}

Rational WeightVector::min_gap() const {
    Rational m = w_[0] - w_[1];
    for (std::size_t i = 1; i + 1 < w_.dim(); ++i) {
        Rational g = w_[i] - w_[i + 1];
        if (g < m) m = g;
    }
    return m;
}

WeightVector project_sum_zero(const RatVector& y) {
    for (std::size_t i = 0; i + 1 < y.dim(); ++i) {
        if (y[i] < y[i + 1]) {
            throw std::invalid_argument("project_sum_zero: input not weakly decreasing");
        }
    }
    Rational mean = y.sum() / Rational(static_cast<long>(y.dim()));
    RatVector w(y.dim());
    for (std::size_t i = 0; i < y.dim(); ++i) w[i] = y[i] - mean;
    return WeightVector(std::move(w));
}

Ranking::Ranking(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    int count = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("Ranking: empty block");
        std::sort(b.begin(), b.end());
        count += static_cast<int>(b.size());
    }
    n_ = count;
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (const auto& b : blocks_) {
        for (int c : b) {
            if (c < 1 || c > n_ || seen[static_cast<std::size_t>(c - 1)]) {
                throw std::invalid_argument("Ranking: blocks do not partition 1..n");
            }
            seen[static_cast<std::size_t>(c - 1)] = true;
        }
    }
}

Ranking::Ranking(const Permutation& strict) : n_(strict.n()) {
    blocks_.reserve(static_cast<std::size_t>(n_));
    for (int k = 1; k <= n_; ++k) blocks_.push_back({strict.at(k)});
}

bool Ranking::is_strict() const {
    return blocks_.size() == static_cast<std::size_t>(n_);
}

Permutation Ranking::as_permutation() const {
    if (!is_strict()) throw std::invalid_argument("Ranking: not strict");
    std::vector<int> w;
    w.reserve(blocks_.size());
    for (const auto& b : blocks_) w.push_back(b[0]);
    return Permutation(std::move(w));
}

Ranking face_of(const ResultsVector& r) {
    std::vector<int> order(r.dim());
    for (std::size_t i = 0; i < r.dim(); ++i) order[i] = static_cast<int>(i) + 1;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return r[static_cast<std::size_t>(a - 1)] > r[static_cast<std::size_t>(b - 1)];
    });
    std::vector<std::vector<int>> blocks;
    for (int c : order) {
        if (!blocks.empty() &&
            r[static_cast<std::size_t>(c - 1)] ==
                r[static_cast<std::size_t>(blocks.back()[0] - 1)]) {
            blocks.back().push_back(c);
        } else {
            blocks.push_back({c});
        }
    }
    return Ranking(std::move(blocks));
}

Profile::Profile(int n, RatVector counts) : n_(n), counts_(std::move(counts)) {
    if (n < 3 || n > kMaxCandidates) {
        throw std::invalid_argument("Profile: candidate count must be in 3..8");
    }
    if (counts_.dim() != factorial(n)) {
        throw std::invalid_argument("Profile: counts dimension must be n!");
    }
}

Profile Profile::zero(int n) {
    if (n < 3 || n > kMaxCandidates) {
        throw std::invalid_argument("Profile: candidate count must be in 3..8");
    }
    return Profile(n, RatVector(factorial(n)));
}

Profile Profile::from_ballots(int n,
                              const std::vector<std::pair<Permutation, Rational>>& ballots) {
    Profile p = zero(n);
    for (const auto& [sigma, cnt] : ballots) {
        if (sigma.n() != n) throw std::invalid_argument("from_ballots: ranking size mismatch");
        p.count_mut(sigma.rank()) += cnt;
    }
    return p;
}

std::vector<std::pair<Permutation, Rational>> Profile::nonzero_ballots() const {
    std::vector<std::pair<Permutation, Rational>> out;
    for (std::uint64_t ell = 1; ell <= size(); ++ell) {
        if (!count(ell).is_zero()) out.emplace_back(perm_unrank(n_, ell), count(ell));
    }
    return out;
}

TallyMatrix TallyMatrix::from_matrix(RatMatrix q) {
    if (!q.is_square() || q.rows() == 0) {
        throw std::invalid_argument("TallyMatrix: matrix must be square and nonempty");
    }
    Rational t = q.row_sum(0);
    for (std::size_t i = 0; i < q.rows(); ++i) {
        if (q.row_sum(i) != t || q.col_sum(i) != t) {
            throw std::invalid_argument("TallyMatrix: row/column sums are not all equal");
        }
    }
    return TallyMatrix{static_cast<int>(q.rows()), std::move(q), t};
}

TallyMatrix build_tally_matrix(const Profile& p) {
    std::size_t n = static_cast<std::size_t>(p.n());
    RatMatrix q(n, n);
    for (std::uint64_t ell = 1; ell <= p.size(); ++ell) {
        const Rational& c = p.count(ell);
        if (c.is_zero()) continue;
        Permutation sigma = perm_unrank(p.n(), ell);
        for (int j = 1; j <= p.n(); ++j) {
            q.at(static_cast<std::size_t>(sigma.at(j) - 1), static_cast<std::size_t>(j - 1)) += c;
        }
    }
    return TallyMatrix{p.n(), std::move(q), p.total()};
}

ResultsVector tally(const TallyMatrix& q, const WeightVector& w) {
    if (w.dim() != static_cast<std::size_t>(q.n)) {
        throw std::invalid_argument("tally: weight dimension mismatch");
    }
    return mat_vec(q.m, w.vec());
}

RatVector permute_weight(const Permutation& sigma, const WeightVector& w) {
    return permute_entries(sigma, w.vec());
}

Profile to_nonneg_integer_profile(const Profile& p) {
    Rational x = p.counts()[0];
    for (const auto& c : p.counts()) {
        if (c < x) x = c;
    }
    mpz_class d = common_denominator(p.counts().begin(), p.counts().end());
    Rational scale{mpq_class(d)};
    RatVector out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = scale * (p.counts()[i] - x);
    return Profile(p.n(), std::move(out));
}

Profile to_stochastic_profile(const Profile& p) {
    TallyMatrix q = build_tally_matrix(p);
    RatMatrix stochastic;
    if (q.m.all_entries_equal()) {
        stochastic = RatMatrix::constant(q.m.rows(), Rational(1, static_cast<long>(q.m.rows())));
    } else {
        stochastic = shift_scale_to_stochastic(q.m).second;
    }
    PermCombination combo = bvn_decompose(stochastic);
    Profile out = Profile::zero(p.n());
    for (const auto& term : combo) out.count_mut(term.perm.rank()) += term.coeff;
    return out;
}

}  // namespace posvote
