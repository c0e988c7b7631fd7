#include "posvote/paradox.hpp"

#include <random>
#include <stdexcept>

#include "posvote/birkhoff.hpp"
#include "posvote/reachability.hpp"

namespace posvote {

namespace {

Rational binom2(int n) { return Rational(static_cast<long>(n) * (n - 1) / 2); }

RatMatrix columns_with_ones_prefix(const std::vector<RatVector>& cols, std::size_t n) {
    RatMatrix m(n, cols.size() + 1);
    for (std::size_t i = 0; i < n; ++i) m.at(i, 0) = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        for (std::size_t i = 0; i < n; ++i) m.at(i, k + 1) = cols[k][i];
    }
    return m;
}

}  // namespace

void TargetSpec::validate() const {
    if (weights.empty()) throw std::invalid_argument("TargetSpec: no weights");
    std::size_t n = weights[0].dim();
    if (weights.size() != n - 1 || results.size() != n - 1) {
        throw std::invalid_argument("TargetSpec: need exactly n-1 weights and n-1 results");
    }
    RatMatrix wmat(n, n - 1);
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (weights[k].dim() != n) throw std::invalid_argument("TargetSpec: weight dim mismatch");
        for (std::size_t i = 0; i < n; ++i) wmat.at(i, k) = weights[k][i];
    }
    for (const auto& r : results) {
        if (r.dim() != n) throw std::invalid_argument("TargetSpec: result dim mismatch");
        if (!r.sum().is_zero()) {
            throw std::invalid_argument("TargetSpec: results must sum to zero");
        }
    }
    if (mat_rank(wmat) != n - 1) {
        throw std::invalid_argument("TargetSpec: weights must be linearly independent");
    }
}

RatMatrix construct_q(const TargetSpec& spec) {
    spec.validate();
    std::size_t n = static_cast<std::size_t>(spec.n());
    std::vector<RatVector> wcols, rcols;
    for (const auto& w : spec.weights) wcols.push_back(w.vec());
    RatMatrix f = columns_with_ones_prefix(wcols, n);
    RatMatrix r = columns_with_ones_prefix(spec.results, n);
    auto f_inv = mat_inverse(f);
    if (!f_inv) throw std::domain_error("construct_q: weight matrix is singular");
    RatMatrix q = mat_mul(r, *f_inv);

    // Recheck both guarantees of the construction on every call.
    for (std::size_t k = 0; k < spec.weights.size(); ++k) {
        if (mat_vec(q, spec.weights[k].vec()) != spec.results[k]) {
            throw std::logic_error("construct_q: target equation violated");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (q.row_sum(i) != Rational(1) || q.col_sum(i) != Rational(1)) {
            throw std::logic_error("construct_q: row/column sums differ from 1");
        }
    }
    return q;
}

Profile synthesize_profile(const TargetSpec& spec) {
    RatMatrix q = construct_q(spec);
    PermCombination combo = expand_in_permutations(q);
    Profile p = Profile::zero(spec.n());
    for (const auto& term : combo) p.count_mut(term.perm.rank()) += term.coeff;
    return p;
}

Profile synthesize_alternate_profile(const TargetSpec& spec, std::uint64_t seed) {
    Profile p = synthesize_profile(spec);
    int n = p.n();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, n);
    std::uniform_int_distribution<long> mag(1, 9);

    // Two disjoint permutation covers of J differ by a kernel element of
    // p -> Q_p: the cyclic shifts, and the shifts precomposed with a
    // transposition.
    int a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    Rational c(mag(rng), mag(rng));
    Permutation tau = Permutation::from_cycle(n, {a, b});
    for (const auto& sigma : cyclic_permutations(n)) {
        p.count_mut(sigma.rank()) += c;
        std::vector<int> composed(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) {
            composed[static_cast<std::size_t>(j - 1)] = sigma.at(tau.at(j));
        }
        p.count_mut(Permutation(std::move(composed)).rank()) -= c;
    }
    return p;
}

Rational scale_to_dominate(const WeightVector& w, const RatVector& x) {
    if (!w.is_strict()) {
        throw std::invalid_argument("scale_to_dominate: weight must be strictly decreasing");
    }
    if (x.dim() != w.dim() || !x.sum().is_zero()) {
        throw std::invalid_argument("scale_to_dominate: x must be sum-zero of matching dim");
    }
    Rational big = x.max_abs();
    if (big.is_zero()) return Rational(0);
    return Rational(3) * big / w.min_gap();
}

namespace {

std::vector<WeightVector> default_base_weights(int n) {
    // The Wbar cone generators made strict by adding Borda-style gaps.
    RatVector borda(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) borda[static_cast<std::size_t>(i)] = Rational(n - 1 - i);
    RatVector slope = project_sum_zero(borda).vec();
    std::vector<WeightVector> base;
    for (const auto& v : weight_basis(n)) base.emplace_back(v.vec() + slope);
    return base;
}

}  // namespace

SaariConstruction::SaariConstruction(int n) : SaariConstruction(n, default_base_weights(n)) {}

SaariConstruction::SaariConstruction(int n, std::vector<WeightVector> base_weights)
    : n_(n), base_(std::move(base_weights)), profile_(Profile::zero(3)) {
    if (n < 3) throw std::invalid_argument("SaariConstruction: n must be at least 3");
    if (base_.size() != static_cast<std::size_t>(n - 1)) {
        throw std::invalid_argument("SaariConstruction: need n-1 base weights");
    }
    for (const auto& w : base_) {
        if (w.dim() != static_cast<std::size_t>(n) || !w.is_strict()) {
            throw std::invalid_argument("SaariConstruction: base weights must be strict");
        }
    }

    // Rescale w1 until w1 - n*binom(n+1,2)*wk stays strict for all k >= 2;
    // weight_for relies on this headroom when it subtracts gamma * w_bn.
    Rational big_k = Rational(n) * binom2(n + 1);
    Rational eta(1);
    for (std::size_t k = 1; k < base_.size(); ++k) {
        Rational need = scale_to_dominate(base_[0], Rational(-1) * big_k * base_[k].vec());
        if (need > eta) eta = need;
    }
    base_[0] = WeightVector(eta * base_[0].vec());
    for (std::size_t k = 1; k < base_.size(); ++k) {
        WeightVector check(base_[0].vec() - big_k * base_[k].vec());
        if (!check.is_strict()) {
            throw std::logic_error("SaariConstruction: dominance rescaling failed");
        }
    }

    TargetSpec spec;
    spec.weights = base_;
    for (int k = 1; k < n; ++k) {
        RatVector f(static_cast<std::size_t>(n));
        f[static_cast<std::size_t>(k - 1)] = 1;
        f[static_cast<std::size_t>(k)] = -1;
        spec.results.push_back(std::move(f));
    }
    profile_ = synthesize_profile(spec);
    q_ = build_tally_matrix(profile_);
}

WeightVector SaariConstruction::weight_for(const Permutation& pi) const {
    if (pi.n() != n_) throw std::invalid_argument("weight_for: wrong number of candidates");
    int last = pi.at(n_);
    if (last == 1) {
        throw std::invalid_argument("weight_for: rankings placing candidate 1 last are not covered");
    }

    // Suffix sums w_kn = w_k + ... + w_{n-1}; each lies in W.
    std::vector<RatVector> suffix(static_cast<std::size_t>(n_));
    suffix[static_cast<std::size_t>(n_ - 1)] = base_.back().vec();
    for (int k = n_ - 2; k >= 1; --k) {
        suffix[static_cast<std::size_t>(k)] =
            base_[static_cast<std::size_t>(k - 1)].vec() + suffix[static_cast<std::size_t>(k + 1)];
    }

    RatVector w(static_cast<std::size_t>(n_));
    if (last == n_) {
        for (int k = 1; k < n_; ++k) {
            Rational beta(static_cast<long>(n_ - pi.place_of(k)));
            w += beta * suffix[static_cast<std::size_t>(k)];
        }
    } else {
        // Move candidate n to last place, build that weight, then pull n
        // back up by subtracting gamma * w_bn.
        int place_n = pi.place_of(n_);
        std::vector<int> moved;
        moved.reserve(static_cast<std::size_t>(n_));
        for (int k = 1; k <= n_; ++k) {
            if (pi.at(k) != n_) moved.push_back(pi.at(k));
        }
        moved.push_back(n_);
        w = weight_for(Permutation(std::move(moved))).vec();
        Rational gamma = binom2(n_) + Rational(n_ - place_n) + Rational(1, 2);
        w -= gamma * suffix[static_cast<std::size_t>(last)];
    }

    WeightVector out{std::move(w)};
    if (!out.is_strict()) {
        throw std::logic_error("weight_for: constructed weight is not strict");
    }
    return out;
}

SaariCertificate SaariConstruction::certificate() const {
    SaariCertificate cert{profile_, {}};
    for (std::uint64_t ell = 1; ell <= factorial(n_); ++ell) {
        Permutation pi = perm_unrank(n_, ell);
        if (pi.at(n_) == 1) continue;
        WeightVector w = weight_for(pi);
        if (face_of(tally(q_, w)) != Ranking(pi)) {
            throw std::logic_error("certificate: tally did not land in the prescribed chamber");
        }
        cert.weight_of.emplace(std::move(pi), std::move(w));
    }
    return cert;
}

SaariCertificate saari_profile(int n) { return SaariConstruction(n).certificate(); }

int nonpositive_prefix_shift(const RatVector& h, const Permutation& order) {
    if (order.n() != static_cast<int>(h.dim())) {
        throw std::invalid_argument("nonpositive_prefix_shift: dimension mismatch");
    }
    if (!h.sum().is_zero()) {
        throw std::invalid_argument("nonpositive_prefix_shift: h must sum to zero");
    }
    int best_m = 0;
    Rational best(0), prefix(0);
    for (int m = 1; m < order.n(); ++m) {
        prefix += h[static_cast<std::size_t>(order.at(m) - 1)];
        if (prefix > best) {
            best = prefix;
            best_m = m;
        }
    }
    return best_m;
}

}  // namespace posvote
