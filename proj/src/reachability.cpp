#include "posvote/reachability.hpp"

#include <random>
#include <stdexcept>

namespace posvote {

std::vector<WeightVector> weight_basis(int n) {
    if (n < 2) throw std::invalid_argument("weight_basis: n must be at least 2");
    std::vector<WeightVector> basis;
    basis.reserve(static_cast<std::size_t>(n - 1));
    for (int k = 1; k < n; ++k) {
        RatVector v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            v[static_cast<std::size_t>(i)] =
                i < n - k ? Rational(k, n) : Rational(k - n, n);
        }
        basis.emplace_back(std::move(v));
    }
    return basis;
}

std::vector<RatVector> prefix_sums(const TallyMatrix& q) {
    std::vector<RatVector> t;
    t.reserve(static_cast<std::size_t>(q.n - 1));
    RatVector acc(static_cast<std::size_t>(q.n));
    for (int k = 0; k + 1 < q.n; ++k) {
        acc += q.m.col(static_cast<std::size_t>(k));
        t.push_back(acc);
    }
    return t;
}

FaceReachability is_face_reachable(const std::vector<RatVector>& t, const Ranking& target) {
    if (t.empty()) throw std::invalid_argument("is_face_reachable: no t vectors");
    std::size_t n = t[0].dim();
    if (target.n() != static_cast<int>(n)) {
        throw std::invalid_argument("is_face_reachable: ranking size mismatch");
    }
    const std::size_t nb = t.size();  // n - 1 simplex coefficients
    const bool strict_gaps = target.blocks().size() > 1;
    const std::size_t nvars = nb + (strict_gaps ? 1 : 0);  // b's, then epsilon

    std::vector<RatVector> rows;
    std::vector<Relation> rels;
    std::vector<Rational> rhs;

    RatVector simplex_row(nvars);
    for (std::size_t k = 0; k < nb; ++k) simplex_row[k] = 1;
    rows.push_back(std::move(simplex_row));
    rels.push_back(Relation::Eq);
    rhs.emplace_back(1);

    auto score_diff_row = [&](int cand_a, int cand_b) {
        RatVector row(nvars);
        for (std::size_t k = 0; k < nb; ++k) {
            row[k] = t[k][static_cast<std::size_t>(cand_a - 1)] -
                     t[k][static_cast<std::size_t>(cand_b - 1)];
        }
        return row;
    };

    for (const auto& block : target.blocks()) {
        for (std::size_t i = 1; i < block.size(); ++i) {
            rows.push_back(score_diff_row(block[0], block[i]));
            rels.push_back(Relation::Eq);
            rhs.emplace_back(0);
        }
    }
    for (std::size_t l = 0; l + 1 < target.blocks().size(); ++l) {
        RatVector row = score_diff_row(target.blocks()[l][0], target.blocks()[l + 1][0]);
        row[nb] = -1;  // gap - epsilon >= 0
        rows.push_back(std::move(row));
        rels.push_back(Relation::GreaterEq);
        rhs.emplace_back(0);
    }

    LpProblem lp;
    lp.objective = RatVector(nvars);
    if (strict_gaps) lp.objective[nb] = 1;
    lp.constraints = RatMatrix(rows.size(), nvars);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < nvars; ++j) lp.constraints.at(i, j) = rows[i][j];
    }
    lp.relations = std::move(rels);
    lp.rhs = RatVector(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) lp.rhs[i] = rhs[i];
    lp.bounds.assign(nvars, VarBound::NonNegative);
    if (strict_gaps) lp.bounds[nb] = VarBound::Free;

    LpResult res = simplex_max(lp);
    if (res.status == LpStatus::Infeasible) return {};
    if (res.status == LpStatus::Unbounded) {
        throw std::logic_error("is_face_reachable: LP unexpectedly unbounded");
    }
    if (strict_gaps && res.objective_value.sign() <= 0) return {};
    RatVector witness(nb);
    for (std::size_t k = 0; k < nb; ++k) witness[k] = res.x[k];
    return {true, std::move(witness)};
}

namespace {

void ordered_partitions_rec(int n, std::uint32_t remaining,
                            std::vector<std::vector<int>>& acc,
                            std::vector<Ranking>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    // Iterate nonempty submasks of `remaining` in ascending mask order.
    for (std::uint32_t sub = (remaining - 1) & remaining;;
         sub = (sub - 1) & remaining) {
        std::uint32_t block_mask = remaining ^ sub;  // take the complement as the block
        std::vector<int> block;
        for (int c = 0; c < n; ++c) {
            if (block_mask & (1u << c)) block.push_back(c + 1);
        }
        acc.push_back(std::move(block));
        ordered_partitions_rec(n, sub, acc, out);
        acc.pop_back();
        if (sub == 0) break;
    }
}

}  // namespace

std::vector<Ranking> all_rankings(int n) {
    if (n < 1 || n > 5) {
        throw std::invalid_argument("all_rankings: supported only for n <= 5");
    }
    std::vector<Ranking> out;
    std::vector<std::vector<int>> acc;
    ordered_partitions_rec(n, (1u << n) - 1, acc, out);
    return out;
}

ReachabilityReport enumerate_reachable(const TallyMatrix& q, bool strict_only) {
    if (q.n > Profile::kMaxCandidates) {
        throw std::invalid_argument("enumerate_reachable: too many candidates");
    }
    ReachabilityReport report;
    report.n = q.n;
    report.t = prefix_sums(q);
    report.zero_total = q.total.is_zero();
    report.strict_bound = factorial(q.n) - factorial(q.n - 1);

    std::vector<Ranking> targets;
    if (strict_only) {
        for (std::uint64_t ell = 1; ell <= factorial(q.n); ++ell) {
            targets.emplace_back(perm_unrank(q.n, ell));
        }
    } else {
        targets = all_rankings(q.n);
    }

    for (auto& target : targets) {
        FaceReachability fr = is_face_reachable(report.t, target);
        if (!fr.reachable) {
            ++report.unreachable_count;
            continue;
        }
        if (target.is_strict()) ++report.strict_reachable_count;
        WeightVector w = weight_from_coefficients(q.n, fr.b);
        report.reachable.push_back({std::move(target), std::move(fr.b), std::move(w)});
    }

    if (report.strict_reachable_count > report.strict_bound) {
        throw std::logic_error("enumerate_reachable: strict count exceeds n! - (n-1)!");
    }
    report.bound_attained = report.strict_reachable_count == report.strict_bound;
    return report;
}

WeightVector weight_from_coefficients(int n, const RatVector& b) {
    if (b.dim() != static_cast<std::size_t>(n - 1)) {
        throw std::invalid_argument("weight_from_coefficients: b must have n-1 entries");
    }
    bool any_positive = false;
    for (const auto& c : b) {
        if (c.sign() < 0) {
            throw std::invalid_argument("weight_from_coefficients: b must be nonnegative");
        }
        if (c.sign() > 0) any_positive = true;
    }
    if (!any_positive) {
        throw std::invalid_argument("weight_from_coefficients: b must be nonzero");
    }
    auto basis = weight_basis(n);
    RatVector w(static_cast<std::size_t>(n));
    for (std::size_t k = 1; k <= b.dim(); ++k) {
        w += b[k - 1] * basis[static_cast<std::size_t>(n - 1 - k)].vec();  // v_{n-k}
    }
    return WeightVector(std::move(w));
}

std::set<Ranking> random_explore(const TallyMatrix& q, std::uint64_t trials,
                                 std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("random_explore: trials must be positive");
    auto t = prefix_sums(q);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(0, 1000000);
    std::set<Ranking> seen;
    for (std::uint64_t i = 0; i < trials; ++i) {
        std::vector<long> draw(t.size());
        long total = 0;
        do {
            total = 0;
            for (auto& d : draw) {
                d = dist(rng);
                total += d;
            }
        } while (total == 0);
        RatVector y(static_cast<std::size_t>(q.n));
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (draw[k] == 0) continue;
            y += Rational(draw[k], total) * t[k];
        }
        seen.insert(face_of(y));
    }
    return seen;
}

}  // namespace posvote
