#include "posvote/birkhoff.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace posvote {

RatMatrix evaluate_combination(const PermCombination& combo, int n) {
    RatMatrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (const auto& term : combo) {
        if (term.perm.n() != n) {
            throw std::invalid_argument("evaluate_combination: size mismatch");
        }
        for (int j = 1; j <= n; ++j) {
            out.at(static_cast<std::size_t>(term.perm.at(j) - 1),
                   static_cast<std::size_t>(j - 1)) += term.coeff;
        }
    }
    return out;
}

bool is_doubly_stochastic(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("is_doubly_stochastic: non-square input");
    if (m.rows() == 0) return false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).sign() < 0) return false;
        }
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m.row_sum(i) != Rational(1) || m.col_sum(i) != Rational(1)) return false;
    }
    return true;
}

RatMatrix ShiftScale::undo(const RatMatrix& p) const {
    std::size_t n = p.rows();
    if (is_constant_matrix) {
        return RatMatrix::constant(n, row_sum / Rational(static_cast<long>(n)));
    }
    RatMatrix s = p;
    s *= Rational(1) / scale;
    return s + RatMatrix::constant(n, m_min);
}

std::pair<ShiftScale, RatMatrix> shift_scale_to_stochastic(const RatMatrix& s) {
    if (!s.is_square() || s.rows() == 0) {
        throw std::invalid_argument("shift_scale_to_stochastic: matrix must be square");
    }
    std::size_t n = s.rows();
    Rational t = s.row_sum(0);
    for (std::size_t i = 0; i < n; ++i) {
        if (s.row_sum(i) != t || s.col_sum(i) != t) {
            throw std::invalid_argument(
                "shift_scale_to_stochastic: row/column sums are not all equal");
        }
    }
    if (s.all_entries_equal()) {
        ShiftScale rec{s.at(0, 0), t, Rational(0), true};
        return {rec, RatMatrix::constant(n, Rational(1, static_cast<long>(n)))};
    }
    Rational m = s.min_entry();
    Rational denom = t - Rational(static_cast<long>(n)) * m;  // > 0 unless constant
    ShiftScale rec{m, t, Rational(1) / denom, false};
    RatMatrix p = s - RatMatrix::constant(n, m);
    p *= rec.scale;
    return {rec, p};
}

namespace {

// Kuhn's augmenting-path matching on the positive-entry bipartite graph.
// Rows and candidate columns are tried in ascending order, so the chosen
// matching is reproducible run to run.
struct SupportMatcher {
    const RatMatrix& w;
    std::vector<int> row_of_col;  // matched row per column, -1 if free
    std::vector<bool> visited;

    explicit SupportMatcher(const RatMatrix& m)
        : w(m), row_of_col(m.cols(), -1), visited(m.cols(), false) {}

    bool augment(std::size_t r) {
        for (std::size_t c = 0; c < w.cols(); ++c) {
            if (visited[c] || w.at(r, c).sign() <= 0) continue;
            visited[c] = true;
            if (row_of_col[c] < 0 || augment(static_cast<std::size_t>(row_of_col[c]))) {
                row_of_col[c] = static_cast<int>(r);
                return true;
            }
        }
        return false;
    }

    bool perfect() {
        for (std::size_t r = 0; r < w.rows(); ++r) {
            visited.assign(w.cols(), false);
            if (!augment(r)) return false;
        }
        return true;
    }
};

std::size_t support_size(const RatMatrix& m) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m.at(i, j).is_zero()) ++s;
        }
    }
    return s;
}

// Caratheodory step: while more terms remain than the affine dimension
// allows, cancel an affine dependency among the permutation matrices,
// sliding coefficients until one hits zero. Exact, preserves the sum.
void reduce_combination(PermCombination& terms, int n, std::size_t max_terms) {
    while (terms.size() > max_terms) {
        std::size_t t = terms.size();
        RatMatrix a(static_cast<std::size_t>(n * n) + 1, t);
        for (std::size_t k = 0; k < t; ++k) {
            RatMatrix r = terms[k].perm.matrix();
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    a.at(static_cast<std::size_t>(i * n + j), k) =
                        r.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                }
            }
            a.at(static_cast<std::size_t>(n * n), k) = 1;
        }
        auto mu = nullspace_vector(a);
        if (!mu) {
            throw std::logic_error("bvn_decompose: expected affine dependency not found");
        }
        bool has_positive = false;
        for (const auto& x : *mu) {
            if (x.sign() > 0) {
                has_positive = true;
                break;
            }
        }
        if (!has_positive) *mu *= Rational(-1);
        bool first = true;
        Rational theta;
        for (std::size_t k = 0; k < t; ++k) {
            if ((*mu)[k].sign() <= 0) continue;
            Rational ratio = terms[k].coeff / (*mu)[k];
            if (first || ratio < theta) {
                theta = ratio;
                first = false;
            }
        }
        PermCombination next;
        next.reserve(t - 1);
        for (std::size_t k = 0; k < t; ++k) {
            Rational c = terms[k].coeff - theta * (*mu)[k];
            if (!c.is_zero()) next.push_back({terms[k].perm, c});
        }
        terms = std::move(next);
    }
}

void sort_terms(PermCombination& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const PermTerm& a, const PermTerm& b) { return a.perm < b.perm; });
}

}  // namespace

PermCombination bvn_decompose(const RatMatrix& p) {
    if (!is_doubly_stochastic(p)) {
        throw std::invalid_argument("bvn_decompose: input is not doubly stochastic");
    }
    const int n = static_cast<int>(p.rows());
    RatMatrix work = p;
    PermCombination terms;
    std::size_t support = support_size(work);
    // Each pass zeroes at least one entry, so this never loops past the
    // support of the input.
    while (support > 0) {
        SupportMatcher matcher(work);
        if (!matcher.perfect()) {
            throw std::logic_error("bvn_decompose: support lost its perfect matching");
        }
        std::vector<int> word(static_cast<std::size_t>(n));
        for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c) {
            word[c] = matcher.row_of_col[c] + 1;
        }
        Permutation sigma{std::vector<int>(word)};
        Rational coeff = work.at(static_cast<std::size_t>(word[0] - 1), 0);
        for (std::size_t c = 1; c < static_cast<std::size_t>(n); ++c) {
            const Rational& e = work.at(static_cast<std::size_t>(word[c] - 1), c);
            if (e < coeff) coeff = e;
        }
        for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c) {
            work.at(static_cast<std::size_t>(word[c] - 1), c) -= coeff;
        }
        terms.push_back({std::move(sigma), coeff});
        std::size_t next_support = support_size(work);
        if (next_support >= support) {
            throw std::logic_error("bvn_decompose: support did not shrink");
        }
        support = next_support;
    }
    std::size_t bound = static_cast<std::size_t>((n - 1) * (n - 1)) + 1;
    bool has_zero = support_size(p) < static_cast<std::size_t>(n * n);
    if (has_zero && n >= 3) bound -= 1;
    reduce_combination(terms, n, bound);
    sort_terms(terms);
    return terms;
}

PermCombination expand_in_permutations(const RatMatrix& s) {
    if (!s.is_square() || s.rows() == 0) {
        throw std::invalid_argument("expand_in_permutations: matrix must be square");
    }
    const int n = static_cast<int>(s.rows());
    Rational t = s.row_sum(0);
    for (std::size_t i = 0; i < s.rows(); ++i) {
        if (s.row_sum(i) != t || s.col_sum(i) != t) {
            throw std::invalid_argument(
                "expand_in_permutations: row/column sums are not all equal");
        }
    }

    std::map<std::uint64_t, PermTerm> merged;
    auto add = [&](const Permutation& sigma, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = merged.try_emplace(sigma.rank(), PermTerm{sigma, c});
        if (!inserted) it->second.coeff += c;
    };

    if (s.all_entries_equal()) {
        Rational per_perm = s.at(0, 0);  // s = (t/n) J and J splits into n shifts
        for (const auto& sigma : cyclic_permutations(n)) add(sigma, per_perm);
    } else {
        Rational m = s.min_entry();
        auto [rec, p] = shift_scale_to_stochastic(s);
        Rational weight = Rational(1) / rec.scale;  // t - n m
        for (const auto& term : bvn_decompose(p)) add(term.perm, weight * term.coeff);
        if (!m.is_zero()) {
            for (const auto& sigma : cyclic_permutations(n)) add(sigma, m);
        }
    }

    PermCombination out;
    out.reserve(merged.size());
    for (auto& [rank, term] : merged) {
        if (!term.coeff.is_zero()) out.push_back(std::move(term));
    }
    return out;
}

std::vector<Permutation> cyclic_permutations(int n) {
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int shift = 0; shift < n; ++shift) {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = (j + shift) % n + 1;
        out.emplace_back(std::move(w));
    }
    return out;
}

std::vector<RatMatrix> mn_basis(int n) {
    if (n < 2) throw std::invalid_argument("mn_basis: n must be at least 2");
    std::vector<RatMatrix> basis;
    basis.reserve(static_cast<std::size_t>((n - 1) * (n - 1)) + 1);
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            if (i == j) continue;
            basis.push_back(Permutation::from_cycle(n, {i, j, n}).matrix());
        }
    }
    for (int i = 1; i < n; ++i) {
        basis.push_back(Permutation::from_cycle(n, {i, n}).matrix());
    }
    basis.push_back(RatMatrix::identity(static_cast<std::size_t>(n)));
    return basis;
}

RatMatrix b_matrix(int n, int i, int j) {
    if (i < 1 || i >= n || j < 1 || j >= n) {
        throw std::invalid_argument("b_matrix: indices must lie in 1..n-1");
    }
    RatMatrix b(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    b.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) += 1;
    b.at(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 1)) += 1;
    b.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(n - 1)) -= 1;
    b.at(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(j - 1)) -= 1;
    return b;
}

}  // namespace posvote
