#include "posvote/simplex.hpp"

#include <stdexcept>

namespace posvote {

void LpProblem::validate() const {
    if (objective.dim() == 0) throw std::invalid_argument("LpProblem: no variables");
    if (constraints.rows() != rhs.dim() || constraints.rows() != relations.size()) {
        throw std::invalid_argument("LpProblem: row count mismatch");
    }
    if (constraints.rows() > 0 && constraints.cols() != objective.dim()) {
        throw std::invalid_argument("LpProblem: column count mismatch");
    }
    if (bounds.size() != objective.dim()) {
        throw std::invalid_argument("LpProblem: bounds count mismatch");
    }
}

namespace {

// Dense simplex tableau. Row convention: for each constraint row i,
// T[i][basis[i]] == 1 and the column of basis[i] is zero elsewhere.
// Objective row obj satisfies z + sum_j obj[j] x_j == obj_rhs, so a
// column with obj[j] < 0 improves the (maximized) objective.
struct Tableau {
    std::size_t ncols = 0;
    std::vector<RatVector> rows;  // each of dim ncols + 1, last entry = rhs
    RatVector obj;                // dim ncols
    Rational obj_rhs;
    std::vector<std::size_t> basis;
    std::vector<bool> banned;  // columns excluded from entering (artificials in phase 2)

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = Rational(1) / rows[r][c];
        rows[r] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Rational f = rows[i][c];
            rows[i] -= f * rows[r];
        }
        if (!obj[c].is_zero()) {
            Rational f = obj[c];
            for (std::size_t j = 0; j < ncols; ++j) obj[j] -= f * rows[r][j];
            obj_rhs -= f * rows[r][ncols];
        }
        basis[r] = c;
    }

    // Zero out the objective row over the current basic columns.
    void price_out() {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (obj[basis[i]].is_zero()) continue;
            Rational f = obj[basis[i]];
            for (std::size_t j = 0; j < ncols; ++j) obj[j] -= f * rows[i][j];
            obj_rhs -= f * rows[i][ncols];
        }
    }

    // Bland's rule: entering column = lowest index with negative reduced
    // cost; leaving row = lowest basic index among minimal ratios.
    LpStatus optimize() {
        for (;;) {
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < ncols; ++j) {
                if (!banned[j] && obj[j].sign() < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == ncols) return LpStatus::Optimal;

            std::size_t leave = rows.size();
            Rational best_ratio;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter].sign() <= 0) continue;
                Rational ratio = rows[i][ncols] / rows[i][enter];
                if (leave == rows.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == rows.size()) return LpStatus::Unbounded;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult simplex_max(const LpProblem& p) {
    p.validate();
    const std::size_t n = p.num_vars();
    const std::size_t m = p.num_rows();

    // Split free variables x = u - v so every tableau variable is >= 0.
    std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
    std::size_t n_std = 0;
    for (std::size_t j = 0; j < n; ++j) {
        pos_col[j] = n_std++;
        if (p.bounds[j] == VarBound::Free) neg_col[j] = n_std++;
    }

    // Normalize rows to nonnegative rhs, flipping relations as needed.
    std::vector<RatVector> row_coef(m, RatVector(n_std));
    RatVector row_rhs(m);
    std::vector<Relation> rel = p.relations;
    for (std::size_t i = 0; i < m; ++i) {
        Rational flip = p.rhs[i].sign() < 0 ? Rational(-1) : Rational(1);
        if (p.rhs[i].sign() < 0) {
            rel[i] = rel[i] == Relation::LessEq     ? Relation::GreaterEq
                     : rel[i] == Relation::GreaterEq ? Relation::LessEq
                                                     : Relation::Eq;
        }
        row_rhs[i] = flip * p.rhs[i];
        for (std::size_t j = 0; j < n; ++j) {
            Rational c = flip * p.constraints.at(i, j);
            row_coef[i][pos_col[j]] = c;
            if (neg_col[j] != SIZE_MAX) row_coef[i][neg_col[j]] = -c;
        }
    }

    std::size_t n_slack = 0, n_art = 0;
    for (auto r : rel) {
        if (r != Relation::Eq) ++n_slack;
        if (r != Relation::LessEq) ++n_art;
    }

    Tableau t;
    t.ncols = n_std + n_slack + n_art;
    t.banned.assign(t.ncols, false);
    t.basis.assign(m, 0);
    t.obj = RatVector(t.ncols);
    std::size_t slack_base = n_std;
    std::size_t art_base = n_std + n_slack;
    std::size_t si = 0, ai = 0;
    for (std::size_t i = 0; i < m; ++i) {
        RatVector row(t.ncols + 1);
        for (std::size_t j = 0; j < n_std; ++j) row[j] = row_coef[i][j];
        row[t.ncols] = row_rhs[i];
        switch (rel[i]) {
            case Relation::LessEq:
                row[slack_base + si] = 1;
                t.basis[i] = slack_base + si++;
                break;
            case Relation::GreaterEq:
                row[slack_base + si++] = -1;
                row[art_base + ai] = 1;
                t.basis[i] = art_base + ai++;
                break;
            case Relation::Eq:
                row[art_base + ai] = 1;
                t.basis[i] = art_base + ai++;
                break;
        }
        t.rows.push_back(std::move(row));
    }

    // Phase 1: maximize -(sum of artificials).
    if (n_art > 0) {
        for (std::size_t j = art_base; j < t.ncols; ++j) t.obj[j] = 1;
        t.obj_rhs = Rational(0);
        t.price_out();
        LpStatus s = t.optimize();
        if (s != LpStatus::Optimal) {
            throw std::logic_error("simplex: phase-1 objective cannot be unbounded");
        }
        if (t.obj_rhs.sign() != 0) return {LpStatus::Infeasible, {}, {}};

        // Drive remaining artificials out of the basis; drop redundant rows.
        for (std::size_t i = 0; i < t.rows.size();) {
            if (t.basis[i] < art_base) {
                ++i;
                continue;
            }
            std::size_t c = art_base;
            for (std::size_t j = 0; j < art_base; ++j) {
                if (!t.rows[i][j].is_zero()) {
                    c = j;
                    break;
                }
            }
            if (c == art_base) {  // all-zero over real columns: redundant constraint
                t.rows.erase(t.rows.begin() + static_cast<long>(i));
                t.basis.erase(t.basis.begin() + static_cast<long>(i));
            } else {
                t.pivot(i, c);
                ++i;
            }
        }
        for (std::size_t j = art_base; j < t.ncols; ++j) t.banned[j] = true;
    }

    // Phase 2: the real objective over the split variables.
    for (std::size_t j = 0; j < t.ncols; ++j) t.obj[j] = Rational(0);
    for (std::size_t j = 0; j < n; ++j) {
        t.obj[pos_col[j]] = -p.objective[j];
        if (neg_col[j] != SIZE_MAX) t.obj[neg_col[j]] = p.objective[j];
    }
    t.obj_rhs = Rational(0);
    t.price_out();
    LpStatus s = t.optimize();
    if (s == LpStatus::Unbounded) return {LpStatus::Unbounded, {}, {}};

    RatVector std_val(t.ncols);
    for (std::size_t i = 0; i < t.rows.size(); ++i) std_val[t.basis[i]] = t.rows[i][t.ncols];
    RatVector x(n);
    for (std::size_t j = 0; j < n; ++j) {
        x[j] = std_val[pos_col[j]];
        if (neg_col[j] != SIZE_MAX) x[j] -= std_val[neg_col[j]];
    }
    return {LpStatus::Optimal, x, p.objective.dot(x)};
}

}  // namespace posvote
