#include <algorithm>
#include <optional>

#include "lowprob/lp.hpp"

namespace lowprob::lp {

namespace {

// Dense tableau in canonical form: the columns of basic variables form an
// identity, rhs >= 0 throughout.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : a_(rows, std::vector<Rational>(cols)), b_(rows), basis_(rows), cols_(cols)
    {
    }

    std::size_t rows() const { return a_.size(); }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r][c]; }
    Rational& rhs(std::size_t r) { return b_[r]; }
    const Rational& rhs(std::size_t r) const { return b_[r]; }
    std::size_t& basic(std::size_t r) { return basis_[r]; }
    std::size_t basic(std::size_t r) const { return basis_[r]; }

    void pivot(std::size_t row, std::size_t col)
    {
        const Rational inv = 1 / a_[row][col];
        auto& prow = a_[row];
        for (auto& v : prow) {
            if (!v.is_zero()) {
                v *= inv;
            }
        }
        b_[row] *= inv;
        for (std::size_t r = 0; r < rows(); ++r) {
            if (r == row || a_[r][col].is_zero()) {
                continue;
            }
            const Rational factor = a_[r][col];
            for (std::size_t c = 0; c < cols(); ++c) {
                if (!prow[c].is_zero()) {
                    a_[r][c] -= factor * prow[c];
                }
            }
            b_[r] -= factor * b_[row];
        }
        basis_[row] = col;
    }

    void erase_row(std::size_t row)
    {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(row));
        b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(row));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
    }

    Rational objective(const std::vector<Rational>& cost) const
    {
        Rational total;
        for (std::size_t r = 0; r < rows(); ++r) {
            total += cost[basis_[r]] * b_[r];
        }
        return total;
    }

    /// Runs primal simplex on columns [0, allowed_cols) with Bland's rule.
    /// Returns false when the objective is unbounded below.
    bool minimize(const std::vector<Rational>& cost, std::size_t allowed_cols)
    {
        std::vector<bool> is_basic(cols(), false);
        while (true) {
            std::fill(is_basic.begin(), is_basic.end(), false);
            for (std::size_t r = 0; r < rows(); ++r) {
                is_basic[basis_[r]] = true;
            }

            std::optional<std::size_t> entering;
            for (std::size_t c = 0; c < allowed_cols && !entering; ++c) {
                if (is_basic[c]) {
                    continue;
                }
                Rational reduced = cost[c];
                for (std::size_t r = 0; r < rows(); ++r) {
                    if (!a_[r][c].is_zero()) {
                        reduced -= cost[basis_[r]] * a_[r][c];
                    }
                }
                if (reduced < 0) {
                    entering = c;
                }
            }
            if (!entering) {
                return true;
            }

            std::optional<std::size_t> leaving;
            Rational best_ratio;
            for (std::size_t r = 0; r < rows(); ++r) {
                const Rational& coef = a_[r][*entering];
                if (coef <= 0) {
                    continue;
                }
                Rational ratio = b_[r] / coef;
                if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
                    leaving = r;
                    best_ratio = std::move(ratio);
                }
            }
            if (!leaving) {
                return false;
            }
            pivot(*leaving, *entering);
        }
    }

private:
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> b_;
    std::vector<std::size_t> basis_;
    std::size_t cols_;
};

} // namespace

Outcome solve_min(const LinearProgram& program)
{
    program.validate();

    const std::size_t n = program.num_vars;
    const std::size_t structural = program.nonneg ? n : 2 * n;
    const std::size_t m = program.constraints.size();

    // Sign-normalize rows so every rhs is nonnegative.
    struct Row {
        std::vector<Rational> coefs;
        Relation relation;
        Rational rhs;
    };
    std::vector<Row> rows;
    rows.reserve(m);
    std::size_t slack_count = 0;
    std::size_t artificial_count = 0;
    for (const auto& c : program.constraints) {
        Row row{std::vector<Rational>(structural), c.relation, c.rhs};
        for (std::size_t i = 0; i < n; ++i) {
            row.coefs[i] = c.coefficients[i];
            if (!program.nonneg) {
                row.coefs[n + i] = -c.coefficients[i];
            }
        }
        // A ">= 0" row flips to "<= 0" so its slack can start in the basis.
        if (row.rhs < 0 || (row.rhs.is_zero() && row.relation == Relation::GreaterEqual)) {
            for (auto& v : row.coefs) {
                v = -v;
            }
            row.rhs = -row.rhs;
            if (row.relation == Relation::LessEqual) {
                row.relation = Relation::GreaterEqual;
            } else if (row.relation == Relation::GreaterEqual) {
                row.relation = Relation::LessEqual;
            }
        }
        if (row.relation != Relation::Equal) {
            ++slack_count;
        }
        if (row.relation != Relation::LessEqual) {
            ++artificial_count;
        }
        rows.push_back(std::move(row));
    }

    // Column layout: structural | slack and surplus | artificial.
    const std::size_t first_artificial = structural + slack_count;
    const std::size_t total_cols = first_artificial + artificial_count;
    Tableau t(m, total_cols);
    std::size_t next_slack = structural;
    std::size_t next_artificial = first_artificial;
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < structural; ++c) {
            t.at(r, c) = rows[r].coefs[c];
        }
        t.rhs(r) = rows[r].rhs;
        switch (rows[r].relation) {
        case Relation::LessEqual:
            t.at(r, next_slack) = 1;
            t.basic(r) = next_slack++;
            break;
        case Relation::GreaterEqual:
            t.at(r, next_slack++) = -1;
            t.at(r, next_artificial) = 1;
            t.basic(r) = next_artificial++;
            break;
        case Relation::Equal:
            t.at(r, next_artificial) = 1;
            t.basic(r) = next_artificial++;
            break;
        }
    }

    if (artificial_count > 0) {
        std::vector<Rational> phase_one(total_cols);
        for (std::size_t c = first_artificial; c < total_cols; ++c) {
            phase_one[c] = 1;
        }
        // Phase one is bounded below by zero.
        t.minimize(phase_one, total_cols);
        if (t.objective(phase_one) > 0) {
            return Outcome{Status::Infeasible, {}, {}};
        }
        // Drive zero-valued artificials out of the basis; rows where that is
        // impossible are linearly dependent and can be dropped.
        for (std::size_t r = t.rows(); r-- > 0;) {
            if (t.basic(r) < first_artificial) {
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t c = 0; c < first_artificial && !col; ++c) {
                if (!t.at(r, c).is_zero()) {
                    col = c;
                }
            }
            if (col) {
                t.pivot(r, *col);
            } else {
                t.erase_row(r);
            }
        }
    }

    std::vector<Rational> cost(total_cols);
    for (std::size_t i = 0; i < n; ++i) {
        cost[i] = program.objective[i];
        if (!program.nonneg) {
            cost[n + i] = -program.objective[i];
        }
    }
    if (!t.minimize(cost, first_artificial)) {
        return Outcome{Status::Unbounded, {}, {}};
    }

    std::vector<Rational> values(structural);
    for (std::size_t r = 0; r < t.rows(); ++r) {
        if (t.basic(r) < structural) {
            values[t.basic(r)] = t.rhs(r);
        }
    }
    Outcome out{Status::Optimal, {}, std::vector<Rational>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        out.witness[i] = program.nonneg ? values[i] : values[i] - values[n + i];
    }
    out.value = program.objective_at(out.witness);
    return out;
}

} // namespace lowprob::lp
