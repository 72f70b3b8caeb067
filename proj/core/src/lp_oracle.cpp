#include <optional>
#include <string>

#include "lowprob/error.hpp"
#include "lowprob/lp.hpp"

namespace lowprob::lp {

namespace {

using Vec = std::vector<Rational>;

/// Solves the square system rows . x = rhs by Gauss-Jordan elimination.
/// Returns nothing when the matrix is singular.
std::optional<Vec> solve_square(std::vector<Vec> rows, Vec rhs)
{
    const std::size_t n = rows.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && rows[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            return std::nullopt;
        }
        std::swap(rows[pivot], rows[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || rows[r][col].is_zero()) {
                continue;
            }
            const Rational factor = rows[r][col] / rows[col][col];
            for (std::size_t c = col; c < n; ++c) {
                rows[r][c] -= factor * rows[col][c];
            }
            rhs[r] -= factor * rhs[col];
        }
    }
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = rhs[i] / rows[i][i];
    }
    return x;
}

/// Indices of a maximal linearly independent subset of rows, chosen greedily
/// in order.
std::vector<std::size_t> independent_rows(const std::vector<Vec>& rows, std::size_t n)
{
    std::vector<Vec> reduced; // echelon rows with their pivot columns
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> chosen;
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        Vec row = rows[idx];
        for (std::size_t k = 0; k < reduced.size(); ++k) {
            const std::size_t pc = pivots[k];
            if (!row[pc].is_zero()) {
                const Rational factor = row[pc] / reduced[k][pc];
                for (std::size_t c = 0; c < n; ++c) {
                    row[c] -= factor * reduced[k][c];
                }
            }
        }
        std::optional<std::size_t> pc;
        for (std::size_t c = 0; c < n && !pc; ++c) {
            if (!row[c].is_zero()) {
                pc = c;
            }
        }
        if (pc) {
            reduced.push_back(std::move(row));
            pivots.push_back(*pc);
            chosen.push_back(idx);
        }
    }
    return chosen;
}

struct Best {
    Rational value;
    Vec point;
};

/// Minimizes cost over the basic feasible points of {rows, x >= 0} by
/// exhaustive enumeration. Returns nothing when no basic feasible point
/// exists (for a pointed polyhedron: the region is empty).
std::optional<Best> enumerate_min(const std::vector<Constraint>& rows, const Vec& cost, std::size_t n)
{
    std::vector<Vec> eq_rows;
    Vec eq_rhs;
    std::vector<Vec> tight_rows;
    Vec tight_rhs;
    for (const auto& row : rows) {
        if (row.relation == Relation::Equal) {
            eq_rows.push_back(row.coefficients);
            eq_rhs.push_back(row.rhs);
        } else {
            tight_rows.push_back(row.coefficients);
            tight_rhs.push_back(row.rhs);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Vec unit(n);
        unit[i] = 1;
        tight_rows.push_back(std::move(unit));
        tight_rhs.emplace_back(0);
    }

    const auto eq_basis = independent_rows(eq_rows, n);
    if (eq_basis.size() > n) {
        return std::nullopt;
    }
    const std::size_t pick = n - eq_basis.size();
    if (pick > tight_rows.size()) {
        return std::nullopt;
    }

    auto feasible = [&](const Vec& x) {
        for (const auto& v : x) {
            if (v < 0) {
                return false;
            }
        }
        for (const auto& row : rows) {
            if (!row.satisfied_by(x)) {
                return false;
            }
        }
        return true;
    };

    std::optional<Best> best;
    std::vector<std::size_t> combo(pick);
    for (std::size_t i = 0; i < pick; ++i) {
        combo[i] = i;
    }
    while (true) {
        std::vector<Vec> system;
        Vec rhs;
        for (auto idx : eq_basis) {
            system.push_back(eq_rows[idx]);
            rhs.push_back(eq_rhs[idx]);
        }
        for (auto idx : combo) {
            system.push_back(tight_rows[idx]);
            rhs.push_back(tight_rhs[idx]);
        }
        if (auto x = solve_square(std::move(system), std::move(rhs)); x && feasible(*x)) {
            Rational value;
            for (std::size_t i = 0; i < n; ++i) {
                value += cost[i] * (*x)[i];
            }
            if (!best || value < best->value) {
                best = Best{std::move(value), std::move(*x)};
            }
        }

        // Next combination in lexicographic order.
        std::size_t k = pick;
        while (k > 0 && combo[k - 1] == tight_rows.size() - pick + (k - 1)) {
            --k;
        }
        if (k == 0) {
            break;
        }
        ++combo[k - 1];
        for (std::size_t j = k; j < pick; ++j) {
            combo[j] = combo[j - 1] + 1;
        }
    }
    return best;
}

} // namespace

Outcome oracle_min(const LinearProgram& program)
{
    program.validate();
    if (program.num_vars > kOracleMaxVars || program.constraints.size() > kOracleMaxConstraints) {
        throw UnsupportedSize("oracle_min supports at most " + std::to_string(kOracleMaxVars) + " variables and " +
                              std::to_string(kOracleMaxConstraints) + " constraints");
    }

    // Work over nonnegative variables so the region is pointed; a free
    // variable becomes the difference of two nonnegative ones.
    const std::size_t n = program.num_vars;
    const std::size_t width = program.nonneg ? n : 2 * n;
    auto widen = [&](const Vec& coefs) {
        Vec out(width);
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = coefs[i];
            if (!program.nonneg) {
                out[n + i] = -coefs[i];
            }
        }
        return out;
    };

    std::vector<Constraint> rows;
    for (const auto& c : program.constraints) {
        rows.push_back(Constraint{widen(c.coefficients), c.relation, c.rhs});
    }
    const Vec cost = widen(program.objective);

    auto best = enumerate_min(rows, cost, width);
    if (!best) {
        return Outcome{Status::Infeasible, {}, {}};
    }

    // Recession directions d >= 0 with sum(d) = 1; a negative cost along
    // any of them means the objective is unbounded below.
    std::vector<Constraint> cone;
    for (const auto& row : rows) {
        cone.push_back(Constraint{row.coefficients, row.relation, Rational{}});
    }
    cone.push_back(Constraint{Vec(width, Rational(1)), Relation::Equal, Rational(1)});
    if (auto ray = enumerate_min(cone, cost, width); ray && ray->value < 0) {
        return Outcome{Status::Unbounded, {}, {}};
    }

    Outcome out{Status::Optimal, {}, Vec(n)};
    for (std::size_t i = 0; i < n; ++i) {
        out.witness[i] = program.nonneg ? best->point[i] : best->point[i] - best->point[n + i];
    }
    out.value = program.objective_at(out.witness);
    return out;
}

} // namespace lowprob::lp
