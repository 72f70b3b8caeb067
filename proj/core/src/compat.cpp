#include "lowprob/compat.hpp"

#include "lowprob/error.hpp"

namespace lowprob {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<lp::Constraint> dempster_rows(const DempsterFamily& family)
{
    const FiniteSpace& xs = family.mapping.codomain();
    const FiniteSpace& ys = family.mapping.domain();
    const std::size_t m = xs.size();
    const std::size_t vars = m * ys.size();
    std::vector<lp::Constraint> rows;
    for (std::size_t y = 0; y < ys.size(); ++y) {
        lp::Constraint row{std::vector<Rational>(vars), lp::Relation::Equal, family.p[y]};
        for (std::size_t x = 0; x < m; ++x) {
            row.coefficients[joint_index(m, x, y)] = 1;
        }
        rows.push_back(std::move(row));
    }
    for (std::size_t y = 0; y < ys.size(); ++y) {
        for (std::size_t x = 0; x < m; ++x) {
            if (!family.mapping.image(y).contains(x)) {
                lp::Constraint row{std::vector<Rational>(vars), lp::Relation::Equal, Rational{}};
                row.coefficients[joint_index(m, x, y)] = 1;
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::vector<lp::Constraint> envelope_rows(const EnvelopeFamily& family)
{
    const EnvelopeEvidence& ev = family.evidence;
    const std::size_t m = ev.x_space().size();
    const std::size_t n = ev.y_space().size();
    const std::size_t vars = m * n;
    std::vector<lp::Constraint> rows;
    for (Mask f : canonical_masks(n)) {
        lp::Constraint row{std::vector<Rational>(vars), lp::Relation::GreaterEqual, ev.lower()[f]};
        for (std::size_t y = 0; y < n; ++y) {
            if (((f >> y) & 1U) != 0) {
                for (std::size_t x = 0; x < m; ++x) {
                    row.coefficients[joint_index(m, x, y)] = 1;
                }
            }
        }
        rows.push_back(std::move(row));
    }
    // Conditional dominance, multiplied through by P(X x {y}) so the row
    // stays linear and is vacuous when that column carries no mass.
    for (std::size_t y = 0; y < n; ++y) {
        const SetFunction& cond = ev.conditional(y);
        for (Mask e : canonical_masks(m)) {
            lp::Constraint row{std::vector<Rational>(vars), lp::Relation::GreaterEqual, Rational{}};
            for (std::size_t x = 0; x < m; ++x) {
                Rational coef = -cond[e];
                if (((e >> x) & 1U) != 0) {
                    coef += 1;
                }
                row.coefficients[joint_index(m, x, y)] = std::move(coef);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace

JointMeasure::JointMeasure(FiniteSpace x_space, FiniteSpace y_space, std::vector<Rational> masses)
    : x_space_(std::move(x_space)), y_space_(std::move(y_space)), masses_(std::move(masses))
{
    if (masses_.size() != x_space_.size() * y_space_.size()) {
        throw InvalidInput("joint measure has " + std::to_string(masses_.size()) + " masses, expected " +
                           std::to_string(x_space_.size() * y_space_.size()));
    }
    Rational total;
    for (const auto& v : masses_) {
        if (v < 0) {
            throw InvalidInput("negative joint mass " + v.str());
        }
        total += v;
    }
    if (total != 1) {
        throw InvalidInput("joint masses sum to " + total.str() + ", not 1");
    }
}

Rational JointMeasure::x_marginal(const Subset& a) const
{
    require_same_space(a.space(), x_space_, "x_marginal");
    Rational total;
    for (std::size_t y = 0; y < y_space_.size(); ++y) {
        total += cylinder(a, y);
    }
    return total;
}

Rational JointMeasure::y_marginal(const Subset& f) const
{
    require_same_space(f.space(), y_space_, "y_marginal");
    Rational total;
    for (std::size_t y = 0; y < y_space_.size(); ++y) {
        if (f.contains(y)) {
            total += cylinder(Subset::full(x_space_), y);
        }
    }
    return total;
}

Rational JointMeasure::cylinder(const Subset& e, std::size_t y) const
{
    Rational total;
    for (std::size_t x = 0; x < x_space_.size(); ++x) {
        if (e.contains(x)) {
            total += mass(x, y);
        }
    }
    return total;
}

ProbMeasure JointMeasure::marginal_y() const
{
    std::vector<Rational> out(y_space_.size());
    for (std::size_t y = 0; y < y_space_.size(); ++y) {
        out[y] = cylinder(Subset::full(x_space_), y);
    }
    return ProbMeasure(y_space_, std::move(out));
}

PolyhedralFamily::PolyhedralFamily(FiniteSpace x_space, FiniteSpace y_space, std::vector<lp::Constraint> rows)
    : x_space_(std::move(x_space)), y_space_(std::move(y_space)), rows_(std::move(rows))
{
    const std::size_t vars = x_space_.size() * y_space_.size();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].coefficients.size() != vars) {
            throw InvalidInput("polyhedral row " + std::to_string(r) + " has " +
                               std::to_string(rows_[r].coefficients.size()) + " coefficients, expected " +
                               std::to_string(vars));
        }
    }
}

FiniteSpace x_space_of(const FamilySpec& spec)
{
    return std::visit(Overloaded{
                          [](const DempsterFamily& f) { return f.mapping.codomain(); },
                          [](const EnvelopeFamily& f) { return f.evidence.x_space(); },
                          [](const PolyhedralFamily& f) { return f.x_space(); },
                      },
                      spec);
}

FiniteSpace y_space_of(const FamilySpec& spec)
{
    return std::visit(Overloaded{
                          [](const DempsterFamily& f) { return f.mapping.domain(); },
                          [](const EnvelopeFamily& f) { return f.evidence.y_space(); },
                          [](const PolyhedralFamily& f) { return f.y_space(); },
                      },
                      spec);
}

ConstraintBlock family_constraints(const FamilySpec& spec)
{
    if (const auto* d = std::get_if<DempsterFamily>(&spec)) {
        require_same_space(d->p.space(), d->mapping.domain(), "Dempster family");
    }
    ConstraintBlock block;
    block.num_vars = x_space_of(spec).size() * y_space_of(spec).size();
    block.total_mass = lp::Constraint{std::vector<Rational>(block.num_vars, Rational(1)), lp::Relation::Equal, Rational(1)};
    block.rows = std::visit(Overloaded{
                                [](const DempsterFamily& f) { return dempster_rows(f); },
                                [](const EnvelopeFamily& f) { return envelope_rows(f); },
                                [](const PolyhedralFamily& f) {
                                    return std::vector<lp::Constraint>(f.rows().begin(), f.rows().end());
                                },
                            },
                            spec);
    return block;
}

namespace {

lp::LinearProgram lower_program(const ConstraintBlock& block, std::size_t x_size, const Subset& a)
{
    lp::LinearProgram program;
    program.num_vars = block.num_vars;
    program.nonneg = true;
    program.objective.assign(block.num_vars, Rational{});
    const std::size_t y_size = block.num_vars / x_size;
    for (std::size_t y = 0; y < y_size; ++y) {
        for (std::size_t x = 0; x < x_size; ++x) {
            if (a.contains(x)) {
                program.objective[joint_index(x_size, x, y)] = 1;
            }
        }
    }
    program.constraints.reserve(block.rows.size() + 1);
    program.constraints.push_back(block.total_mass);
    program.constraints.insert(program.constraints.end(), block.rows.begin(), block.rows.end());
    return program;
}

LowerSolution solve_lower(const ConstraintBlock& block, const FiniteSpace& xs, const FiniteSpace& ys, const Subset& a)
{
    require_same_space(a.space(), xs, "lower_value");
    const auto outcome = lp::solve_min(lower_program(block, xs.size(), a));
    if (outcome.status == lp::Status::Infeasible) {
        throw EmptyFamily("the family of compatible joint measures is empty");
    }
    if (outcome.status != lp::Status::Optimal) {
        // Unreachable: the objective is bounded by the simplex constraints.
        throw DomainError("lower value program is unbounded");
    }
    return LowerSolution{outcome.value, JointMeasure(xs, ys, outcome.witness)};
}

} // namespace

LowerSolution lower_solution(const FamilySpec& spec, const Subset& a)
{
    return solve_lower(family_constraints(spec), x_space_of(spec), y_space_of(spec), a);
}

Rational lower_value(const FamilySpec& spec, const Subset& a)
{
    return lower_solution(spec, a).value;
}

SetFunction lower_function(const FamilySpec& spec)
{
    const ConstraintBlock block = family_constraints(spec);
    const FiniteSpace xs = x_space_of(spec);
    const FiniteSpace ys = y_space_of(spec);
    std::vector<Rational> values(xs.subset_count());
    for (Mask mask = 0; mask < values.size(); ++mask) {
        values[mask] = solve_lower(block, xs, ys, Subset(xs, mask)).value;
    }
    return SetFunction(xs, std::move(values));
}

JointMeasure product_joint(const ProbMeasure& q, std::span<const ProbMeasure> conditionals)
{
    if (conditionals.size() != q.space().size()) {
        throw InvalidInput("product_joint needs one conditional measure per element of Y");
    }
    const FiniteSpace xs = conditionals.front().space();
    std::vector<Rational> masses(xs.size() * q.space().size());
    for (std::size_t y = 0; y < q.space().size(); ++y) {
        require_same_space(conditionals[y].space(), xs, "product_joint");
        for (std::size_t x = 0; x < xs.size(); ++x) {
            masses[joint_index(xs.size(), x, y)] = conditionals[y][x] * q[y];
        }
    }
    return JointMeasure(xs, q.space(), std::move(masses));
}

bool membership(const JointMeasure& joint, const FamilySpec& spec)
{
    require_same_space(joint.x_space(), x_space_of(spec), "membership (X)");
    require_same_space(joint.y_space(), y_space_of(spec), "membership (Y)");
    const ConstraintBlock block = family_constraints(spec);
    const std::vector<Rational> point(joint.masses().begin(), joint.masses().end());
    if (!block.total_mass.satisfied_by(point)) {
        return false;
    }
    for (const auto& row : block.rows) {
        if (!row.satisfied_by(point)) {
            return false;
        }
    }
    return true;
}

} // namespace lowprob
