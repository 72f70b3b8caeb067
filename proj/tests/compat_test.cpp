#include <gtest/gtest.h>

#include "lowprob/compat.hpp"
#include "lowprob/envelope.hpp"
#include "lowprob/error.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

namespace lowprob {
namespace {

using testing::Gen;
using testing::q;

EnvelopeEvidence e1_with_d1_supports()
{
    const auto d1 = testing::fixture_d1();
    return EnvelopeEvidence(testing::fixture_e1(),
                            {simple_support(d1.gamma.image(0)), simple_support(d1.gamma.image(1))});
}

/// Row P(x1, y1) >= 1/2 over the 2x2 joint of D1's spaces.
PolyhedralFamily poly_d1()
{
    const auto d1 = testing::fixture_d1();
    lp::Constraint row{std::vector<Rational>(4), lp::Relation::GreaterEqual, q(1, 2)};
    row.coefficients[joint_index(2, 0, 0)] = 1;
    return PolyhedralFamily(d1.x, d1.y, {row});
}

/// A random measure dominating l, as a mixture of LP vertices: the dominance
/// program solved for a few random objectives, averaged with random weights.
ProbMeasure random_dominating(Gen& gen, const SetFunction& lower)
{
    const std::size_t n = lower.space().size();
    std::vector<Rational> mix(n);
    const long parts = gen.integer(1, 3);
    long weight_left = 6;
    for (long k = 0; k < parts; ++k) {
        std::vector<Rational> objective(n);
        for (auto& c : objective) {
            c = gen.integer(-3, 3);
        }
        const auto out = lp::solve_min(dominance_program(lower, objective));
        const long w = k + 1 == parts ? weight_left : gen.integer(0, weight_left);
        weight_left -= w;
        for (std::size_t i = 0; i < n; ++i) {
            mix[i] += out.witness[i] * Rational(w, 6);
        }
    }
    return ProbMeasure(lower.space(), mix);
}

TEST(JointMeasure, MarginalsAndValidation)
{
    const auto xs = FiniteSpace::numbered("x", 2);
    const auto ys = FiniteSpace::numbered("y", 2);
    // (x1,y1)=1/8 (x2,y1)=3/8 (x1,y2)=1/4 (x2,y2)=1/4
    const JointMeasure p(xs, ys, {q(1, 8), q(3, 8), q(1, 4), q(1, 4)});
    EXPECT_EQ(p.mass(1, 0), q(3, 8));
    EXPECT_EQ(p.x_marginal(Subset::parse(xs, "x1")), q(3, 8));
    EXPECT_EQ(p.y_marginal(Subset::parse(ys, "y1")), q(1, 2));
    EXPECT_EQ(p.cylinder(Subset::parse(xs, "x2"), 1), q(1, 4));
    EXPECT_EQ(p.marginal_y(), ProbMeasure::uniform(ys));
    EXPECT_THROW(JointMeasure(xs, ys, {q(1)}), InvalidInput);
    EXPECT_THROW(JointMeasure(xs, ys, {q(-1, 4), q(3, 4), q(1, 4), q(1, 4)}), InvalidInput);
    EXPECT_THROW(JointMeasure(xs, ys, {q(1, 4), q(1, 4), q(1, 4), q(1, 8)}), InvalidInput);
}

TEST(FamilyConstraints, RowCounts)
{
    const auto d1 = testing::fixture_d1();
    const ConstraintBlock dempster = family_constraints(DempsterFamily{d1.p, d1.gamma});
    EXPECT_EQ(dempster.num_vars, 4U);
    ASSERT_EQ(dempster.rows.size(), 3U);
    // The zero-forcing row pins (x2, y1).
    const auto& zero = dempster.rows[2];
    EXPECT_EQ(zero.relation, lp::Relation::Equal);
    EXPECT_EQ(zero.rhs, q(0));
    EXPECT_EQ(zero.coefficients[joint_index(2, 1, 0)], q(1));
    EXPECT_EQ(dempster.total_mass.rhs, q(1));

    const ConstraintBlock envelope = family_constraints(EnvelopeFamily{e1_with_d1_supports()});
    EXPECT_EQ(envelope.rows.size(), 4U + 8U);

    const ConstraintBlock poly = family_constraints(poly_d1());
    ASSERT_EQ(poly.rows.size(), 1U);
    EXPECT_EQ(poly.rows[0].rhs, q(1, 2));

    EXPECT_THROW(PolyhedralFamily(d1.x, d1.y, {lp::Constraint{{q(1)}, lp::Relation::Equal, q(0)}}), InvalidInput);
}

TEST(LowerValue, Examples)
{
    const auto d1 = testing::fixture_d1();
    EXPECT_EQ(lower_value(DempsterFamily{d1.p, d1.gamma}, Subset::parse(d1.x, "x1")), q(1, 2));
    const auto d2 = testing::fixture_d2();
    EXPECT_EQ(lower_value(DempsterFamily{d2.p, d2.gamma}, Subset::parse(d2.x, "x2,x3")), q(1, 3));
    EXPECT_EQ(lower_value(poly_d1(), Subset::parse(d1.x, "x1")), q(1, 2));
    EXPECT_EQ(lower_value(poly_d1(), Subset::parse(d1.x, "x2")), q(0));
}

TEST(LowerValue, CrossCheckedByOracleOnFixtures)
{
    // Kept within the oracle's variable cap: |X| * |Y| <= 8.
    const auto xs = FiniteSpace::numbered("x", 3);
    const auto ys = FiniteSpace::numbered("y", 2);
    const testing::DempsterInstance small{xs, ys, ProbMeasure(ys, {q(1, 3), q(2, 3)}),
                                          testing::mapping(ys, xs, {"x1,x2", "x2,x3"})};
    for (const auto& inst : {testing::fixture_d1(), small}) {
        const FamilySpec spec = DempsterFamily{inst.p, inst.gamma};
        const ConstraintBlock block = family_constraints(spec);
        for (Mask a = 0; a < inst.x.subset_count(); ++a) {
            lp::LinearProgram program{block.num_vars, std::vector<Rational>(block.num_vars), {block.total_mass}};
            program.constraints.insert(program.constraints.end(), block.rows.begin(), block.rows.end());
            for (std::size_t y = 0; y < inst.y.size(); ++y) {
                for (std::size_t x = 0; x < inst.x.size(); ++x) {
                    if ((a >> x) & 1U) {
                        program.objective[joint_index(inst.x.size(), x, y)] = 1;
                    }
                }
            }
            const auto slow = lp::oracle_min(program);
            ASSERT_EQ(slow.status, lp::Status::Optimal);
            EXPECT_EQ(lower_value(spec, Subset(inst.x, a)), slow.value);
            EXPECT_EQ(slow.value, testing::belief_oracle(inst.p, inst.gamma, a));
        }
    }
}

TEST(LowerFunction, Examples)
{
    const auto d1 = testing::fixture_d1();
    EXPECT_EQ(lower_function(DempsterFamily{d1.p, d1.gamma}), belief_from_mapping(d1.p, d1.gamma));

    const SetFunction lam = lower_function(EnvelopeFamily{e1_with_d1_supports()});
    EXPECT_EQ(lam(Subset::parse(d1.x, "x1")), q(1, 4));
    EXPECT_EQ(lam(Subset::parse(d1.x, "x2")), q(0));
    EXPECT_EQ(lam(Subset::full(d1.x)), q(1));

    const auto xs = FiniteSpace::numbered("x", 3);
    const auto ys = FiniteSpace::numbered("y", 2);
    EXPECT_EQ(lower_function(PolyhedralFamily(xs, ys, {})), SetFunction::vacuous(xs));
}

TEST(LowerFunction, EqualsBeliefFromMappingOnRandomDempsterFamilies)
{
    Gen gen(71);
    for (int trial = 0; trial < 60; ++trial) {
        const auto ys = FiniteSpace::numbered("y", static_cast<std::size_t>(gen.integer(1, 4)));
        const auto xs = FiniteSpace::numbered("x", static_cast<std::size_t>(gen.integer(1, 4)));
        const ProbMeasure p = gen.measure(ys);
        const MultivaluedMap g = gen.mapping(ys, xs);
        const SetFunction lower = lower_function(DempsterFamily{p, g});
        ASSERT_TRUE(lower.is_normalized());
        for (Mask a = 0; a < xs.subset_count(); ++a) {
            ASSERT_EQ(lower[a], testing::belief_oracle(p, g, a));
        }
    }
}

TEST(LowerValue, EmptyFamilyAndSpaceErrors)
{
    const auto d1 = testing::fixture_d1();
    lp::Constraint a{std::vector<Rational>(4), lp::Relation::GreaterEqual, q(3, 4)};
    a.coefficients[0] = 1;
    lp::Constraint b{std::vector<Rational>(4), lp::Relation::GreaterEqual, q(3, 4)};
    b.coefficients[3] = 1;
    const PolyhedralFamily contradictory(d1.x, d1.y, {a, b});
    EXPECT_THROW(lower_value(contradictory, Subset::parse(d1.x, "x1")), EmptyFamily);
    EXPECT_THROW(lower_value(poly_d1(), Subset::full(d1.y)), InvalidInput);
}

TEST(LowerSolution, WitnessIsAMemberAndAttainsTheValue)
{
    Gen gen(73);
    for (int trial = 0; trial < 60; ++trial) {
        const auto ys = FiniteSpace::numbered("y", static_cast<std::size_t>(gen.integer(1, 3)));
        const auto xs = FiniteSpace::numbered("x", static_cast<std::size_t>(gen.integer(1, 3)));
        FamilySpec spec = trial % 2 == 0 ? FamilySpec(DempsterFamily{gen.measure(ys), gen.mapping(ys, xs)})
                                         : FamilySpec(EnvelopeFamily{gen.evidence(ys, xs)});
        const Subset a(xs, static_cast<Mask>(gen.integer(0, xs.full_mask())));
        const LowerSolution sol = lower_solution(spec, a);
        EXPECT_TRUE(membership(sol.witness, spec));
        EXPECT_EQ(sol.witness.x_marginal(a), sol.value);
    }
}

TEST(ProductJoint, Examples)
{
    const auto xs = FiniteSpace::numbered("x", 2);
    const auto ys = FiniteSpace::numbered("y", 2);
    const std::vector<ProbMeasure> uniform_conds = {ProbMeasure::uniform(xs), ProbMeasure::uniform(xs)};
    const JointMeasure all = product_joint(ProbMeasure::uniform(ys), uniform_conds);
    for (const auto& m : all.masses()) {
        EXPECT_EQ(m, q(1, 4));
    }

    const std::vector<ProbMeasure> conds = {ProbMeasure(xs, {q(1, 3), q(2, 3)}), ProbMeasure::uniform(xs)};
    const JointMeasure col = product_joint(ProbMeasure::point(ys, 0), conds);
    EXPECT_EQ(col.mass(0, 0), q(1, 3));
    EXPECT_EQ(col.mass(1, 0), q(2, 3));
    EXPECT_EQ(col.mass(0, 1), q(0));
    EXPECT_EQ(col.mass(1, 1), q(0));

    // q = (1/4, 3/4) dominates E1; point masses dominate the simple supports.
    const std::vector<ProbMeasure> supports = {ProbMeasure::point(xs, 0), ProbMeasure::uniform(xs)};
    const JointMeasure member = product_joint(ProbMeasure(ys, {q(1, 4), q(3, 4)}), supports);
    EXPECT_TRUE(membership(member, EnvelopeFamily{e1_with_d1_supports()}));
    EXPECT_EQ(member.marginal_y(), ProbMeasure(ys, {q(1, 4), q(3, 4)}));

    EXPECT_THROW(product_joint(ProbMeasure::uniform(ys), std::vector<ProbMeasure>{ProbMeasure::uniform(xs)}),
                 InvalidInput);
}

TEST(Membership, Examples)
{
    const auto d1 = testing::fixture_d1();
    const JointMeasure off_image(d1.x, d1.y, {q(1, 4), q(1, 4), q(1, 4), q(1, 4)});
    EXPECT_FALSE(membership(off_image, DempsterFamily{d1.p, d1.gamma}));
    const JointMeasure on_image(d1.x, d1.y, {q(1, 2), q(0), q(1, 4), q(1, 4)});
    EXPECT_TRUE(membership(on_image, DempsterFamily{d1.p, d1.gamma}));
    EXPECT_TRUE(membership(off_image, PolyhedralFamily(d1.x, d1.y, {})));
    EXPECT_FALSE(membership(off_image, poly_d1()));
}

TEST(ProductJoint, RandomRecipesAreMembersAndSatisfyTheMixtureBound)
{
    // Members built as q_y(x) q(y) with q >= l and q_y >= lambda_y; each must
    // pass membership and satisfy P_X(A) >= sum_y P_Y(y) lambda_y(A).
    Gen gen(79);
    for (int trial = 0; trial < 120; ++trial) {
        const auto ys = FiniteSpace::numbered("y", static_cast<std::size_t>(gen.integer(1, 3)));
        const auto xs = FiniteSpace::numbered("x", static_cast<std::size_t>(gen.integer(1, 3)));
        const EnvelopeEvidence ev = gen.evidence(ys, xs);
        const ProbMeasure qy = random_dominating(gen, ev.lower());
        std::vector<ProbMeasure> conds;
        for (std::size_t y = 0; y < ys.size(); ++y) {
            conds.push_back(random_dominating(gen, ev.conditional(y)));
        }
        const JointMeasure joint = product_joint(qy, conds);
        ASSERT_TRUE(membership(joint, EnvelopeFamily{ev}));
        const ProbMeasure py = joint.marginal_y();
        for (Mask a = 0; a < xs.subset_count(); ++a) {
            Rational bound;
            for (std::size_t y = 0; y < ys.size(); ++y) {
                bound += py[y] * ev.conditional(y)[a];
            }
            ASSERT_GE(joint.x_marginal(Subset(xs, a)), bound);
        }
    }
}

TEST(EnvelopeEvidence, Validation)
{
    const auto xs = FiniteSpace::numbered("x", 2);
    const SetFunction vac = SetFunction::vacuous(xs);
    EXPECT_THROW(EnvelopeEvidence(testing::fixture_b1(), {vac, vac}), InvalidInput);
    EXPECT_THROW(EnvelopeEvidence(testing::fixture_e1(), {vac}), InvalidInput);
    EXPECT_THROW(EnvelopeEvidence(SetFunction(testing::fixture_e1().space()), {vac, vac}), InvalidInput);
    const SetFunction m1x = testing::fixture_m1(FiniteSpace::numbered("x", 3));
    const SetFunction vac3 = SetFunction::vacuous(FiniteSpace::numbered("x", 3));
    try {
        EnvelopeEvidence(testing::fixture_e1(), {m1x, vac3});
        FAIL() << "expected InvalidInput";
    } catch (const InvalidInput& e) {
        EXPECT_STREQ(e.what(), "λ_y not a lower envelope (y = y1)");
    }
    try {
        EnvelopeEvidence(testing::fixture_b1(), {vac, vac});
    } catch (const InvalidInput& e) {
        EXPECT_STREQ(e.what(), "ℓ not dominated");
    }
    EXPECT_THROW(EnvelopeEvidence(testing::fixture_e1(), {vac, vac3}), InvalidInput);
}

} // namespace
} // namespace lowprob
