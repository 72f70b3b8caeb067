#include <gtest/gtest.h>

#include "lowprob/compat.hpp"
#include "lowprob/error.hpp"
#include "lowprob/reduced.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

namespace lowprob {
namespace {

using testing::Gen;
using testing::q;

std::vector<SetFunction> d1_supports()
{
    const auto d1 = testing::fixture_d1();
    return {simple_support(d1.gamma.image(0)), simple_support(d1.gamma.image(1))};
}

TEST(Reduced, Examples)
{
    const auto xs = FiniteSpace::numbered("x", 2);
    const EnvelopeEvidence e1(testing::fixture_e1(), d1_supports());
    EXPECT_EQ(reduced_lower_value(e1, Subset::parse(xs, "x1")), q(1, 4));
    EXPECT_EQ(reduced_lower_value(e1, Subset::parse(xs, "x2")), q(0));

    const auto ys = FiniteSpace::numbered("y", 2);
    const EnvelopeEvidence point(SetFunction::of_measure(ProbMeasure::point(ys, 0)), d1_supports());
    for (Mask a = 0; a < xs.subset_count(); ++a) {
        EXPECT_EQ(reduced_lower_value(point, Subset(xs, a)), point.conditional(0)[a]);
    }

    const EnvelopeEvidence vacuous(testing::fixture_e1(), {SetFunction::vacuous(xs), SetFunction::vacuous(xs)});
    EXPECT_EQ(reduced_lower_function(vacuous), SetFunction::vacuous(xs));
    EXPECT_THROW(reduced_lower_value(e1, Subset::full(ys)), InvalidInput);
}

TEST(Reduced, ProgramShape)
{
    const EnvelopeEvidence e1(testing::fixture_e1(), d1_supports());
    const auto program = reduced_program(e1, Subset::parse(e1.x_space(), "x1"));
    EXPECT_EQ(program.num_vars, 2U);
    EXPECT_EQ(program.constraints.size(), 1U + 4U);
    EXPECT_EQ(program.objective, (std::vector<Rational>{q(1), q(0)}));
    EXPECT_TRUE(program.nonneg);
}

TEST(Reduced, MatchesJointProgramOnRandomEvidence)
{
    Gen gen(83);
    for (int trial = 0; trial < 40; ++trial) {
        const auto ys = FiniteSpace::numbered("y", static_cast<std::size_t>(gen.integer(1, 3)));
        const auto xs = FiniteSpace::numbered("x", static_cast<std::size_t>(gen.integer(1, 3)));
        const EnvelopeEvidence ev = gen.evidence(ys, xs);
        ASSERT_EQ(reduced_lower_function(ev), lower_function(EnvelopeFamily{ev})) << "trial " << trial;
    }
}

TEST(Reduced, AgreesWithOracle)
{
    Gen gen(89);
    for (int trial = 0; trial < 40; ++trial) {
        const auto ys = FiniteSpace::numbered("y", static_cast<std::size_t>(gen.integer(1, 3)));
        const auto xs = FiniteSpace::numbered("x", static_cast<std::size_t>(gen.integer(1, 3)));
        const EnvelopeEvidence ev = gen.evidence(ys, xs);
        const Subset a(xs, static_cast<Mask>(gen.integer(0, xs.full_mask())));
        const auto slow = lp::oracle_min(reduced_program(ev, a));
        ASSERT_EQ(slow.status, lp::Status::Optimal);
        EXPECT_EQ(reduced_lower_value(ev, a), slow.value);
    }
}

TEST(Mixture, Examples)
{
    const auto xs = FiniteSpace::numbered("x", 2);
    const auto ys = FiniteSpace::numbered("y", 2);
    const auto conds = d1_supports();
    EXPECT_EQ(mixture_lower_value(ProbMeasure::uniform(ys), conds, Subset::parse(xs, "x1")), q(1, 2));
    EXPECT_EQ(mixture_lower_value(ProbMeasure::point(ys, 1), conds, Subset::parse(xs, "x1")), q(0));
    const auto d1 = testing::fixture_d1();
    EXPECT_EQ(mixture_lower_function(d1.p, conds), belief_from_mapping(d1.p, d1.gamma));

    Gen gen(97);
    const SetFunction same = gen.min_envelope(xs);
    const std::vector<SetFunction> identical = {same, same};
    EXPECT_EQ(mixture_lower_function(gen.measure(ys), identical), same);

    EXPECT_THROW(mixture_lower_value(ProbMeasure::uniform(ys), std::vector<SetFunction>{same}, Subset::full(xs)),
                 InvalidInput);
    EXPECT_THROW(mixture_lower_value(ProbMeasure::uniform(ys), conds, Subset::full(ys)), InvalidInput);
    const std::vector<SetFunction> unnormalized = {SetFunction(xs), same};
    EXPECT_THROW(mixture_lower_function(ProbMeasure::uniform(ys), unnormalized), InvalidInput);
}

TEST(Mixture, ReducedEqualsMixtureOnRandomInputs)
{
    Gen gen(101);
    for (int trial = 0; trial < 40; ++trial) {
        const auto ys = FiniteSpace::numbered("y", static_cast<std::size_t>(gen.integer(1, 3)));
        const auto xs = FiniteSpace::numbered("x", static_cast<std::size_t>(gen.integer(1, 3)));
        const ProbMeasure p = gen.measure(ys);
        const EnvelopeEvidence ev(SetFunction::of_measure(p), gen.conditionals(ys, xs));
        ASSERT_EQ(reduced_lower_function(ev), mixture_lower_function(p, ev.conditionals()));
    }
}

TEST(Support, Examples)
{
    const auto d1 = testing::fixture_d1();
    EXPECT_EQ(support_lower_value(testing::fixture_e1(), d1.gamma, Subset::parse(d1.x, "x1")), q(1, 4));

    const auto d2 = testing::fixture_d2();
    EXPECT_EQ(support_lower_function(SetFunction::of_measure(d2.p), d2.gamma), belief_from_mapping(d2.p, d2.gamma));

    const auto ys = FiniteSpace::numbered("y", 2);
    const MultivaluedMap everything(ys, d1.x, {Subset::full(d1.x), Subset::full(d1.x)});
    for (Mask a = 0; a < d1.x.full_mask(); ++a) {
        EXPECT_EQ(support_lower_value(testing::fixture_e1(), everything, Subset(d1.x, a)), q(0));
    }

    const auto y3 = FiniteSpace::numbered("y", 3);
    const auto x3 = FiniteSpace::numbered("x", 3);
    const MultivaluedMap g3(y3, x3, {Subset(x3, 1), Subset(x3, 2), Subset(x3, 4)});
    EXPECT_THROW(support_lower_value(testing::fixture_m1(), g3, Subset::full(x3)), DomainError);
    EXPECT_THROW(support_lower_function(testing::fixture_m1(), g3), DomainError);
}

TEST(Support, ReducedEqualsPreimageFormulaOnRandomInputs)
{
    Gen gen(103);
    for (int trial = 0; trial < 40; ++trial) {
        const auto ys = FiniteSpace::numbered("y", static_cast<std::size_t>(gen.integer(1, 3)));
        const auto xs = FiniteSpace::numbered("x", static_cast<std::size_t>(gen.integer(1, 3)));
        const SetFunction lower = gen.min_envelope(ys);
        const MultivaluedMap g = gen.mapping(ys, xs);
        std::vector<SetFunction> conds;
        for (std::size_t y = 0; y < ys.size(); ++y) {
            conds.push_back(simple_support(g.image(y)));
        }
        const EnvelopeEvidence ev(lower, conds);
        const SetFunction support = support_lower_function(lower, g);
        ASSERT_EQ(reduced_lower_function(ev), support);
        for (Mask a = 0; a < xs.subset_count(); ++a) {
            ASSERT_EQ(support[a], lower[g.preimage_within(Subset(xs, a)).mask()]);
        }

        const ProbMeasure p = gen.measure(ys);
        const SetFunction from_measure = support_lower_function(SetFunction::of_measure(p), g);
        for (Mask a = 0; a < xs.subset_count(); ++a) {
            ASSERT_EQ(from_measure[a], testing::belief_oracle(p, g, a));
        }
    }
}

TEST(Preservation, MixturesKeepMonotonicity)
{
    Gen gen(107);
    for (int trial = 0; trial < 60; ++trial) {
        const auto ys = FiniteSpace::numbered("y", static_cast<std::size_t>(gen.integer(1, 3)));
        const auto xs = FiniteSpace::numbered("x", static_cast<std::size_t>(gen.integer(1, 4)));
        std::vector<SetFunction> beliefs;
        std::vector<SetFunction> envelopes;
        for (std::size_t y = 0; y < ys.size(); ++y) {
            beliefs.push_back(gen.belief(xs));
            envelopes.push_back(gen.two_monotone_envelope(xs));
        }
        const ProbMeasure p = gen.measure(ys);
        const SetFunction mixed_beliefs = mixture_lower_function(p, beliefs);
        EXPECT_TRUE(is_belief_function(mixed_beliefs));
        EXPECT_TRUE(is_r_monotone(mixed_beliefs, 3).holds);
        EXPECT_TRUE(is_r_monotone(mixture_lower_function(p, envelopes), 2).holds);
    }
}

TEST(Preservation, SupportKeepsMonotonicity)
{
    Gen gen(109);
    for (int trial = 0; trial < 60; ++trial) {
        const auto ys = FiniteSpace::numbered("y", static_cast<std::size_t>(gen.integer(1, 4)));
        const auto xs = FiniteSpace::numbered("x", static_cast<std::size_t>(gen.integer(1, 4)));
        const SetFunction two = gen.two_monotone_envelope(ys);
        const MultivaluedMap g = gen.mapping(ys, xs);
        EXPECT_TRUE(is_r_monotone(support_lower_function(two, g), 2).holds);
        const SetFunction belief = gen.belief(ys);
        EXPECT_TRUE(is_r_monotone(support_lower_function(belief, g), 3).holds);
    }
}

TEST(Preservation, N1CounterCase)
{
    // Identity-like embedding of Y into X keeps N1's violating pair visible.
    const SetFunction n1 = testing::fixture_n1();
    const auto xs = FiniteSpace::numbered("x", 4);
    std::vector<Subset> images;
    for (std::size_t i = 0; i < 4; ++i) {
        images.push_back(Subset::singleton(xs, i));
    }
    const MultivaluedMap g(n1.space(), xs, images);
    const SetFunction lam = support_lower_function(n1, g);
    const MonotoneCheck check = is_r_monotone(lam, 2);
    EXPECT_FALSE(check.holds);
    EXPECT_EQ(subset_name(xs, check.witness[0]), "x1,x3");
    EXPECT_EQ(subset_name(xs, check.witness[1]), "x1,x4");
}

} // namespace
} // namespace lowprob
