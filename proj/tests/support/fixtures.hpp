#ifndef LOWPROB_TESTS_FIXTURES_HPP
#define LOWPROB_TESTS_FIXTURES_HPP

// The canonical small instances, built in code so tests do not depend on the
// JSON parser. The files under fixtures/ describe the same objects.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "lowprob/dempster.hpp"
#include "lowprob/set_function.hpp"

namespace lowprob::testing {

inline Rational q(long num, long den = 1)
{
    return Rational(num, den);
}

inline Subset set_of(const FiniteSpace& space, const std::string& name)
{
    return Subset::parse(space, name);
}

/// Set function from (subset name, value) pairs; unlisted subsets get zero.
inline SetFunction table(const FiniteSpace& space, std::initializer_list<std::pair<const char*, Rational>> entries)
{
    std::vector<Rational> values(space.subset_count());
    for (const auto& [name, value] : entries) {
        values[Subset::parse(space, name).mask()] = value;
    }
    return SetFunction(space, std::move(values));
}

inline MultivaluedMap mapping(const FiniteSpace& ys, const FiniteSpace& xs, std::initializer_list<const char*> images)
{
    std::vector<Subset> out;
    for (const char* name : images) {
        out.push_back(Subset::parse(xs, name));
    }
    return MultivaluedMap(ys, xs, std::move(out));
}

struct DempsterInstance {
    FiniteSpace x;
    FiniteSpace y;
    ProbMeasure p;
    MultivaluedMap gamma;
};

/// X={x1,x2}, Y={y1,y2}, p uniform, images {x1} and X.
inline DempsterInstance fixture_d1()
{
    const auto xs = FiniteSpace::numbered("x", 2);
    const auto ys = FiniteSpace::numbered("y", 2);
    return {xs, ys, ProbMeasure::uniform(ys), mapping(ys, xs, {"x1", "x1,x2"})};
}

/// X, Y of size 3, p = (1/2, 1/3, 1/6), images {x1}, {x2,x3}, X.
inline DempsterInstance fixture_d2()
{
    const auto xs = FiniteSpace::numbered("x", 3);
    const auto ys = FiniteSpace::numbered("y", 3);
    return {xs, ys, ProbMeasure(ys, {q(1, 2), q(1, 3), q(1, 6)}), mapping(ys, xs, {"x1", "x2,x3", "x1,x2,x3"})};
}

/// Lower envelope on {y1,y2}: 1/4, 1/2 on the singletons.
inline SetFunction fixture_e1()
{
    const auto ys = FiniteSpace::numbered("y", 2);
    return table(ys, {{"y1", q(1, 4)}, {"y2", q(1, 2)}, {"y1,y2", q(1)}});
}

/// Dominated (only by the uniform measure) but not an envelope.
inline SetFunction fixture_m1(const FiniteSpace& space = FiniteSpace::numbered("y", 3))
{
    const std::string a = space.label(0);
    const std::string b = space.label(1);
    const std::string c = space.label(2);
    return table(space, {{(a + "," + b).c_str(), q(2, 3)},
                         {(a + "," + c).c_str(), q(2, 3)},
                         {(b + "," + c).c_str(), q(2, 3)},
                         {(a + "," + b + "," + c).c_str(), q(1)}});
}

/// Pointwise minimum of (1/2,1/2,0,0) and (0,0,1/2,1/2): an envelope that is
/// not 2-monotone.
inline SetFunction fixture_n1()
{
    const auto ys = FiniteSpace::numbered("y", 4);
    return table(ys, {{"y1,y3", q(1, 2)},
                      {"y1,y4", q(1, 2)},
                      {"y2,y3", q(1, 2)},
                      {"y2,y4", q(1, 2)},
                      {"y1,y2,y3", q(1, 2)},
                      {"y1,y2,y4", q(1, 2)},
                      {"y1,y3,y4", q(1, 2)},
                      {"y2,y3,y4", q(1, 2)},
                      {"y1,y2,y3,y4", q(1)}});
}

/// Not dominated: singleton lower values 3/5 + 3/5 > 1.
inline SetFunction fixture_b1()
{
    const auto ys = FiniteSpace::numbered("y", 2);
    return table(ys, {{"y1", q(3, 5)}, {"y2", q(3, 5)}, {"y1,y2", q(1)}});
}

} // namespace lowprob::testing

#endif
