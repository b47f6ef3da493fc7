/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <posat/saturation.hh>
#include <posat/errors.hh>

#include "oracles.hh"

#include <doctest.h>

#include <random>
#include <vector>

using namespace posat;
using std::vector;

TEST_CASE("canonical set order enumeration")
{
    CHECK(all_sets_in_order(3) == vector<SetBits>{ 0, 1, 2, 4, 3, 5, 6, 7 });
    CHECK(all_sets_in_order(10).size() == 1024u);
}

TEST_CASE("p-freeness")
{
    CHECK(is_p_free(Family::of(2, { {}, { 1 }, { 1, 2 } }), diamond()));
    CHECK(! is_p_free(Family::of(2, { {}, { 1 }, { 2 }, { 1, 2 } }), diamond()));
    CHECK(is_p_free(Family::of(3, { { 3 }, { 1, 3 }, { 2, 3 } }), diamond()));
}

TEST_CASE("chain families")
{
    CHECK(chain_family(1) == Family::of(1, { {}, { 1 } }));
    CHECK(chain_family(3) == Family::of(3, { {}, { 1 }, { 1, 2 }, { 1, 2, 3 } }));
    CHECK_THROWS_AS(chain_family(0), ParameterError);
    for (int n = 1 ; n <= 10 ; ++n) {
        auto c = chain_family(n);
        CHECK(c.size() == n + 1);
        for (int i = 0 ; i + 1 < c.size() ; ++i)
            CHECK(is_proper_subset(c[i], c[i + 1]));
    }
}

TEST_CASE("a maximal chain is diamond-saturated")
{
    for (int n = 2 ; n <= 8 ; ++n)
        CHECK(std::holds_alternative<Saturated>(saturation_verdict(chain_family(n), diamond())));
}

TEST_CASE("verdict examples")
{
    auto verdict = saturation_verdict(Family::of(2, { { 1 } }), diamond());
    REQUIRE(std::holds_alternative<NotSaturated>(verdict));
    CHECK(std::get<NotSaturated>(verdict).missing == 0);

    CHECK(std::holds_alternative<Saturated>(saturation_verdict(Family::of(5, { {} }), builtin(BuiltinPattern::C2))));
    CHECK(std::holds_alternative<Saturated>(saturation_verdict(Family::of(5, { { 1, 2, 3, 4, 5 } }), builtin(BuiltinPattern::C2))));

    auto power = Family::of(2, { {}, { 1 }, { 2 }, { 1, 2 } });
    auto copy = saturation_verdict(power, diamond());
    REQUIRE(std::holds_alternative<ContainsCopy>(copy));
    CHECK(is_induced_embedding(diamond(), std::get<ContainsCopy>(copy).witness));
}

TEST_CASE("first failure is the canonically first absent set")
{
    // {1,2} alone: ∅ completes nothing, and neither does anything else
    auto verdict = saturation_verdict(Family::of(3, { { 1, 2 } }), diamond());
    REQUIRE(std::holds_alternative<NotSaturated>(verdict));
    CHECK(std::get<NotSaturated>(verdict).missing == 0);

    // ∅ present: {1} is the first absent set and completes nothing
    auto second = saturation_verdict(Family::of(3, { {}, { 2, 3 } }), diamond());
    REQUIRE(std::holds_alternative<NotSaturated>(second));
    CHECK(std::get<NotSaturated>(second).missing == 0b001);
}

TEST_CASE("scan limit")
{
    CHECK_THROWS_AS(saturation_verdict(Family(23), diamond()), GroundTooLarge);
    ScanLimits small;
    small.max_ground_size = 4;
    CHECK_THROWS_AS(saturation_verdict(chain_family(5), diamond(), small), GroundTooLarge);
}

TEST_CASE("verdicts agree with the definition")
{
    std::mt19937 rng(31337);
    vector<PatternPoset> patterns = { diamond(), builtin(BuiltinPattern::C2), builtin(BuiltinPattern::V), antichain(2) };
    int saturated_seen = 0;
    for (int trial = 0 ; trial < 1500 ; ++trial) {
        int n = 1 + trial % 4;
        auto sets = oracle::random_family(rng, n, 8);
        Family f(n, sets);
        for (auto & p : patterns) {
            auto verdict = saturation_verdict(f, p);
            bool expected = oracle::is_saturated(n, f.sets(), p);
            CHECK(std::holds_alternative<Saturated>(verdict) == expected);
            CHECK(std::holds_alternative<ContainsCopy>(verdict) == oracle::has_induced_copy(f.sets(), p));
            if (auto missing = std::get_if<NotSaturated>(&verdict)) {
                CHECK(! f.contains(missing->missing));
                CHECK(! completes_copy(f, SetWord(n, missing->missing), p));
            }
            if (expected) {
                ++saturated_seen;
                for (SetBits s = 0 ; s <= full_set(n) ; ++s)
                    if (! f.contains(s))
                        CHECK(std::holds_alternative<ContainsCopy>(saturation_verdict(f.with(s), p)));
            }
        }
    }
    CHECK(saturated_seen > 0);
}

TEST_CASE("worker count does not change the verdict")
{
    std::mt19937 rng(8);
    ScanLimits four;
    four.workers = 4;
    for (int trial = 0 ; trial < 200 ; ++trial) {
        Family f(6, oracle::random_family(rng, 6, 10));
        auto one = saturation_verdict(f, diamond()), many = saturation_verdict(f, diamond(), four);
        CHECK(one.index() == many.index());
        if (auto m = std::get_if<NotSaturated>(&one))
            CHECK(m->missing == std::get<NotSaturated>(many).missing);
    }
}
