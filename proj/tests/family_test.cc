/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <posat/family.hh>
#include <posat/errors.hh>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

using namespace posat;
using std::vector;

namespace
{
    auto random_family(std::mt19937 & rng, int n, int max_size) -> Family
    {
        std::uniform_int_distribution<int> size_dist(0, max_size);
        std::uniform_int_distribution<SetBits> set_dist(0, full_set(n));
        vector<SetBits> sets;
        int k = size_dist(rng);
        for (int i = 0 ; i < k ; ++i)
            sets.push_back(set_dist(rng));
        return Family(n, sets);
    }

    auto random_permutation(std::mt19937 & rng, int n) -> vector<int>
    {
        vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        return perm;
    }

    // Independent check: some permutation maps one family onto the other.
    auto brute_force_isomorphic(const Family & f, const Family & g) -> bool
    {
        if (f.ground_size() != g.ground_size() || f.size() != g.size())
            return false;
        vector<int> perm(f.ground_size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (apply_permutation(f, perm) == g)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }
}

TEST_CASE("families keep canonical order and drop duplicates")
{
    auto f = Family::of(3, { { 1, 2 }, {}, { 3 }, { 1 }, { 3 } });
    CHECK(f.sets() == vector<SetBits>{ 0b000, 0b001, 0b100, 0b011 });
    CHECK(f.contains(0b100));
    CHECK(! f.contains(0b010));
    CHECK(f.with(0b010).size() == 5);
    CHECK(f.without(0b000).size() == 3);
    CHECK_THROWS_AS(Family(2, { 0b100 }), IndexError);
    CHECK_THROWS_AS(Family(0), IndexError);
    CHECK_THROWS_AS(Family(64), IndexError);
    CHECK_NOTHROW(Family(63, { full_set(63) }));
    CHECK_THROWS_AS(SetWord::of(2, { 3 }), IndexError);
    CHECK(SetWord::of(4, { 1, 4 }).elements() == vector<int>{ 1, 4 });
}

TEST_CASE("maximal sets")
{
    CHECK(maximal_sets(Family::of(2, { {}, { 1 }, { 1, 2 } })) == Family::of(2, { { 1, 2 } }));
    CHECK(maximal_sets(Family::of(2, { { 1 }, { 2 } })) == Family::of(2, { { 1 }, { 2 } }));
    CHECK(maximal_sets(Family::of(3, { { 3 }, { 1, 3 }, { 2, 3 } })) == Family::of(3, { { 1, 3 }, { 2, 3 } }));
}

TEST_CASE("minimal sets")
{
    CHECK(minimal_sets(Family::of(2, { {}, { 1 }, { 1, 2 } })) == Family::of(2, { {} }));
    CHECK(minimal_sets(Family::of(3, { { 1, 3 }, { 2, 3 }, { 1, 2, 3 } })) == Family::of(3, { { 1, 3 }, { 2, 3 } }));
    auto antichain = Family::of(3, { { 1 }, { 2, 3 } });
    CHECK(minimal_sets(antichain) == antichain);
}

TEST_CASE("extremal sets form antichains")
{
    std::mt19937 rng(17);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        auto f = random_family(rng, 1 + trial % 6, 10);
        auto top = maximal_sets(f), bottom = minimal_sets(f);
        CHECK(is_antichain(top));
        CHECK(is_antichain(bottom));
        if (! f.empty()) {
            CHECK(top.size() >= 1);
            CHECK(bottom.size() >= 1);
        }
        for (auto s : top)
            CHECK(f.contains(s));
    }
}

TEST_CASE("canonical form examples")
{
    CHECK(canonical_form(Family::of(2, { { 2 } })) == Family::of(2, { { 1 } }));
    CHECK(canonical_form(Family::of(2, { { 1 }, { 2 } })) == Family::of(2, { { 1 }, { 2 } }));
    CHECK(canonical_form(Family(4)) == Family(4));
    CHECK(canonical_labeling(Family::of(3, { { 1 } })).exact);
}

TEST_CASE("canonical form is constant on orbits")
{
    std::mt19937 rng(20240611);
    for (int trial = 0 ; trial < 1000 ; ++trial) {
        int n = 1 + trial % 6;
        auto f = random_family(rng, n, 9);
        auto perm = random_permutation(rng, n);
        auto canon = canonical_form(f);
        CHECK(canonical_form(apply_permutation(f, perm)) == canon);
        CHECK(canonical_form(canon) == canon);
        CHECK(brute_force_isomorphic(f, canon));

        auto labeling = canonical_labeling(f);
        CHECK(apply_permutation(f, labeling.perm) == labeling.image);
    }
}

TEST_CASE("canonical forms separate orbits")
{
    std::mt19937 rng(5);
    for (int trial = 0 ; trial < 600 ; ++trial) {
        int n = 2 + trial % 4;
        auto f = random_family(rng, n, 5), g = random_family(rng, n, 5);
        if (f.size() != g.size())
            continue;
        CHECK((canonical_form(f) == canonical_form(g)) == brute_force_isomorphic(f, g));
    }
}

TEST_CASE("highly symmetric families canonicalise quickly")
{
    vector<SetBits> everything;
    for (SetBits s = 0 ; s <= full_set(12) ; ++s)
        everything.push_back(s);
    Family power_set(12, everything);
    auto labeling = canonical_labeling(power_set);
    CHECK(labeling.exact);
    CHECK(labeling.image == power_set);

    auto singletons = Family::of(12, { { 1 }, { 2 }, { 3 }, { 4 }, { 5 }, { 6 }, { 7 }, { 8 }, { 9 }, { 10 }, { 11 }, { 12 } });
    CHECK(canonical_form(singletons) == singletons);
}

TEST_CASE("above the exact limit the labelling is flagged")
{
    auto f = Family::of(14, { { 1, 2 }, { 3 } });
    auto labeling = canonical_labeling(f);
    CHECK(! labeling.exact);
    CHECK(canonical_labeling(f, 14).exact);
    CHECK(labeling.image.size() == 2);
}

TEST_CASE("family text format")
{
    auto f = Family::of(3, { {}, { 1 }, { 1, 2 }, { 1, 2, 3 } });
    CHECK(format_family(f) == "n=3\n-\n1\n1 2\n1 2 3\n");
    CHECK(parse_family("# a chain\nn=3\n1 2\n-\n\n1 2 3\n1\n") == f);

    std::mt19937 rng(99);
    for (int trial = 0 ; trial < 200 ; ++trial) {
        auto g = random_family(rng, 1 + trial % 8, 12);
        CHECK(parse_family(format_family(g)) == g);
    }
}

TEST_CASE("family parse errors carry line numbers")
{
    auto line_of = [] (const std::string & text) {
        try {
            parse_family(text);
        }
        catch (const ParseError & e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("1 2\n") == 1);
    CHECK(line_of("n=3\n1\n4\n") == 3);
    CHECK(line_of("n=3\n2 1\n") == 2);
    CHECK(line_of("n=3\n1\n1\n") == 3);
    CHECK(line_of("n=3\nx\n") == 2);
    CHECK(line_of("n=0\n") == 1);
    CHECK(line_of("# nothing\n") == 1);
}
