/* vim: set sw=4 sts=4 et foldmethod=syntax : */

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <posat/commands.hh>
#include <posat/diamond_lab.hh>
#include <posat/embedding.hh>
#include <posat/pair_systems.hh>
#include <posat/satnum.hh>
#include <posat/saturation.hh>

#include "oracles.hh"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace posat;
using std::string;
using std::vector;

namespace
{
    using Clock = std::chrono::steady_clock;

    // Pinned limits. Values are compared exactly; only wall time has a tolerance.
    constexpr double chain_seconds = 30.0;
    constexpr double bounds_stretch_seconds = 600.0;
    constexpr double oracle_seconds = 120.0;
    constexpr double lab_seconds = 600.0;
    constexpr double f_seconds = 600.0;
    constexpr double embedding_seconds = 60.0;
    constexpr int bounds_target_n = 4, bounds_stretch_n = 5;
    constexpr int random_members = 100;
    constexpr int embedding_instances = 10'000;
    constexpr std::uint64_t seed = 20240101;

    struct Outcome
    {
        bool pass = true;
        std::ostringstream detail;

        auto fail(const string & why) -> void
        {
            if (pass)
                detail << "FIRST FAILURE: " << why << "; ";
            pass = false;
        }
    };

    auto elapsed(Clock::time_point start) -> double
    {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }

    auto seconds_text(double s) -> string
    {
        char buffer[32];
        std::snprintf(buffer, sizeof(buffer), "%.2f s", s);
        return buffer;
    }

    auto check_time(Outcome & o, Clock::time_point start, double limit) -> void
    {
        double s = elapsed(start);
        o.detail << seconds_text(s) << " (limit " << seconds_text(limit) << ")";
        if (s >= limit)
            o.fail("over time");
    }

    auto chain_saturation() -> Outcome
    {
        Outcome o;
        auto start = Clock::now();
        for (int n = 2 ; n <= 8 ; ++n) {
            auto verdict = saturation_verdict(chain_family(n), diamond());
            if (! std::holds_alternative<Saturated>(verdict))
                o.fail("chain on [" + std::to_string(n) + "] is not saturated");
        }
        o.detail << "n = 2..8 saturated, so sat <= n + 1 there; ";
        check_time(o, start, chain_seconds);
        return o;
    }

    auto two_sided_bound() -> Outcome
    {
        Outcome o;
        auto start = Clock::now();
        for (int n = 1 ; n <= bounds_stretch_n ; ++n) {
            SearchBudget budget;
            budget.max_seconds = bounds_stretch_seconds;
            auto c = sat_number(n, diamond(), budget);
            int lower = (n + 1 + 4) / 5;
            o.detail << "sat(" << n << ")=" << c.value << " in [" << lower << "," << n + 1 << "]; ";
            if (! c.exhausted)
                o.fail("search at n=" + std::to_string(n) + " did not finish");
            if (c.value < lower || c.value > n + 1)
                o.fail("value out of range at n=" + std::to_string(n));
            if (! is_saturated(c.witness, diamond()) || c.witness.size() != c.value)
                o.fail("witness does not certify the value at n=" + std::to_string(n));
            if (n == bounds_target_n)
                o.detail << "target reached at " << seconds_text(elapsed(start)) << "; ";
        }
        check_time(o, start, bounds_stretch_seconds);
        return o;
    }

    auto oracle_equivalence() -> Outcome
    {
        Outcome o;
        auto start = Clock::now();
        for (int n = 1 ; n <= 3 ; ++n) {
            auto naive = oracle::naive_min_saturated(n, diamond());
            auto c = sat_number(n, diamond());
            auto families = enumerate_min_saturated(n, diamond());

            std::set<vector<SetBits>> keys;
            for (auto & f : families)
                keys.insert(oracle::brute_force_canonical(n, f.sets()));
            o.detail << "n=" << n << ": " << c.value << " with " << families.size() << " orbits; ";
            if (c.value != naive.minimum)
                o.fail("value differs at n=" + std::to_string(n));
            if (keys != naive.orbit_keys || keys.size() != families.size())
                o.fail("minimum families differ at n=" + std::to_string(n));
        }
        check_time(o, start, oracle_seconds);
        return o;
    }

    // All saturated families on [n], one per orbit, across every size.
    auto all_saturated(int n) -> vector<Family>
    {
        vector<Family> result;
        for (int k = 0 ; ; ++k) {
            auto level = search_level(n, diamond(), k);
            if (level.free_families == 0)
                return result;
            result.insert(result.end(), level.saturated.begin(), level.saturated.end());
        }
    }

    auto lemma_suite() -> Outcome
    {
        Outcome o;
        auto start = Clock::now();
        std::map<string, int> counts;
        int families = 0;
        auto run = [&] (const Family & f) {
            for (auto & r : run_lab(f)) {
                ++counts[to_string(r.status)];
                if (r.status == LemmaStatus::Fail)
                    o.fail(r.check + " fails on\n" + format_family(f));
            }
        };
        for (int n = 1 ; n <= 4 ; ++n)
            for (auto & f : enumerate_min_saturated(n, diamond())) {
                ++families;
                run(f);
            }
        o.detail << families << " minimum families:";
        for (auto & [status, count] : counts)
            o.detail << " " << status << "=" << count;

        // the minimum families all hold an extreme set, so also sweep every saturated family
        counts.clear();
        int swept = 0;
        for (int n = 1 ; n <= 4 ; ++n)
            for (auto & f : all_saturated(n)) {
                ++swept;
                run(f);
            }
        o.detail << "; all " << swept << " saturated families:";
        for (auto & [status, count] : counts)
            o.detail << " " << status << "=" << count;
        o.detail << "; ";
        check_time(o, start, lab_seconds);
        return o;
    }

    auto f_checks() -> Outcome
    {
        Outcome o;
        auto start = Clock::now();
        for (auto [n, m] : vector<std::pair<int, int>>{ { 3, 1 }, { 4, 1 }, { 5, 1 }, { 5, 2 }, { 6, 2 }, { 7, 2 }, { 7, 3 } }) {
            auto r = f_bound_check(n, m);
            if (r.status != LemmaStatus::Pass)
                o.fail("bound check at (" + std::to_string(n) + "," + std::to_string(m) + ") is " + to_string(r.status));
        }
        o.detail << "bound checks pass on 7 pairs; ";

        auto empty = f_exact(3, 1);
        if (empty.finite)
            o.fail("f(3,1) is finite");
        auto five = f_exact(5, 2);
        if (! five.finite || ! five.witness)
            o.fail("f(5,2) has no witness");
        else {
            o.detail << "f(3,1)=infinite, f(5,2)=" << five.value << "; ";
            if (! in_Lstar(*five.witness).in_class)
                o.fail("f(5,2) witness is not a member");
            if (five.witness->low.united(five.witness->high).size() != five.value)
                o.fail("f(5,2) witness size differs from the value");
            if (five.value > 6 || five.value < 1)
                o.fail("f(5,2) outside 1..6");
        }
        check_time(o, start, f_seconds);
        return o;
    }

    auto restriction_round_trips() -> Outcome
    {
        Outcome o;
        vector<PairSystem> corpus;
        for (auto [n, m] : vector<std::pair<int, int>>{ { 3, 1 }, { 4, 1 }, { 5, 1 }, { 5, 2 }, { 6, 2 } })
            if (auto f = f_exact(n, m) ; f.witness)
                corpus.push_back(*f.witness);
        int exact_witnesses = static_cast<int>(corpus.size());

        std::mt19937_64 rng(seed);
        int draws = 0;
        while (static_cast<int>(corpus.size()) < exact_witnesses + random_members && draws < 10 * random_members) {
            int n = 5 + draws % 2;
            ++draws;
            if (auto ps = sample_lstar(rng, GroundSet::whole(n), 2, 20000))
                corpus.push_back(*ps);
        }

        int applicable = 0, violations = 0;
        for (auto & ps : corpus) {
            auto r = check_restriction(ps);
            if (r.status == LemmaStatus::Fail) {
                ++violations;
                o.fail("restriction fails on\n" + format_pair_system(ps));
            }
            else if (r.status == LemmaStatus::Pass)
                ++applicable;
            else if (r.status != LemmaStatus::Vacuous)
                o.fail("corpus member outside the class");
        }
        o.detail << corpus.size() << " members (" << exact_witnesses << " exact witnesses, "
            << corpus.size() - exact_witnesses << " sampled), " << applicable << " with |X| >= 2m + t + 1, "
            << violations << " violations";
        if (static_cast<int>(corpus.size()) - exact_witnesses < random_members)
            o.fail("sampling fell short");
        if (applicable == 0)
            o.fail("no member reached the applicable range");
        return o;
    }

    auto embedding_oracle() -> Outcome
    {
        Outcome o;
        auto start = Clock::now();
        std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
        std::bernoulli_distribution edge(0.5);
        int disagreements = 0, found = 0;
        for (int trial = 0 ; trial < embedding_instances ; ++trial) {
            int n = 1 + trial % 4, k = 1 + (trial / 4) % 4;
            vector<ElementPair> pairs;
            for (int a = 0 ; a < k ; ++a)
                for (int b = a + 1 ; b < k ; ++b)
                    if (edge(rng))
                        pairs.emplace_back(a, b);
            auto pattern = PatternPoset::make(k, pairs);
            Family host(n, oracle::random_family(rng, n, 6));

            auto copy = find_induced_copy(host, pattern);
            bool expected = oracle::has_induced_copy(host.sets(), pattern);
            bool valid = ! copy || is_induced_embedding(pattern, *copy);
            if (copy.has_value() != expected || ! valid)
                ++disagreements;
            found += copy.has_value();
        }
        o.detail << embedding_instances << " instances, " << found << " with a copy, " << disagreements << " disagreements; ";
        if (disagreements)
            o.fail("backtracker and oracle disagree");
        check_time(o, start, embedding_seconds);
        return o;
    }

    auto determinism() -> Outcome
    {
        Outcome o;
        CommandOptions one, four;
        four.budget.workers = 4;
        int compared = 0;
        auto same = [&] (const std::function<CommandResult (const CommandOptions &)> & command, const string & what) {
            ++compared;
            if (render_json(command(one).report) != render_json(command(four).report))
                o.fail(what + " differs between 1 and 4 workers");
        };
        for (int n = 1 ; n <= bounds_stretch_n ; ++n)
            same([n] (const CommandOptions & c) { return cmd_satnum(n, "diamond", c); }, "satnum " + std::to_string(n));
        for (auto [n, m] : vector<std::pair<int, int>>{ { 3, 1 }, { 4, 1 }, { 5, 1 }, { 5, 2 }, { 6, 2 }, { 7, 2 }, { 7, 3 } }) {
            bool exact = (n == 3 && m == 1) || (n == 5 && m == 2);
            same([=] (const CommandOptions & c) { return cmd_fcheck(n, m, exact, c); },
                    "fcheck " + std::to_string(n) + " " + std::to_string(m));
        }
        o.detail << compared << " report pairs byte-identical";
        return o;
    }
}

auto main() -> int
{
    struct Criterion
    {
        int number;
        string name;
        std::function<Outcome ()> run;
    };

    vector<Criterion> criteria = {
        { 1, "chain saturation", chain_saturation },
        { 2, "two-sided bound on exact values", two_sided_bound },
        { 3, "agreement with the all-families oracle", oracle_equivalence },
        { 4, "diamond check suite", lemma_suite },
        { 5, "pair-system bound and exact values", f_checks },
        { 6, "restriction round trips", restriction_round_trips },
        { 7, "embedding oracle", embedding_oracle },
        { 8, "worker-independent reports", determinism }
    };

    int failures = 0;
    for (auto & c : criteria) {
        Outcome o;
        try {
            o = c.run();
        }
        catch (const std::exception & e) {
            o.fail(string("exception: ") + e.what());
        }
        failures += ! o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.number << " " << c.name << ": " << o.detail.str() << std::endl;
    }
    std::cout << (failures ? "FAILED " : "ALL PASSED ") << criteria.size() - failures << "/" << criteria.size() << std::endl;
    return failures ? 1 : 0;
}
