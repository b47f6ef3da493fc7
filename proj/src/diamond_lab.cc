/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <posat/diamond_lab.hh>
#include <posat/embedding.hh>
#include <posat/pair_systems.hh>

#include <algorithm>
#include <optional>
#include <thread>

using std::optional;
using std::string;
using std::vector;

namespace posat
{
    using std::to_string;

    namespace
    {
        constexpr int top_element = 3;

        auto first_diamond_below(const Family & f, SetBits top, const PatternPoset & shape) -> optional<DiamondBelow>
        {
            optional<DiamondBelow> result;
            for_each_induced_copy(f.sets(), f.ground_size(), shape, Pin{ top_element, top }, [&] (const Embedding & e) {
                    result = DiamondBelow{ e.assignment[0], e.assignment[1], e.assignment[2] };
                    return false;
                    });
            return result;
        }

        auto missed_by(const Family & f, int n) -> SetWord
        {
            SetBits used = 0;
            for (auto s : f)
                used |= s;
            return SetWord(n, full_set(n) & ~used);
        }

        auto fail_with(string check, string detail, const Family & f) -> LemmaReport
        {
            auto report = make_report(std::move(check), LemmaStatus::Fail, std::move(detail));
            report.counterexample = f;
            return report;
        }

        auto not_saturated(const Family & f, const ScanLimits & limits) -> optional<string>
        {
            auto verdict = saturation_verdict(f, diamond(), limits);
            if (std::holds_alternative<ContainsCopy>(verdict))
                return "the family contains a diamond";
            if (auto missing = std::get_if<NotSaturated>(&verdict))
                return "adding {" + format_set(missing->missing) + "} creates no diamond";
            return std::nullopt;
        }

        /// Diamond-saturated, with neither ∅ nor [n] present.
        auto standing_assumptions(const string & check, const Family & f, const ScanLimits & limits) -> optional<LemmaReport>
        {
            if (auto reason = not_saturated(f, limits))
                return make_report(check, LemmaStatus::PreconditionFailed, *reason);
            if (f.contains(0))
                return make_report(check, LemmaStatus::PreconditionFailed, "the empty set is a member");
            if (f.contains(full_set(f.ground_size())))
                return make_report(check, LemmaStatus::PreconditionFailed, "the full set is a member");
            return std::nullopt;
        }
    }

    auto derive(const Family & f, const ScanLimits & limits) -> DerivedStructures
    {
        int n = f.ground_size();
        check_scan_budget(n, limits);
        auto shape = diamond();
        auto everything = all_sets_in_order(n);

        vector<optional<DiamondBelow>> below(everything.size());
        auto scan = [&] (std::size_t start, std::size_t step) {
            for (std::size_t i = start ; i < everything.size() ; i += step)
                below[i] = first_diamond_below(f, everything[i], shape);
        };
        if (limits.workers <= 1)
            scan(0, 1);
        else {
            vector<std::thread> threads;
            for (int w = 0 ; w < limits.workers ; ++w)
                threads.emplace_back(scan, w, limits.workers);
            for (auto & t : threads)
                t.join();
        }

        vector<SetBits> a0;
        vector<DiamondBelow> witnesses;
        for (std::size_t i = 0 ; i < everything.size() ; ++i)
            if (below[i]) {
                a0.push_back(everything[i]);
                witnesses.push_back(*below[i]);
            }

        auto b = maximal_sets(f);
        Family a0_family(n, a0);
        auto a1 = minimal_sets(a0_family);
        vector<SetBits> a;
        for (auto x : a1)
            if (std::none_of(b.begin(), b.end(), [&] (SetBits s) { return is_subset(s, x); }))
                a.push_back(x);
        Family a_family(n, a);

        vector<Family> generators;
        vector<SetBits> all_generators;
        for (auto top : a_family) {
            vector<SetBits> mine;
            for_each_induced_copy(f.sets(), n, shape, Pin{ top_element, top }, [&] (const Embedding & e) {
                    for (int k = 0 ; k < top_element ; ++k)
                        mine.push_back(e.assignment[k]);
                    return true;
                    });
            all_generators.insert(all_generators.end(), mine.begin(), mine.end());
            generators.emplace_back(n, std::move(mine));
        }
        Family ga(n, all_generators);

        return DerivedStructures{ b, a0_family, witnesses, a1, a_family, generators, ga, missed_by(ga, n), missed_by(a_family, n) };
    }

    auto check_extreme_sets(const Family & f, const ScanLimits & limits) -> LemmaReport
    {
        const string check = "extreme-sets";
        if (auto reason = not_saturated(f, limits))
            return make_report(check, LemmaStatus::PreconditionFailed, *reason);
        int n = f.ground_size();
        if (! f.contains(0) && ! f.contains(full_set(n)))
            return make_report(check, LemmaStatus::Vacuous, "neither the empty set nor the full set is a member");
        if (f.size() >= n + 1)
            return make_report(check, LemmaStatus::Pass);
        return fail_with(check, "|F| = " + to_string(f.size()) + " < n + 1", f);
    }

    auto check_c2_saturated_union(const Family & f, const ScanLimits & limits) -> LemmaReport
    {
        if (auto r = standing_assumptions("c2-union", f, limits))
            return *r;
        return check_c2_saturated_union(f, derive(f, limits), limits);
    }

    auto check_c2_saturated_union(const Family & f, const DerivedStructures & d, const ScanLimits & limits) -> LemmaReport
    {
        const string check = "c2-union";
        if (auto r = standing_assumptions(check, f, limits))
            return *r;

        for (auto s : d.A)
            if (d.B.contains(s)) {
                auto report = fail_with(check, "A and B share a set", f);
                report.witness_sets.push_back(s);
                return report;
            }

        auto verdict = saturation_verdict(d.A.united(d.B), builtin(BuiltinPattern::C2), limits);
        if (auto copy = std::get_if<ContainsCopy>(&verdict)) {
            auto report = fail_with(check, "A u B contains a two-chain", f);
            report.witness_sets = copy->witness.assignment;
            return report;
        }
        if (auto missing = std::get_if<NotSaturated>(&verdict)) {
            auto report = fail_with(check, "A u B is not two-chain saturated", f);
            report.witness_sets.push_back(missing->missing);
            return report;
        }
        return make_report(check, LemmaStatus::Pass);
    }

    auto check_size_bounds(const Family & f, const ScanLimits & limits) -> LemmaReport
    {
        if (auto r = standing_assumptions("size-bounds", f, limits))
            return *r;
        return check_size_bounds(f, derive(f, limits), limits);
    }

    auto check_size_bounds(const Family & f, const DerivedStructures & d, const ScanLimits & limits) -> LemmaReport
    {
        const string check = "size-bounds";
        if (auto r = standing_assumptions(check, f, limits))
            return *r;
        int n = f.ground_size(), size = f.size();

        vector<LemmaReport> parts;
        if (d.B.empty())
            parts.push_back(make_report("b-side", LemmaStatus::Vacuous, "B is empty"));
        else {
            auto smallest = *std::min_element(d.B.begin(), d.B.end(), [] (SetBits a, SetBits b) { return cardinality(a) < cardinality(b); });
            if (cardinality(smallest) >= n - size)
                parts.push_back(make_report("b-side", LemmaStatus::Pass));
            else {
                auto report = fail_with("b-side", "a member of B has size " + to_string(cardinality(smallest)) + " < n - |F|", f);
                report.witness_sets.push_back(smallest);
                parts.push_back(std::move(report));
            }
        }

        if (d.A.empty())
            parts.push_back(make_report("a-side", LemmaStatus::Vacuous, "A is empty"));
        else {
            auto largest = *std::max_element(d.A.begin(), d.A.end(), [] (SetBits a, SetBits b) { return cardinality(a) < cardinality(b); });
            if (cardinality(largest) <= size)
                parts.push_back(make_report("a-side", LemmaStatus::Pass));
            else {
                auto report = fail_with("a-side", "a member of A has size " + to_string(cardinality(largest)) + " > |F|", f);
                report.witness_sets.push_back(largest);
                parts.push_back(std::move(report));
            }
        }

        auto report = combine_parts(check, std::move(parts));
        if (report.status == LemmaStatus::Fail)
            report.counterexample = f;
        return report;
    }

    auto check_element_counts(const Family & f, const ScanLimits & limits) -> LemmaReport
    {
        if (auto r = standing_assumptions("element-counts", f, limits))
            return *r;
        return check_element_counts(f, derive(f, limits), limits);
    }

    auto check_element_counts(const Family & f, const DerivedStructures & d, const ScanLimits & limits) -> LemmaReport
    {
        const string check = "element-counts";
        if (auto r = standing_assumptions(check, f, limits))
            return *r;
        if (2 * f.size() >= f.ground_size())
            return make_report(check, LemmaStatus::Vacuous, "|F| >= n/2");
        auto report = element_counts_from(f.ground_size(), f.size(), d);
        if (report.status == LemmaStatus::Fail)
            report.counterexample = f;
        return report;
    }

    auto element_counts_from(int n, int size, const DerivedStructures & d) -> LemmaReport
    {
        const string check = "element-counts";
        SetBits outside_some_b = 0, inside_some_a = 0;
        for (auto b : d.B)
            outside_some_b |= full_set(n) & ~b;
        for (auto a : d.A)
            inside_some_a |= a;
        int first = cardinality(outside_some_b), second = cardinality(outside_some_b & inside_some_a);

        string counts = "missed by some B: " + to_string(first) + " (need " + to_string(n + 1 - size) + "); also in some A: "
            + to_string(second) + " (need " + to_string(n + 1 - 2 * size) + ")";
        auto report = make_report(check, first >= n + 1 - size && second >= n + 1 - 2 * size ? LemmaStatus::Pass : LemmaStatus::Fail);
        if (report.status == LemmaStatus::Pass)
            report.notes.push_back(counts);
        else
            report.detail = counts;
        return report;
    }

    auto check_near_pairs(const Family & f, const ScanLimits & limits) -> LemmaReport
    {
        if (auto r = standing_assumptions("near-pairs", f, limits))
            return *r;
        return check_near_pairs(f, derive(f, limits), limits);
    }

    auto check_near_pairs(const Family & f, const DerivedStructures & d, const ScanLimits & limits) -> LemmaReport
    {
        const string check = "near-pairs";
        if (auto r = standing_assumptions(check, f, limits))
            return *r;
        int n = f.ground_size();
        for (int i = 0 ; i < n ; ++i) {
            SetBits bit = SetBits{1} << i;
            bool pair = std::any_of(f.begin(), f.end(), [&] (SetBits w) { return (w & bit) && f.contains(w & ~bit); });
            bool missed = std::any_of(d.B.begin(), d.B.end(), [&] (SetBits b) { return ! (b & bit); });
            if (! pair && ! missed) {
                auto report = fail_with(check, "element " + to_string(i + 1) + " has neither a near pair nor a B-member avoiding it", f);
                report.witness_element = i + 1;
                return report;
            }
        }
        return make_report(check, LemmaStatus::Pass);
    }

    auto check_w_equality(const Family & f, const ScanLimits & limits) -> LemmaReport
    {
        if (auto r = standing_assumptions("w-equality", f, limits))
            return *r;
        return check_w_equality(f, derive(f, limits), limits);
    }

    auto check_w_equality(const Family & f, const DerivedStructures & d, const ScanLimits & limits) -> LemmaReport
    {
        const string check = "w-equality";
        if (auto r = standing_assumptions(check, f, limits))
            return *r;
        int n = f.ground_size();

        vector<LemmaReport> parts;
        auto w_ga = missed_by(d.GA, n), w_a = missed_by(d.A, n);
        if (w_ga == w_a)
            parts.push_back(make_report("w-sets", LemmaStatus::Pass));
        else {
            auto report = fail_with("w-sets", "W from the generators is {" + format_set(w_ga.bits()) + "}, W from A is {"
                    + format_set(w_a.bits()) + "}", f);
            report.witness_sets = { w_ga.bits(), w_a.bits() };
            parts.push_back(std::move(report));
        }

        if (d.A.empty())
            parts.push_back(make_report("unions", LemmaStatus::Vacuous, "A is empty"));
        else {
            optional<SetBits> bad;
            for (int k = 0 ; k < d.A.size() && ! bad ; ++k) {
                auto & g = d.generators.at(k);
                bool found = false;
                for (auto p : g)
                    for (auto q : g)
                        found = found || (p | q) == d.A[k];
                if (! found)
                    bad = d.A[k];
            }
            if (! bad)
                parts.push_back(make_report("unions", LemmaStatus::Pass));
            else {
                auto report = fail_with("unions", "a member of A is not the union of two of its generators", f);
                report.witness_sets.push_back(*bad);
                parts.push_back(std::move(report));
            }
        }

        auto report = combine_parts(check, std::move(parts));
        if (report.status == LemmaStatus::Fail)
            report.counterexample = f;
        return report;
    }

    auto lower_bound_pipeline(const Family & f, const ScanLimits & limits) -> LemmaReport
    {
        if (auto reason = not_saturated(f, limits))
            return make_report("lower-bound", LemmaStatus::PreconditionFailed, *reason);
        return lower_bound_pipeline(f, derive(f, limits), limits);
    }

    auto lower_bound_pipeline(const Family & f, const DerivedStructures & d, const ScanLimits & limits) -> LemmaReport
    {
        const string check = "lower-bound";
        if (auto reason = not_saturated(f, limits))
            return make_report(check, LemmaStatus::PreconditionFailed, *reason);
        int n = f.ground_size(), size = f.size();

        vector<LemmaReport> parts;
        if (5 * size >= n + 1)
            parts.push_back(make_report("size", LemmaStatus::Pass));
        else
            parts.push_back(fail_with("size", "5|F| = " + to_string(5 * size) + " < n + 1", f));

        if (f.contains(0) || f.contains(full_set(n)))
            parts.push_back(make_report("structure", LemmaStatus::PreconditionFailed, "an extreme set is a member"));
        else if (4 * size > n)
            parts.push_back(make_report("structure", LemmaStatus::Vacuous, "|F| > n/4"));
        else
            parts.push_back(lower_bound_structure(f, d));

        auto report = combine_parts(check, std::move(parts));
        if (report.status == LemmaStatus::Fail)
            report.counterexample = f;
        return report;
    }

    auto lower_bound_structure(const Family & f, const DerivedStructures & d) -> LemmaReport
    {
        int n = f.ground_size(), size = f.size();
        SetBits rest = full_set(n) & ~d.W_ga.bits();
        if (2 * size + 1 > cardinality(rest))
            return fail_with("structure", "|[n] \\ W| < 2|F| + 1", f);

        vector<SetBits> trimmed;
        for (auto b : d.B)
            trimmed.push_back(b & rest);
        PairSystem ps(GroundSet(n, rest), size, d.GA, Family(n, trimmed));

        vector<LemmaReport> parts;
        auto tops = v(ps);
        if (tops == d.A)
            parts.push_back(make_report("tops", LemmaStatus::Pass));
        else {
            auto report = fail_with("tops", "v(GA, trimmed B) differs from A", f);
            for (auto s : tops.united(d.A))
                if (tops.contains(s) != d.A.contains(s))
                    report.witness_sets.push_back(s);
            parts.push_back(std::move(report));
        }

        auto membership = in_Lstar(ps);
        if (membership.in_class)
            parts.push_back(make_report("lstar", LemmaStatus::Pass));
        else {
            auto report = fail_with("lstar", "(GA, trimmed B) fails " + to_string(*membership.failed), f);
            report.witness_sets.push_back(membership.witness);
            parts.push_back(std::move(report));
        }
        return combine_parts("structure", std::move(parts));
    }

    auto run_lab(const Family & f, const ScanLimits & limits) -> vector<LemmaReport>
    {
        vector<LemmaReport> reports;
        reports.push_back(check_extreme_sets(f, limits));
        auto d = derive(f, limits);
        reports.push_back(check_c2_saturated_union(f, d, limits));
        reports.push_back(check_size_bounds(f, d, limits));
        reports.push_back(check_element_counts(f, d, limits));
        reports.push_back(check_near_pairs(f, d, limits));
        reports.push_back(check_w_equality(f, d, limits));
        reports.push_back(lower_bound_pipeline(f, d, limits));
        return reports;
    }
}
