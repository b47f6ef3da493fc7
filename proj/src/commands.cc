/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <posat/commands.hh>
#include <posat/errors.hh>
#include <posat/hash.hh>
#include <posat/pattern_text.hh>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <random>

using std::string;
using std::vector;

namespace posat
{
    using std::to_string;

    namespace
    {
        using Clock = std::chrono::steady_clock;

        // Worker count, cache location, timing and output format are left out of the echo:
        // they must not change a report.
        auto start_report(const string & name, Json arguments, const CommandOptions & options) -> Json
        {
            arguments["budget_nodes"] = options.budget.max_nodes;
            arguments["budget_seconds"] = options.budget.max_seconds;
            return {
                { "tool", { { "name", "posat" }, { "version", tool_version() } } },
                { "command", { { "name", name }, { "arguments", arguments } } },
                { "inputs", Json::object() },
                { "stats", Json::object() }
            };
        }

        auto add_input(Json & report, const InputFile & file) -> void
        {
            report["inputs"][file.name] = { { "sha256", content_hash(file.content) }, { "bytes", file.content.size() } };
        }

        auto add_seconds(Json & report, Clock::time_point start, const CommandOptions & options) -> void
        {
            if (! options.timing)
                return;
            char buffer[32];
            std::snprintf(buffer, sizeof(buffer), "%.3f", std::chrono::duration<double>(Clock::now() - start).count());
            report["stats"]["seconds"] = string(buffer);
        }

        auto finish(Json report, int exit_code) -> CommandResult
        {
            static const std::map<int, string> outcomes = {
                { exit_ok, "ok" }, { exit_fail, "fail" }, { exit_budget, "budget-exceeded" } };
            report["outcome"] = outcomes.at(exit_code);
            return { std::move(report), exit_code };
        }

        auto limits_from(const CommandOptions & options) -> ScanLimits
        {
            ScanLimits limits;
            limits.workers = options.budget.workers;
            return limits;
        }

        auto any_fail(const vector<LemmaReport> & reports) -> bool
        {
            for (auto & r : reports)
                if (r.status == LemmaStatus::Fail)
                    return true;
            return false;
        }

        auto count_statuses(const vector<LemmaReport> & reports, Json & summary) -> void
        {
            for (auto & r : reports)
                summary[to_string(r.status)] = summary.value(to_string(r.status), 0) + 1;
        }

        auto empty_summary() -> Json
        {
            Json summary;
            for (auto s : { LemmaStatus::Pass, LemmaStatus::Fail, LemmaStatus::PreconditionFailed, LemmaStatus::Vacuous })
                summary[to_string(s)] = 0;
            return summary;
        }

        auto lab_entry(const Family & f, const vector<LemmaReport> & reports) -> Json
        {
            Json checks = Json::array();
            for (auto & r : reports)
                checks.push_back(lemma_json(r));
            return { { "family", family_json(f) }, { "checks", checks } };
        }
    }

    auto cmd_verify(const InputFile & file, const string & pattern_text, const CommandOptions & options) -> CommandResult
    {
        auto start = Clock::now();
        auto report = start_report("verify", { { "family", file.name }, { "pattern", pattern_text } }, options);
        add_input(report, file);
        auto f = parse_family(file.content);
        auto pattern = parse_pattern(pattern_text);

        auto verdict = saturation_verdict(f, pattern, limits_from(options));
        report["family"] = family_json(f);
        report["pattern"] = pattern_json(pattern);
        report["result"] = verdict_json(verdict);
        add_seconds(report, start, options);
        return finish(std::move(report), std::holds_alternative<Saturated>(verdict) ? exit_ok : exit_fail);
    }

    auto cmd_satnum(int n, const string & pattern_text, const CommandOptions & options) -> CommandResult
    {
        auto report = start_report("satnum", { { "n", n }, { "pattern", pattern_text } }, options);
        auto pattern = parse_pattern(pattern_text);
        std::optional<SearchCache> cache;
        if (options.cache_dir)
            cache.emplace(*options.cache_dir);

        try {
            auto certificate = sat_number(n, pattern, options.budget, cache ? &*cache : nullptr);
            report["result"] = certificate_json(certificate, options.timing);
            report["result"]["witness_saturated"] = is_saturated(certificate.witness, pattern);
            report["stats"]["nodes"] = certificate.nodes;
            return finish(std::move(report), exit_ok);
        }
        catch (const SearchBudgetExceeded & e) {
            report["result"] = certificate_json(e.partial(), options.timing);
            report["result"]["witness_saturated"] = is_saturated(e.partial().witness, pattern);
            report["stats"]["nodes"] = e.partial().nodes;
            report["error"] = e.what();
            return finish(std::move(report), exit_budget);
        }
    }

    auto cmd_derive(const InputFile & file, const CommandOptions & options) -> CommandResult
    {
        auto start = Clock::now();
        auto report = start_report("derive", { { "family", file.name } }, options);
        add_input(report, file);
        auto f = parse_family(file.content);
        auto limits = limits_from(options);

        report["family"] = family_json(f);
        report["diamond_saturated"] = is_saturated(f, diamond(), limits);
        report["extremes_absent"] = ! f.contains(0) && ! f.contains(full_set(f.ground_size()));
        report["derived"] = derived_json(derive(f, limits));
        add_seconds(report, start, options);
        return finish(std::move(report), exit_ok);
    }

    auto cmd_lab(const InputFile & file, const CommandOptions & options) -> CommandResult
    {
        auto start = Clock::now();
        auto report = start_report("lab", { { "family", file.name } }, options);
        add_input(report, file);
        auto f = parse_family(file.content);

        auto reports = run_lab(f, limits_from(options));
        auto summary = empty_summary();
        count_statuses(reports, summary);
        report["families"] = Json::array({ lab_entry(f, reports) });
        report["summary"] = summary;
        add_seconds(report, start, options);
        return finish(std::move(report), any_fail(reports) ? exit_fail : exit_ok);
    }

    auto cmd_lab_enumerate(int n, const CommandOptions & options) -> CommandResult
    {
        auto start = Clock::now();
        auto report = start_report("lab", { { "enumerate", n } }, options);
        vector<Family> families;
        try {
            families = enumerate_min_saturated(n, diamond(), options.budget);
        }
        catch (const SearchBudgetExceeded & e) {
            report["error"] = e.what();
            report["stats"]["nodes"] = e.partial().nodes;
            return finish(std::move(report), exit_budget);
        }

        auto summary = empty_summary();
        bool failed = false;
        report["families"] = Json::array();
        for (auto & f : families) {
            auto reports = run_lab(f, limits_from(options));
            count_statuses(reports, summary);
            failed = failed || any_fail(reports);
            report["families"].push_back(lab_entry(f, reports));
        }
        report["summary"] = summary;
        report["stats"]["families"] = families.size();
        add_seconds(report, start, options);
        return finish(std::move(report), failed ? exit_fail : exit_ok);
    }

    auto cmd_fcheck(int n, int m, bool exact, const CommandOptions & options) -> CommandResult
    {
        auto start = Clock::now();
        auto report = start_report("fcheck", { { "n", n }, { "m", m }, { "exact", exact }, { "seed", options.seed },
                { "samples", options.samples } }, options);
        vector<LemmaReport> checks;
        try {
            checks.push_back(f_bound_check(n, m, options.budget));

            // restriction round trips on seeded members of L*([n], m)
            std::mt19937_64 rng(options.seed);
            LemmaReport sampled = make_report("restriction-samples", LemmaStatus::Vacuous);
            int found = 0;
            for (int i = 0 ; i < options.samples ; ++i) {
                auto ps = sample_lstar(rng, GroundSet::whole(n), m, 2000);
                if (! ps)
                    continue;
                ++found;
                auto r = check_restriction(*ps);
                if (r.status == LemmaStatus::Fail) {
                    sampled.status = LemmaStatus::Fail;
                    r.notes.push_back(format_pair_system(*ps));
                    sampled.parts.push_back(r);
                }
                else if (r.status == LemmaStatus::Pass && sampled.status == LemmaStatus::Vacuous)
                    sampled.status = LemmaStatus::Pass;
            }
            sampled.notes.push_back("sampled members: " + to_string(found) + " of " + to_string(options.samples) + " draws");
            checks.push_back(sampled);

            if (exact) {
                auto value = f_exact(n, m, options.budget);
                report["exact"] = f_value_json(value);
                report["stats"]["exact_nodes"] = value.nodes;
                if (value.witness) {
                    report["exact"]["witness_membership"] = membership_json(in_Lstar(*value.witness));
                    auto bound = make_report("exact-bound", value.value >= n - 2 * m ? LemmaStatus::Pass : LemmaStatus::Fail,
                            "value " + to_string(value.value) + " against n - 2m = " + to_string(n - 2 * m));
                    checks.push_back(bound);
                    checks.push_back(check_restriction(*value.witness));
                }
            }
        }
        catch (const BudgetExceeded & e) {
            report["error"] = e.what();
            report["stats"]["nodes"] = e.nodes();
            return finish(std::move(report), exit_budget);
        }

        report["checks"] = Json::array();
        for (auto & c : checks)
            report["checks"].push_back(lemma_json(c));
        add_seconds(report, start, options);
        return finish(std::move(report), any_fail(checks) ? exit_fail : exit_ok);
    }

    auto cmd_fcheck_pair(const InputFile & file, const CommandOptions & options) -> CommandResult
    {
        auto start = Clock::now();
        auto report = start_report("fcheck", { { "pair", file.name } }, options);
        add_input(report, file);
        auto ps = parse_pair_system(file.content);

        auto membership = in_Lstar(ps);
        auto restriction = check_restriction(ps);
        report["pair_system"] = pair_system_json(ps);
        report["v"] = family_json(v(ps))["sets"];
        report["membership"] = membership_json(membership);
        if (membership.in_class)
            report["restriction"] = restriction_json(restrict_pair(ps));
        report["checks"] = Json::array({ lemma_json(restriction) });
        add_seconds(report, start, options);
        bool failed = ! membership.in_class || restriction.status == LemmaStatus::Fail;
        return finish(std::move(report), failed ? exit_fail : exit_ok);
    }

    auto generate_family(const string & kind, int n, int k, const string & pattern) -> string
    {
        if (n < 1 || n > max_ground_size)
            throw ParameterError("n must lie in 1.." + to_string(max_ground_size));
        if (kind == "chain")
            return format_family(chain_family(n));
        if (kind == "empty")
            return format_family(Family(n));
        if (kind == "powerset" || kind == "layer") {
            check_scan_budget(n, ScanLimits{});
            if (kind == "layer" && (k < 0 || k > n))
                throw ParameterError("layer needs 0 <= k <= n");
            vector<SetBits> sets;
            for (auto s : all_sets_in_order(n))
                if (kind == "powerset" || cardinality(s) == k)
                    sets.push_back(s);
            return format_family(Family(n, sets));
        }
        if (kind == "upper")
            return format_family(constructive_upper_bound(n, parse_pattern(pattern)));
        throw ParameterError("unknown family kind '" + kind + "'");
    }

    auto generate_pair_system(int n, int m, std::uint64_t seed, int attempts) -> std::optional<string>
    {
        std::mt19937_64 rng(seed);
        auto ps = sample_lstar(rng, GroundSet::whole(n), m, attempts);
        if (! ps)
            return std::nullopt;
        return format_pair_system(*ps);
    }

    auto resolve_cache_dir(const std::optional<string> & flag) -> std::filesystem::path
    {
        if (flag && ! flag->empty())
            return *flag;
        if (auto env = std::getenv("POSAT_CACHE_DIR"); env && *env)
            return env;
        return ".posat-cache";
    }
}
