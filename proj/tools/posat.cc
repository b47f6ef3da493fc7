/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <posat/commands.hh>
#include <posat/errors.hh>

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace posat;
using std::string;

namespace
{
    auto read_input(const string & path) -> InputFile
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw ParameterError("cannot read " + path);
        std::ostringstream content;
        content << in.rdbuf();
        return { path, content.str() };
    }

    auto emit(const CommandResult & result, const string & format) -> int
    {
        std::cout << (format == "json" ? render_json(result.report) : render_text(result.report));
        return result.exit_code;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Poset saturation toolkit: exact saturation numbers, derived structures and pair-system checks" };
    app.require_subcommand(1);
    app.fallthrough();

    double budget_nodes = 1e8, budget_secs = 600.0;
    int workers = 1;
    std::uint64_t seed = 1;
    string cache_dir, format = "text";
    bool timing = false, no_cache = false;

    app.add_option("--budget-nodes", budget_nodes, "Search node budget (accepts 1e6)")->check(CLI::PositiveNumber);
    app.add_option("--budget-secs", budget_secs, "Search time budget in seconds")->check(CLI::PositiveNumber);
    app.add_option("--workers", workers, "Worker threads")->check(CLI::Range(1, 256));
    app.add_option("--seed", seed, "Seed for sampled checks");
    app.add_option("--cache-dir", cache_dir, "Search cache directory (else POSAT_CACHE_DIR, else .posat-cache)");
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({ "text", "json" }));
    app.add_flag("--timing", timing, "Include wall time in reports");
    app.add_flag("--no-cache", no_cache, "Neither read nor write the search cache");

    string family_path, pattern = "diamond";
    int n = 0, m = 0, enumerate = 0;
    bool exact = false;
    int samples = 20;
    string pair_path, kind;
    std::vector<int> sizes;

    auto verify = app.add_subcommand("verify", "Saturation verdict for a family file");
    verify->add_option("family", family_path, "Family file")->required();
    verify->add_option("pattern", pattern, "Pattern name or literal")->required();

    auto satnum = app.add_subcommand("satnum", "Exact saturation number by exhaustive search");
    satnum->add_option("n", n, "Ground set size")->required();
    satnum->add_option("pattern", pattern, "Pattern name or literal")->required();

    auto derive_cmd = app.add_subcommand("derive", "Derived diamond structures of a family");
    derive_cmd->add_option("family", family_path, "Family file")->required();

    auto lab = app.add_subcommand("lab", "Diamond check suite on a family file or on every minimum family");
    lab->alias("lemma-check");
    auto lab_file = lab->add_option("family", family_path, "Family file");
    auto lab_enumerate = lab->add_option("--enumerate", enumerate, "Run over every minimum diamond-saturated family on [n]");
    lab_file->excludes(lab_enumerate);
    lab->require_option(1);

    auto fcheck = app.add_subcommand("fcheck", "Pair-system class checks");
    auto fcheck_n = fcheck->add_option("n", n, "Ground set size");
    auto fcheck_m = fcheck->add_option("m", m, "Parameter m");
    fcheck->add_flag("--exact", exact, "Also compute the exact minimum");
    fcheck->add_option("--samples", samples, "Sampled members for restriction round trips")->check(CLI::NonNegativeNumber);
    auto fcheck_pair = fcheck->add_option("--pair", pair_path, "Check one pair-system file instead");
    fcheck_pair->excludes(fcheck_n)->excludes(fcheck_m);

    auto gen = app.add_subcommand("gen", "Emit a family (chain, powerset, empty, layer, upper) or a sampled pair system (pair)");
    gen->add_option("kind", kind, "chain | powerset | empty | layer | upper | pair")->required();
    gen->add_option("sizes", sizes, "n, then k for layer or m for pair")->required()->expected(1, 2);
    gen->add_option("--pattern", pattern, "Pattern for upper");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    CommandOptions options;
    options.budget.max_nodes = static_cast<long long>(std::llround(budget_nodes));
    options.budget.max_seconds = budget_secs;
    options.budget.workers = workers;
    options.seed = seed;
    options.timing = timing;
    options.samples = samples;
    if (! no_cache)
        options.cache_dir = resolve_cache_dir(cache_dir.empty() ? std::nullopt : std::optional<string>(cache_dir));

    try {
        if (*verify)
            return emit(cmd_verify(read_input(family_path), pattern, options), format);
        if (*satnum)
            return emit(cmd_satnum(n, pattern, options), format);
        if (*derive_cmd)
            return emit(cmd_derive(read_input(family_path), options), format);
        if (*lab)
            return emit(*lab_enumerate ? cmd_lab_enumerate(enumerate, options) : cmd_lab(read_input(family_path), options), format);
        if (*fcheck) {
            if (*fcheck_pair)
                return emit(cmd_fcheck_pair(read_input(pair_path), options), format);
            if (! *fcheck_n || ! *fcheck_m) {
                std::cerr << "fcheck needs n and m, or --pair FILE" << std::endl;
                return exit_usage;
            }
            return emit(cmd_fcheck(n, m, exact, options), format);
        }
        if (*gen) {
            if (kind == "pair") {
                if (sizes.size() != 2)
                    throw ParameterError("gen pair needs n and m");
                auto text = generate_pair_system(sizes[0], sizes[1], seed, 20000);
                if (! text) {
                    std::cerr << "no member found for n=" << sizes[0] << " m=" << sizes[1] << std::endl;
                    return exit_fail;
                }
                std::cout << *text;
                return exit_ok;
            }
            std::cout << generate_family(kind, sizes[0], sizes.size() > 1 ? sizes[1] : -1, pattern);
            return exit_ok;
        }
    }
    catch (const BudgetExceeded & e) {
        std::cerr << "budget exceeded: " << e.what() << std::endl;
        return exit_budget;
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << std::endl;
        return exit_usage;
    }
    return exit_usage;
}
