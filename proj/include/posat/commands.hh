/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef POSAT_GUARD_COMMANDS_HH
#define POSAT_GUARD_COMMANDS_HH 1

#include <posat/budget.hh>
#include <posat/report.hh>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace posat
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_fail = 1,
        exit_usage = 2,
        exit_budget = 3
    };

    struct CommandOptions
    {
        SearchBudget budget;
        std::uint64_t seed = 1;
        std::optional<std::filesystem::path> cache_dir;     // no caching when empty
        bool timing = false;
        int samples = 20;                                   // sampled pair systems for fcheck
    };

    /// A file's display name and its contents; reports record the content hash.
    struct InputFile
    {
        std::string name;
        std::string content;
    };

    struct CommandResult
    {
        Json report;
        int exit_code = exit_ok;
    };

    // Each command returns its report. Budget exhaustion is reported with exit_budget; parse,
    // parameter and scan-size errors propagate as exceptions for the caller to map to exit_usage.

    auto cmd_verify(const InputFile & family, const std::string & pattern, const CommandOptions & options) -> CommandResult;
    auto cmd_satnum(int n, const std::string & pattern, const CommandOptions & options) -> CommandResult;
    auto cmd_derive(const InputFile & family, const CommandOptions & options) -> CommandResult;
    auto cmd_lab(const InputFile & family, const CommandOptions & options) -> CommandResult;

    /// The lab suite over every minimum diamond-saturated family on [n].
    auto cmd_lab_enumerate(int n, const CommandOptions & options) -> CommandResult;

    auto cmd_fcheck(int n, int m, bool exact, const CommandOptions & options) -> CommandResult;
    auto cmd_fcheck_pair(const InputFile & pair_system, const CommandOptions & options) -> CommandResult;

    /**
     * Family text for `gen`: kinds chain, powerset, empty, layer (needs k), upper (the
     * constructive saturated family for `pattern`). Throws ParameterError for anything else.
     */
    auto generate_family(const std::string & kind, int n, int k, const std::string & pattern) -> std::string;

    /// A seeded L*(n, m) member in pair-system text, or nothing if sampling found none.
    auto generate_pair_system(int n, int m, std::uint64_t seed, int attempts) -> std::optional<std::string>;

    /// The cache directory from the flag, else POSAT_CACHE_DIR, else .posat-cache.
    auto resolve_cache_dir(const std::optional<std::string> & flag) -> std::filesystem::path;
}

#endif
