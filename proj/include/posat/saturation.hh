/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef POSAT_GUARD_SATURATION_HH
#define POSAT_GUARD_SATURATION_HH 1

#include <posat/embedding.hh>
#include <posat/family.hh>
#include <posat/poset.hh>

#include <variant>

namespace posat
{
    struct ScanLimits
    {
        /// Full scans of P([n]) are refused above this ground size.
        int max_ground_size = 22;
        int workers = 1;
    };

    /// Throws GroundTooLarge if a 2^n scan at this n is outside the limits.
    auto check_scan_budget(int ground_size, const ScanLimits & limits) -> void;

    struct ContainsCopy
    {
        Embedding witness;
    };

    struct NotSaturated
    {
        SetBits missing;
    };

    struct Saturated
    {
    };

    using SaturationVerdict = std::variant<ContainsCopy, NotSaturated, Saturated>;

    auto is_p_free(const Family & f, const PatternPoset & p) -> bool;

    /**
     * ContainsCopy if f hosts p; otherwise NotSaturated with the first absent set (in canonical
     * set order) that completes no copy; otherwise Saturated. The absent-set scan may be split
     * across workers; the reported set is still the first failure.
     */
    auto saturation_verdict(const Family & f, const PatternPoset & p, const ScanLimits & limits = {}) -> SaturationVerdict;

    auto is_saturated(const Family & f, const PatternPoset & p, const ScanLimits & limits = {}) -> bool;

    /// {∅, {1}, {1,2}, ..., [n]}.
    auto chain_family(int n) -> Family;

    /// Every subset of [n], in canonical set order.
    auto all_sets_in_order(int n) -> std::vector<SetBits>;
}

#endif
