/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef POSAT_GUARD_DIAMOND_LAB_HH
#define POSAT_GUARD_DIAMOND_LAB_HH 1

#include <posat/family.hh>
#include <posat/lemma_report.hh>
#include <posat/saturation.hh>

#include <vector>

namespace posat
{
    /// Three members of F forming an induced diamond under some top set.
    struct DiamondBelow
    {
        SetBits bottom;
        SetBits left;
        SetBits right;
    };

    /**
     * Structures read off a family F for the diamond checks:
     *  - B: maximal members of F;
     *  - A0: every X that is the unique top of an induced diamond whose other three sets lie
     *    in F, with one such diamond kept per member;
     *  - A1: minimal members of A0;
     *  - A: members of A1 containing no member of B;
     *  - GA: members of F lying in some diamond under a member of A, with the per-member
     *    generators kept alongside;
     *  - W_ga, W_a: elements of [n] outside every member of GA, resp. of A.
     */
    struct DerivedStructures
    {
        Family B;
        Family A0;
        std::vector<DiamondBelow> A0_witness;       // aligned with A0
        Family A1;
        Family A;
        std::vector<Family> generators;             // aligned with A
        Family GA;
        SetWord W_ga;
        SetWord W_a;
    };

    /// Scans all of P([n]); throws GroundTooLarge beyond the scan limit.
    auto derive(const Family & f, const ScanLimits & limits = {}) -> DerivedStructures;

    // Each check recomputes what it needs from definitions. The overloads taking
    // DerivedStructures use the given structures as-is, so doctored inputs can be fed in.

    auto check_extreme_sets(const Family & f, const ScanLimits & limits = {}) -> LemmaReport;

    auto check_c2_saturated_union(const Family & f, const ScanLimits & limits = {}) -> LemmaReport;
    auto check_c2_saturated_union(const Family & f, const DerivedStructures & d, const ScanLimits & limits = {}) -> LemmaReport;

    auto check_size_bounds(const Family & f, const ScanLimits & limits = {}) -> LemmaReport;
    auto check_size_bounds(const Family & f, const DerivedStructures & d, const ScanLimits & limits = {}) -> LemmaReport;

    auto check_element_counts(const Family & f, const ScanLimits & limits = {}) -> LemmaReport;
    auto check_element_counts(const Family & f, const DerivedStructures & d, const ScanLimits & limits = {}) -> LemmaReport;

    /// The counting half of check_element_counts, with no preconditions.
    auto element_counts_from(int n, int family_size, const DerivedStructures & d) -> LemmaReport;

    auto check_near_pairs(const Family & f, const ScanLimits & limits = {}) -> LemmaReport;
    auto check_near_pairs(const Family & f, const DerivedStructures & d, const ScanLimits & limits = {}) -> LemmaReport;

    auto check_w_equality(const Family & f, const ScanLimits & limits = {}) -> LemmaReport;
    auto check_w_equality(const Family & f, const DerivedStructures & d, const ScanLimits & limits = {}) -> LemmaReport;

    /// The size bound 5|F| >= n+1, and, when no extreme set is present and 4|F| <= n, the
    /// pair-system structure on [n] \ W.
    auto lower_bound_pipeline(const Family & f, const ScanLimits & limits = {}) -> LemmaReport;
    auto lower_bound_pipeline(const Family & f, const DerivedStructures & d, const ScanLimits & limits = {}) -> LemmaReport;

    /// The structural half of lower_bound_pipeline, run without its regime gate.
    auto lower_bound_structure(const Family & f, const DerivedStructures & d) -> LemmaReport;

    /// The six family checks followed by the pipeline, in a fixed order.
    auto run_lab(const Family & f, const ScanLimits & limits = {}) -> std::vector<LemmaReport>;
}

#endif
