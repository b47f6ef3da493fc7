/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef POSAT_GUARD_LEMMA_REPORT_HH
#define POSAT_GUARD_LEMMA_REPORT_HH 1

#include <posat/family.hh>

#include <optional>
#include <string>
#include <vector>

namespace posat
{
    /**
     * PreconditionFailed: the check does not apply to this input. Vacuous: it applies, but
     * its hypothesis side is empty. Neither counts as evidence either way.
     */
    enum class LemmaStatus
    {
        Pass,
        Fail,
        PreconditionFailed,
        Vacuous
    };

    auto to_string(LemmaStatus status) -> std::string;

    struct LemmaReport
    {
        std::string check;
        LemmaStatus status = LemmaStatus::Pass;
        std::string detail;                         // reason for anything other than a plain pass

        // countermodel for a Fail: the family, plus the offending sets and/or element
        std::optional<Family> counterexample;
        std::vector<SetBits> witness_sets;
        std::optional<int> witness_element;         // 1-based

        std::vector<std::string> notes;
        std::vector<LemmaReport> parts;

        auto operator== (const LemmaReport &) const -> bool = default;
    };

    auto make_report(std::string check, LemmaStatus status, std::string detail = "") -> LemmaReport;

    /// Fail if any part fails, else PreconditionFailed if any part does, else Pass if any
    /// part passes, else Vacuous.
    auto combine_parts(std::string check, std::vector<LemmaReport> parts) -> LemmaReport;
}

#endif
