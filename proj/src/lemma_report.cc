/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <posat/lemma_report.hh>

#include <algorithm>

namespace posat
{
    auto to_string(LemmaStatus status) -> std::string
    {
        switch (status) {
            case LemmaStatus::Pass:               return "pass";
            case LemmaStatus::Fail:               return "fail";
            case LemmaStatus::PreconditionFailed: return "precondition-failed";
            case LemmaStatus::Vacuous:            return "vacuous";
        }
        return "unknown";
    }

    auto make_report(std::string check, LemmaStatus status, std::string detail) -> LemmaReport
    {
        LemmaReport report;
        report.check = std::move(check);
        report.status = status;
        report.detail = std::move(detail);
        return report;
    }

    auto combine_parts(std::string check, std::vector<LemmaReport> parts) -> LemmaReport
    {
        auto any = [&] (LemmaStatus s) {
            return std::any_of(parts.begin(), parts.end(), [&] (const LemmaReport & r) { return r.status == s; });
        };
        LemmaStatus status = LemmaStatus::Vacuous;
        if (any(LemmaStatus::Fail))
            status = LemmaStatus::Fail;
        else if (any(LemmaStatus::PreconditionFailed))
            status = LemmaStatus::PreconditionFailed;
        else if (any(LemmaStatus::Pass))
            status = LemmaStatus::Pass;

        auto report = make_report(std::move(check), status);
        report.parts = std::move(parts);
        return report;
    }
}
