/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef POSAT_GUARD_BUDGET_HH
#define POSAT_GUARD_BUDGET_HH 1

namespace posat
{
    /// Limits shared by the exhaustive searches. Results never depend on `workers`.
    struct SearchBudget
    {
        long long max_nodes = 100'000'000;
        double max_seconds = 600.0;
        int workers = 1;
    };
}

#endif
