/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef POSAT_GUARD_SATNUM_HH
#define POSAT_GUARD_SATNUM_HH 1

#include <posat/budget.hh>
#include <posat/errors.hh>
#include <posat/family.hh>
#include <posat/poset.hh>

#include <filesystem>
#include <optional>
#include <vector>

namespace posat
{
    struct SearchCertificate
    {
        int ground_size = 0;
        PatternPoset pattern = builtin(BuiltinPattern::Point);
        int value = -1;                 // sat*(n, P) when exhausted, else the best known upper bound
        Family witness{ 1 };
        bool exhausted = false;         // every size below value was refuted
        int refuted_below = 0;          // all sizes < refuted_below have no saturated family
        long long nodes = 0;
        double seconds = 0.0;
    };

    /// Thrown when the node or time budget runs out; carries what was established so far.
    class SearchBudgetExceeded : public BudgetExceeded
    {
        public:
            SearchBudgetExceeded(const std::string & message, SearchCertificate partial) :
                BudgetExceeded(message, partial.nodes),
                _partial(std::move(partial))
            {
            }

            auto partial() const -> const SearchCertificate & { return _partial; }

        private:
            SearchCertificate _partial;
    };

    /// Outcome of searching all P-free families of one size.
    struct LevelResult
    {
        int size = 0;
        long long nodes = 0;
        long long free_families = 0;        // P-free families of this size, one per orbit
        std::vector<Family> saturated;      // canonical forms, sorted by family_less
    };

    /**
     * Explores every P-free family of exactly `size` sets, one per relabelling orbit, by
     * canonical augmentation: a family is extended by each absent set that completes no copy
     * of P, and the extension is kept only when the added set is a canonical deletion of the
     * result (checked by comparing the parent with the canonical form of the result minus its
     * canonical last set), with siblings deduplicated by canonical form.
     */
    auto search_level(int ground_size, const PatternPoset & pattern, int size, const SearchBudget & budget = {}) -> LevelResult;

    /// Stores per-size refutations and witnesses on disk, keyed by a content hash of (n, P, k).
    class SearchCache
    {
        public:
            explicit SearchCache(std::filesystem::path directory);

            auto load(int ground_size, const PatternPoset & pattern, int size) const -> std::optional<LevelResult>;
            auto store(int ground_size, const PatternPoset & pattern, const LevelResult & level) const -> void;

            auto directory() const -> const std::filesystem::path & { return _directory; }

        private:
            std::filesystem::path _directory;

            auto path_for(int ground_size, const PatternPoset & pattern, int size) const -> std::filesystem::path;
    };

    /// Iterative deepening over family size. Throws SearchBudgetExceeded.
    auto sat_number(int ground_size, const PatternPoset & pattern, const SearchBudget & budget = {},
            const SearchCache * cache = nullptr) -> SearchCertificate;

    /// Every saturated family of minimum size, one canonical form per orbit, sorted.
    auto enumerate_min_saturated(int ground_size, const PatternPoset & pattern, const SearchBudget & budget = {}) -> std::vector<Family>;

    /// A saturated family found without search: the maximal chain if it is saturated, else a
    /// greedy maximal P-free family.
    auto constructive_upper_bound(int ground_size, const PatternPoset & pattern) -> Family;
}

#endif
