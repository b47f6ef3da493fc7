/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef POSAT_GUARD_PAIR_SYSTEMS_HH
#define POSAT_GUARD_PAIR_SYSTEMS_HH 1

#include <posat/budget.hh>
#include <posat/errors.hh>
#include <posat/family.hh>
#include <posat/lemma_report.hh>

#include <optional>
#include <random>
#include <string>

namespace posat
{
    /// A nonempty ground set X, a subset of [n] for the ambient n.
    class GroundSet
    {
        public:
            GroundSet(int ambient_size, SetBits universe);

            /// X = [n].
            static auto whole(int n) -> GroundSet;

            auto ambient_size() const -> int { return _ambient_size; }
            auto universe() const -> SetBits { return _universe; }
            auto size() const -> int { return cardinality(_universe); }
            auto contains(SetBits s) const -> bool { return is_subset(s, _universe); }

            auto operator== (const GroundSet &) const -> bool = default;

        private:
            int _ambient_size;
            SetBits _universe;
    };

    /// (I, J) over X with parameter m. Throws IndexError if a member leaves X.
    struct PairSystem
    {
        PairSystem(GroundSet ground, int m, Family low, Family high);

        GroundSet ground;
        int m;
        Family low;         // I
        Family high;        // J

        auto operator== (const PairSystem &) const -> bool = default;
    };

    enum class PairCondition
    {
        Disjoint,
        LowSize,
        HighSize,
        Cover,
        ChainOutsideHigh,
        Betweenness,
        InputLowSize         // the extra size bound on I
    };

    auto to_string(PairCondition condition) -> std::string;

    struct MembershipReport
    {
        bool in_class = true;
        std::optional<PairCondition> failed;
        SetBits witness = 0;                    // cover failures use the singleton {i}
        std::optional<SetBits> partner;         // the other end of an offending two-chain
    };

    /// Every A in X with no J-member below it that is the unique top of an induced diamond
    /// drawn from I. Scans all subsets of X; throws GroundTooLarge above the scan limit.
    auto v0(const PairSystem & ps) -> Family;

    /// minimal_sets(v0(ps)).
    auto v(const PairSystem & ps) -> Family;

    /// Conditions checked in the order of PairCondition; the first failure is reported.
    /// Throws ParameterError if 2m+1 > |X|.
    auto in_L(const Family & g, const Family & h, const GroundSet & ground, int m) -> MembershipReport;

    auto in_Lstar(const PairSystem & ps) -> MembershipReport;

    struct FValue
    {
        bool finite = false;
        int value = -1;
        std::optional<PairSystem> witness;
        long long nodes = 0;
    };

    /// Looks for a member of L*([n], m) with |I ∪ J| <= n - 2m - 1 among every candidate pair.
    /// Throws BudgetExceeded.
    auto f_bound_check(int n, int m, const SearchBudget & budget = {}) -> LemmaReport;

    /// The least |I ∪ J| over L*([n], m), or Infinite when the class is empty. The witness is
    /// the first member of least size in a fixed enumeration order. Throws BudgetExceeded.
    auto f_exact(int n, int m, const SearchBudget & budget = {}) -> FValue;

    struct Restriction
    {
        std::optional<PairSystem> restricted;   // empty when the removed class is all of X
        int t = 0;
        SetBits removed = 0;                    // the class playing the role of [t]
        SetBits last = 0;                       // the element of that class playing t
        bool degenerate = false;
    };

    /**
     * Picks the least i whose G_i = {A in v(ps) : i in A} is inclusion-minimal, takes its
     * equality class T, and returns Î = {I : I ∩ T = ∅}, Ĵ = {J \ T : T \ {t} ⊆ J} over X \ T,
     * where t is the largest element of T. Throws PreconditionError unless ps is in L*.
     */
    auto restrict_pair(const PairSystem & ps) -> Restriction;

    /// As restrict_pair, without the membership precondition.
    auto restrict_pair_unchecked(const PairSystem & ps) -> Restriction;

    /// The three restriction properties, each Vacuous unless |X| >= 2m + t + 1.
    auto check_restriction(const PairSystem & ps) -> LemmaReport;

    /// Rejection sampling for a member of L*(X, m). Empty if none turned up.
    auto sample_lstar(std::mt19937_64 & rng, const GroundSet & ground, int m, int attempts) -> std::optional<PairSystem>;

    /// Header `X=1,2,3 m=1`, then I in family format, a `---` line, then J in family format.
    auto format_pair_system(const PairSystem & ps) -> std::string;
    auto parse_pair_system(const std::string & text) -> PairSystem;
}

#endif
