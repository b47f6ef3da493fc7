/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef POSAT_GUARD_FAMILY_HH
#define POSAT_GUARD_FAMILY_HH 1

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace posat
{
    /// Bit i set means element i+1 of [n] is present.
    using SetBits = std::uint64_t;

    inline constexpr int max_ground_size = 63;

    inline auto full_set(int n) -> SetBits
    {
        return (SetBits{1} << n) - 1;
    }

    inline auto cardinality(SetBits s) -> int
    {
        return std::popcount(s);
    }

    inline auto is_subset(SetBits s, SetBits t) -> bool
    {
        return 0 == (s & ~t);
    }

    inline auto is_proper_subset(SetBits s, SetBits t) -> bool
    {
        return s != t && is_subset(s, t);
    }

    inline auto comparable(SetBits s, SetBits t) -> bool
    {
        return is_subset(s, t) || is_subset(t, s);
    }

    /// The canonical set order: by cardinality, then by numeric value.
    inline auto set_order_less(SetBits s, SetBits t) -> bool
    {
        int cs = cardinality(s), ct = cardinality(t);
        return cs != ct ? cs < ct : s < t;
    }

    /// A subset of [n], n in 1..63.
    class SetWord
    {
        public:
            SetWord(int ground_size, SetBits members);

            /// From 1-based element numbers.
            static auto of(int ground_size, std::initializer_list<int> elements) -> SetWord;

            auto ground_size() const -> int { return _ground_size; }
            auto bits() const -> SetBits { return _bits; }
            auto size() const -> int { return cardinality(_bits); }
            auto contains(int element) const -> bool { return (_bits >> (element - 1)) & 1u; }

            /// 1-based element numbers in increasing order.
            auto elements() const -> std::vector<int>;

            auto operator== (const SetWord &) const -> bool = default;

        private:
            int _ground_size;
            SetBits _bits;
    };

    /**
     * A duplicate-free family of subsets of [n], kept in canonical set order.
     */
    class Family
    {
        public:
            explicit Family(int ground_size);

            /// Sorts into canonical order and drops repeated sets. Throws IndexError if a set leaves [n].
            Family(int ground_size, std::vector<SetBits> sets);

            /// From lists of 1-based elements; `{}` is the empty set.
            static auto of(int ground_size, std::initializer_list<std::initializer_list<int>> sets) -> Family;

            auto ground_size() const -> int { return _ground_size; }
            auto size() const -> int { return static_cast<int>(_sets.size()); }
            auto empty() const -> bool { return _sets.empty(); }
            auto sets() const -> const std::vector<SetBits> & { return _sets; }
            auto operator[] (int i) const -> SetBits { return _sets[i]; }
            auto begin() const { return _sets.begin(); }
            auto end() const { return _sets.end(); }

            auto contains(SetBits s) const -> bool;
            auto with(SetBits s) const -> Family;
            auto without(SetBits s) const -> Family;
            auto united(const Family & other) const -> Family;

            auto operator== (const Family &) const -> bool = default;

        private:
            int _ground_size;
            std::vector<SetBits> _sets;
    };

    /// Lexicographic comparison of the canonically ordered set sequences.
    auto family_less(const Family & a, const Family & b) -> bool;

    auto is_antichain(const Family & f) -> bool;

    auto maximal_sets(const Family & f) -> Family;
    auto minimal_sets(const Family & f) -> Family;

    /// Image of s when element i (0-based) is sent to position perm[i].
    auto permute_set(SetBits s, std::span<const int> perm) -> SetBits;
    auto apply_permutation(const Family & f, std::span<const int> perm) -> Family;

    struct CanonicalLabeling
    {
        std::vector<int> perm;          // perm[i] = new position of element i
        Family image;
        bool exact;
    };

    inline constexpr int default_canonical_limit = 12;

    /**
     * Canonical relabelling of [n] by individualisation and refinement, minimising the image
     * over every leaf of the search tree, with pruning by automorphisms discovered on the way.
     * Exact (identical output on every member of an orbit) for n <= exact_limit; above that
     * a single refinement path is followed and the result is flagged as not exact.
     */
    auto canonical_labeling(const Family & f, int exact_limit = default_canonical_limit) -> CanonicalLabeling;

    auto canonical_form(const Family & f, int exact_limit = default_canonical_limit) -> Family;

    /// "1 2 3" for {1,2,3}, "-" for the empty set.
    auto format_set(SetBits s) -> std::string;

    /// The family text format: `n=<N>` then one set per line in canonical order.
    auto format_family(const Family & f) -> std::string;

    /// Parses the family text format. `#` lines and blank lines are skipped.
    auto parse_family(const std::string & text) -> Family;

    /// Parses one set line ("-" or increasing 1-based elements). Throws ParseError tagged with `line`.
    auto parse_set_line(const std::string & text, int ground_size, int line) -> SetBits;
}

#endif
