/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef POSAT_GUARD_POSET_HH
#define POSAT_GUARD_POSET_HH 1

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace posat
{
    using ElementPair = std::pair<int, int>;

    /**
     * A finite strict partial order on elements 0 .. size-1, stored transitively closed.
     *
     * This is the abstract pattern P whose induced copies are sought inside set families.
     * Element indices are 0-based here; user-facing text shifts them to 1-based.
     */
    class PatternPoset
    {
        public:
            static constexpr int max_size = 64;

            /// Builds the transitive closure of the given pairs. Throws IndexError or CycleError.
            static auto make(int size, std::span<const ElementPair> strict_pairs, std::string label = "") -> PatternPoset;

            auto size() const -> int { return static_cast<int>(_above.size()); }
            auto label() const -> const std::string & { return _label; }
            auto with_label(std::string label) const -> PatternPoset;

            /// a < b in the pattern.
            auto less(int a, int b) const -> bool { return (_above[a] >> b) & 1u; }
            auto comparable(int a, int b) const -> bool { return less(a, b) || less(b, a); }

            /// Bitmask of elements strictly above / below a.
            auto above(int a) const -> std::uint64_t { return _above[a]; }
            auto below(int a) const -> std::uint64_t { return _below[a]; }

            auto up_degree(int a) const -> int;
            auto down_degree(int a) const -> int;

            /// Number of elements in a longest chain strictly below (above) a.
            auto height_below(int a) const -> int { return _height_below[a]; }
            auto height_above(int a) const -> int { return _height_above[a]; }

            auto minimal_elements() const -> std::vector<int>;
            auto maximal_elements() const -> std::vector<int>;

            /// All (a, b) with a < b, lexicographically sorted.
            auto strict_pairs() const -> std::vector<ElementPair>;

            auto operator== (const PatternPoset & other) const -> bool
            {
                return _above == other._above;
            }

        private:
            PatternPoset() = default;

            std::vector<std::uint64_t> _above, _below;
            std::vector<int> _height_below, _height_above;
            std::string _label;
    };

    enum class BuiltinPattern
    {
        Point,
        Diamond,
        C2,
        V,
        Lambda,
        Butterfly,
        Chain,
        Antichain
    };

    /// The named patterns. `k` is the element count for Chain and Antichain and ignored otherwise.
    auto builtin(BuiltinPattern which, int k = 0) -> PatternPoset;

    auto diamond() -> PatternPoset;
    auto chain(int k) -> PatternPoset;
    auto antichain(int k) -> PatternPoset;

    /// Every element of `bottom` lies below every element of `top`. Bottom elements keep
    /// indices 0 .. |bottom|-1, top elements follow.
    auto linear_sum(const PatternPoset & top, const PatternPoset & bottom) -> PatternPoset;

    /// Layers listed bottom first; a < b iff a's layer is strictly lower.
    auto complete_multipartite(std::span<const int> layer_sizes) -> PatternPoset;

    /// True iff an order preserving and reflecting bijection exists.
    auto poset_isomorphic(const PatternPoset & p, const PatternPoset & q) -> bool;

    /// Isomorphism-invariant textual code: equal for isomorphic patterns, distinct otherwise.
    auto canonical_code(const PatternPoset & p) -> std::string;
}

#endif
