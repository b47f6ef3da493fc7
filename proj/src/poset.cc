/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <posat/poset.hh>
#include <posat/errors.hh>

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>

using std::string;
using std::to_string;
using std::vector;

namespace posat
{
    namespace
    {
        auto bit(int i) -> std::uint64_t
        {
            return std::uint64_t{1} << i;
        }

        using Invariant = std::tuple<int, int, int, int>;

        auto invariant_of(const PatternPoset & p, int a) -> Invariant
        {
            return { p.height_below(a), p.height_above(a), p.down_degree(a), p.up_degree(a) };
        }
    }

    auto PatternPoset::make(int size, std::span<const ElementPair> strict_pairs, string label) -> PatternPoset
    {
        if (size < 1 || size > max_size)
            throw IndexError("pattern size must lie in 1.." + to_string(max_size) + ", got " + to_string(size));

        PatternPoset result;
        result._above.assign(size, 0);
        result._below.assign(size, 0);
        result._label = std::move(label);

        for (auto [a, b] : strict_pairs) {
            if (a < 0 || a >= size || b < 0 || b >= size)
                throw IndexError("relation " + to_string(a + 1) + "<" + to_string(b + 1) + " out of range for size " + to_string(size));
            result._above[a] |= bit(b);
        }

        for (int k = 0 ; k < size ; ++k)
            for (int i = 0 ; i < size ; ++i)
                if (result._above[i] & bit(k))
                    result._above[i] |= result._above[k];

        for (int i = 0 ; i < size ; ++i) {
            if (result._above[i] & bit(i))
                throw CycleError("relations force element " + to_string(i + 1) + " below itself");
            for (int j = 0 ; j < size ; ++j)
                if (result._above[i] & bit(j))
                    result._below[j] |= bit(i);
        }

        // a < b implies below(a) is a proper subset of below(b), so sorting by |below| is topological
        vector<int> order(size);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&] (int a, int b) {
                return std::popcount(result._below[a]) < std::popcount(result._below[b]); });

        result._height_below.assign(size, 0);
        result._height_above.assign(size, 0);
        for (int a : order)
            for (int b = 0 ; b < size ; ++b)
                if (result._below[a] & bit(b))
                    result._height_below[a] = std::max(result._height_below[a], result._height_below[b] + 1);
        for (auto it = order.rbegin() ; it != order.rend() ; ++it)
            for (int b = 0 ; b < size ; ++b)
                if (result._above[*it] & bit(b))
                    result._height_above[*it] = std::max(result._height_above[*it], result._height_above[b] + 1);

        return result;
    }

    auto PatternPoset::with_label(string label) const -> PatternPoset
    {
        PatternPoset result = *this;
        result._label = std::move(label);
        return result;
    }

    auto PatternPoset::up_degree(int a) const -> int
    {
        return std::popcount(_above[a]);
    }

    auto PatternPoset::down_degree(int a) const -> int
    {
        return std::popcount(_below[a]);
    }

    auto PatternPoset::minimal_elements() const -> vector<int>
    {
        vector<int> result;
        for (int a = 0 ; a < size() ; ++a)
            if (0 == _below[a])
                result.push_back(a);
        return result;
    }

    auto PatternPoset::maximal_elements() const -> vector<int>
    {
        vector<int> result;
        for (int a = 0 ; a < size() ; ++a)
            if (0 == _above[a])
                result.push_back(a);
        return result;
    }

    auto PatternPoset::strict_pairs() const -> vector<ElementPair>
    {
        vector<ElementPair> result;
        for (int a = 0 ; a < size() ; ++a)
            for (int b = 0 ; b < size() ; ++b)
                if (less(a, b))
                    result.emplace_back(a, b);
        return result;
    }

    auto chain(int k) -> PatternPoset
    {
        if (k < 1)
            throw ParameterError("chain needs at least one element");
        vector<ElementPair> pairs;
        for (int i = 0 ; i + 1 < k ; ++i)
            pairs.emplace_back(i, i + 1);
        return PatternPoset::make(k, pairs, "chain:" + to_string(k));
    }

    auto antichain(int k) -> PatternPoset
    {
        if (k < 1)
            throw ParameterError("antichain needs at least one element");
        return PatternPoset::make(k, {}, "antichain:" + to_string(k));
    }

    auto diamond() -> PatternPoset
    {
        const ElementPair pairs[] = { { 0, 1 }, { 0, 2 }, { 1, 3 }, { 2, 3 } };
        return PatternPoset::make(4, pairs, "diamond");
    }

    auto builtin(BuiltinPattern which, int k) -> PatternPoset
    {
        switch (which) {
            case BuiltinPattern::Point:
                return PatternPoset::make(1, {}, "point");
            case BuiltinPattern::Diamond:
                return diamond();
            case BuiltinPattern::C2:
                return chain(2).with_label("c2");
            case BuiltinPattern::V: {
                const ElementPair pairs[] = { { 0, 1 }, { 0, 2 } };
                return PatternPoset::make(3, pairs, "v");
            }
            case BuiltinPattern::Lambda: {
                const ElementPair pairs[] = { { 0, 2 }, { 1, 2 } };
                return PatternPoset::make(3, pairs, "lambda");
            }
            case BuiltinPattern::Butterfly: {
                const ElementPair pairs[] = { { 0, 2 }, { 0, 3 }, { 1, 2 }, { 1, 3 } };
                return PatternPoset::make(4, pairs, "butterfly");
            }
            case BuiltinPattern::Chain:
                return chain(k);
            case BuiltinPattern::Antichain:
                return antichain(k);
        }
        throw ParameterError("unknown builtin pattern");
    }

    auto linear_sum(const PatternPoset & top, const PatternPoset & bottom) -> PatternPoset
    {
        int offset = bottom.size();
        vector<ElementPair> pairs = bottom.strict_pairs();
        for (auto [a, b] : top.strict_pairs())
            pairs.emplace_back(a + offset, b + offset);
        for (int a = 0 ; a < bottom.size() ; ++a)
            for (int b = 0 ; b < top.size() ; ++b)
                pairs.emplace_back(a, b + offset);

        string label;
        if (! top.label().empty() && ! bottom.label().empty())
            label = "(" + top.label() + ")*(" + bottom.label() + ")";
        return PatternPoset::make(offset + top.size(), pairs, std::move(label));
    }

    auto complete_multipartite(std::span<const int> layer_sizes) -> PatternPoset
    {
        if (layer_sizes.empty())
            throw ParameterError("complete multipartite pattern needs at least one layer");

        vector<int> layer_of;
        string label = "K:";
        for (std::size_t l = 0 ; l < layer_sizes.size() ; ++l) {
            if (layer_sizes[l] < 1)
                throw ParameterError("layer sizes must be positive");
            layer_of.insert(layer_of.end(), layer_sizes[l], static_cast<int>(l));
            label += (l ? "," : "") + to_string(layer_sizes[l]);
        }

        vector<ElementPair> pairs;
        int size = static_cast<int>(layer_of.size());
        for (int a = 0 ; a < size ; ++a)
            for (int b = 0 ; b < size ; ++b)
                if (layer_of[a] < layer_of[b])
                    pairs.emplace_back(a, b);
        return PatternPoset::make(size, pairs, std::move(label));
    }

    namespace
    {
        struct IsomorphismSearch
        {
            const PatternPoset & p;
            const PatternPoset & q;
            vector<Invariant> p_inv, q_inv;
            vector<int> image;
            std::uint64_t used = 0;

            auto extend(int a) -> bool
            {
                if (a == p.size())
                    return true;

                for (int x = 0 ; x < q.size() ; ++x) {
                    if ((used & bit(x)) || p_inv[a] != q_inv[x])
                        continue;

                    bool ok = true;
                    for (int b = 0 ; b < a && ok ; ++b)
                        ok = p.less(a, b) == q.less(x, image[b]) && p.less(b, a) == q.less(image[b], x);
                    if (! ok)
                        continue;

                    image[a] = x;
                    used |= bit(x);
                    if (extend(a + 1))
                        return true;
                    used &= ~bit(x);
                }
                return false;
            }
        };
    }

    auto poset_isomorphic(const PatternPoset & p, const PatternPoset & q) -> bool
    {
        if (p.size() != q.size())
            return false;

        IsomorphismSearch search{ p, q, {}, {}, vector<int>(p.size(), -1) };
        for (int a = 0 ; a < p.size() ; ++a) {
            search.p_inv.push_back(invariant_of(p, a));
            search.q_inv.push_back(invariant_of(q, a));
        }

        auto ps = search.p_inv, qs = search.q_inv;
        std::sort(ps.begin(), ps.end());
        std::sort(qs.begin(), qs.end());
        if (ps != qs)
            return false;

        return search.extend(0);
    }

    namespace
    {
        // Code of a labelling: for each new position p in turn, the relation bits between p and
        // every earlier position. A partial labelling therefore fixes a prefix of the code.
        struct CanonicalCodeSearch
        {
            const PatternPoset & p;
            vector<int> slot_class;        // invariant class each position must be filled from
            vector<int> class_of;
            vector<int> placed;
            std::uint64_t used = 0;
            string current, best;

            auto block(int element, int position) const -> string
            {
                string s;
                for (int q = 0 ; q < position ; ++q) {
                    s += p.less(element, placed[q]) ? '1' : '0';
                    s += p.less(placed[q], element) ? '1' : '0';
                }
                return s;
            }

            auto twins(int a, int b) const -> bool
            {
                if (p.comparable(a, b))
                    return false;
                std::uint64_t mask = ~(bit(a) | bit(b));
                return (p.above(a) & mask) == (p.above(b) & mask) && (p.below(a) & mask) == (p.below(b) & mask);
            }

            auto search(int position) -> void
            {
                if (position == p.size()) {
                    if (best.empty() || current < best)
                        best = current;
                    return;
                }

                vector<int> tried;
                for (int x = 0 ; x < p.size() ; ++x) {
                    if ((used & bit(x)) || class_of[x] != slot_class[position])
                        continue;
                    if (std::any_of(tried.begin(), tried.end(), [&] (int t) { return twins(t, x); }))
                        continue;
                    tried.push_back(x);

                    string piece = block(x, position);
                    auto old_length = current.size();
                    current += piece;
                    if (best.empty() || current <= best.substr(0, current.size())) {
                        placed[position] = x;
                        used |= bit(x);
                        search(position + 1);
                        used &= ~bit(x);
                    }
                    current.resize(old_length);
                }
            }
        };
    }

    auto canonical_code(const PatternPoset & p) -> string
    {
        vector<Invariant> invariants;
        for (int a = 0 ; a < p.size() ; ++a)
            invariants.push_back(invariant_of(p, a));
        auto distinct = invariants;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

        CanonicalCodeSearch search{ p, {}, {}, vector<int>(p.size(), -1), 0, {}, {} };
        for (int a = 0 ; a < p.size() ; ++a)
            search.class_of.push_back(static_cast<int>(
                        std::lower_bound(distinct.begin(), distinct.end(), invariants[a]) - distinct.begin()));
        search.slot_class = search.class_of;
        std::sort(search.slot_class.begin(), search.slot_class.end());

        search.search(0);
        return to_string(p.size()) + ":" + search.best;
    }
}
