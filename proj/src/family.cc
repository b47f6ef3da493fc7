/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <posat/family.hh>
#include <posat/errors.hh>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <tuple>

using std::string;
using std::to_string;
using std::vector;

namespace posat
{
    namespace
    {
        auto check_ground_size(int n) -> void
        {
            if (n < 1 || n > max_ground_size)
                throw IndexError("ground size must lie in 1.." + to_string(max_ground_size) + ", got " + to_string(n));
        }

        auto sequence_less(const vector<SetBits> & a, const vector<SetBits> & b) -> bool
        {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), set_order_less);
        }
    }

    SetWord::SetWord(int ground_size, SetBits members) :
        _ground_size(ground_size),
        _bits(members)
    {
        check_ground_size(ground_size);
        if (! is_subset(members, full_set(ground_size)))
            throw IndexError("set has elements outside [" + to_string(ground_size) + "]");
    }

    auto SetWord::of(int ground_size, std::initializer_list<int> elements) -> SetWord
    {
        SetBits bits = 0;
        for (int e : elements) {
            if (e < 1 || e > ground_size)
                throw IndexError("element " + to_string(e) + " outside [" + to_string(ground_size) + "]");
            bits |= SetBits{1} << (e - 1);
        }
        return SetWord(ground_size, bits);
    }

    auto SetWord::elements() const -> vector<int>
    {
        vector<int> result;
        for (int i = 0 ; i < _ground_size ; ++i)
            if ((_bits >> i) & 1u)
                result.push_back(i + 1);
        return result;
    }

    Family::Family(int ground_size) :
        _ground_size(ground_size)
    {
        check_ground_size(ground_size);
    }

    Family::Family(int ground_size, vector<SetBits> sets) :
        _ground_size(ground_size),
        _sets(std::move(sets))
    {
        check_ground_size(ground_size);
        SetBits full = full_set(ground_size);
        for (auto s : _sets)
            if (! is_subset(s, full))
                throw IndexError("set " + format_set(s) + " has elements outside [" + to_string(ground_size) + "]");
        std::sort(_sets.begin(), _sets.end(), set_order_less);
        _sets.erase(std::unique(_sets.begin(), _sets.end()), _sets.end());
    }

    auto Family::of(int ground_size, std::initializer_list<std::initializer_list<int>> sets) -> Family
    {
        vector<SetBits> bits;
        for (auto & s : sets)
            bits.push_back(SetWord::of(ground_size, s).bits());
        return Family(ground_size, std::move(bits));
    }

    auto Family::contains(SetBits s) const -> bool
    {
        return std::binary_search(_sets.begin(), _sets.end(), s, set_order_less);
    }

    auto Family::with(SetBits s) const -> Family
    {
        Family result = *this;
        if (! is_subset(s, full_set(_ground_size)))
            throw IndexError("set " + format_set(s) + " has elements outside [" + to_string(_ground_size) + "]");
        auto pos = std::lower_bound(result._sets.begin(), result._sets.end(), s, set_order_less);
        if (pos == result._sets.end() || *pos != s)
            result._sets.insert(pos, s);
        return result;
    }

    auto Family::without(SetBits s) const -> Family
    {
        Family result = *this;
        auto pos = std::lower_bound(result._sets.begin(), result._sets.end(), s, set_order_less);
        if (pos != result._sets.end() && *pos == s)
            result._sets.erase(pos);
        return result;
    }

    auto Family::united(const Family & other) const -> Family
    {
        vector<SetBits> all = _sets;
        all.insert(all.end(), other._sets.begin(), other._sets.end());
        return Family(std::max(_ground_size, other._ground_size), std::move(all));
    }

    auto family_less(const Family & a, const Family & b) -> bool
    {
        return sequence_less(a.sets(), b.sets());
    }

    auto is_antichain(const Family & f) -> bool
    {
        for (int i = 0 ; i < f.size() ; ++i)
            for (int j = i + 1 ; j < f.size() ; ++j)
                if (comparable(f[i], f[j]))
                    return false;
        return true;
    }

    auto maximal_sets(const Family & f) -> Family
    {
        vector<SetBits> result;
        for (auto s : f)
            if (std::none_of(f.begin(), f.end(), [&] (SetBits t) { return is_proper_subset(s, t); }))
                result.push_back(s);
        return Family(f.ground_size(), std::move(result));
    }

    auto minimal_sets(const Family & f) -> Family
    {
        vector<SetBits> result;
        for (auto s : f)
            if (std::none_of(f.begin(), f.end(), [&] (SetBits t) { return is_proper_subset(t, s); }))
                result.push_back(s);
        return Family(f.ground_size(), std::move(result));
    }

    auto permute_set(SetBits s, std::span<const int> perm) -> SetBits
    {
        SetBits result = 0;
        while (s) {
            int i = std::countr_zero(s);
            s &= s - 1;
            result |= SetBits{1} << perm[i];
        }
        return result;
    }

    auto apply_permutation(const Family & f, std::span<const int> perm) -> Family
    {
        if (static_cast<int>(perm.size()) != f.ground_size())
            throw ParameterError("permutation length does not match ground size");
        vector<SetBits> image;
        image.reserve(f.size());
        for (auto s : f)
            image.push_back(permute_set(s, perm));
        return Family(f.ground_size(), std::move(image));
    }

    namespace
    {
        /// Individualisation-refinement over the elements of [n], colouring by set membership.
        class LabelingSearch
        {
            public:
                LabelingSearch(const Family & f, bool exact) :
                    _n(f.ground_size()),
                    _sets(f.sets()),
                    _exact(exact)
                {
                }

                auto run() -> CanonicalLabeling
                {
                    vector<int> prefix;
                    search(vector<int>(_n, 0), prefix);
                    return CanonicalLabeling{ _best_perm, Family(_n, _best_image), _exact };
                }

            private:
                int _n;
                const vector<SetBits> & _sets;
                bool _exact;

                bool _have_best = false;
                vector<int> _best_perm;
                vector<SetBits> _best_image;
                vector<vector<int>> _automorphisms;

                // Colours are ranks, so the partition is ordered; each pass splits cells using the
                // multiset of set colours an element belongs to.
                auto refine(vector<int> & colour) const -> int
                {
                    int classes = count_classes(colour);
                    vector<std::pair<int, vector<int>>> set_sig(_sets.size());
                    vector<int> set_colour(_sets.size());
                    using ElementKey = std::tuple<int, int, vector<int>>;
                    vector<ElementKey> element_sig(_n);

                    while (classes < _n) {
                        for (std::size_t s = 0 ; s < _sets.size() ; ++s) {
                            set_sig[s].first = cardinality(_sets[s]);
                            set_sig[s].second.clear();
                            for (SetBits b = _sets[s] ; b ; b &= b - 1)
                                set_sig[s].second.push_back(colour[std::countr_zero(b)]);
                            std::sort(set_sig[s].second.begin(), set_sig[s].second.end());
                        }
                        rank(set_sig, set_colour);

                        for (int e = 0 ; e < _n ; ++e) {
                            vector<int> memberships;
                            for (std::size_t s = 0 ; s < _sets.size() ; ++s)
                                if ((_sets[s] >> e) & 1u)
                                    memberships.push_back(set_colour[s]);
                            std::sort(memberships.begin(), memberships.end());
                            // elements lying in more sets take lower positions
                            element_sig[e] = ElementKey{ colour[e], -static_cast<int>(memberships.size()), std::move(memberships) };
                        }
                        rank(element_sig, colour);

                        int new_classes = count_classes(colour);
                        if (new_classes == classes)
                            break;
                        classes = new_classes;
                    }
                    return classes;
                }

                template <typename Key_>
                static auto rank(const vector<Key_> & keys, vector<int> & out) -> void
                {
                    vector<Key_> sorted = keys;
                    std::sort(sorted.begin(), sorted.end());
                    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
                    for (std::size_t i = 0 ; i < keys.size() ; ++i)
                        out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
                }

                static auto count_classes(const vector<int> & colour) -> int
                {
                    vector<int> c = colour;
                    std::sort(c.begin(), c.end());
                    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
                }

                auto leaf(const vector<int> & perm) -> void
                {
                    vector<SetBits> image;
                    image.reserve(_sets.size());
                    for (auto s : _sets)
                        image.push_back(permute_set(s, perm));
                    std::sort(image.begin(), image.end(), set_order_less);

                    if (! _have_best || sequence_less(image, _best_image)) {
                        _have_best = true;
                        _best_image = std::move(image);
                        _best_perm = perm;
                    }
                    else if (image == _best_image) {
                        vector<int> inverse_best(_n);
                        for (int e = 0 ; e < _n ; ++e)
                            inverse_best[_best_perm[e]] = e;
                        vector<int> automorphism(_n);
                        bool identity = true;
                        for (int e = 0 ; e < _n ; ++e) {
                            automorphism[e] = inverse_best[perm[e]];
                            identity = identity && automorphism[e] == e;
                        }
                        if (! identity)
                            _automorphisms.push_back(std::move(automorphism));
                    }
                }

                auto orbit_representatives(const vector<int> & prefix) const -> vector<int>
                {
                    vector<int> parent(_n);
                    std::iota(parent.begin(), parent.end(), 0);
                    auto find = [&] (int x) {
                        while (parent[x] != x)
                            x = parent[x] = parent[parent[x]];
                        return x;
                    };

                    for (auto & g : _automorphisms) {
                        if (! std::all_of(prefix.begin(), prefix.end(), [&] (int v) { return g[v] == v; }))
                            continue;
                        for (int e = 0 ; e < _n ; ++e) {
                            int a = find(e), b = find(g[e]);
                            if (a != b)
                                parent[std::max(a, b)] = std::min(a, b);
                        }
                    }

                    vector<int> result(_n);
                    for (int e = 0 ; e < _n ; ++e)
                        result[e] = find(e);
                    return result;
                }

                auto search(vector<int> colour, vector<int> & prefix) -> void
                {
                    if (refine(colour) == _n) {
                        leaf(colour);
                        return;
                    }

                    // target: the lowest-coloured cell with more than one element
                    vector<int> cell_size(_n, 0);
                    for (int c : colour)
                        ++cell_size[c];
                    int target = 0;
                    while (cell_size[target] < 2)
                        ++target;

                    vector<int> tried;
                    for (int v = 0 ; v < _n ; ++v) {
                        if (colour[v] != target)
                            continue;

                        if (! tried.empty()) {
                            if (! _exact)
                                break;
                            auto orbit = orbit_representatives(prefix);
                            if (std::any_of(tried.begin(), tried.end(), [&] (int t) { return orbit[t] == orbit[v]; }))
                                continue;
                        }
                        tried.push_back(v);

                        vector<int> child = colour;
                        for (int e = 0 ; e < _n ; ++e)
                            if (colour[e] > target || (colour[e] == target && e != v))
                                ++child[e];

                        prefix.push_back(v);
                        search(std::move(child), prefix);
                        prefix.pop_back();
                    }
                }
        };
    }

    auto canonical_labeling(const Family & f, int exact_limit) -> CanonicalLabeling
    {
        return LabelingSearch(f, f.ground_size() <= exact_limit).run();
    }

    auto canonical_form(const Family & f, int exact_limit) -> Family
    {
        return canonical_labeling(f, exact_limit).image;
    }

    auto format_set(SetBits s) -> string
    {
        if (0 == s)
            return "-";
        string result;
        for (int i = 0 ; s ; ++i, s >>= 1)
            if (s & 1u) {
                if (! result.empty())
                    result += ' ';
                result += to_string(i + 1);
            }
        return result;
    }

    auto format_family(const Family & f) -> string
    {
        string result = "n=" + to_string(f.ground_size()) + "\n";
        for (auto s : f)
            result += format_set(s) + "\n";
        return result;
    }

    namespace
    {
        auto trim(const string & s) -> string
        {
            auto first = s.find_first_not_of(" \t\r");
            if (first == string::npos)
                return "";
            auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        auto parse_int(const string & token, int line, const string & what) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw ParseError("expected " + what + ", got '" + token + "'", line);
            return value;
        }
    }

    auto parse_set_line(const string & text, int ground_size, int line) -> SetBits
    {
        string body = trim(text);
        if (body == "-")
            return 0;

        std::istringstream tokens(body);
        string token;
        SetBits result = 0;
        int previous = 0;
        while (tokens >> token) {
            int e = parse_int(token, line, "an element number");
            if (e < 1 || e > ground_size)
                throw ParseError("element " + token + " outside [" + to_string(ground_size) + "]", line);
            if (e <= previous)
                throw ParseError("elements must be listed in increasing order", line);
            previous = e;
            result |= SetBits{1} << (e - 1);
        }
        if (0 == previous)
            throw ParseError("empty set line; write '-' for the empty set", line);
        return result;
    }

    auto parse_family(const string & text) -> Family
    {
        std::istringstream in(text);
        string raw;
        int line = 0, ground_size = 0;
        vector<SetBits> sets;

        while (std::getline(in, raw)) {
            ++line;
            string body = trim(raw);
            if (body.empty() || body[0] == '#')
                continue;

            if (0 == ground_size) {
                if (body.rfind("n=", 0) != 0)
                    throw ParseError("expected header 'n=<N>'", line);
                ground_size = parse_int(body.substr(2), line, "a ground size");
                if (ground_size < 1 || ground_size > max_ground_size)
                    throw ParseError("ground size must lie in 1.." + to_string(max_ground_size), line);
                continue;
            }

            SetBits s = parse_set_line(body, ground_size, line);
            if (std::find(sets.begin(), sets.end(), s) != sets.end())
                throw ParseError("duplicate set " + format_set(s), line);
            sets.push_back(s);
        }

        if (0 == ground_size)
            throw ParseError("missing header 'n=<N>'", line);
        return Family(ground_size, std::move(sets));
    }
}
