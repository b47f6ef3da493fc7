/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <posat/embedding.hh>
#include <posat/errors.hh>

#include <algorithm>

using std::optional;
using std::vector;

namespace posat
{
    auto is_induced_embedding(const PatternPoset & pattern, const Embedding & embedding) -> bool
    {
        const auto & image = embedding.assignment;
        if (static_cast<int>(image.size()) != pattern.size())
            return false;
        for (int a = 0 ; a < pattern.size() ; ++a)
            for (int b = 0 ; b < pattern.size() ; ++b) {
                if (a != b && image[a] == image[b])
                    return false;
                if (pattern.less(a, b) != is_proper_subset(image[a], image[b]))
                    return false;
            }
        return true;
    }

    namespace
    {
        enum class Relation
        {
            Below,
            Above,
            Incomparable
        };

        auto host_relation_matches(Relation r, SetBits x, SetBits y) -> bool
        {
            switch (r) {
                case Relation::Below:        return is_proper_subset(x, y);
                case Relation::Above:        return is_proper_subset(y, x);
                case Relation::Incomparable: return ! comparable(x, y);
            }
            return false;
        }

        class CopySearch
        {
            public:
                CopySearch(std::span<const SetBits> host, int ground_size, const PatternPoset & pattern,
                        const optional<Pin> & pin, const EmbeddingVisitor & visit) :
                    _pattern(pattern),
                    _visit(visit)
                {
                    int k = pattern.size();
                    choose_order(pin);

                    // relation of each element to every element placed before it
                    _relations.assign(k, {});
                    for (int pos = 0 ; pos < k ; ++pos) {
                        int a = _order[pos];
                        for (int q = 0 ; q < pos ; ++q) {
                            int b = _order[q];
                            _relations[pos].push_back(pattern.less(a, b) ? Relation::Below
                                    : pattern.less(b, a) ? Relation::Above : Relation::Incomparable);
                        }
                    }

                    _domains.assign(k, {});
                    int first_free = 0;
                    if (pin) {
                        _domains[0].push_back(pin->set);
                        first_free = 1;
                    }
                    for (int pos = first_free ; pos < k ; ++pos) {
                        int a = _order[pos];
                        int low = pattern.height_below(a), high = ground_size - pattern.height_above(a);
                        for (auto s : host) {
                            if (pin && s == pin->set)
                                continue;
                            int c = cardinality(s);
                            if (c < low || c > high)
                                continue;
                            if (pin && ! host_relation_matches(_relations[pos][0], s, pin->set))
                                continue;
                            _domains[pos].push_back(s);
                        }
                    }

                    _placed.assign(k, 0);
                    _embedding.assignment.assign(k, 0);
                }

                auto run() -> void
                {
                    if (std::any_of(_domains.begin(), _domains.end(), [] (const auto & d) { return d.empty(); }))
                        return;
                    extend(0);
                }

            private:
                const PatternPoset & _pattern;
                const EmbeddingVisitor & _visit;
                vector<int> _order;
                vector<vector<Relation>> _relations;
                vector<vector<SetBits>> _domains;
                vector<SetBits> _placed;
                Embedding _embedding;

                // Pinned element first, then repeatedly the element with most comparabilities to
                // those already ordered (ties: most comparabilities overall, then lowest index).
                auto choose_order(const optional<Pin> & pin) -> void
                {
                    int k = _pattern.size();
                    vector<bool> chosen(k, false);
                    if (pin) {
                        if (pin->element < 0 || pin->element >= k)
                            throw IndexError("pinned element out of range");
                        _order.push_back(pin->element);
                        chosen[pin->element] = true;
                    }
                    while (static_cast<int>(_order.size()) < k) {
                        int best = -1, best_links = -1, best_degree = -1;
                        for (int a = 0 ; a < k ; ++a) {
                            if (chosen[a])
                                continue;
                            int links = 0;
                            for (int b : _order)
                                links += _pattern.comparable(a, b);
                            int degree = _pattern.up_degree(a) + _pattern.down_degree(a);
                            if (links > best_links || (links == best_links && degree > best_degree)) {
                                best = a;
                                best_links = links;
                                best_degree = degree;
                            }
                        }
                        _order.push_back(best);
                        chosen[best] = true;
                    }
                }

                auto extend(int pos) -> bool
                {
                    if (pos == _pattern.size()) {
                        for (int i = 0 ; i < pos ; ++i)
                            _embedding.assignment[_order[i]] = _placed[i];
                        return _visit(_embedding);
                    }

                    for (auto s : _domains[pos]) {
                        bool ok = true;
                        for (int q = 0 ; q < pos && ok ; ++q)
                            ok = s != _placed[q] && host_relation_matches(_relations[pos][q], s, _placed[q]);
                        if (! ok)
                            continue;
                        _placed[pos] = s;
                        if (! extend(pos + 1))
                            return false;
                    }
                    return true;
                }
        };
    }

    auto for_each_induced_copy(std::span<const SetBits> host_sets, int ground_size, const PatternPoset & pattern,
            const optional<Pin> & pin, const EmbeddingVisitor & visit) -> void
    {
        CopySearch(host_sets, ground_size, pattern, pin, visit).run();
    }

    auto find_induced_copy(const Family & host, const PatternPoset & pattern) -> optional<Embedding>
    {
        optional<Embedding> result;
        for_each_induced_copy(host.sets(), host.ground_size(), pattern, std::nullopt, [&] (const Embedding & e) {
                result = e;
                return false;
                });
        return result;
    }

    auto find_pinned_copy(const Family & host, const PatternPoset & pattern, int element, SetBits set) -> optional<Embedding>
    {
        optional<Embedding> result;
        for_each_induced_copy(host.sets(), host.ground_size(), pattern, Pin{ element, set }, [&] (const Embedding & e) {
                result = e;
                return false;
                });
        return result;
    }

    auto completes_copy(const Family & host, const SetWord & s, const PatternPoset & pattern) -> optional<Embedding>
    {
        if (host.contains(s.bits()))
            throw PreconditionError("set " + format_set(s.bits()) + " already belongs to the host family");

        // swapping two incomparable elements with identical strict up- and down-sets is an
        // automorphism, so only the first of such a group needs pinning
        auto twin_of_earlier = [&] (int a) {
            for (int b = 0 ; b < a ; ++b)
                if (! pattern.comparable(a, b) && pattern.above(a) == pattern.above(b) && pattern.below(a) == pattern.below(b))
                    return true;
            return false;
        };

        for (int a = 0 ; a < pattern.size() ; ++a) {
            if (twin_of_earlier(a))
                continue;
            if (auto e = find_pinned_copy(host, pattern, a, s.bits()))
                return e;
        }
        return std::nullopt;
    }
}
