/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <posat/pair_systems.hh>
#include <posat/embedding.hh>
#include <posat/saturation.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

using std::optional;
using std::string;
using std::vector;

namespace posat
{
    using std::to_string;

    GroundSet::GroundSet(int ambient_size, SetBits universe) :
        _ambient_size(ambient_size),
        _universe(universe)
    {
        if (ambient_size < 1 || ambient_size > max_ground_size)
            throw IndexError("ambient size " + to_string(ambient_size) + " is outside 1.." + to_string(max_ground_size));
        if (universe == 0)
            throw IndexError("a ground set must be nonempty");
        if (! is_subset(universe, full_set(ambient_size)))
            throw IndexError("ground set leaves [" + to_string(ambient_size) + "]");
    }

    auto GroundSet::whole(int n) -> GroundSet
    {
        return GroundSet(n, full_set(n));
    }

    PairSystem::PairSystem(GroundSet g, int parameter, Family i, Family j) :
        ground(g),
        m(parameter),
        low(std::move(i)),
        high(std::move(j))
    {
        if (m < 1)
            throw ParameterError("m must be positive");
        for (auto * f : { &low, &high }) {
            if (f->ground_size() != ground.ambient_size())
                throw IndexError("family and ground set disagree on n");
            for (auto s : *f)
                if (! ground.contains(s))
                    throw IndexError("set {" + format_set(s) + "} is not inside the ground set");
        }
    }

    auto to_string(PairCondition condition) -> string
    {
        switch (condition) {
            case PairCondition::Disjoint:         return "disjoint";
            case PairCondition::LowSize:          return "low-size";
            case PairCondition::HighSize:         return "high-size";
            case PairCondition::Cover:            return "cover";
            case PairCondition::ChainOutsideHigh: return "c2-outside-high";
            case PairCondition::Betweenness:      return "betweenness";
            case PairCondition::InputLowSize:     return "input-low-size";
        }
        return "unknown";
    }

    namespace
    {
        auto subsets_in_order(SetBits universe) -> vector<SetBits>
        {
            vector<SetBits> result;
            SetBits s = 0;
            do {
                result.push_back(s);
                s = (s - universe) & universe;
            } while (s != 0);
            std::sort(result.begin(), result.end(), set_order_less);
            return result;
        }

        auto fail(PairCondition condition, SetBits witness, optional<SetBits> partner = std::nullopt) -> MembershipReport
        {
            return MembershipReport{ false, condition, witness, partner };
        }

        // Minimal tops of induced diamonds from `low` that contain no member of `high`. Every
        // minimal such top is a union P ∪ Q of incomparable P, Q with some R ⊆ P ∩ Q, so only
        // those unions need to be considered.
        auto fast_v(const vector<SetBits> & low, const vector<SetBits> & high, int ambient) -> Family
        {
            vector<SetBits> tops;
            for (std::size_t a = 0 ; a < low.size() ; ++a)
                for (std::size_t b = a + 1 ; b < low.size() ; ++b) {
                    SetBits p = low[a], q = low[b];
                    if (comparable(p, q))
                        continue;
                    SetBits meet = p & q;
                    if (std::none_of(low.begin(), low.end(), [&] (SetBits r) { return is_subset(r, meet); }))
                        continue;
                    SetBits top = p | q;
                    if (std::any_of(high.begin(), high.end(), [&] (SetBits h) { return is_subset(h, top); }))
                        continue;
                    tops.push_back(top);
                }
            return minimal_sets(Family(ambient, std::move(tops)));
        }

        using Clock = std::chrono::steady_clock;

        /// Pairs (I, J) as k-subsets of a candidate list: the low sets, then the high sets.
        class PairEnumerator
        {
            public:
                PairEnumerator(int n, int m, const SearchBudget & budget, std::atomic<long long> & nodes) :
                    _n(n),
                    _m(m),
                    _ground(GroundSet::whole(n)),
                    _budget(budget),
                    _nodes(nodes),
                    _start(Clock::now())
                {
                    for (auto s : all_sets_in_order(n))
                        if (cardinality(s) <= m)
                            _candidates.push_back(s);
                    _low_count = static_cast<int>(_candidates.size());
                    for (auto s : all_sets_in_order(n))
                        if (cardinality(s) >= n - m)
                            _candidates.push_back(s);
                }

                auto candidate_count() const -> int { return static_cast<int>(_candidates.size()); }

                auto pair_of(const vector<int> & chosen) const -> PairSystem
                {
                    vector<SetBits> low, high;
                    for (int i : chosen)
                        (i < _low_count ? low : high).push_back(_candidates[i]);
                    return PairSystem(_ground, _m, Family(_n, low), Family(_n, high));
                }

                /// First member of L* among the k-subsets, in lexicographic index order.
                /// `examined` receives the number of pairs looked at up to and including it.
                auto first_member(int k, long long & examined) -> optional<vector<int>>
                {
                    int count = candidate_count();
                    if (k > count)
                        return std::nullopt;
                    if (k == 0) {
                        ++examined;
                        tick();
                        vector<int> none;
                        if (is_member(none))
                            return none;
                        return std::nullopt;
                    }

                    int partitions = count - k + 1;
                    vector<long long> partition_nodes(partitions, 0);
                    vector<optional<vector<int>>> partition_hit(partitions);
                    std::atomic<int> next{0}, best{partitions};
                    std::mutex lock;
                    optional<BudgetExceeded> failure;

                    auto work = [&] {
                        try {
                            while (true) {
                                int first = next.fetch_add(1);
                                if (first >= partitions || first > best.load())
                                    return;
                                auto hit = search_partition(first, k, partition_nodes[first], best);
                                if (hit) {
                                    partition_hit[first] = std::move(hit);
                                    int current = best.load();
                                    while (first < current && ! best.compare_exchange_weak(current, first))
                                        ;
                                }
                            }
                        }
                        catch (const BudgetExceeded & e) {
                            std::lock_guard<std::mutex> guard(lock);
                            if (! failure)
                                failure = e;
                            best.store(-1);
                        }
                    };

                    if (_budget.workers <= 1)
                        work();
                    else {
                        vector<std::thread> threads;
                        for (int t = 0 ; t < _budget.workers ; ++t)
                            threads.emplace_back(work);
                        for (auto & t : threads)
                            t.join();
                    }
                    if (failure)
                        throw *failure;

                    // partitions past the winner do not count, so the total is worker independent
                    int winner = best.load();
                    for (int p = 0 ; p < partitions && p <= winner ; ++p)
                        examined += partition_nodes[p];
                    if (winner < partitions)
                        return partition_hit[winner];
                    return std::nullopt;
                }

            private:
                int _n, _m;
                GroundSet _ground;
                SearchBudget _budget;
                std::atomic<long long> & _nodes;
                Clock::time_point _start;
                vector<SetBits> _candidates;
                int _low_count = 0;

                auto tick() -> void
                {
                    long long count = ++_nodes;
                    if (count > _budget.max_nodes || (0 == (count & 1023) && std::chrono::duration<double>(Clock::now() - _start).count() > _budget.max_seconds))
                        throw BudgetExceeded("pair enumeration budget exhausted", count);
                }

                auto is_member(const vector<int> & chosen) const -> bool
                {
                    vector<SetBits> low, high;
                    for (int i : chosen)
                        (i < _low_count ? low : high).push_back(_candidates[i]);
                    // every union of two low sets must be available to cover X
                    SetBits covered = 0;
                    for (auto s : low)
                        covered |= s;
                    if (covered != _ground.universe())
                        return false;
                    return in_L(fast_v(low, high, _n), Family(_n, high), _ground, _m).in_class;
                }

                auto search_partition(int first, int k, long long & examined, std::atomic<int> & best) -> optional<vector<int>>
                {
                    int count = candidate_count();
                    vector<int> chosen(k);
                    chosen[0] = first;
                    for (int i = 1 ; i < k ; ++i)
                        chosen[i] = first + i;
                    while (true) {
                        if (best.load() < first)
                            return std::nullopt;
                        ++examined;
                        tick();
                        if (is_member(chosen))
                            return chosen;

                        // next combination with chosen[0] fixed
                        int pos = k - 1;
                        while (pos >= 1 && chosen[pos] == count - k + pos)
                            --pos;
                        if (pos < 1)
                            return std::nullopt;
                        ++chosen[pos];
                        for (int i = pos + 1 ; i < k ; ++i)
                            chosen[i] = chosen[i - 1] + 1;
                    }
                }
        };

        auto check_parameters(int size, int m) -> void
        {
            if (m < 1)
                throw ParameterError("m must be positive");
            if (2 * m + 1 > size)
                throw ParameterError("need 2m+1 <= |X|, got m=" + to_string(m) + " and |X|=" + to_string(size));
        }
    }

    auto v0(const PairSystem & ps) -> Family
    {
        check_scan_budget(ps.ground.size(), ScanLimits{});
        int n = ps.ground.ambient_size();
        auto diamond_shape = diamond();
        vector<SetBits> result;
        for (auto a : subsets_in_order(ps.ground.universe())) {
            if (std::any_of(ps.high.begin(), ps.high.end(), [&] (SetBits j) { return is_subset(j, a); }))
                continue;
            // top of the diamond is element 3
            if (find_pinned_copy(ps.low, diamond_shape, 3, a))
                result.push_back(a);
        }
        return Family(n, std::move(result));
    }

    auto v(const PairSystem & ps) -> Family
    {
        return minimal_sets(v0(ps));
    }

    auto in_L(const Family & g, const Family & h, const GroundSet & ground, int m) -> MembershipReport
    {
        check_parameters(ground.size(), m);
        for (auto * f : { &g, &h }) {
            if (f->ground_size() != ground.ambient_size())
                throw IndexError("family and ground set disagree on n");
            for (auto s : *f)
                if (! ground.contains(s))
                    throw PreconditionError("set {" + format_set(s) + "} is not inside the ground set");
        }

        int x = ground.size();
        for (auto s : g)
            if (h.contains(s))
                return fail(PairCondition::Disjoint, s);
        for (auto s : g)
            if (cardinality(s) > m)
                return fail(PairCondition::LowSize, s);
        for (auto s : h)
            if (cardinality(s) < x - m)
                return fail(PairCondition::HighSize, s);

        SetBits covered = 0;
        for (auto s : g)
            covered |= s;
        if (covered != ground.universe()) {
            SetBits missing = ground.universe() & ~covered;
            return fail(PairCondition::Cover, missing & -missing);
        }

        auto both = g.united(h);
        for (auto s : both)
            for (auto t : both)
                if (is_proper_subset(s, t) && ! (h.contains(s) && h.contains(t)))
                    return fail(PairCondition::ChainOutsideHigh, s, t);

        for (auto a : subsets_in_order(ground.universe())) {
            int size = cardinality(a);
            if (size < m || size > x - m)
                continue;
            if (std::none_of(both.begin(), both.end(), [&] (SetBits b) { return comparable(a, b); }))
                return fail(PairCondition::Betweenness, a);
        }
        return MembershipReport{};
    }

    auto in_Lstar(const PairSystem & ps) -> MembershipReport
    {
        check_parameters(ps.ground.size(), ps.m);
        for (auto s : ps.low)
            if (cardinality(s) > ps.m)
                return fail(PairCondition::InputLowSize, s);
        return in_L(v(ps), ps.high, ps.ground, ps.m);
    }

    auto f_bound_check(int n, int m, const SearchBudget & budget) -> LemmaReport
    {
        check_parameters(n, m);
        std::atomic<long long> nodes{0};
        PairEnumerator enumerator(n, m, budget, nodes);
        long long examined = 0;
        int limit = n - 2 * m - 1;
        for (int k = 0 ; k <= limit ; ++k)
            if (auto hit = enumerator.first_member(k, examined)) {
                auto ps = enumerator.pair_of(*hit);
                auto report = make_report("f-bound", LemmaStatus::Fail,
                        "a member of L* with |I u J| = " + to_string(k) + " < n - 2m");
                report.witness_sets = ps.low.sets();
                report.witness_sets.insert(report.witness_sets.end(), ps.high.begin(), ps.high.end());
                report.notes.push_back("pairs examined: " + to_string(examined));
                return report;
            }

        auto report = make_report("f-bound", LemmaStatus::Pass);
        report.notes.push_back("candidate sets: " + to_string(enumerator.candidate_count()));
        report.notes.push_back("largest size searched: " + to_string(limit));
        report.notes.push_back("pairs examined: " + to_string(examined));
        return report;
    }

    auto f_exact(int n, int m, const SearchBudget & budget) -> FValue
    {
        check_parameters(n, m);
        std::atomic<long long> nodes{0};
        PairEnumerator enumerator(n, m, budget, nodes);
        FValue result;
        long long examined = 0;
        for (int k = 0 ; k <= enumerator.candidate_count() ; ++k)
            if (auto hit = enumerator.first_member(k, examined)) {
                result.finite = true;
                result.value = k;
                result.witness = enumerator.pair_of(*hit);
                break;
            }
        result.nodes = examined;
        return result;
    }

    auto restrict_pair_unchecked(const PairSystem & ps) -> Restriction
    {
        auto tops = v(ps);
        SetBits universe = ps.ground.universe();
        int n = ps.ground.ambient_size();

        // G_i as the indices of the tops containing i
        vector<vector<int>> g(n);
        vector<int> elements;
        for (int i = 0 ; i < n ; ++i)
            if ((universe >> i) & 1u) {
                elements.push_back(i);
                for (int a = 0 ; a < tops.size() ; ++a)
                    if ((tops[a] >> i) & 1u)
                        g[i].push_back(a);
            }

        auto strictly_inside = [&] (int i, int j) {
            return g[i] != g[j] && std::includes(g[j].begin(), g[j].end(), g[i].begin(), g[i].end());
        };
        int chosen = -1;
        for (int j : elements)
            if (std::none_of(elements.begin(), elements.end(), [&] (int i) { return strictly_inside(i, j); })) {
                chosen = j;
                break;
            }

        Restriction result;
        for (int k : elements)
            if (g[k] == g[chosen]) {
                result.removed |= SetBits{1} << k;
                result.last = SetBits{1} << k;
            }
        result.t = cardinality(result.removed);
        SetBits rest = universe & ~result.removed, initial = result.removed & ~result.last;

        if (rest == 0) {
            result.degenerate = true;
            return result;
        }

        vector<SetBits> low, high;
        for (auto s : ps.low)
            if (0 == (s & result.removed))
                low.push_back(s);
        for (auto s : ps.high)
            if (is_subset(initial, s))
                high.push_back(s & ~result.removed);
        result.restricted.emplace(GroundSet(n, rest), ps.m, Family(n, low), Family(n, high));
        return result;
    }

    auto restrict_pair(const PairSystem & ps) -> Restriction
    {
        auto membership = in_Lstar(ps);
        if (! membership.in_class)
            throw PreconditionError("restriction needs a member of L*; failed " + to_string(*membership.failed));
        return restrict_pair_unchecked(ps);
    }

    auto check_restriction(const PairSystem & ps) -> LemmaReport
    {
        auto membership = in_Lstar(ps);
        if (! membership.in_class)
            return make_report("restriction", LemmaStatus::PreconditionFailed, "not a member of L*: " + to_string(*membership.failed));

        auto r = restrict_pair_unchecked(ps);
        int x = ps.ground.size();
        string t_note = "t = " + to_string(r.t) + ", removed {" + format_set(r.removed) + "}";
        if (x < 2 * ps.m + r.t + 1) {
            vector<LemmaReport> parts;
            for (auto name : { "restricted-v", "restricted-l", "restricted-lstar" })
                parts.push_back(make_report(name, LemmaStatus::Vacuous, "|X| < 2m + t + 1"));
            auto report = combine_parts("restriction", std::move(parts));
            report.notes.push_back(t_note);
            return report;
        }

        int n = ps.ground.ambient_size();
        auto & restricted = *r.restricted;
        auto tops = v(ps);
        vector<SetBits> kept;
        for (auto a : tops)
            if (0 == (a & r.removed))
                kept.push_back(a);
        Family expected(n, kept);

        vector<LemmaReport> parts;
        auto actual = v(restricted);
        if (actual == expected)
            parts.push_back(make_report("restricted-v", LemmaStatus::Pass));
        else {
            auto report = make_report("restricted-v", LemmaStatus::Fail, "v of the restriction differs from the tops avoiding the removed class");
            for (auto s : actual.united(expected))
                if (actual.contains(s) != expected.contains(s))
                    report.witness_sets.push_back(s);
            parts.push_back(std::move(report));
        }

        auto membership_part = [&] (const string & name, const MembershipReport & m) {
            if (m.in_class)
                return make_report(name, LemmaStatus::Pass);
            auto report = make_report(name, LemmaStatus::Fail, "condition " + to_string(*m.failed) + " fails");
            report.witness_sets.push_back(m.witness);
            if (m.partner)
                report.witness_sets.push_back(*m.partner);
            return report;
        };
        parts.push_back(membership_part("restricted-l", in_L(expected, restricted.high, restricted.ground, ps.m)));
        parts.push_back(membership_part("restricted-lstar", in_Lstar(restricted)));

        auto report = combine_parts("restriction", std::move(parts));
        report.notes.push_back(t_note);
        return report;
    }

    auto sample_lstar(std::mt19937_64 & rng, const GroundSet & ground, int m, int attempts) -> optional<PairSystem>
    {
        check_parameters(ground.size(), m);
        int n = ground.ambient_size(), x = ground.size();
        auto subsets = subsets_in_order(ground.universe());
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int attempt = 0 ; attempt < attempts ; ++attempt) {
            // densities vary per attempt so both sparse and dense pairs get drawn
            double small = 0.6 + 0.4 * unit(rng), medium = unit(rng), dense_high = 0.5 * std::pow(unit(rng), 3);
            vector<SetBits> low, high;
            for (auto s : subsets) {
                int c = cardinality(s);
                if (c <= m && unit(rng) < (c <= 1 ? small : medium))
                    low.push_back(s);
                else if (c >= x - m && c > m && unit(rng) < dense_high)
                    high.push_back(s);
            }
            PairSystem ps(ground, m, Family(n, low), Family(n, high));
            if (in_Lstar(ps).in_class)
                return ps;
        }
        return std::nullopt;
    }

    auto format_pair_system(const PairSystem & ps) -> string
    {
        string header = "X=";
        bool first = true;
        for (int i = 0 ; i < ps.ground.ambient_size() ; ++i)
            if ((ps.ground.universe() >> i) & 1u) {
                header += (first ? "" : ",") + to_string(i + 1);
                first = false;
            }
        header += " m=" + to_string(ps.m) + "\n";
        return header + format_family(ps.low) + "---\n" + format_family(ps.high);
    }

    auto parse_pair_system(const string & text) -> PairSystem
    {
        std::istringstream in(text);
        string line;
        int number = 0;
        optional<SetBits> universe;
        int m = 0, header_line = 0;
        string low_text, high_text;
        int low_start = 0, high_start = 0;
        bool in_high = false;

        while (std::getline(in, line)) {
            ++number;
            if (! universe) {
                if (line.empty() || line[0] == '#')
                    continue;
                std::istringstream words(line);
                string x_part, m_part, extra;
                words >> x_part >> m_part;
                if (x_part.rfind("X=", 0) != 0 || m_part.rfind("m=", 0) != 0 || (words >> extra))
                    throw ParseError("expected a header 'X=<elements> m=<m>'", number);
                SetBits bits = 0;
                std::istringstream elements(x_part.substr(2));
                string piece;
                while (std::getline(elements, piece, ',')) {
                    int e = 0;
                    try {
                        std::size_t used = 0;
                        e = std::stoi(piece, &used);
                        if (used != piece.size())
                            throw std::invalid_argument(piece);
                    }
                    catch (const std::exception &) {
                        throw ParseError("bad ground element '" + piece + "'", number);
                    }
                    if (e < 1 || e > max_ground_size)
                        throw ParseError("ground element " + piece + " out of range", number);
                    bits |= SetBits{1} << (e - 1);
                }
                try {
                    std::size_t used = 0;
                    m = std::stoi(m_part.substr(2), &used);
                    if (used != m_part.size() - 2)
                        throw std::invalid_argument(m_part);
                }
                catch (const std::exception &) {
                    throw ParseError("bad parameter '" + m_part + "'", number);
                }
                universe = bits;
                header_line = number;
                low_start = number;
                continue;
            }
            if (line == "---") {
                if (in_high)
                    throw ParseError("second '---' separator", number);
                in_high = true;
                high_start = number;
                continue;
            }
            (in_high ? high_text : low_text) += line + "\n";
        }
        if (! universe)
            throw ParseError("missing header", number > 0 ? number : 1);
        if (! in_high)
            throw ParseError("missing '---' separator", number);

        auto block = [] (const string & body, int offset) {
            try {
                return parse_family(body);
            }
            catch (const ParseError & e) {
                string message = e.what();
                auto colon = message.find(": ");
                if (e.line() > 0 && colon != string::npos)
                    message = message.substr(colon + 2);
                throw ParseError(message, offset + std::max(e.line(), 1));
            }
        };
        auto low = block(low_text, low_start), high = block(high_text, high_start);
        try {
            return PairSystem(GroundSet(low.ground_size(), *universe), m, low, high);
        }
        catch (const Error & e) {
            throw ParseError(e.what(), header_line);
        }
    }
}
