/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <posat/satnum.hh>
#include <posat/embedding.hh>
#include <posat/hash.hh>
#include <posat/saturation.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace posat
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        struct OutOfBudget
        {
            long long nodes;
        };

        auto seconds_since(Clock::time_point start) -> double
        {
            return std::chrono::duration<double>(Clock::now() - start).count();
        }

        auto sort_families(vector<Family> & families) -> void
        {
            std::sort(families.begin(), families.end(), family_less);
            families.erase(std::unique(families.begin(), families.end()), families.end());
        }

        class LevelSearch
        {
            public:
                LevelSearch(int ground_size, const PatternPoset & pattern, int size, const SearchBudget & budget) :
                    _ground_size(ground_size),
                    _pattern(pattern),
                    _size(size),
                    _budget(budget),
                    _universe(all_sets_in_order(ground_size)),
                    _start(Clock::now())
                {
                }

                auto run() -> LevelResult
                {
                    Family root(_ground_size);
                    tick();

                    vector<Family> found;
                    if (_budget.workers <= 1)
                        explore(root, 0, found);
                    else
                        explore_parallel(root, found);

                    sort_families(found);
                    return LevelResult{ _size, _nodes.load(), _leaves.load(), std::move(found) };
                }

            private:
                int _ground_size;
                const PatternPoset & _pattern;
                int _size;
                SearchBudget _budget;
                vector<SetBits> _universe;
                Clock::time_point _start;
                std::atomic<long long> _nodes{0}, _leaves{0};
                std::atomic<bool> _stop{false};

                auto tick() -> void
                {
                    long long count = ++_nodes;
                    if (_stop.load() || count > _budget.max_nodes
                            || (0 == (count & 255) && seconds_since(_start) > _budget.max_seconds)) {
                        _stop.store(true);
                        throw OutOfBudget{ count };
                    }
                }

                auto poll() -> void
                {
                    if (_stop.load() || seconds_since(_start) > _budget.max_seconds) {
                        _stop.store(true);
                        throw OutOfBudget{ _nodes.load() };
                    }
                }

                // An isomorphism invariant of s within f: size, members below and above it, and
                // the sorted membership counts of its elements.
                using SetInvariant = std::tuple<int, int, int, vector<int>>;

                auto invariant(const Family & f, SetBits s) const -> SetInvariant
                {
                    int below = 0, above = 0;
                    for (auto t : f) {
                        below += is_proper_subset(t, s);
                        above += is_proper_subset(s, t);
                    }
                    vector<int> degrees;
                    for (SetBits b = s ; b ; b &= b - 1) {
                        SetBits bit = b & -b;
                        degrees.push_back(static_cast<int>(std::count_if(f.begin(), f.end(), [&] (SetBits t) { return t & bit; })));
                    }
                    std::sort(degrees.begin(), degrees.end());
                    return { cardinality(s), below, above, std::move(degrees) };
                }

                // Canonical children of a canonical family, sorted and deduplicated. The set a
                // child is deleted back along is, among the sets of greatest invariant, the one
                // whose canonical image comes last; a child is kept when deleting that set gives
                // back the parent up to isomorphism.
                auto children(const Family & parent) -> vector<Family>
                {
                    vector<Family> result;
                    int polled = 0;
                    for (auto s : _universe) {
                        if (0 == (++polled & 63))
                            poll();
                        if (parent.contains(s))
                            continue;

                        auto child = parent.with(s);
                        auto mine = invariant(child, s);
                        vector<SetBits> greatest{ s };
                        bool beaten = false;
                        for (auto t : parent) {
                            auto theirs = invariant(child, t);
                            if (mine < theirs) {
                                beaten = true;
                                break;
                            }
                            if (theirs == mine)
                                greatest.push_back(t);
                        }
                        if (beaten || completes_copy(parent, SetWord(_ground_size, s), _pattern))
                            continue;

                        auto labeling = canonical_labeling(child, max_ground_size);
                        SetBits deletion = s, deletion_image = permute_set(s, labeling.perm);
                        for (auto t : greatest) {
                            SetBits image = permute_set(t, labeling.perm);
                            if (set_order_less(deletion_image, image)) {
                                deletion = t;
                                deletion_image = image;
                            }
                        }

                        if (deletion == s || canonical_form(child.without(deletion), max_ground_size) == parent)
                            result.push_back(std::move(labeling.image));
                    }
                    sort_families(result);
                    for (std::size_t i = 0 ; i < result.size() ; ++i)
                        tick();
                    return result;
                }

                auto visit_leaf(const Family & f, vector<Family> & found) -> void
                {
                    ++_leaves;
                    if (std::holds_alternative<Saturated>(saturation_verdict(f, _pattern)))
                        found.push_back(f);
                }

                auto explore(const Family & f, int depth, vector<Family> & found) -> void
                {
                    if (depth == _size) {
                        visit_leaf(f, found);
                        return;
                    }
                    for (auto & child : children(f))
                        explore(child, depth + 1, found);
                }

                // Expand breadth first until there is enough work to share, then hand out subtrees.
                auto explore_parallel(const Family & root, vector<Family> & found) -> void
                {
                    vector<Family> frontier{ root };
                    int depth = 0;
                    std::size_t wanted = 64 * static_cast<std::size_t>(_budget.workers);
                    while (depth < _size && frontier.size() < wanted && ! frontier.empty()) {
                        vector<Family> next;
                        for (auto & f : frontier)
                            for (auto & child : children(f))
                                next.push_back(std::move(child));
                        frontier = std::move(next);
                        ++depth;
                    }

                    std::atomic<std::size_t> next_index{0};
                    std::mutex lock;
                    optional<OutOfBudget> failure;
                    auto work = [&] {
                        vector<Family> mine;
                        try {
                            while (true) {
                                std::size_t i = next_index.fetch_add(1);
                                if (i >= frontier.size())
                                    break;
                                explore(frontier[i], depth, mine);
                            }
                        }
                        catch (const OutOfBudget & e) {
                            std::lock_guard<std::mutex> guard(lock);
                            if (! failure)
                                failure = e;
                        }
                        std::lock_guard<std::mutex> guard(lock);
                        for (auto & f : mine)
                            found.push_back(std::move(f));
                    };

                    vector<std::thread> threads;
                    for (int t = 0 ; t < _budget.workers ; ++t)
                        threads.emplace_back(work);
                    for (auto & t : threads)
                        t.join();
                    if (failure)
                        throw *failure;
                }
        };

        auto remaining(const SearchBudget & budget, long long nodes_used, Clock::time_point start) -> SearchBudget
        {
            SearchBudget result = budget;
            result.max_nodes = std::max(0LL, budget.max_nodes - nodes_used);
            result.max_seconds = std::max(0.0, budget.max_seconds - seconds_since(start));
            return result;
        }

        auto partial_certificate(int ground_size, const PatternPoset & pattern, int refuted_below, long long nodes,
                Clock::time_point start) -> SearchCertificate
        {
            SearchCertificate certificate;
            certificate.ground_size = ground_size;
            certificate.pattern = pattern;
            certificate.witness = constructive_upper_bound(ground_size, pattern);
            certificate.value = certificate.witness.size();
            certificate.exhausted = false;
            certificate.refuted_below = refuted_below;
            certificate.nodes = nodes;
            certificate.seconds = seconds_since(start);
            return certificate;
        }

        auto check_ground_size(int ground_size) -> void
        {
            if (ground_size < 1)
                throw ParameterError("search needs n >= 1, got " + to_string(ground_size));
            check_scan_budget(ground_size, ScanLimits{});
        }

        auto format_family_line(const Family & f) -> string
        {
            string result;
            for (auto s : f) {
                if (! result.empty())
                    result += "|";
                result += format_set(s);
            }
            return result;
        }

        auto parse_family_line(const string & text, int ground_size) -> Family
        {
            vector<SetBits> sets;
            std::stringstream stream(text);
            string piece;
            while (std::getline(stream, piece, '|'))
                sets.push_back(parse_set_line(piece, ground_size, 0));
            return Family(ground_size, std::move(sets));
        }

        /// Iterates k = 0, 1, ... and stops at the first size with a saturated family.
        auto deepen(int ground_size, const PatternPoset & pattern, const SearchBudget & budget, const SearchCache * cache,
                Clock::time_point start) -> std::pair<LevelResult, long long>
        {
            long long nodes = 0;
            for (int k = 0 ; ; ++k) {
                optional<LevelResult> level;
                if (cache)
                    level = cache->load(ground_size, pattern, k);
                if (! level) {
                    try {
                        level = LevelSearch(ground_size, pattern, k, remaining(budget, nodes, start)).run();
                    }
                    catch (const OutOfBudget & e) {
                        nodes += e.nodes;
                        throw SearchBudgetExceeded("search budget exhausted while refuting size " + to_string(k),
                                partial_certificate(ground_size, pattern, k, nodes, start));
                    }
                    if (cache)
                        cache->store(ground_size, pattern, *level);
                }
                nodes += level->nodes;
                if (! level->saturated.empty())
                    return { std::move(*level), nodes };
            }
        }
    }

    auto search_level(int ground_size, const PatternPoset & pattern, int size, const SearchBudget & budget) -> LevelResult
    {
        check_ground_size(ground_size);
        if (size < 0)
            throw ParameterError("family size must be non-negative");
        auto start = Clock::now();
        try {
            return LevelSearch(ground_size, pattern, size, budget).run();
        }
        catch (const OutOfBudget & e) {
            throw SearchBudgetExceeded("search budget exhausted at size " + to_string(size),
                    partial_certificate(ground_size, pattern, 0, e.nodes, start));
        }
    }

    SearchCache::SearchCache(std::filesystem::path directory) :
        _directory(std::move(directory))
    {
    }

    auto SearchCache::path_for(int ground_size, const PatternPoset & pattern, int size) const -> std::filesystem::path
    {
        return _directory / (content_hash(to_string(ground_size) + "|" + canonical_code(pattern) + "|" + to_string(size)) + ".level");
    }

    auto SearchCache::load(int ground_size, const PatternPoset & pattern, int size) const -> optional<LevelResult>
    {
        std::ifstream in(path_for(ground_size, pattern, size));
        if (! in)
            return std::nullopt;

        LevelResult result;
        result.size = size;
        bool n_ok = false, pattern_ok = false, size_ok = false, nodes_ok = false;
        long long expected_families = -1;
        try {
            string line;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#')
                    continue;
                auto eq = line.find('=');
                if (eq == string::npos)
                    return std::nullopt;
                string key = line.substr(0, eq), value = line.substr(eq + 1);
                if (key == "n")
                    n_ok = value == to_string(ground_size);
                else if (key == "pattern")
                    pattern_ok = value == canonical_code(pattern);
                else if (key == "size")
                    size_ok = value == to_string(size);
                else if (key == "nodes") {
                    result.nodes = std::stoll(value);
                    nodes_ok = true;
                }
                else if (key == "free")
                    result.free_families = std::stoll(value);
                else if (key == "families")
                    expected_families = std::stoll(value);
                else if (key == "family")
                    result.saturated.push_back(parse_family_line(value, ground_size));
                else
                    return std::nullopt;
            }
        }
        catch (const std::exception &) {
            return std::nullopt;
        }

        if (! (n_ok && pattern_ok && size_ok && nodes_ok) || expected_families != static_cast<long long>(result.saturated.size()))
            return std::nullopt;

        // never trust a cached witness without re-checking it
        for (auto & f : result.saturated)
            if (f.size() != size || canonical_form(f, max_ground_size) != f || ! is_saturated(f, pattern))
                return std::nullopt;
        if (! std::is_sorted(result.saturated.begin(), result.saturated.end(), family_less))
            return std::nullopt;
        return result;
    }

    auto SearchCache::store(int ground_size, const PatternPoset & pattern, const LevelResult & level) const -> void
    {
        std::filesystem::create_directories(_directory);
        auto path = path_for(ground_size, pattern, level.size);
        auto temporary = path;
        temporary += ".tmp";
        {
            std::ofstream out(temporary);
            out << "# posat level cache\n";
            out << "n=" << ground_size << "\n";
            out << "pattern=" << canonical_code(pattern) << "\n";
            out << "size=" << level.size << "\n";
            out << "nodes=" << level.nodes << "\n";
            out << "free=" << level.free_families << "\n";
            out << "families=" << level.saturated.size() << "\n";
            for (auto & f : level.saturated)
                out << "family=" << format_family_line(f) << "\n";
            if (! out)
                throw Error("could not write cache file " + temporary.string());
        }
        std::filesystem::rename(temporary, path);
    }

    auto sat_number(int ground_size, const PatternPoset & pattern, const SearchBudget & budget, const SearchCache * cache) -> SearchCertificate
    {
        check_ground_size(ground_size);
        auto start = Clock::now();
        auto [level, nodes] = deepen(ground_size, pattern, budget, cache, start);

        SearchCertificate certificate;
        certificate.ground_size = ground_size;
        certificate.pattern = pattern;
        certificate.value = level.size;
        certificate.witness = level.saturated.front();
        certificate.exhausted = true;
        certificate.refuted_below = level.size;
        certificate.nodes = nodes;
        certificate.seconds = seconds_since(start);
        return certificate;
    }

    auto enumerate_min_saturated(int ground_size, const PatternPoset & pattern, const SearchBudget & budget) -> vector<Family>
    {
        check_ground_size(ground_size);
        return deepen(ground_size, pattern, budget, nullptr, Clock::now()).first.saturated;
    }

    auto constructive_upper_bound(int ground_size, const PatternPoset & pattern) -> Family
    {
        auto chain = chain_family(ground_size);
        if (is_saturated(chain, pattern))
            return chain;

        // a maximal P-free family is saturated, since containing a copy is monotone
        Family greedy(ground_size);
        for (auto s : all_sets_in_order(ground_size))
            if (! completes_copy(greedy, SetWord(ground_size, s), pattern))
                greedy = greedy.with(s);
        return greedy;
    }
}
