/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <posat/saturation.hh>
#include <posat/errors.hh>

#include <atomic>
#include <limits>
#include <thread>

using std::optional;
using std::to_string;
using std::vector;

namespace posat
{
    auto check_scan_budget(int ground_size, const ScanLimits & limits) -> void
    {
        if (ground_size > limits.max_ground_size)
            throw GroundTooLarge("a scan of all subsets of [" + to_string(ground_size) + "] exceeds the limit of n <= "
                    + to_string(limits.max_ground_size));
    }

    auto all_sets_in_order(int n) -> vector<SetBits>
    {
        vector<SetBits> result;
        result.reserve(std::size_t{1} << n);
        result.push_back(0);
        for (int c = 1 ; c <= n ; ++c) {
            // Gosper's hack walks the c-subsets in increasing numeric order
            SetBits s = full_set(c), limit = SetBits{1} << n;
            while (s < limit) {
                result.push_back(s);
                SetBits low = s & -s, ripple = s + low;
                s = (((ripple ^ s) >> 2) / low) | ripple;
            }
        }
        return result;
    }

    auto is_p_free(const Family & f, const PatternPoset & p) -> bool
    {
        return ! find_induced_copy(f, p).has_value();
    }

    namespace
    {
        auto completes(const Family & f, SetBits s, const PatternPoset & p) -> bool
        {
            return completes_copy(f, SetWord(f.ground_size(), s), p).has_value();
        }

        /// Index into `order` of the first absent set that completes nothing, or order.size().
        auto first_failure(const Family & f, const PatternPoset & p, const vector<SetBits> & order, int workers) -> std::size_t
        {
            std::size_t none = order.size();
            if (workers <= 1) {
                for (std::size_t i = 0 ; i < order.size() ; ++i)
                    if (! f.contains(order[i]) && ! completes(f, order[i], p))
                        return i;
                return none;
            }

            constexpr std::size_t chunk = 256;
            std::atomic<std::size_t> next_chunk{0}, best{none};
            auto work = [&] {
                while (true) {
                    std::size_t start = next_chunk.fetch_add(chunk);
                    if (start >= order.size() || start >= best.load())
                        return;
                    std::size_t stop = std::min(order.size(), start + chunk);
                    for (std::size_t i = start ; i < stop && i < best.load() ; ++i)
                        if (! f.contains(order[i]) && ! completes(f, order[i], p)) {
                            std::size_t current = best.load();
                            while (i < current && ! best.compare_exchange_weak(current, i))
                                ;
                            break;
                        }
                }
            };

            vector<std::thread> threads;
            for (int w = 0 ; w < workers ; ++w)
                threads.emplace_back(work);
            for (auto & t : threads)
                t.join();
            return best.load();
        }
    }

    auto saturation_verdict(const Family & f, const PatternPoset & p, const ScanLimits & limits) -> SaturationVerdict
    {
        check_scan_budget(f.ground_size(), limits);

        if (auto copy = find_induced_copy(f, p))
            return ContainsCopy{ *copy };

        auto order = all_sets_in_order(f.ground_size());
        auto failure = first_failure(f, p, order, limits.workers);
        if (failure < order.size())
            return NotSaturated{ order[failure] };
        return Saturated{};
    }

    auto is_saturated(const Family & f, const PatternPoset & p, const ScanLimits & limits) -> bool
    {
        return std::holds_alternative<Saturated>(saturation_verdict(f, p, limits));
    }

    auto chain_family(int n) -> Family
    {
        if (n < 1)
            throw ParameterError("chain family needs n >= 1");
        vector<SetBits> sets;
        for (int i = 0 ; i <= n ; ++i)
            sets.push_back(full_set(i));
        return Family(n, std::move(sets));
    }
}
