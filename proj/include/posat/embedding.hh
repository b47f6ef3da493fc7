/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef POSAT_GUARD_EMBEDDING_HH
#define POSAT_GUARD_EMBEDDING_HH 1

#include <posat/family.hh>
#include <posat/poset.hh>

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace posat
{
    /// assignment[a] is the set that pattern element a is sent to.
    struct Embedding
    {
        std::vector<SetBits> assignment;

        auto operator== (const Embedding &) const -> bool = default;
    };

    /// Injective, and a < b in the pattern iff image(a) is a proper subset of image(b).
    auto is_induced_embedding(const PatternPoset & pattern, const Embedding & embedding) -> bool;

    /// A pattern element forced onto a particular set, which need not belong to the host.
    struct Pin
    {
        int element;
        SetBits set;
    };

    /// Receives each embedding found; return false to stop the enumeration.
    using EmbeddingVisitor = std::function<bool (const Embedding &)>;

    /**
     * Backtracking search for induced copies of `pattern` among `host_sets` (plus the pinned
     * set, when given). Elements are placed most-constrained first; candidates are filtered by
     * the cardinality window implied by chain heights, and every placement is checked against
     * all earlier ones in both directions, so incomparability is preserved as well as order.
     * Visits embeddings in a fixed deterministic order.
     */
    auto for_each_induced_copy(std::span<const SetBits> host_sets, int ground_size, const PatternPoset & pattern,
            const std::optional<Pin> & pin, const EmbeddingVisitor & visit) -> void;

    auto find_induced_copy(const Family & host, const PatternPoset & pattern) -> std::optional<Embedding>;

    /// Some copy inside host + {s} that uses s. Throws PreconditionError if s is already in host.
    auto completes_copy(const Family & host, const SetWord & s, const PatternPoset & pattern) -> std::optional<Embedding>;

    /// A copy using `set` in the role of `element`, the other elements drawn from host minus `set`.
    auto find_pinned_copy(const Family & host, const PatternPoset & pattern, int element, SetBits set) -> std::optional<Embedding>;
}

#endif
