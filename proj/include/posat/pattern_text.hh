/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef POSAT_GUARD_PATTERN_TEXT_HH
#define POSAT_GUARD_PATTERN_TEXT_HH 1

#include <posat/poset.hh>

#include <string>

namespace posat
{
    /**
     * Reads a pattern given either by name (point, c2, v, lambda, diamond, butterfly,
     * chain:K, antichain:K, K:a,b,...) or as a literal "poset k; a<b, c<d, ..." with 1-based
     * elements. A literal relation may be a run such as 1<2<4. Throws ParseError, or CycleError
     * if the relations are not acyclic.
     */
    auto parse_pattern(const std::string & text) -> PatternPoset;

    /// The literal form of p, listing its cover relations.
    auto format_pattern(const PatternPoset & p) -> std::string;
}

#endif
