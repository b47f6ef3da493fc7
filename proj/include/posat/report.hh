/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef POSAT_GUARD_REPORT_HH
#define POSAT_GUARD_REPORT_HH 1

#include <posat/diamond_lab.hh>
#include <posat/embedding.hh>
#include <posat/family.hh>
#include <posat/lemma_report.hh>
#include <posat/pair_systems.hh>
#include <posat/poset.hh>
#include <posat/satnum.hh>
#include <posat/saturation.hh>

#include <json.hpp>

#include <string>

namespace posat
{
    // nlohmann::json keeps object keys in a std::map, so dumps come out with sorted keys.
    using Json = nlohmann::json;

    auto tool_version() -> std::string;

    /// Sets become arrays of 1-based elements, families arrays of sets.
    auto set_json(SetBits s) -> Json;
    auto family_json(const Family & f) -> Json;
    auto pattern_json(const PatternPoset & p) -> Json;
    auto verdict_json(const SaturationVerdict & verdict) -> Json;
    auto lemma_json(const LemmaReport & r) -> Json;
    auto derived_json(const DerivedStructures & d) -> Json;
    auto pair_system_json(const PairSystem & ps) -> Json;
    auto membership_json(const MembershipReport & r) -> Json;
    auto restriction_json(const Restriction & r) -> Json;

    /// Wall time only goes in when `timing` is set, so that reruns compare byte for byte.
    auto certificate_json(const SearchCertificate & c, bool timing) -> Json;
    auto f_value_json(const FValue & f) -> Json;

    /// Two-space indented JSON with a trailing newline.
    auto render_json(const Json & report) -> std::string;

    /// The same tree as indented "key: value" lines; arrays of numbers stay on one line.
    auto render_text(const Json & report) -> std::string;
}

#endif
