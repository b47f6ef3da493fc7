/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <posat/report.hh>
#include <posat/pattern_text.hh>

#include <cstdio>
#include <variant>

using std::string;
using std::vector;

namespace posat
{
    using std::to_string;

    auto tool_version() -> string
    {
        return POSAT_VERSION;
    }

    auto set_json(SetBits s) -> Json
    {
        Json result = Json::array();
        for (int i = 0 ; s ; ++i, s >>= 1)
            if (s & 1u)
                result.push_back(i + 1);
        return result;
    }

    auto family_json(const Family & f) -> Json
    {
        Json sets = Json::array();
        for (auto s : f)
            sets.push_back(set_json(s));
        return { { "n", f.ground_size() }, { "size", f.size() }, { "sets", sets } };
    }

    auto pattern_json(const PatternPoset & p) -> Json
    {
        Json result = { { "literal", format_pattern(p) }, { "size", p.size() }, { "code", canonical_code(p) } };
        if (! p.label().empty())
            result["name"] = p.label();
        return result;
    }

    namespace
    {
        auto sets_json(const vector<SetBits> & sets) -> Json
        {
            Json result = Json::array();
            for (auto s : sets)
                result.push_back(set_json(s));
            return result;
        }
    }

    auto verdict_json(const SaturationVerdict & verdict) -> Json
    {
        if (auto copy = std::get_if<ContainsCopy>(&verdict))
            return { { "verdict", "contains-copy" }, { "copy", sets_json(copy->witness.assignment) } };
        if (auto missing = std::get_if<NotSaturated>(&verdict))
            return { { "verdict", "not-saturated" }, { "missing", set_json(missing->missing) } };
        return { { "verdict", "saturated" } };
    }

    auto lemma_json(const LemmaReport & r) -> Json
    {
        Json result = { { "check", r.check }, { "status", to_string(r.status) } };
        if (! r.detail.empty())
            result["detail"] = r.detail;
        if (r.counterexample)
            result["counterexample"] = family_json(*r.counterexample);
        if (! r.witness_sets.empty())
            result["witness_sets"] = sets_json(r.witness_sets);
        if (r.witness_element)
            result["witness_element"] = *r.witness_element;
        if (! r.notes.empty())
            result["notes"] = r.notes;
        if (! r.parts.empty()) {
            result["parts"] = Json::array();
            for (auto & p : r.parts)
                result["parts"].push_back(lemma_json(p));
        }
        return result;
    }

    auto derived_json(const DerivedStructures & d) -> Json
    {
        Json diamonds = Json::array();
        for (std::size_t i = 0 ; i < d.A0_witness.size() ; ++i)
            diamonds.push_back({ { "top", set_json(d.A0[i]) }, { "bottom", set_json(d.A0_witness[i].bottom) },
                    { "left", set_json(d.A0_witness[i].left) }, { "right", set_json(d.A0_witness[i].right) } });
        Json generators = Json::array();
        for (std::size_t i = 0 ; i < d.generators.size() ; ++i)
            generators.push_back({ { "top", set_json(d.A[i]) }, { "sets", family_json(d.generators[i])["sets"] } });
        return {
            { "B", family_json(d.B)["sets"] },
            { "A0", diamonds },
            { "A1", family_json(d.A1)["sets"] },
            { "A", family_json(d.A)["sets"] },
            { "generators", generators },
            { "GA", family_json(d.GA)["sets"] },
            { "W_from_generators", set_json(d.W_ga.bits()) },
            { "W_from_tops", set_json(d.W_a.bits()) }
        };
    }

    auto pair_system_json(const PairSystem & ps) -> Json
    {
        return {
            { "n", ps.ground.ambient_size() },
            { "X", set_json(ps.ground.universe()) },
            { "m", ps.m },
            { "I", family_json(ps.low)["sets"] },
            { "J", family_json(ps.high)["sets"] },
            { "size", ps.low.united(ps.high).size() }
        };
    }

    auto membership_json(const MembershipReport & r) -> Json
    {
        Json result = { { "member", r.in_class } };
        if (r.failed) {
            result["failed"] = to_string(*r.failed);
            result["witness"] = set_json(r.witness);
        }
        if (r.partner)
            result["partner"] = set_json(*r.partner);
        return result;
    }

    auto restriction_json(const Restriction & r) -> Json
    {
        Json result = { { "t", r.t }, { "removed", set_json(r.removed) }, { "last", set_json(r.last) }, { "degenerate", r.degenerate } };
        if (r.restricted)
            result["restricted"] = pair_system_json(*r.restricted);
        return result;
    }

    auto certificate_json(const SearchCertificate & c, bool timing) -> Json
    {
        Json result = {
            { "n", c.ground_size },
            { "pattern", pattern_json(c.pattern) },
            { "value", c.value },
            { "exhausted", c.exhausted },
            { "refuted_below", c.refuted_below },
            { "witness", family_json(c.witness) },
            { "nodes", c.nodes }
        };
        if (timing) {
            char buffer[32];
            std::snprintf(buffer, sizeof(buffer), "%.3f", c.seconds);
            result["seconds"] = string(buffer);
        }
        return result;
    }

    auto f_value_json(const FValue & f) -> Json
    {
        Json result = { { "finite", f.finite }, { "nodes", f.nodes } };
        if (f.finite)
            result["value"] = f.value;
        else
            result["value"] = "infinite";
        if (f.witness)
            result["witness"] = pair_system_json(*f.witness);
        return result;
    }

    auto render_json(const Json & report) -> string
    {
        return report.dump(2) + "\n";
    }

    namespace
    {
        auto scalar_text(const Json & j) -> string
        {
            if (j.is_string())
                return j.get<string>();
            return j.dump();
        }

        auto inline_array(const Json & j) -> bool
        {
            for (auto & e : j)
                if (! e.is_number())
                    return false;
            return true;
        }

        auto inline_text(const Json & j) -> string
        {
            string result = "[";
            bool first = true;
            for (auto & e : j) {
                result += (first ? "" : ", ") + e.dump();
                first = false;
            }
            return result + "]";
        }

        auto render(const Json & j, int depth, string & out) -> void;

        auto render_value(const string & lead, const Json & value, int depth, string & out) -> void
        {
            if (value.is_array() && inline_array(value))
                out += lead + " " + inline_text(value) + "\n";
            else if ((value.is_object() || value.is_array()) && ! value.empty()) {
                out += lead + "\n";
                render(value, depth + 1, out);
            }
            else if (value.is_object())
                out += lead + " {}\n";
            else if (value.is_array())
                out += lead + " []\n";
            else
                out += lead + " " + scalar_text(value) + "\n";
        }

        auto render(const Json & j, int depth, string & out) -> void
        {
            string indent(2 * depth, ' ');
            if (j.is_object())
                for (auto & [key, value] : j.items())
                    render_value(indent + key + ":", value, depth, out);
            else
                for (auto & value : j)
                    render_value(indent + "-", value, depth, out);
        }
    }

    auto render_text(const Json & report) -> string
    {
        string out;
        render(report, 0, out);
        return out;
    }
}
