/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <posat/pattern_text.hh>
#include <posat/errors.hh>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

using std::string;
using std::to_string;
using std::vector;

namespace posat
{
    namespace
    {
        auto trim(string s) -> string
        {
            auto not_space = [] (unsigned char c) { return ! std::isspace(c); };
            s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
            s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
            return s;
        }

        auto split(const string & s, char separator) -> vector<string>
        {
            vector<string> pieces;
            string::size_type start = 0;
            while (true) {
                auto end = s.find(separator, start);
                pieces.push_back(trim(s.substr(start, end - start)));
                if (end == string::npos)
                    return pieces;
                start = end + 1;
            }
        }

        auto number(const string & s, const string & what) -> int
        {
            int value = 0;
            auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (s.empty() || ec != std::errc{} || end != s.data() + s.size())
                throw ParseError("expected a number for " + what + ", got '" + s + "'", 0);
            return value;
        }

        auto sized(const string & argument, const string & name, int low) -> int
        {
            int k = number(argument, name);
            if (k < low || k > PatternPoset::max_size)
                throw ParseError(name + " needs between " + to_string(low) + " and "
                        + to_string(PatternPoset::max_size) + " elements", 0);
            return k;
        }

        auto parse_literal(const string & body) -> PatternPoset
        {
            auto semicolon = body.find(';');
            int k = sized(trim(body.substr(0, semicolon)), "poset", 1);

            vector<ElementPair> pairs;
            if (semicolon != string::npos) {
                string relations = trim(body.substr(semicolon + 1));
                if (! relations.empty())
                    for (auto & run : split(relations, ',')) {
                        auto elements = split(run, '<');
                        if (elements.size() < 2)
                            throw ParseError("expected a relation a<b, got '" + run + "'", 0);
                        vector<int> indices;
                        for (auto & e : elements) {
                            int i = number(e, "an element");
                            if (i < 1 || i > k)
                                throw ParseError("element " + e + " is outside 1.." + to_string(k), 0);
                            indices.push_back(i - 1);
                        }
                        for (std::size_t j = 0 ; j + 1 < indices.size() ; ++j)
                            pairs.emplace_back(indices[j], indices[j + 1]);
                    }
            }
            return PatternPoset::make(k, pairs);
        }
    }

    auto parse_pattern(const string & input) -> PatternPoset
    {
        string text = trim(input);
        if (text.starts_with("poset ") || text.starts_with("poset\t"))
            return parse_literal(text.substr(6));

        auto colon = text.find(':');
        string name = text.substr(0, colon), argument = colon == string::npos ? "" : trim(text.substr(colon + 1));
        bool has_argument = colon != string::npos;

        auto plain = [&] (BuiltinPattern which) {
            if (has_argument)
                throw ParseError("pattern '" + name + "' takes no argument", 0);
            return builtin(which);
        };

        if (name == "point")
            return plain(BuiltinPattern::Point);
        if (name == "diamond")
            return plain(BuiltinPattern::Diamond);
        if (name == "c2")
            return plain(BuiltinPattern::C2);
        if (name == "v")
            return plain(BuiltinPattern::V);
        if (name == "lambda")
            return plain(BuiltinPattern::Lambda);
        if (name == "butterfly")
            return plain(BuiltinPattern::Butterfly);
        if (name == "chain" && has_argument)
            return chain(sized(argument, "chain", 1));
        if (name == "antichain" && has_argument)
            return antichain(sized(argument, "antichain", 1));
        if (name == "K" && has_argument) {
            vector<int> layers;
            int total = 0;
            for (auto & piece : split(argument, ',')) {
                layers.push_back(sized(piece, "a layer", 1));
                total += layers.back();
            }
            if (total > PatternPoset::max_size)
                throw ParseError("K has more than " + to_string(PatternPoset::max_size) + " elements", 0);
            return complete_multipartite(layers);
        }
        throw ParseError("unknown pattern '" + text + "'", 0);
    }

    auto format_pattern(const PatternPoset & p) -> string
    {
        string result = "poset " + to_string(p.size()) + ";";
        bool first = true;
        for (auto [a, b] : p.strict_pairs()) {
            // only covers: nothing strictly between a and b
            if (p.above(a) & p.below(b))
                continue;
            result += (first ? " " : ", ") + to_string(a + 1) + "<" + to_string(b + 1);
            first = false;
        }
        return result;
    }
}
