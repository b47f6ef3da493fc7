/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <posat/commands.hh>
#include <posat/errors.hh>

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace posat;
using std::string;

namespace
{
    auto data(const string & name) -> InputFile
    {
        std::ifstream in(string(POSAT_TEST_DATA) + "/" + name, std::ios::binary);
        REQUIRE(in);
        std::ostringstream content;
        content << in.rdbuf();
        return { name, content.str() };
    }

    auto quick() -> CommandOptions
    {
        CommandOptions options;
        options.budget.max_seconds = 60;
        return options;
    }

    auto statuses(const Json & checks) -> std::vector<string>
    {
        std::vector<string> result;
        for (auto & c : checks)
            result.push_back(c["status"]);
        return result;
    }

    auto scratch_dir(const string & tag) -> std::filesystem::path
    {
        auto dir = std::filesystem::temp_directory_path() / ("posat-commands-" + tag + "-" + std::to_string(::getpid()));
        std::filesystem::remove_all(dir);
        return dir;
    }
}

TEST_CASE("verify")
{
    auto chain = cmd_verify(data("chain3.fam"), "diamond", quick());
    CHECK(chain.exit_code == exit_ok);
    CHECK(chain.report["result"]["verdict"] == "saturated");
    CHECK(chain.report["inputs"]["chain3.fam"]["sha256"].get<string>().size() == 64);

    auto full = cmd_verify(data("p2.fam"), "diamond", quick());
    CHECK(full.exit_code == exit_fail);
    CHECK(full.report["result"]["verdict"] == "contains-copy");
    CHECK(full.report["result"]["copy"] == Json::parse("[[], [1], [2], [1, 2]]"));

    auto tiny = cmd_verify(data("tiny.fam"), "diamond", quick());
    CHECK(tiny.exit_code == exit_fail);
    CHECK(tiny.report["result"]["verdict"] == "not-saturated");
    CHECK(tiny.report["result"]["missing"] == Json::array());

    CHECK(cmd_verify(data("chain4.fam"), "poset 4; 1<2<4, 1<3<4", quick()).exit_code == exit_ok);
    CHECK_THROWS_AS(cmd_verify(data("bad.fam"), "diamond", quick()), ParseError);
    CHECK_THROWS_AS(cmd_verify(data("chain3.fam"), "hexagon", quick()), ParseError);
    try {
        cmd_verify(data("unsorted.fam"), "diamond", quick());
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("satnum")
{
    auto two = cmd_satnum(2, "diamond", quick());
    CHECK(two.exit_code == exit_ok);
    CHECK(two.report["result"]["value"] == 3);
    CHECK(two.report["result"]["exhausted"] == true);
    CHECK(two.report["result"]["witness_saturated"] == true);
    CHECK(! two.report["result"].contains("seconds"));

    auto c2 = cmd_satnum(3, "c2", quick());
    CHECK(c2.report["result"]["value"] == 1);
    CHECK(c2.report["result"]["witness"]["sets"] == Json::parse("[[]]"));

    auto options = quick();
    options.budget.max_nodes = 50;
    auto starved = cmd_satnum(7, "diamond", options);
    CHECK(starved.exit_code == exit_budget);
    CHECK(starved.report["outcome"] == "budget-exceeded");
    CHECK(starved.report["result"]["exhausted"] == false);
    CHECK(starved.report["result"]["value"].get<int>() <= 8);
    CHECK(starved.report["result"]["witness_saturated"] == true);

    auto timed = quick();
    timed.timing = true;
    CHECK(cmd_satnum(2, "diamond", timed).report["result"].contains("seconds"));
}

TEST_CASE("satnum cache")
{
    auto dir = scratch_dir("cache");
    auto options = quick();
    options.cache_dir = dir;
    auto first = cmd_satnum(4, "diamond", options);
    CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) > 0);
    auto second = cmd_satnum(4, "diamond", options);
    CHECK(render_json(first.report) == render_json(second.report));
    CHECK(render_json(first.report) == render_json(cmd_satnum(4, "diamond", quick()).report));
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache directory resolution")
{
    ::setenv("POSAT_CACHE_DIR", "/tmp/from-env", 1);
    CHECK(resolve_cache_dir(string("flagged")) == "flagged");
    CHECK(resolve_cache_dir(std::nullopt) == "/tmp/from-env");
    ::unsetenv("POSAT_CACHE_DIR");
    CHECK(resolve_cache_dir(std::nullopt) == ".posat-cache");
}

TEST_CASE("reports do not depend on the worker count")
{
    auto one = quick(), four = quick();
    four.budget.workers = 4;
    CHECK(render_json(cmd_satnum(4, "diamond", one).report) == render_json(cmd_satnum(4, "diamond", four).report));
    CHECK(render_text(cmd_fcheck(5, 2, true, one).report) == render_text(cmd_fcheck(5, 2, true, four).report));
    CHECK(render_json(cmd_lab_enumerate(3, one).report) == render_json(cmd_lab_enumerate(3, four).report));
}

TEST_CASE("derive")
{
    auto r = cmd_derive(data("chain3.fam"), quick());
    CHECK(r.exit_code == exit_ok);
    CHECK(r.report["diamond_saturated"] == true);
    CHECK(r.report["extremes_absent"] == false);
    CHECK(r.report["derived"]["A0"] == Json::array());
    CHECK(r.report["derived"]["W_from_generators"] == Json::parse("[1, 2, 3]"));
}

TEST_CASE("lab")
{
    auto chain = cmd_lab(data("chain4.fam"), quick());
    CHECK(chain.exit_code == exit_ok);
    auto checks = chain.report["families"][0]["checks"];
    REQUIRE(checks.size() == 7);
    CHECK(checks[0]["check"] == "extreme-sets");
    CHECK(checks[0]["status"] == "pass");
    for (std::size_t i = 1 ; i < checks.size() ; ++i)
        CHECK(checks[i]["status"] == "precondition-failed");

    auto doctored = cmd_lab(data("doctored.fam"), quick());
    CHECK(doctored.exit_code == exit_ok);
    for (auto & s : statuses(doctored.report["families"][0]["checks"]))
        CHECK(s == "precondition-failed");

    auto all = cmd_lab_enumerate(3, quick());
    CHECK(all.exit_code == exit_ok);
    CHECK(all.report["summary"]["fail"] == 0);
    CHECK(all.report["stats"]["families"].get<int>() > 0);
    int total = 0;
    for (auto & [status, count] : all.report["summary"].items())
        total += count.get<int>();
    CHECK(total == 7 * all.report["stats"]["families"].get<int>());
}

TEST_CASE("fcheck")
{
    auto small = cmd_fcheck(3, 1, false, quick());
    CHECK(small.exit_code == exit_ok);
    CHECK(small.report["checks"][0]["check"] == "f-bound");
    CHECK(small.report["checks"][0]["status"] == "pass");

    auto empty = cmd_fcheck(3, 1, true, quick());
    CHECK(empty.report["exact"]["finite"] == false);
    CHECK(empty.report["exact"]["value"] == "infinite");

    auto exact = cmd_fcheck(5, 2, true, quick());
    CHECK(exact.exit_code == exit_ok);
    CHECK(exact.report["exact"]["finite"] == true);
    CHECK(exact.report["exact"]["value"].get<int>() >= 1);
    CHECK(exact.report["exact"]["witness_membership"]["member"] == true);
    for (auto & s : statuses(exact.report["checks"]))
        CHECK(s != "fail");

    CHECK_THROWS_AS(cmd_fcheck(2, 1, false, quick()), ParameterError);

    auto options = quick();
    options.budget.max_nodes = 10;
    CHECK(cmd_fcheck(6, 2, true, options).exit_code == exit_budget);
}

TEST_CASE("fcheck on a pair-system file")
{
    auto member = cmd_fcheck_pair(data("member6.pair"), quick());
    CHECK(member.exit_code == exit_ok);
    CHECK(member.report["membership"]["member"] == true);
    CHECK(member.report.contains("restriction"));

    auto outsider = cmd_fcheck_pair(data("nonmember.pair"), quick());
    CHECK(outsider.exit_code == exit_fail);
    CHECK(outsider.report["membership"]["failed"] == "cover");
    CHECK(outsider.report["checks"][0]["status"] == "precondition-failed");
}

TEST_CASE("generated families")
{
    CHECK(generate_family("chain", 2, -1, "") == "n=2\n-\n1\n1 2\n");
    CHECK(generate_family("layer", 3, 1, "") == "n=3\n1\n2\n3\n");
    CHECK(generate_family("empty", 2, -1, "") == "n=2\n");
    CHECK(parse_family(generate_family("powerset", 3, -1, "")).size() == 8);
    CHECK(is_saturated(parse_family(generate_family("upper", 4, -1, "butterfly")), builtin(BuiltinPattern::Butterfly)));
    CHECK_THROWS_AS(generate_family("wheel", 3, -1, ""), ParameterError);
    CHECK_THROWS_AS(generate_family("layer", 3, 4, ""), ParameterError);

    auto pair = generate_pair_system(6, 2, 7, 20000);
    REQUIRE(pair);
    CHECK(in_Lstar(parse_pair_system(*pair)).in_class);
    CHECK(generate_pair_system(6, 2, 7, 20000) == pair);
    CHECK(! generate_pair_system(4, 1, 7, 50));
}

TEST_CASE("text rendering")
{
    Json j = { { "b", Json::array({ 1, 2 }) }, { "a", { { "x", "y" } } }, { "c", Json::array({ Json::array(), Json::array({ 3 }) }) },
        { "d", Json::object() } };
    CHECK(render_text(j) == "a:\n  x: y\nb: [1, 2]\nc:\n  - []\n  - [3]\nd: {}\n");
    CHECK(render_json(Json{ { "z", 1 }, { "a", 2 } }) == "{\n  \"a\": 2,\n  \"z\": 1\n}\n");
}
