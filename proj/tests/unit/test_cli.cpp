#include <doctest.h>

#include <set>
#include <sstream>

#include "cycov/cli.hpp"

using namespace cycov;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("enumerate triples as tsv")
    {
        const auto r = cli({"enumerate", "--max-genus", "3", "--punctures", "3", "--format", "tsv"});
        CHECK(r.code == 0);
        std::istringstream in(r.out);
        std::vector<std::string> lines;
        for (std::string l; std::getline(in, l);) lines.push_back(l);
        REQUIRE(lines.size() == 8);
        CHECK(lines.back() == "14\t{1,6,7}\t3");
    }

    TEST_CASE("enumerate genus two and usage errors")
    {
        auto r = cli({"enumerate", "--max-genus", "2"});
        CHECK(r.code == 0);
        const auto j = json::parse(r.out);
        CHECK(j.at("results").at("count").get<long>() > 0);
        CHECK(cli({"enumerate", "--max-genus", "1"}).code == 2);
        CHECK(cli({"enumerate"}).code == 2);
        CHECK(cli({"enumerate", "--max-genus", "3", "--format", "xml"}).code == 2);
        CHECK(cli({"frobnicate"}).code == 2);
        CHECK(cli({}).code == 2);
        CHECK(cli({"--help"}).code == 0);
    }

    TEST_CASE("info envelope")
    {
        const auto r = cli({"info", "8", "1,2,5"});
        REQUIRE(r.code == 0);
        const auto j = json::parse(r.out);
        CHECK(j.at("command") == "info");
        CHECK(j.at("schema_version") == kSchemaVersion);
        CHECK(j.at("results").at("genus") == 3);
        CHECK(j.at("results").at("preimage_counts") == json{1, 2, 1});
    }

    TEST_CASE("validation failures exit 1")
    {
        const auto r = cli({"info", "8", "1,2,4"});
        CHECK(r.code == 1);
        CHECK(r.err.find("sum 7 not divisible by 8") != std::string::npos);
        CHECK(json::parse(r.out).at("results").at("valid") == false);
        CHECK(cli({"wronski", "4", "2,2,2,2"}).code == 1);
        CHECK(cli({"info", "8", "1,x,5"}).code == 2);
    }

    TEST_CASE("wronski output")
    {
        const auto r = cli({"wronski", "8", "1,2,5"});
        REQUIRE(r.code == 0);
        const auto res = json::parse(r.out).at("results");
        CHECK(res.at("w1") == "(x+1/3)^2");
        CHECK(res.at("weights") == json{2, 2, 2});
        CHECK(res.at("b") == json{"-2", "-1", "-2"});
        CHECK(res.at("total_weight").at("ok") == true);
        CHECK(res.at("total_weight").at("value") == 24);
        const auto r2 = cli({"wronski", "8", "1,2,5", "--metrics", "1,2,5;2,4,2;5,2,1", "--punctures", "0,1,-1"});
        CHECK(json::parse(r2.out).at("results").at("w1") == "(x+1/3)^2");
        CHECK(cli({"wronski", "8", "1,2,5", "--metrics", "3,3,2;2,4,2;5,2,1"}).code == 1);
    }

    TEST_CASE("other commands run")
    {
        CHECK(cli({"admissible", "6", "1,3,5,3"}).code == 0);
        CHECK(cli({"lifts", "8", "1,2,5", "--phi", "3,2,1", "--mu", "5", "--nu", "1"}).code == 0);
        CHECK(cli({"lifts", "6", "1,3,5,3", "--phi", "2,1,3,4"}).code == 1);
        CHECK(cli({"graphs", "--genus", "4"}).code == 0);
        CHECK(cli({"catalog"}).code == 0);
        CHECK(cli({"catalog", "Octa-8"}).code == 0);
        CHECK(cli({"catalog", "nope"}).code == 1);
        CHECK(cli({"periods"}).code == 0);
        CHECK(cli({"exact", "roots", "--num", "1/9,2/3,1"}).code == 0);
        CHECK(cli({"exact", "order", "--num", "0,0,1", "--at", "0"}).code == 0);
        CHECK(cli({"exact", "log-derivative", "--num", "0"}).code == 1);
    }

    TEST_CASE("output is byte stable")
    {
        for (const auto& args : std::vector<std::vector<std::string>>{
                 {"enumerate", "--max-genus", "3"}, {"wronski", "12", "1,4,7"}, {"periods"}, {"catalog"}}) {
            CHECK(cli(args).out == cli(args).out);
        }
    }

    TEST_CASE("selfcheck")
    {
        const auto r = cli({"selfcheck", "--max-genus", "3"});
        CHECK(r.code == 0);
        const auto bad = cli({"selfcheck", "--max-genus", "2", "--catalog", CYCOV_TEST_DATA "/corrupt_catalog.json"});
        CHECK(bad.code == 1);
        CHECK(bad.err.find("catalog") != std::string::npos);
    }

    TEST_CASE("every module operation is reachable")
    {
        std::set<std::string> reachable;
        for (const auto& c : command_table()) {
            CHECK(cli({c.name, "--help"}).code == 0);
            reachable.insert(c.operations.begin(), c.operations.end());
        }
        for (const auto& op : module_operations()) CHECK_MESSAGE(reachable.count(op), op);
    }
}
