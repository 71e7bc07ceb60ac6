#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "test_util.hpp"
#include "unispecht/errors.hpp"
#include "unispecht/report.hpp"

using namespace unispecht;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

TEST_CASE("partition literals") {
    CHECK(parse_partition("4,4") == Partition{4, 4});
    CHECK(parse_partition("2^2,1^3") == Partition{2, 2, 1, 1, 1});
    CHECK(parse_partition("3,1,2") == Partition{3, 2, 1});
    CHECK(parse_partition("7") == Partition{7});
    CHECK_THROWS_WITH_AS(parse_partition("4,x"), "bad partition literal near 'x'",
                         argument_error);
    CHECK_THROWS_AS(parse_partition(""), argument_error);
    CHECK_THROWS_AS(parse_partition("3,0"), argument_error);
    CHECK_THROWS_AS(parse_partition("2^"), argument_error);
}

TEST_CASE("verdict JSON round trip") {
    UnisingularVerdict v = verdict(Partition{2, 2, 2});
    CHECK(verdict_from_json(verdict_to_json(v)) == v);
    nlohmann::json j = verdict_to_json(v);
    CHECK(j["lambda"] == nlohmann::json({2, 2, 2}));
    CHECK(j["offending"] == nlohmann::json({{3, 2, 1}}));
    CHECK(j["unisingular"] == false);
    CHECK(j["dimension"] == 5);
}

TEST_CASE("scan report JSON round trip") {
    std::vector<ScanReport> reports{scan(5), scan(6)};
    nlohmann::json j = to_json(reports);
    std::vector<ScanReport> back = scan_reports_from_json(j);
    CHECK(back == reports);
    // and the reparse is byte-stable
    CHECK(to_json(back).dump(2) == j.dump(2));
}

TEST_CASE("markdown matches the committed golden table for 2..9") {
    std::vector<ScanReport> reports;
    for (unsigned n = 2; n <= 9; ++n)
        reports.push_back(scan(n));
    CHECK(to_markdown(reports) == read_file(std::string(UNISPECHT_GOLDEN_DIR) + "/scan_2_9.md"));
}

TEST_CASE("csv layout") {
    std::string csv = to_csv({scan(4)});
    CHECK(csv == "n,lambda,dimension,unisingular,offending\n"
                 "4,\"(4)\",1,true,\"\"\n"
                 "4,\"(3,1)\",3,false,\"(4)\"\n"
                 "4,\"(2,2)\",2,false,\"(3,1)\"\n"
                 "4,\"(2,1,1)\",3,true,\"\"\n"
                 "4,\"(1,1,1,1)\",1,false,\"(4) (2,1,1)\"\n");
}
