#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "homspec/reports.hpp"

using namespace homspec;

namespace {

std::string data_path(const std::string& name) { return std::string(HOMSPEC_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("decimal rendering: six places, round half to even") {
    CHECK(rat_decimal6(make_rat(1, 2)) == "0.500000");
    CHECK(rat_decimal6(make_rat(1, 3)) == "0.333333");
    CHECK(rat_decimal6(make_rat(2, 3)) == "0.666667");
    CHECK(rat_decimal6(make_rat(-5, 3)) == "-1.666667");
    CHECK(rat_decimal6(Rat(4)) == "4.000000");
    // Ties: x.xxxxx5 rounds to the even sixth digit.
    CHECK(rat_decimal6(make_rat(1, 2000000)) == "0.000000");
    CHECK(rat_decimal6(make_rat(3, 2000000)) == "0.000002");
    CHECK(rat_decimal6(make_rat(5, 2000000)) == "0.000002");
    CHECK(rat_decimal6(make_rat(-1, 2000000)) == "0.000000");  // no negative zero
    CHECK(rat_decimal6(make_rat(-3, 2000000)) == "-0.000002");
}

TEST_CASE("ballot CSV parsing and error reporting") {
    {
        std::istringstream in("president,director,count\n1,2,3\n2,1,1\n");
        auto rows = parse_ballots_csv(in);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].president == 1);
        CHECK(rows[1].count == 1);
    }
    {
        std::istringstream in("wrong,header\n1,2,3\n");
        CHECK_THROWS_WITH_AS(parse_ballots_csv(in), doctest::Contains("line 1"), invalid_input_error);
    }
    {
        std::istringstream in("president,director,count\n1,1,3\n2,1,-4\nx,2,1\n");
        try {
            parse_ballots_csv(in);
            FAIL("expected a parse failure");
        } catch (const invalid_input_error& e) {
            std::string msg = e.what();
            CHECK(msg.find("line 2") != std::string::npos);
            CHECK(msg.find("line 3") != std::string::npos);
            CHECK(msg.find("line 4") != std::string::npos);
        }
    }
}

TEST_CASE("election report matches the frozen golden file byte for byte") {
    std::ifstream csv(data_path("election_fixture.csv"));
    REQUIRE(csv.good());
    auto ballots = parse_ballots_csv(csv);
    OmegaIndex space{Composition({2, 1, 1})};
    Json report = election_report_json(election_report(ballots, space));
    CHECK(report.dump(2) + "\n" == slurp(data_path("election_fixture.json")));
}

TEST_CASE("reports are byte-deterministic across repeated runs") {
    Json a = decompose_report(Composition({2, 2, 1}), std::nullopt, std::nullopt);
    Json b = decompose_report(Composition({2, 2, 1}), std::nullopt, std::nullopt);
    CHECK(a.dump() == b.dump());

    Json s1 = spectrum_report(Triple{2, 2, 1}, {{1, 2}});
    Json s2 = spectrum_report(Triple{2, 2, 1}, {{1, 2}});
    CHECK(s1.dump() == s2.dump());
    CHECK(s1["spectrum"].size() == 3);
    CHECK(s1["gt_blocks"].size() == 3);
}

TEST_CASE("decompose report carries exact audits") {
    Json d = decompose_report(Composition({2, 2, 1}), std::nullopt, std::nullopt);
    CHECK(d["wielandt"]["orbit_count"] == 11);
    CHECK(d["wielandt"]["sum_multiplicity_sq"] == "11");
    CHECK(d["wielandt"]["match"] == true);

    Json chained = decompose_report(Composition({2, 1, 1}), std::string("sym"), std::nullopt);
    std::vector<long> ranks;
    for (const auto& b : chained["chain"]["blocks"]) ranks.push_back(b["rank"].get<long>());
    CHECK(ranks == std::vector<long>{1, 3, 2, 3, 3});

    CHECK_THROWS_AS(decompose_report(Composition({2, 1, 1}), std::string("nope"), std::nullopt),
                    invalid_input_error);
}

TEST_CASE("crest report fixture files") {
    Json simgroup;
    std::ifstream(data_path("simgroup.json")) >> simgroup;
    Json rep = crest_report(simgroup);
    CHECK(rep["b0_central"] == false);
    CHECK(rep["sim_classes"].size() == 3);
    CHECK(rep["approx_classes"].size() == 3);
    CHECK(rep["ideal_partitions"]["right"]["holds"] == true);
    CHECK(rep["ideal_partitions"]["left"]["holds"] == true);
    CHECK(rep["sim_classes"] != rep["approx_classes"]);

    Json direct;
    std::ifstream(data_path("direct_product.json")) >> direct;
    Json drep = crest_report(direct);
    CHECK(drep["counts"]["brute_force_match"] == true);
    CHECK(drep["counts"]["orbits"] == 4);
    CHECK(drep["multiplicity_table"]["rows"].size() == 4);

    Json wreath;
    std::ifstream(data_path("wreath_s2_s3.json")) >> wreath;
    Json wrep = crest_report(wreath);
    CHECK(wrep["b0_central"] == true);
    CHECK(wrep["sim_classes"] == wrep["approx_classes"]);
    CHECK(wrep["counts"]["orbits"] == 3);
    CHECK(wrep["multiplicity_table"]["sum_mult_dim"] == "6");
}
