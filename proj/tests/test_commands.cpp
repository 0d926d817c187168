#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "zsdiv/commands.hpp"
#include "zsdiv/verify.hpp"

using namespace zsdiv;

TEST_CASE("exit code contract") {
    CHECK(exit_code(Status::ok) == 0);
    CHECK(exit_code(Status::validation) == 1);
    CHECK(exit_code(Status::capability) == 2);
    CHECK(exit_code(Status::numerical) == 3);
    CHECK(to_string(Status::capability) == "capability_exceeded");
    CHECK(to_string(Status::numerical) == "numerical_instability");
}

TEST_CASE("cmd_davenport") {
    const CommandResult r = cmd_davenport("Z6");
    CHECK(r.status == Status::ok);
    CHECK(r.payload["value"] == 6);
    CHECK(r.payload["cyclic_shortcut"] == true);

    CHECK(cmd_davenport("Z1").payload["value"] == 1);

    const CommandResult klein = cmd_davenport("Z2xZ2");
    CHECK(klein.payload["value"] == 3);
    CHECK(klein.payload["cyclic_shortcut"] == false);

    CHECK(cmd_davenport("bogus").status == Status::validation);
    CHECK(cmd_davenport("Z9xZ9").status == Status::capability);
}

TEST_CASE("cmd_zerosum_count") {
    const CommandResult all = cmd_zerosum_count("Z4", "1^1,3^1,2^2", "all");
    CHECK(all.status == Status::ok);
    CHECK(all.payload["value"] == 4);
    CHECK(all.payload["agree"] == true);
    CHECK(all.payload["results"].size() == 3);

    CHECK(cmd_zerosum_count("Z1", "0^3", "ring").payload["value"] == 4);
    CHECK(cmd_zerosum_count("Z2", "1^2", "brute").payload["value"] == 2);
    CHECK(cmd_zerosum_count("Z2", "1^2", "nope").status == Status::validation);
}

TEST_CASE("cmd_zerosum_list") {
    const CommandResult r = cmd_zerosum_list("Z2", "1^1,1^2", true);
    CHECK(r.status == Status::ok);
    REQUIRE(r.payload["count"] == 2);
    CHECK(r.payload["selectors"][0] == nlohmann::ordered_json::array({0, 2}));
    CHECK(r.payload["selectors"][1] == nlohmann::ordered_json::array({1, 1}));

    const CommandResult empty = cmd_zerosum_list("Z4", "", false);
    CHECK(empty.payload["count"] == 1);

    CHECK(cmd_zerosum_list("Z4", "1^1,3^1,2^2", false).payload["count"] == 4);
}

TEST_CASE("cmd_quad_factor") {
    const CommandResult r = cmd_quad_factor(219, "3+1*sqrt");
    CHECK(r.status == Status::ok);
    CHECK(r.payload["ideal_norm"] == 210);
    CHECK(r.payload["class_group"] == "Z4");
    REQUIRE(r.payload["factors"].size() == 4);
    CHECK(r.payload["factors"][0]["hnf"] == nlohmann::ordered_json::array({2, 1, 1}));
    CHECK(r.payload["factors"][3]["hnf"] == nlohmann::ordered_json::array({7, 3, 1}));

    CHECK(cmd_quad_factor(12, "1").status == Status::validation);
    CHECK(cmd_quad_factor(10, "0").status == Status::validation);
}

TEST_CASE("cmd_quad_divisors") {
    const CommandResult r = cmd_quad_divisors(219, "3+1*sqrt");
    CHECK(r.status == Status::ok);
    CHECK(r.payload["count"] == 4);
    REQUIRE(r.payload["divisors"].size() == 4);
    CHECK(r.payload["divisors"][0]["hnf"] == nlohmann::ordered_json::array({1, 0, 1}));
}

TEST_CASE("cmd_quad_decompose") {
    const CommandResult r = cmd_quad_decompose(10, "18", "10+1*sqrt");
    CHECK(r.status == Status::ok);
    CHECK(r.payload["ideal"] == nlohmann::ordered_json::array({18, 10, 1}));
    CHECK(r.payload["decompositions"].size() == 2);
}

TEST_CASE("cmd_quad_classgroup") {
    const CommandResult r = cmd_quad_classgroup(-1);
    CHECK(r.status == Status::ok);
    CHECK(r.payload["order"] == 1);
    CHECK(r.payload["invariants"].empty());

    const CommandResult k = cmd_quad_classgroup(195);
    CHECK(k.payload["group"] == "Z2xZ2");
    CHECK(k.payload["generators"].size() == 2);
}

TEST_CASE("cmd_quad_irreducible") {
    const CommandResult r = cmd_quad_irreducible(219, "-15+1*sqrt");
    CHECK(r.status == Status::ok);
    CHECK(r.payload["irreducible"] == true);
    CHECK(r.payload["divisor_count"] == 2);
    CHECK(cmd_quad_irreducible(219, "3+1*sqrt").payload["irreducible"] == false);
    CHECK(cmd_quad_irreducible(219, "1").status == Status::validation);
}

TEST_CASE("cmd_verify") {
    const CommandResult group = cmd_verify("group", verify_default_seed);
    CHECK(group.status == Status::ok);
    CHECK(group.payload["failed"] == 0);

    const CommandResult zs = cmd_verify("zerosum", 42);
    CHECK(zs.status == Status::ok);

    const CommandResult paper = cmd_verify("paper", verify_default_seed);
    CHECK(paper.status == Status::ok);
    CHECK(paper.payload["checks"].size() == 4);

    CHECK(cmd_verify("bogus", 1).status == Status::validation);
}

TEST_CASE("deterministic output") {
    const std::string a = to_json_text(cmd_quad_divisors(219, "3+1*sqrt"));
    const std::string b = to_json_text(cmd_quad_divisors(219, "3+1*sqrt"));
    CHECK(a == b);
    const std::string v1 = to_json_text(cmd_verify("zerosum", 7));
    const std::string v2 = to_json_text(cmd_verify("zerosum", 7));
    CHECK(v1 == v2);
}

TEST_CASE("json and human modes carry the same payload") {
    const CommandResult r = cmd_davenport("Z2xZ2");
    const std::string human = to_human_text(r);
    CHECK(human.find("status: ok") != std::string::npos);
    CHECK(human.find("value: 3") != std::string::npos);
    const std::string json = to_json_text(r);
    CHECK(json.find("\"status\": \"ok\"") != std::string::npos);
    CHECK(json.find("\"value\": 3") != std::string::npos);
}

TEST_CASE("ZSDIV_DATA override") {
    const std::string path = "zsdiv_test_table.json";
    {
        std::ofstream out(path);
        out << R"({"format": "zsdiv-class-table", "fields": [
          {"d": 10, "discriminant": 40, "invariant_factors": [2],
           "generators": [{"p": 2, "hnf": [2, 0, 1]}], "source": "env override table"}]})";
    }
    setenv("ZSDIV_DATA", path, 1);
    const CommandResult r = cmd_quad_classgroup(10);
    unsetenv("ZSDIV_DATA");
    std::remove(path.c_str());
    CHECK(r.status == Status::ok);
    CHECK(r.payload["source"] == "env override table");

    setenv("ZSDIV_DATA", "/definitely/not/here.json", 1);
    const CommandResult bad = cmd_quad_classgroup(10);
    unsetenv("ZSDIV_DATA");
    CHECK(bad.status == Status::validation);
}
