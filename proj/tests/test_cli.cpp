#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include <qdivisor/cli.hpp>

using namespace qdivisor::cli;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "qdivisor");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("coeffs text output with route agreement") {
    const Outcome o = invoke({"coeffs", "--a", "1", "--t", "2", "--order", "12", "--route", "all"});
    CHECK(o.code == exit_ok);
    CHECK(o.out == "3 1\n6 3\n9 4\n12 7\nagreement: ok\n");
}

TEST_CASE("coeffs at t = 0 is the constant 1") {
    const Outcome o = invoke({"coeffs", "--a", "0", "--t", "0", "--order", "9", "--route", "product"});
    CHECK(o.code == exit_ok);
    CHECK(o.out == "0 1\n");
    const Outcome j = invoke({"coeffs", "--a", "2", "--t", "0", "--order", "9", "--format", "json"});
    CHECK(json::parse(j.out)["coefficients"] == json::array({{{"n", 0}, {"value", "1"}}}));
}

TEST_CASE("coeffs json and csv") {
    const Outcome j = invoke({"coeffs", "--a", "-2", "--t", "1", "--order", "6", "--format", "json"});
    REQUIRE(j.code == exit_ok);
    const json doc = json::parse(j.out);
    CHECK(doc["agreement"] == "ok");
    CHECK(doc["route"] == "all");
    // U_1(-2,q) = sum q^n/(1-q^n)^2 = sum sigma(n) q^n
    CHECK(doc["coefficients"][5] == json{{"n", 6}, {"value", "12"}});
    const Outcome c = invoke({"coeffs", "--a", "1", "--t", "2", "--order", "6", "--format", "csv", "--route", "cheb"});
    CHECK(c.out == "n,value\n3,1\n6,3\n");
}

TEST_CASE("usage errors exit 64") {
    CHECK(invoke({"coeffs", "--a", "5", "--t", "1"}).code == exit_usage);
    CHECK(invoke({"coeffs", "--a", "1", "--t", "-1"}).code == exit_usage);
    CHECK(invoke({"coeffs", "--a", "1"}).code == exit_usage);
    CHECK(invoke({"coeffs", "--a", "1", "--t", "1", "--route", "fast"}).code == exit_usage);
    CHECK(invoke({"coeffs", "--a", "1", "--t", "1", "--format", "xml"}).code == exit_usage);
    CHECK(invoke({"bogus"}).code == exit_usage);
    CHECK(invoke({}).code == exit_usage);
    CHECK(invoke({"fit", "--target", "V:1:1"}).code == exit_usage);
    CHECK(invoke({"fit", "--target", "U:1:1", "--basis", "E3"}).code == exit_usage);
    CHECK(invoke({"fit", "--de2", "--tmax", "9"}).code == exit_usage);
    CHECK(invoke({"--help"}).code == exit_ok);
}

TEST_CASE("verify") {
    const Outcome one = invoke({"verify", "thm-1.1", "--order", "60", "--format", "json"});
    CHECK(one.code == exit_ok);
    const json j = json::parse(one.out);
    CHECK(j["id"] == "thm-1.1");
    CHECK(j["order_checked"] == 60);
    CHECK(j["verdict"] == "pass");
    CHECK(j["first_mismatch"].is_null());
    CHECK(j["elapsed_ms"].is_number());

    const Outcome all = invoke({"verify", "all", "--order", "30", "--format", "json"});
    CHECK(all.code == exit_ok);
    CHECK(json::parse(all.out).is_array());
    CHECK(invoke({"verify", "nope"}).code == exit_unknown_identity);
}

TEST_CASE("scan") {
    const Outcome o = invoke({"scan", "--order", "60", "--tmax", "3", "--format", "csv"});
    CHECK(o.code == exit_ok);
    CHECK(o.out.rfind("id,order_checked,verdict", 0) == 0);
}

TEST_CASE("fit") {
    const Outcome o = invoke({"fit", "--target", "U:1:2", "--basis", "E2@3", "--max-weight", "2", "--format", "json"});
    REQUIRE(o.code == exit_ok);
    const json e = json::parse(o.out)["expr"];
    CHECK(e["basis"] == json{"E2@3"});
    CHECK(e["monomials"] == json::parse(R"([{"exponents":[0],"numerator":"1","denominator":"24"},
                                            {"exponents":[1],"numerator":"-1","denominator":"24"}])"));
    CHECK(invoke({"fit", "--target", "U:1:2", "--basis", "E2@3", "--order", "10"}).code == exit_insufficient_order);
    CHECK(invoke({"fit", "--target", "U:1:1", "--basis", "E2", "--max-weight", "2", "--order", "60"}).code
          == exit_disagreement);
}

TEST_CASE("fit --de2 reports the constant and residuals") {
    const Outcome o = invoke({"fit", "--de2", "--tmax", "3", "--order", "60", "--format", "json"});
    REQUIRE(o.code == exit_ok);
    const json j = json::parse(o.out);
    CHECK(j["rows"].size() == 3);
    for (const auto &row : j["rows"]) {
        CHECK(row["constant"] == j["constant"]);
        CHECK(row["residual"].is_null());
    }
}

TEST_CASE("list-identities") {
    const Outcome o = invoke({"list-identities", "--format", "json"});
    CHECK(o.code == exit_ok);
    CHECK(json::parse(o.out).size() > 30);
}

TEST_CASE("output file and default order") {
    const auto path = std::filesystem::temp_directory_path() / "qdivisor_cli_test.json";
    CHECK(invoke({"verify", "u1-0", "--format", "json", "--output", path.string()}).code == exit_ok);
    std::ifstream in(path);
    const json j = json::parse(in);
    CHECK(j["order_checked"] == builtin_default_order);
    std::filesystem::remove(path);

    setenv("QDIVISOR_DEFAULT_ORDER", "45", 1);
    CHECK(default_order() == 45);
    CHECK(json::parse(invoke({"verify", "u1-0", "--format", "json"}).out)["order_checked"] == 45);
    setenv("QDIVISOR_DEFAULT_ORDER", "4x", 1);
    CHECK(invoke({"verify", "u1-0"}).code == exit_usage);
    unsetenv("QDIVISOR_DEFAULT_ORDER");
    CHECK(default_order() == builtin_default_order);
    CHECK(invoke({"verify", "u1-0", "--output", "/nonexistent-dir/x.json"}).code == exit_usage);
}

}
