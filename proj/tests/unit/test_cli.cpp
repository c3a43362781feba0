#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace vcgraph;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "vcgraph_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(Cli, LabelParsing) {
    EXPECT_EQ(std::get<SubsetLabel>(cli::parse_label("{3,1,2}", Family::Johnson)), (SubsetLabel{{1, 2, 3}}));
    EXPECT_EQ(std::get<SubsetLabel>(cli::parse_label("1.2.4", Family::Johnson)), (SubsetLabel{{1, 2, 4}}));
    EXPECT_EQ(std::get<TupleLabel>(cli::parse_label("(0,2,1)", Family::Hamming)), (TupleLabel{{0, 2, 1}}));
    EXPECT_EQ(std::get<PairLabel>(cli::parse_label("1.2", Family::Rook)), (PairLabel{1, 2}));
    EXPECT_THROW(cli::parse_label("1.x", Family::Johnson), cli::UsageFailure);
    EXPECT_EQ(cli::split_top_level("{1,2},{3,4}:5", ','), (std::vector<std::string>{"{1,2}", "{3,4}:5"}));
}

TEST(Cli, VcdimText) {
    const auto r = run({"vcdim", "--family", "johnson", "--params", "7,2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("VC-dimension 4"), std::string::npos) << r.out;
    const auto h = run({"vcdim", "--family", "hamming", "--params", "2,3"});
    EXPECT_NE(h.out.find("VC-dimension 2"), std::string::npos) << h.out;
}

TEST(Cli, VcdimJsonWritesCertificate) {
    const auto path = scratch("cert.json");
    const auto r = run({"vcdim", "--family", "hamming", "--params", "3,3", "--json", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["vc_dimension"], 3);
    EXPECT_EQ(j["certificate_path"], path.string());
    std::ifstream f(path);
    EXPECT_TRUE(verify_witness(import_witness(json::parse(f))).passed());
}

TEST(Cli, VcdimClosedAndComplete) {
    const auto r = run({"vcdim", "--family", "complete", "--params", "5", "--closed", "--json"});
    EXPECT_EQ(json::parse(r.out)["vc_dimension"], 0);
}

TEST(Cli, Gen) {
    const auto r = run({"gen", "--family", "rook", "--params", "1,3"});
    EXPECT_EQ(r.out, "0: 1 2\n1: 0 2\n2: 0 1\n");
    const auto j = run({"gen", "--family", "subdivided", "--params", "3", "--json"});
    EXPECT_EQ(json::parse(j.out)["num_vertices"], 6);
}

TEST(Cli, Shatter) {
    const auto yes = run({"shatter", "--family", "johnson", "--params", "7,2", "--set", "1.3,1.4,1.5,1.6", "--json"});
    ASSERT_EQ(yes.code, 0) << yes.err;
    EXPECT_EQ(json::parse(yes.out)["shattered"], true);
    const auto no = run({"shatter", "--family", "hamming", "--params", "3,3", "--set", "(0,0,0),(1,1,1)", "--json"});
    const auto j = json::parse(no.out);
    EXPECT_EQ(j["shattered"], false);
    EXPECT_EQ(j["trace_size"].get<int>() + j["missing_masks"].size(), 4u);
    EXPECT_EQ(run({"shatter", "--family", "johnson", "--params", "7,2", "--set", "1.9"}).code, 2);
}

TEST(Cli, ClassifyCaseTwo) {
    const auto r = run({"classify", "--family", "johnson", "--params", "8,4", "--quad",
                        "1.2.3.4:2.3.4.5,1.3.4.5,2.3.4.6,1.3.4.6"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("Case II\n"), std::string::npos) << r.out;
    const auto j = run({"classify", "--family", "johnson", "--params", "8,4", "--json", "--quad",
                        "{1,2,3,4}:{2,3,4,5},{1,3,4,5},{1,2,4,5},{1,2,3,5}"});
    const auto doc = json::parse(j.out);
    EXPECT_EQ(doc["case"], "IX");
    EXPECT_EQ(doc["shattered"], true);
    EXPECT_EQ(doc["agrees"], true);
    EXPECT_EQ(run({"classify", "--family", "hamming", "--params", "3,3", "--quad", "0.0.0:1.0.0,2.0.0,0.1.0,0.2.0"}).code, 2);
    EXPECT_EQ(run({"classify", "--family", "johnson", "--params", "8,4", "--quad", "1.2.3.4:2.3.4.5"}).code, 2);
}

TEST(Cli, VerifyBuiltinAndFiles) {
    const auto r = run({"verify", "--builtin"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("5/5 witnesses pass"), std::string::npos) << r.out;

    const auto dir = scratch("bank");
    std::filesystem::remove_all(dir);
    EXPECT_EQ(run({"verify", "--builtin", "--out", dir.string()}).code, 0);
    EXPECT_TRUE(std::filesystem::exists(dir / "J_7_2_.json"));
    EXPECT_EQ(run({"verify", "--file", (dir / "H_3_3_.json").string()}).code, 0);

    std::ifstream in(dir / "J_7_2_.json");
    auto doc = json::parse(in);
    doc["witnesses"][3]["witness_label"] = json::array({1, 2});
    const auto bad = scratch("bad.json");
    std::ofstream(bad) << doc.dump();
    const auto failed = run({"verify", "--file", bad.string(), "--json"});
    EXPECT_EQ(failed.code, 1);
    EXPECT_EQ(json::parse(failed.out)["results"][0]["failures"], 1);

    doc["witnesses"].erase(2);
    std::ofstream(bad) << doc.dump();
    EXPECT_EQ(run({"verify", "--file", bad.string()}).code, 2);
    EXPECT_EQ(run({"verify"}).code, 2);
    EXPECT_EQ(run({"verify", "--builtin", "--file", bad.string()}).code, 2);
}

TEST(Cli, DensityRookTable) {
    const auto r = run({"density", "--family", "rook", "--params", "3,3", "--nmax", "4", "--exact"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("3,7,exact"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("bound rook min(n+1,3)*min(n+1,3): ok"), std::string::npos) << r.out;
}

TEST(Cli, DensityJsonAndTableFile) {
    const auto csv = scratch("t.csv");
    const auto r = run({"density", "--family", "johnson", "--params", "7,2", "--nmax", "5", "--exact", "--json", "--out",
                        csv.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["passed"], true);
    EXPECT_EQ(j["table"]["rows"][5]["pi"], 21);
    EXPECT_EQ(j["recursion"]["passed"], true);
    std::ifstream f(csv);
    std::string header;
    std::getline(f, header);
    EXPECT_EQ(header, "n,pi,mode,witness");
}

TEST(Cli, DensitySampledEchoesSeed) {
    const auto r = run({"density", "--family", "johnson", "--params", "7,3", "--nmax", "4", "--budget", "10", "--seed",
                        "7", "--restarts", "20", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["table"]["seed"], 7);
    EXPECT_EQ(j["table"]["rows"][4]["mode"], "lower_bound");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"density", "--family", "johnson", "--params", "7,2", "--exact", "--seed", "3"}).code, 2);
    EXPECT_EQ(run({"vcdim", "--family", "petersen", "--params", "3"}).code, 2);
    EXPECT_EQ(run({"vcdim", "--family", "johnson", "--params", "7"}).code, 2);
    EXPECT_EQ(run({"vcdim", "--family", "johnson", "--params", "20,10"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    const auto r = run({"gen", "--family", "johnson"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OracleCheck) {
    const auto r = run({"oracle-check", "--family", "hamming", "--params", "3,3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("all checks pass"), std::string::npos);
    const auto j = run({"oracle-check", "--family", "johnson", "--params", "6,3", "--json"});
    EXPECT_EQ(json::parse(j.out)["passed"], true);
    EXPECT_EQ(run({"oracle-check", "--family", "rook", "--params", "3,3"}).code, 2);
}

TEST(Cli, JsonIsIdenticalAcrossThreadCounts) {
    for (const auto& base : std::vector<std::vector<std::string>>{
             {"vcdim", "--family", "johnson", "--params", "6,3", "--json"},
             {"density", "--family", "hamming", "--params", "3,3", "--nmax", "4", "--json"},
             {"density", "--family", "johnson", "--params", "7,3", "--nmax", "5", "--budget", "100", "--json"}}) {
        auto one = base, four = base;
        one.insert(one.end(), {"--threads", "1"});
        four.insert(four.end(), {"--threads", "4"});
        EXPECT_EQ(run(one).out, run(four).out);
    }
}
