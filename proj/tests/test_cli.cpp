#include "jacobi/cli.hpp"
#include "jacobi/json_io.hpp"
#include "jacobi/lie.hpp"
#include "jacobi/canonical.hpp"
#include "jacobi/maps.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace jacobi;

namespace {

struct Result {
    int status;
    Json json;
    std::string text;
};

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = std::filesystem::temp_directory_path()
            / ("jacobi-cli-" + std::to_string(::getpid()) + "-"
               + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::remove_all(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    Result run(std::vector<std::string> args, const std::string& input = "")
    {
        if (!args.empty() && args[0] != "--help")
            args.insert(args.end(), {"--cache-dir", dir_.string()});
        std::istringstream in(input);
        std::ostringstream out;
        const int status = cli::run(args, in, out);
        Result r{status, Json(), out.str()};
        if (!r.text.empty() && r.text[0] == '{')
            r.json = parse_json(r.text);
        return r;
    }

    std::filesystem::path dir_;
};

const char* kChord = R"({"space":"A","internal":[],"legs":[],"skeleton":[0,1],"pairing":[[0,1]]})";

} // namespace

TEST_F(Cli, BasisOfTheta)
{
    const auto r = run({"basis", "--space", "B", "--v", "2", "--l", "0"});
    ASSERT_EQ(r.status, 0) << r.text;
    EXPECT_EQ(r.json["dimension"], 1);
    EXPECT_EQ(diagram_from_json(r.json["basis"][0]), theta());
}

TEST_F(Cli, OmegaUpToTwo)
{
    const auto r = run({"omega", "--vmax", "2"});
    ASSERT_EQ(r.status, 0);
    const auto x = vector_from_json(r.json);
    const auto w2 = canonicalize(wheel(2));
    EXPECT_EQ(x.size(), 2u);
    EXPECT_EQ(x.coefficient(empty_diagram()), 1);
    EXPECT_EQ(x.coefficient(w2.diagram), Rational(w2.sign, 48));
}

TEST_F(Cli, EvalOneChord)
{
    const auto r = run({"eval", "--algebra", "sl2", "--rep", "fundamental"}, kChord);
    ASSERT_EQ(r.status, 0) << r.text;
    EXPECT_EQ(r.text, "{\"value\":\"3\"}\n");
    const auto adj = run({"eval", "--rep", "adjoint"}, kChord);
    EXPECT_EQ(adj.json["value"], "12"); // Casimir 4 on the 3-dimensional adjoint
}

TEST_F(Cli, EvalClosedAndFileAlgebra)
{
    const auto theta_text = to_json(theta()).dump();
    EXPECT_EQ(run({"eval"}, theta_text).json["value"], "-12");
    const auto file = dir_.string() + ".lie.json";
    {
        std::ofstream out(file);
        out << to_json(builtin_lie_data("sl2")).dump();
    }
    EXPECT_EQ(run({"eval", "--algebra", file}, kChord).json["value"], "3");
    std::filesystem::remove(file);
}

TEST_F(Cli, MapsRoundTrip)
{
    const std::string strut_text = to_json(strut()).dump();
    const auto chi_out = run({"chi"}, strut_text);
    ASSERT_EQ(chi_out.status, 0);
    EXPECT_EQ(vector_from_json(chi_out.json), DiagramVector::of(one_chord()));

    const auto closed = run({"close"}, to_json(wheel(2)).dump());
    ASSERT_EQ(closed.status, 0);
    EXPECT_EQ(vector_from_json(closed.json).size(), 1u);

    const Json cap_in = {{"c", to_json(strut())}, {"d", to_json(strut())}};
    const auto capped = run({"cap"}, cap_in.dump());
    ASSERT_EQ(capped.status, 0);
    EXPECT_EQ(vector_from_json(capped.json).begin()->second, 2);

    const Json cs_in = {{"a", parse_json(kChord)}, {"b", parse_json(kChord)}};
    const auto cs = run({"connect-sum"}, cs_in.dump());
    ASSERT_EQ(cs.status, 0) << cs.text;
    EXPECT_EQ(vector_from_json(cs.json).begin()->first.skeleton.size(), 4u);

    // Output of one verb is valid input for the next.
    const auto again = run({"reduce"}, chi_out.text);
    ASSERT_EQ(again.status, 0) << again.text;
    EXPECT_EQ(again.json["pieces"][0]["coordinates"].size(), 2u);
}

TEST_F(Cli, EnumerateSpaces)
{
    const auto a = run({"enumerate", "--space", "A", "--total", "4"});
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.json["count"], 8);
    const auto ae = run({"enumerate", "--space", "A", "--v", "0", "--e", "2"});
    EXPECT_EQ(ae.json["count"], 1);
    const auto b = run({"enumerate", "--space", "B", "--v", "4", "--l", "0"});
    EXPECT_EQ(b.json["count"], 3);
}

TEST_F(Cli, DeterministicWarmAndCold)
{
    const auto cold = run({"basis", "--space", "A", "--total", "6"});
    const auto warm = run({"basis", "--space", "A", "--total", "6"});
    const auto none = run({"basis", "--space", "A", "--total", "6", "--no-cache"});
    EXPECT_EQ(cold.text, warm.text);
    EXPECT_EQ(cold.text, none.text);
    EXPECT_TRUE(std::filesystem::exists(dir_ / "A_t6.basis"));
}

TEST_F(Cli, ErrorsHaveDistinctCodes)
{
    const auto unknown = run({"frobnicate"});
    EXPECT_EQ(unknown.status, cli::kUnknownVerb);
    EXPECT_EQ(unknown.json["error"]["code"], "unknown_verb");

    const auto usage = run({"basis", "--space", "C"});
    EXPECT_EQ(usage.status, cli::kUsage);
    EXPECT_EQ(usage.json["error"]["code"], "usage");

    const auto malformed = run({"chi"}, "{nope");
    EXPECT_EQ(malformed.json["error"]["code"], "malformed_input");

    const auto invalid = run({"chi"}, R"({"space":"B","internal":[[0,1,2]],"legs":[0],"pairing":[]})");
    EXPECT_EQ(invalid.json["error"]["code"], "invalid_diagram");

    const auto space = run({"chi"}, kChord);
    EXPECT_EQ(space.json["error"]["code"], "space_mismatch");

    const auto limit = run({"enumerate", "--space", "B", "--v", "6", "--l", "0", "--max-labeled", "5"});
    EXPECT_EQ(limit.json["error"]["code"], "resource_limit");

    const auto missing = run({"basis", "--space", "B"});
    EXPECT_EQ(missing.json["error"]["code"], "invalid_argument");

    std::set<int> statuses = {unknown.status, usage.status, malformed.status, invalid.status,
                              space.status, limit.status, missing.status};
    EXPECT_EQ(statuses.size(), 7u);
    for (int s : statuses)
        EXPECT_NE(s, 0);
}

TEST_F(Cli, VerifySuites)
{
    const auto chi_iso = run({"verify", "chi-iso", "--max-total", "4"});
    EXPECT_EQ(chi_iso.status, 0);
    EXPECT_TRUE(chi_iso.json["passed"]);
    const auto relations = run({"verify", "relations", "--max-total", "4"});
    EXPECT_EQ(relations.status, 0);
    const auto wheeling = run({"verify", "wheeling"});
    EXPECT_EQ(wheeling.status, 0);
    const auto bad = run({"verify", "everything"});
    EXPECT_EQ(bad.json["error"]["code"], "invalid_argument");
}

TEST_F(Cli, Help)
{
    const auto r = run({"--help"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.text.find("enumerate"), std::string::npos);
}
