#include <gtest/gtest.h>

#include <filesystem>

#include "support.hpp"

namespace hr = hamming_radio;
using namespace testing_support;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() / ("hamming_radio_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string &name, const std::string &text)
    {
        const auto path = (dir_ / name).string();
        std::ofstream(path, std::ios::binary) << text;
        return path;
    }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

std::string quoted(const std::string &s) { return "\"" + s + "\""; }

} // namespace

TEST_F(Cli, VerifyGoldenFiles)
{
    EXPECT_EQ(run_cli("verify " + quoted(data_path("k32_golden.txt"))).exit_code, 0);
    const auto r = run_cli("verify " + quoted(data_path("k34_golden.txt")) + " --boundary");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("boundary structure: ok"), std::string::npos);
}

TEST_F(Cli, VerifySwappedRows)
{
    auto doc = hr::parse_text(slurp(data_path("k32_golden.txt")));
    std::swap(doc.rows[1], doc.rows[3]);
    const auto file = write("swapped.txt", hr::serialize_text(doc));
    const auto r = run_cli("verify " + quoted(file));
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.out.find("RadioViolation"), std::string::npos);

    const auto j = run_cli("verify " + quoted(file) + " --format json");
    EXPECT_EQ(j.exit_code, 1);
    const auto parsed = nlohmann::json::parse(j.out);
    EXPECT_FALSE(parsed["ok"].get<bool>());
    EXPECT_EQ(parsed["violations"][0]["kind"], "RadioViolation");
}

TEST_F(Cli, VerifyExitMatchesCheckOrdering)
{
    std::mt19937_64 rng(6);
    auto doc = hr::parse_text(slurp(data_path("k32_golden.txt")));
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(doc.rows.begin(), doc.rows.end(), rng);
        const auto file = write("shuffled.txt", hr::serialize_text(doc));
        const bool clean = hr::check_ordering(doc.to_ordering()).empty();
        EXPECT_EQ(run_cli("verify " + quoted(file)).exit_code, clean ? 0 : 1);
    }
}

TEST_F(Cli, VerifyMalformed)
{
    const auto file = write("bad.txt", "spec: 3^2\n1 1 1\n");
    EXPECT_EQ(run_cli("verify " + quoted(file)).exit_code, 2);
    EXPECT_EQ(run_cli("verify " + quoted(path("missing.txt"))).exit_code, 2);
    EXPECT_EQ(run_cli("verify " + quoted(data_path("k32_golden.txt")) + " --boundary").exit_code, 2);
    EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
}

TEST_F(Cli, VerifyLabeling)
{
    const auto r = run_cli("verify " + quoted(data_path("k32_golden.txt")) + " --labeling");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("(3,2) -> 9"), std::string::npos);
}

TEST_F(Cli, Bound)
{
    auto r = run_cli("bound 3^5");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("verdict: NotRadioGraceful"), std::string::npos);
    r = run_cli("bound 3^4x4^7 --format json");
    EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "NotRadioGraceful");
    r = run_cli("bound 3^2");
    EXPECT_NE(r.out.find("KnownGracefulByCitation"), std::string::npos);
    r = run_cli("bound 4^11 --segment-depth 4 --format json");
    EXPECT_EQ(nlohmann::json::parse(r.out)["segment"]["dead_depth"], 4);
    EXPECT_EQ(run_cli("bound 4x3").exit_code, 2);
}

TEST_F(Cli, SearchPipeline)
{
    const auto out = path("k32.txt");
    EXPECT_EQ(run_cli("search 3^2 --out " + quoted(out)).exit_code, 0);
    EXPECT_EQ(run_cli("verify " + quoted(out)).exit_code, 0);
    EXPECT_EQ(run_cli("search 2^2").exit_code, 1);
    EXPECT_EQ(run_cli("search 3^3 --node-budget 5").exit_code, 3);
    EXPECT_EQ(run_cli("search").exit_code, 2);
}

TEST_F(Cli, SearchReducedK34)
{
    const auto out = path("k34.txt");
    EXPECT_EQ(run_cli("search --reduced-k34 --out " + quoted(out)).exit_code, 0);
    const auto doc = hr::parse_text(slurp(out));
    EXPECT_EQ(doc.rows.size(), 81u);
    EXPECT_EQ(run_cli("verify " + quoted(out) + " --boundary").exit_code, 0);
}

TEST_F(Cli, GenerateGolden)
{
    const auto out = path("k32.txt");
    const auto r = run_cli("generate lru 3^2 " + quoted(data_path("k32_generator.txt")) + " --out " + quoted(out));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(hr::parse_text(slurp(out)).rows, hr::parse_text(slurp(data_path("k32_golden.txt"))).rows);
}

TEST_F(Cli, GenerateRejectsIdentityRows)
{
    std::string text = "spec: 3^2\n";
    for (int i = 0; i < 9; ++i)
        text += "id id\n";
    const auto file = write("ids.txt", text);
    EXPECT_EQ(run_cli("generate lru 3^2 " + quoted(file)).exit_code, 2);
    EXPECT_EQ(run_cli("generate lru 3^3 " + quoted(data_path("k32_generator.txt"))).exit_code, 2);
    EXPECT_EQ(run_cli("generate nonsense 3^2 " + quoted(data_path("k32_generator.txt"))).exit_code, 2);
}

TEST_F(Cli, GenerateRandomK33MatchesCheckOrdering)
{
    std::mt19937_64 rng(13);
    const auto spec = hr::parse_spec("3^3");
    const auto gen = hr::builtin_generator(hr::GeneratorKind::LRU, 3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::vector<hr::Permutation>> cols;
        for (int j = 0; j < 3; ++j)
            cols.push_back(random_column(gen, 27, rng));
        std::vector<std::vector<hr::Permutation>> rows(27, std::vector<hr::Permutation>(3));
        for (std::size_t i = 0; i < 27; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                rows[i][j] = cols[j][i];
        const auto og = hr::OrderGenerator::uniform(spec, gen, rows);
        const auto file = write("gen.txt", hr::serialize_instruction_text(og));
        const auto out = path("gen_out.txt");
        const auto r = run_cli("generate lru 3^3 " + quoted(file) + " --out " + quoted(out));
        const bool clean = hr::check_ordering(hr::parse_text(slurp(out)).to_ordering()).empty();
        EXPECT_EQ(r.exit_code, clean ? 0 : 1);
        EXPECT_NE(r.out.find("ordering check agrees: yes"), std::string::npos);
    }
}

TEST_F(Cli, Lambda)
{
    const auto r = run_cli("lambda lru 3 3");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("f2f3f3"), std::string::npos);
    EXPECT_NE(r.out.find("f3f3f3"), std::string::npos);
    EXPECT_EQ(run_cli("lambda lru 3 2 --history id,f2,f3").exit_code, 0);
    EXPECT_EQ(run_cli("lambda lru 2 2").exit_code, 2);
}
