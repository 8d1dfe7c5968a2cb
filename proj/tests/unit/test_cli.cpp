#include "dlw/cli/app.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace dlw;
using report::Verdict;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "dlwlab");
    std::vector<char const*> argv;
    for (auto const& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_label_prefix(report::Entries const& e, std::string const& prefix, Verdict v)
{
    std::size_t n = 0;
    for (auto const& x : e) n += x.label.rfind(prefix, 0) == 0 && x.verdict == v ? 1 : 0;
    return n;
}

std::string temp_path(std::string const& name)
{
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST(RunSuite, SymmetryAllPass)
{
    auto r = report::run_suite("symmetry", true);
    EXPECT_EQ(r.suite, "symmetry");
    EXPECT_EQ(count_label_prefix(r.entries, "X", Verdict::pass), 4u);
    EXPECT_EQ(count_label_prefix(r.entries, "[X", Verdict::pass), 6u);
    EXPECT_EQ(count_label_prefix(r.entries, "optimal-closure", Verdict::pass), 1u);
    EXPECT_EQ(r.count(Verdict::fail), 0u);
    EXPECT_TRUE(r.ok());
}

TEST(RunSuite, FlaggedItemsAreListed)
{
    auto sym = report::run_suite("symmetry", true);
    auto find = [](report::VerificationReport const& r, std::string const& label) {
        for (auto const& e : r.entries) {
            if (e.label == label) return e;
        }
        return report::Entry{};
    };
    EXPECT_EQ(find(sym, "[P1,P3]").verdict, Verdict::flagged);
    EXPECT_EQ(find(sym, "theorem2-list").verdict, Verdict::flagged);
    auto adj = report::run_suite("adjoint", true);
    EXPECT_EQ(find(adj, "Q3").verdict, Verdict::flagged);
    EXPECT_EQ(find(adj, "Q3-corrected").verdict, Verdict::pass);
    EXPECT_EQ(find(adj, "table (Q6,P4)").verdict, Verdict::flagged);
    EXPECT_EQ(adj.count(Verdict::fail), 0u);
    auto cl = report::run_suite("conslaw", true);
    EXPECT_EQ(find(cl, "eq29").verdict, Verdict::flagged);
    EXPECT_EQ(find(cl, "eq31-swapped").verdict, Verdict::pass);
    EXPECT_EQ(find(cl, "V4 variational").verdict, Verdict::pass);
    EXPECT_EQ(cl.count(Verdict::fail), 0u);
}

TEST(RunSuite, UnknownSuite)
{
    EXPECT_THROW(report::run_suite("nope"), report::UnknownSuite);
}

TEST(RunSuite, AllConcatenatesSuites)
{
    auto all = report::run_suite("all", true);
    std::size_t total = 0;
    for (auto const& s : report::suite_names()) {
        auto r = report::run_suite(s, true);
        total += r.entries.size();
        EXPECT_EQ(count_label_prefix(all.entries, s + "/", Verdict::pass), r.count(Verdict::pass)) << s;
    }
    EXPECT_EQ(all.entries.size(), total);
}

TEST(Report, ReproducibleJsonIsByteIdentical)
{
    auto a = report::to_json(report::run_suite("conslaw", true)).dump(2);
    auto b = report::to_json(report::run_suite("conslaw", true)).dump(2);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.find("timestamp"), std::string::npos);
    auto stamped = report::to_json(report::run_suite("conslaw", false));
    EXPECT_TRUE(stamped.contains("timestamp"));
}

TEST(Report, JsonShape)
{
    report::VerificationReport r = report::make_report(
        "demo", {{"a", "1", Verdict::pass, ""}, {"b", "2", Verdict::flagged, "x"}, {"c", "3", Verdict::fail, ""}}, true);
    auto j = report::to_json(r);
    EXPECT_EQ(j["suite"], "demo");
    EXPECT_EQ(j["summary"]["flagged"], 1);
    EXPECT_EQ(j["entries"][1]["verdict"], "flagged");
    EXPECT_EQ(j["entries"][1]["paper_eq"], "2");
    EXPECT_FALSE(r.ok());
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(invoke({}).code, cli::exit_usage);
    EXPECT_EQ(invoke({"symmetry"}).code, cli::exit_usage);
    EXPECT_EQ(invoke({"symmetry", "verify", "--bogus"}).code, cli::exit_usage);
    EXPECT_EQ(invoke({"report", "nope"}).code, cli::exit_usage);
    EXPECT_EQ(invoke({"waves", "verify", "--family", "eq99"}).code, cli::exit_usage);
    EXPECT_EQ(invoke({"waves", "verify", "--family", "eq93", "--grid", "mu="}).code, cli::exit_usage);
    EXPECT_EQ(invoke({"adjoint", "bracket", "--fix", "7"}).code, cli::exit_usage);
    EXPECT_EQ(invoke({"sim", "run", "--config", "/nonexistent/file.cfg"}).code, cli::exit_usage);
    EXPECT_EQ(invoke({"--help"}).code, cli::exit_pass);
}

TEST(Cli, SymmetryVerifyPasses)
{
    auto r = invoke({"symmetry", "verify"});
    EXPECT_EQ(r.code, cli::exit_pass);
    EXPECT_NE(r.out.find("X4"), std::string::npos);
}

TEST(Cli, FlaggedItemsDoNotFail)
{
    EXPECT_EQ(invoke({"symmetry", "brackets"}).code, cli::exit_pass);
    EXPECT_EQ(invoke({"adjoint", "table"}).code, cli::exit_pass);
    EXPECT_EQ(invoke({"conslaw", "hamiltonian"}).code, cli::exit_pass);
}

TEST(Cli, AdjointBracket)
{
    auto r = invoke({"adjoint", "bracket", "--fix", "1", "--a", "1", "--b", "3"});
    EXPECT_EQ(r.code, cli::exit_pass);
    EXPECT_NE(r.out.find("-1/4 Q3"), std::string::npos);
}

TEST(Cli, OptimalSingleVector)
{
    auto r = invoke({"symmetry", "optimal", "--vector", "0,1,0,-1"});
    EXPECT_EQ(r.code, cli::exit_pass);
    EXPECT_NE(r.out.find("class X4"), std::string::npos);
    EXPECT_EQ(invoke({"symmetry", "optimal", "--vector", "1,2,3"}).code, cli::exit_usage);
}

TEST(Cli, WavesVerifyGrid)
{
    auto ok = invoke({"waves", "verify", "--family", "eq93", "--grid", "mu=0.5,1,2", "--samples", "20"});
    EXPECT_EQ(ok.code, cli::exit_pass);
    EXPECT_NE(ok.out.find("3 pass"), std::string::npos);
    auto bad = invoke({"waves", "verify", "--family", "eq19", "--grid", "c1=1"});
    EXPECT_EQ(bad.code, cli::exit_failure);
}

TEST(Cli, FirstIntegralsAtZeroSpeed)
{
    auto r = invoke({"waves", "first-integrals", "--mu", "0"});
    EXPECT_NE(r.out.find("every sample singular"), std::string::npos);
    EXPECT_EQ(invoke({"waves", "first-integrals"}).code, cli::exit_usage);
}

TEST(Cli, JsonFileAndReproducible)
{
    std::string path = temp_path("dlwlab_cli_test.json");
    auto r = invoke({"--json", path, "--reproducible", "conslaw", "verify"});
    EXPECT_EQ(r.code, cli::exit_pass);
    std::ifstream f(path);
    auto j = nlohmann::json::parse(f);
    EXPECT_EQ(j["suite"], "conslaw verify");
    EXPECT_FALSE(j.contains("timestamp"));
    EXPECT_GT(j["summary"]["pass"].get<int>(), 10);
    std::remove(path.c_str());

    auto a = invoke({"adjoint", "verify", "--json", "-", "--reproducible"});
    auto b = invoke({"adjoint", "verify", "--json", "-", "--reproducible"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(nlohmann::json::parse(a.out)["suite"], "adjoint verify");
}

TEST(Cli, SimRunWritesOutputs)
{
    std::string cfg = temp_path("dlwlab_sine.cfg");
    std::string dir = temp_path("dlwlab_sim_out");
    {
        std::ofstream f(cfg);
        f << "n = 32\nt_end = 0.01\nboundary = periodic\ninitial = sine\nmonitors = eq33\noutput_stride = 10\n";
    }
    auto r = invoke({"sim", "run", "--config", cfg, "--out", dir, "--json", "-"});
    EXPECT_EQ(r.code, cli::exit_pass);
    auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
    EXPECT_EQ(j["config"]["n"], 32);
    EXPECT_TRUE(j["max_drift"].contains("eq33"));
    EXPECT_TRUE(std::filesystem::exists(std::filesystem::path(dir) / "monitor_eq33.csv"));
    EXPECT_TRUE(std::filesystem::exists(std::filesystem::path(dir) / "snapshot.csv"));
    std::filesystem::remove_all(dir);
    std::remove(cfg.c_str());
}

TEST(Cli, SimConvergeReportsOrder)
{
    auto r = invoke({"sim", "converge", "--n", "32,64", "--t-end", "0.01"});
    EXPECT_NE(r.out.find("order"), std::string::npos);
}

TEST(GridSpec, Parse)
{
    auto axes = cli::parse_grid_spec("mu=0.5,1 ; C1=-1");
    ASSERT_EQ(axes.size(), 2u);
    EXPECT_EQ(axes[0].param, "mu");
    EXPECT_EQ(axes[0].values, (std::vector<double>{0.5, 1.0}));
    EXPECT_EQ(axes[1].values, (std::vector<double>{-1.0}));
    EXPECT_THROW(cli::parse_grid_spec("mu"), cli::UsageError);
    EXPECT_THROW(cli::parse_grid_spec("mu=a"), cli::UsageError);
    EXPECT_THROW(cli::parse_grid_spec(""), cli::UsageError);
}

TEST(SubalgebraVectorText, Parse)
{
    auto l = cli::parse_subalgebra_vector("1, -2/3, 0, 5");
    EXPECT_EQ(l[1], make_rational(-2, 3));
    EXPECT_THROW(cli::parse_subalgebra_vector("1,2,3,4,5"), cli::UsageError);
    EXPECT_THROW(cli::parse_subalgebra_vector("1,x,3,4"), cli::UsageError);
}
