#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "miscluster/cli.hpp"
#include "miscluster/error.hpp"

using namespace miscluster;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / "miscluster_cli_test";
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv = {"miscluster"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("parse_args: cluster flags map directly") {
    const auto config = parse_args({"cluster", "--input", "x.csv", "--k", "3"});
    CHECK(config.command == Command::Cluster);
    CHECK(config.input == "x.csv");
    CHECK(config.k == 3u);
    CHECK_FALSE(config.auto_mode);
    CHECK(config.theta == 0.9);
    CHECK_FALSE(config.class_col.has_value());
}

TEST_CASE("parse_args: --k and --auto conflict") {
    CHECK_THROWS_AS(parse_args({"cluster", "--input", "x.csv", "--k", "3", "--auto"}),
                    InputError);
}

TEST_CASE("parse_args: cluster needs a mode, k >= 2, and sane class-col") {
    CHECK_THROWS_AS(parse_args({"cluster", "--input", "x.csv"}), InputError);
    CHECK_THROWS_AS(parse_args({"cluster", "--input", "x.csv", "--k", "1"}), InputError);
    CHECK_THROWS_AS(
        parse_args({"cluster", "--input", "x.csv", "--k", "2", "--class-col", "soup"}),
        InputError);
    const auto ok = parse_args({"cluster", "--input", "x.csv", "--k", "2", "--class-col", "none"});
    CHECK_FALSE(ok.class_col.has_value());
}

TEST_CASE("parse_args: unknown flags and unknown algorithms are named") {
    CHECK_THROWS_AS(parse_args({"cluster", "--input", "x.csv", "--k", "2", "--frobnicate"}),
                    InputError);
    CHECK_THROWS_AS(parse_args({"bench", "--manifest", "m.json", "--algorithms", "mis,magic"}),
                    InputError);
}

TEST_CASE("parse_args: bench defaults to all three algorithms") {
    const auto config = parse_args({"bench", "--manifest", "m.json"});
    CHECK(config.command == Command::Bench);
    CHECK(config.algorithms == std::vector<std::string>{"mis", "mis-auto", "kmodes"});
    CHECK(config.kmodes_n_init == 16u);
    CHECK(config.kmodes_seed == 42u);
}

TEST_CASE("parse_args: help and version short-circuit") {
    CHECK(parse_args({"--help"}).command == Command::Help);
    CHECK(parse_args({"--version"}).command == Command::Version);
    const auto sub = parse_args({"cluster", "--help"});
    CHECK(sub.command == Command::Help);
    CHECK(sub.help_message.find("--theta") != std::string::npos);
}

TEST_CASE("help text documents every accepted flag") {
    const struct {
        const char* subcommand;
        std::vector<const char*> flags;
    } cases[] = {
        {"cluster",
         {"--input", "--name", "--delimiter", "--header", "--class-col", "--ignore-cols", "--k",
          "--auto", "--theta", "--min-cluster-fraction", "--threads", "--out"}},
        {"summarize", {"--input", "--result", "--top", "--out", "--machine-out"}},
        {"evaluate", {"--result", "--labels-from", "--class-col"}},
        {"bench", {"--manifest", "--algorithms", "--theta", "--seed", "--n-init", "--out"}},
        {"synth", {"--spec", "--seed", "--out", "--delimiter", "--header"}},
    };
    for (const auto& c : cases) {
        const std::string help = help_text(c.subcommand);
        for (const char* flag : c.flags) {
            INFO(c.subcommand << " help should mention " << flag);
            CHECK(help.find(flag) != std::string::npos);
        }
    }
    const std::string top = help_text();
    for (const char* sub : {"cluster", "summarize", "evaluate", "bench", "synth"}) {
        CHECK(top.find(sub) != std::string::npos);
    }
}

TEST_CASE("config file equal to the defaults changes nothing") {
    TempDir dir;
    const auto cfg = dir.file("defaults.ini");
    {
        std::ofstream out(cfg);
        out << "[cluster]\ntheta=0.9\nmin-cluster-fraction=0.0\nthreads=0\n";
    }
    const auto with = parse_args({"cluster", "--input", "x.csv", "--k", "2", "--config", cfg});
    const auto without = parse_args({"cluster", "--input", "x.csv", "--k", "2"});
    CHECK(with.theta == without.theta);
    CHECK(with.min_cluster_fraction == without.min_cluster_fraction);
    CHECK(with.threads == without.threads);
    CHECK(with.k == without.k);
}

TEST_CASE("run_cli: synth -> cluster -> summarize -> evaluate round trip") {
    TempDir dir;
    const auto spec = dir.file("spec.json");
    {
        std::ofstream out(spec);
        out << R"({"name":"plant","n_rows":400,
          "attributes":[
            {"name":"grp","categories":["g1","g2"],"probs":[0.5,0.5]},
            {"name":"val","categories":["v1","v2"],"probs":[0.5,0.5]},
            {"name":"noise","categories":["n1","n2"],"probs":[0.5,0.5]}],
          "missingness":[{"target":"val","given":"grp","rates":{"g1":0.0,"g2":0.7}}]})";
    }
    const auto data = dir.file("plant.csv");
    CHECK(run({"synth", "--spec", spec, "--seed", "11", "--out", data}) == 0);

    const auto result = dir.file("result.json");
    CHECK(run({"cluster", "--input", data, "--k", "2", "--out", result, "--threads", "2"}) == 0);
    CHECK(fs::exists(result));

    const auto report = dir.file("report.txt");
    const auto machine = dir.file("report.csv");
    CHECK(run({"summarize", "--input", data, "--result", result, "--top", "2", "--out", report,
               "--machine-out", machine}) == 0);
    CHECK(fs::file_size(report) > 0);
    {
        std::ifstream in(machine);
        std::string header;
        std::getline(in, header);
        CHECK(header == "cluster,attribute,category,q,p,delta,divergence");
    }

    // The synthetic data has no class column; treat the noise column as the
    // label to exercise the full path. (Column 0 carries the split attribute,
    // which must stay loadable for the result document to resolve.)
    CHECK(run({"evaluate", "--result", result, "--labels-from", data, "--class-col", "2"}) == 0);
}

TEST_CASE("run_cli: exit codes distinguish input and algorithm failures") {
    TempDir dir;
    CHECK(run({"cluster", "--input", dir.file("nope.csv"), "--k", "2"}) == 1);
    CHECK(run({"definitely-not-a-subcommand"}) == 1);
    CHECK(run({}) == 1);

    // Output paths are validated before any computation starts.
    const auto good = dir.file("ok.csv");
    {
        std::ofstream out(good);
        out << "a,b\nc,d\na,d\n";
    }
    CHECK(run({"cluster", "--input", good, "--k", "2", "--out",
               "/nonexistent-dir/result.json"}) == 1);

    // Unsplittable at k: constant data clusters with a shortfall, not an error;
    // an actual algorithm error needs < 2 usable attributes after load.
    const auto bad = dir.file("constant.csv");
    {
        std::ofstream out(bad);
        out << "a\na\na\n";
    }
    CHECK(run({"cluster", "--input", bad, "--k", "2"}) == 1);  // single attribute: input error
}
