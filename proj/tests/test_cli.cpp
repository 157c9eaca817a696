#include "treebound/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

using namespace treebound;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int rc;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int rc = cli::run(std::move(args), out, err);
    return {rc, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / fs::path("treebound-test-" + std::to_string(::getpid()))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string file(const std::string& name, const std::string& content) const {
        const fs::path p = path_ / name;
        std::ofstream(p) << content;
        return p.string();
    }

private:
    fs::path path_;
};

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("count prints the tree count") {
    TempDir dir;
    const std::string c4 = dir.file("c4.txt", "4\n1 2\n2 3\n3 4\n4 1\n");
    const CliResult r = run_cli({"count", c4});
    CHECK(r.rc == 0);
    CHECK(r.out == "4\n");
}

TEST_CASE("spectrum prints one eigenvalue per line") {
    TempDir dir;
    const std::string k3 = dir.file("k3.txt", "3\n1 2\n2 3\n1 3\n");
    const CliResult r = run_cli({"spectrum", k3});
    CHECK(r.rc == 0);
    CHECK(lines_of(r.out) == std::vector<std::string>{"0", "3", "3"});
}

TEST_CASE("bound report format is stable") {
    TempDir dir;
    const std::string k3 = dir.file("k3.txt", "3\n1 2\n2 3\n1 3\n");
    const CliResult r = run_cli({"bound", k3});
    REQUIRE(r.rc == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "tau=3 bound=3/1 HOLDS EQUALITY=yes");
    CHECK(lines[1] == "bound_decimal=3");
    CHECK(lines[2] == "preconditions: connected=yes");

    const std::string tri = dir.file("tri.txt", "3\n1 2 2\n2 3\n1 3\n");
    const CliResult r2 = run_cli({"bound", tri});
    CHECK(lines_of(r2.out)[0] == "tau=5 bound=50/9 HOLDS EQUALITY=no");
}

TEST_CASE("verify passes on a sound graph") {
    TempDir dir;
    const std::string k4 = dir.file("k4.txt", "4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    const CliResult r = run_cli({"verify", k4});
    CHECK(r.rc == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 6);
    for (const auto& line : lines) CHECK(line.find(": PASS") != std::string::npos);
}

TEST_CASE("join and product outputs re-parse to the same graph") {
    TempDir dir;
    const std::string k2 = dir.file("k2.txt", "2\n1 2\n");
    const std::string p3 = dir.file("p3.txt", "3\n1 2\n2 3\n");

    const CliResult j = run_cli({"join", k2, p3});
    REQUIRE(j.rc == 0);
    CHECK(parse_edge_list(j.out) == join({complete_graph(2), path_graph(3)}));

    const CliResult p = run_cli({"product", k2, p3});
    REQUIRE(p.rc == 0);
    CHECK(parse_edge_list(p.out) == cartesian_product(complete_graph(2), path_graph(3)));
}

TEST_CASE("join-bound and product-bound print reports") {
    TempDir dir;
    const std::string k2 = dir.file("k2.txt", "2\n1 2\n");
    const std::string k1 = dir.file("k1.txt", "1\n");
    const std::string p3 = dir.file("p3.txt", "3\n1 2\n2 3\n");

    const CliResult jb = run_cli({"join-bound", k2, k1});
    REQUIRE(jb.rc == 0);
    CHECK(lines_of(jb.out)[0] == "tau=3 bound=4/1 HOLDS EQUALITY=no");

    const CliResult pb = run_cli({"product-bound", k2, p3});
    REQUIRE(pb.rc == 0);
    CHECK(lines_of(pb.out)[0] == "tau=15 bound=36/1 HOLDS EQUALITY=no");

    const CliResult degenerate = run_cli({"product-bound", k2, k1});
    REQUIRE(degenerate.rc == 0);
    CHECK(lines_of(degenerate.out)[0] == "tau=1 bound=inf HOLDS EQUALITY=no");
    CHECK(degenerate.out.find("no-isolated-vertices=no") != std::string::npos);
}

TEST_CASE("sweep emits a fixed csv header and exact complete-family rows") {
    const CliResult r = run_cli({"sweep", "--family", "complete", "--n-max", "6"});
    REQUIRE(r.rc == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "family,n,delta,tau,bound,ratio,equality");
    CHECK(lines[1] == "complete,2,1,1,1/1,1.0,true");
    CHECK(lines[2] == "complete,3,1,3,3/1,1.0,true");
    CHECK(lines[3] == "complete,4,1,16,16/1,1.0,true");
    CHECK(lines[4] == "complete,5,1,125,125/1,1.0,true");
    CHECK(lines[5] == "complete,6,1,1296,1296/1,1.0,true");
}

TEST_CASE("sweep random families are deterministic per seed") {
    const std::vector<std::string> args{"sweep", "--family", "random-multi", "--n-max", "5",
                                        "--delta", "3", "--seed", "42", "--count", "8"};
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    REQUIRE(a.rc == 0);
    CHECK(a.out == b.out);
    CHECK(lines_of(a.out).size() == 9);

    std::vector<std::string> other = args;
    other[8] = "43";
    CHECK(run_cli(other).out != a.out);
}

TEST_CASE("parse and file failures exit 1") {
    TempDir dir;
    CHECK(run_cli({"count", "/no/such/file.txt"}).rc == 1);
    CHECK(run_cli({"count", dir.file("loop.txt", "2\n1 1\n")}).rc == 1);
    CHECK(run_cli({"count", dir.file("bad.txt", "2\n1 x\n")}).rc == 1);
    CHECK(run_cli({"frobnicate"}).rc == 1);
    CHECK(run_cli({}).rc == 1);
    CHECK(run_cli({"sweep", "--n-max", "4"}).rc == 1);                      // family missing
    CHECK(run_cli({"sweep", "--family", "nope", "--n-max", "4"}).rc == 1);  // unknown family
    CHECK(run_cli({"join", dir.file("k2.txt", "2\n1 2\n")}).rc == 1);       // needs two parts

    const CliResult err = run_cli({"count", "/no/such/file.txt"});
    CHECK(err.err.find("error:") == 0);
    CHECK(err.out.empty());
}

TEST_CASE("help exits 0") {
    const CliResult r = run_cli({"--help"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("count") != std::string::npos);
    CHECK(r.out.find("sweep") != std::string::npos);
}
