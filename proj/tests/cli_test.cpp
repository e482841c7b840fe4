#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "graft/cli.hpp"

using graft::run_cli;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& content, const std::string& name) {
        path = std::filesystem::temp_directory_path() /
               ("graft_cli_test_" + name + ".graft");
        std::ofstream(path) << content;
    }
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
    std::string str() const { return path.string(); }
};

const char* kPathDoc = "v a t\nv b\nv c t\ne a b\ne b c\n";
const char* kCycleDoc = "v 1 t\nv 2 t\nv 3 t\nv 4 t\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";

} // namespace

TEST_CASE("nu and min-join commands") {
    TempFile f(kPathDoc, "path");
    RunResult r = run({"nu", f.str()});
    CHECK(r.code == 0);
    CHECK(r.out == "format: graft-result/1\ncommand: nu\nnu: 2\n");

    r = run({"min-join", f.str()});
    CHECK(r.code == 0);
    CHECK(r.out.find("nu: 2") != std::string::npos);
    CHECK(r.out.find("edge: a b") != std::string::npos);
    CHECK(r.out.find("edge: b c") != std::string::npos);
}

TEST_CASE("dist command") {
    TempFile f(kPathDoc, "dist");
    RunResult r = run({"dist", f.str(), "--from", "a", "--to", "a"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dist: 0") != std::string::npos);

    r = run({"dist", f.str(), "--from", "a", "--to", "c"});
    CHECK(r.out.find("dist: -2") != std::string::npos);

    r = run({"dist", f.str()});
    CHECK(r.out.find("a b: -1") != std::string::npos);
    CHECK(r.out.find("a c: -2") != std::string::npos);

    r = run({"dist", f.str(), "--from", "a"});
    CHECK(r.code == 1);
}

TEST_CASE("kl and components commands") {
    TempFile f(kCycleDoc, "cycle");
    RunResult r = run({"kl", f.str()});
    CHECK(r.code == 0);
    CHECK(r.out.find("members: 1 3") != std::string::npos);
    CHECK(r.out.find("members: 2 4") != std::string::npos);

    r = run({"components", f.str()});
    CHECK(r.out.find("count: 1") != std::string::npos);
    CHECK(r.out.find("vertices: 1 2 3 4") != std::string::npos);
}

TEST_CASE("comb command") {
    TempFile f("v c\nv l1 t\nv l2 t\nv l3 t\nv c2 t\ne c l1\ne c l2\ne c l3\ne c c2\n",
               "star");
    RunResult r = run({"comb", f.str()});
    CHECK(r.code == 0);
    CHECK(r.out.find("comb_bipartite: true") != std::string::npos);
    CHECK(r.out.find("spine: c") != std::string::npos);
    CHECK(r.out.find("tooth: c2 l1 l2 l3") != std::string::npos);
}

TEST_CASE("sebo command with and without an explicit join") {
    TempFile f(kPathDoc, "sebo");
    RunResult r = run({"sebo", f.str(), "--root", "a"});
    CHECK(r.code == 0);
    CHECK(r.out.find("level0: a") != std::string::npos);
    CHECK(r.out.find("negative: b c") != std::string::npos);
    CHECK(r.out.find("verified: true") != std::string::npos);

    TempFile join("a b\nb c\n", "join");
    r = run({"sebo", f.str(), "--root", "a", "--join", join.str()});
    CHECK(r.code == 0);

    TempFile badjoin("a b\n", "badjoin");
    r = run({"sebo", f.str(), "--root", "a", "--join", badjoin.str()});
    CHECK(r.code == 1); // not a minimum join

    r = run({"sebo", f.str(), "--root", "zzz"});
    CHECK(r.code == 1);
}

TEST_CASE("refine command reports the proper refinement") {
    TempFile f("v 1 t\nv 2 t\nv 3 t\nv 4 t\nv x t\nv y t\n"
               "e 1 2\ne 2 3\ne 3 4\ne 4 1\ne x y\ne 2 x\ne 4 y\n",
               "witness");
    RunResult r = run({"refine", f.str()});
    CHECK(r.code == 0);
    CHECK(r.out.find("proper: true") != std::string::npos);
    CHECK(r.out.find("host_class: 2 4") != std::string::npos);
    CHECK(r.out.find("standalone_class: 1 3") != std::string::npos);
}

TEST_CASE("verify command on an instance") {
    TempFile f(kCycleDoc, "verify");
    RunResult r = run({"verify", f.str()});
    CHECK(r.code == 0);
    CHECK(r.out.find("check join-existence: pass") != std::string::npos);
    CHECK(r.out.find("check distance-decomposition: pass") != std::string::npos);
    CHECK(r.out.find("failures: 0") != std::string::npos);
}

TEST_CASE("drawing output lands in the requested file") {
    TempFile f(kCycleDoc, "draw");
    auto dot_path = std::filesystem::temp_directory_path() / "graft_cli_test.dot";
    RunResult r = run({"kl", f.str(), "--draw", dot_path.string()});
    CHECK(r.code == 0);
    std::ifstream in(dot_path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str().find("graph graft {") == 0);
    std::error_code ec;
    std::filesystem::remove(dot_path, ec);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"nu"}).code == 1);                      // missing input
    CHECK(run({"nu", "/nonexistent/file"}).code == 1); // unreadable
    CHECK(run({}).code == 1);                          // no subcommand

    TempFile bad("v a t\n", "badparity");
    RunResult r = run({"nu", bad.str()});
    CHECK(r.code == 1);
    CHECK(r.err.find("parity") != std::string::npos);
}

TEST_CASE("outputs are deterministic across runs") {
    TempFile f(kCycleDoc, "determinism");
    for (const char* cmd : {"kl", "min-join", "allowed", "refine"}) {
        RunResult a = run({cmd, f.str()});
        RunResult b = run({cmd, f.str()});
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
    RunResult a = run({"verify", "--max-n", "3", "--seed", "9"});
    RunResult b = run({"verify", "--max-n", "3", "--seed", "9"});
    CHECK(a.out == b.out);
    CHECK(a.code == 0);
}
