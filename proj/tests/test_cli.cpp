// End-to-end checks of the command-line binary. The binary path comes in
// through QMOMENTS_BIN_PATH at compile time; each case captures stdout
// and the exit status through popen.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_command(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

RunResult run(const std::string& args) {
    return run_command(std::string(QMOMENTS_BIN_PATH) + " " + args);
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("eval prints the grouped text form") {
    auto r = run("eval --family qfib --n 4 --format text");
    CHECK(r.status == 0);
    CHECK(r.out == "x^4 - (1+q+q^2) x^2 + q\n");
    CHECK(run("eval --family fib_tq --n 0").out == "1\n");
}

TEST_CASE("eval prints moments in flat canonical order") {
    auto r = run("eval --moment q_narayana --n 2");
    CHECK(r.status == 0);
    CHECK(r.out == "1 + q^2 t\n");
}

TEST_CASE("unknown names are usage errors listing the valid names") {
    auto r = run("eval --family nosuch --n 1");
    CHECK(r.status == 2);
    CHECK(r.out.find("valid names") != std::string::npos);
    CHECK(r.out.find("fib_tq") != std::string::npos);
    auto t = run("table --name nosuch --N 2");
    CHECK(t.status == 2);
}

TEST_CASE("eval emits parseable json") {
    auto r = run("eval --family qfib --n 2 --format json");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"object\": \"family_member\"") != std::string::npos);
    CHECK(r.out.find("\"num\"") != std::string::npos);
}

TEST_CASE("table output") {
    auto r = run("table --name D --N 0");
    CHECK(r.status == 0);
    CHECK(r.out == "1\n");
    // default N is 5
    auto def = run("table --name a_qfib");
    CHECK(def.status == 0);
    CHECK(def.out.find("1 + q + q^2 + q^3 + q^4") != std::string::npos);
    auto latex = run("table --name A --N 2 --format latex");
    CHECK(latex.status == 0);
    CHECK(latex.out.find("\\begin{array}") != std::string::npos);
    CHECK(latex.out.find("q^{2} t") != std::string::npos);
    auto csv = run("table --name a_qfib --N 4 --format csv");
    CHECK(csv.status == 0);
    CHECK(csv.out.find("1 + q^2,0,1 + q + q^2,0,1") != std::string::npos);
}

TEST_CASE("byte determinism across runs") {
    auto a = run("table --name A --N 4 --format json");
    auto b = run("table --name A --N 4 --format json");
    CHECK(a.out == b.out);
    CHECK(run("eval --family R_tq --n 3 --format json").out ==
          run("eval --family R_tq --n 3 --format json").out);
    // worker count must not change the assembled output
    auto serial = run("verify --only eq2.8 --only eq2.21 --only eq3.31");
    auto parallel = run("verify --only eq2.8 --only eq2.21 --only eq3.31 --jobs 4");
    CHECK(serial.out == parallel.out);
}

TEST_CASE("verify subsets and exit codes") {
    auto ok = run("verify --only eq2.7 --N 12");
    CHECK(ok.status == 0);
    CHECK(ok.out.find("[PASS] eq2.7") != std::string::npos);
    auto bad = run("verify --only eq3.31 --mutate bd-wrong-power");
    CHECK(bad.status == 1);
    CHECK(bad.out.find("counterexample") != std::string::npos);
    auto unknown = run("verify --only eq9.99");
    CHECK(unknown.status == 2);
}

TEST_CASE("conjecture grid exit codes and report forms") {
    auto empty = run("conjecture --n-max 0");
    CHECK(empty.status == 0);
    CHECK(empty.out.find("\"cells\": []") != std::string::npos);
    auto single = run("conjecture --id 3.47 --n-max 3 --format text");
    CHECK(single.status == 0);
    CHECK(single.out.find("[PASS] 3.47") != std::string::npos);
    // the default JSON report carries the interpretation header and timings
    auto grid = run("conjecture --id 3.49 --n-max 2");
    CHECK(grid.status == 0);
    CHECK(grid.out.find("\"interpretation\"") != std::string::npos);
    CHECK(grid.out.find("\"seconds\"") != std::string::npos);
    // findings never break the exit status; a bad id is a usage error
    CHECK(run("conjecture --id 9.99 --n-max 2").status == 2);
}

TEST_CASE("golden write and check round-trip") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "qmoments_golden_test";
    fs::remove_all(dir);
    auto w = run("golden write --dir " + dir.string());
    CHECK(w.status == 0);
    auto c = run("golden check --dir " + dir.string());
    CHECK(c.status == 0);
    CHECK(c.out.find("files match") != std::string::npos);
    // a corrupted file is reported and flips the exit status
    {
        std::ofstream f(dir / "moment_q_catalan.json", std::ios::trunc);
        f << "{}";
    }
    auto c2 = run("golden check --dir " + dir.string());
    CHECK(c2.status == 1);
    CHECK(c2.out.find("[DIFF] moment_q_catalan.json") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("environment variable provides the golden directory") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "qmoments_golden_env";
    fs::remove_all(dir);
    auto w = run_command("QMOMENTS_GOLDEN_DIR=" + dir.string() + " " + QMOMENTS_BIN_PATH +
                         " golden write");
    CHECK(w.status == 0);
    CHECK(fs::exists(dir / "family_qfib.json"));
    fs::remove_all(dir);
}

TEST_SUITE_END();
