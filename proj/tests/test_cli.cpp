#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string bin() {
    const char* p = std::getenv("ZV_BIN");
    REQUIRE_MESSAGE(p != nullptr, "ZV_BIN must point at the CLI binary");
    return p;
}

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = bin() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe)) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string tmp_path(const std::string& name) {
    return std::string("zv_test_") + name;
}

}  // namespace

TEST_CASE("eval at 0.5 reports the reference value") {
    const RunResult r = run("eval --s 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("-1.46035450880") != std::string::npos);
    CHECK(r.output.find("\"method\": \"em\"") != std::string::npos);
    CHECK(r.output.find("\"config\": ") != std::string::npos);
}

TEST_CASE("eval at 2 reports the Basel value") {
    const RunResult r = run("eval --s 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1.64493406684") != std::string::npos);
}

TEST_CASE("eval at the pole exits with an input error") {
    const RunResult r = run("eval --s 1");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("pole") != std::string::npos);
}

TEST_CASE("eval parses the a+bi forms") {
    CHECK(run("eval --s 0.5+25i").exit_code == 0);
    CHECK(run("eval --s -1.5").exit_code == 0);
    CHECK(run("eval --s 2i").exit_code == 0);
    CHECK(run("eval --s garbage").exit_code == 2);
    CHECK(run("eval --s \"0.5+40i\" --method rs").exit_code == 0);
    CHECK(run("eval --s \"0.7+40i\" --method rs").exit_code == 2);
}

TEST_CASE("zeros on a zero-free range emits only the header") {
    const std::string out = tmp_path("empty.csv");
    const RunResult r = run("zeros --from 0 --to 10 --out " + out);
    CHECK(r.exit_code == 0);
    CHECK(slurp(out) == "index,t,t_lo,t_hi,residual,method\n");
    std::remove(out.c_str());
    std::remove((out + ".warnings").c_str());
}

TEST_CASE("zeros CSV is deterministic and carries the frozen schema") {
    const std::string out1 = tmp_path("z1.csv");
    const std::string out2 = tmp_path("z2.csv");
    CHECK(run("zeros --from 0 --to 30 --out " + out1).exit_code == 0);
    CHECK(run("zeros --from 0 --to 30 --out " + out2).exit_code == 0);
    const std::string a = slurp(out1);
    CHECK(a == slurp(out2));
    CHECK(a.find("index,t,t_lo,t_hi,residual,method") == 0);
    CHECK(a.find("14.1347251") != std::string::npos);
    CHECK(a.find(",em") != std::string::npos);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    std::remove((out1 + ".warnings").c_str());
    std::remove((out2 + ".warnings").c_str());
}

TEST_CASE("verify writes the full report schema") {
    const std::string rep = tmp_path("v.json");
    const RunResult r = run("verify --T 30 --report " + rep);
    CHECK(r.exit_code == 0);
    const std::string body = slurp(rep);
    for (const char* field :
         {"\"T\"", "\"n_argument\"", "\"n0_signchanges\"", "\"s_of_T\"", "\"equal\"",
          "\"lemma_residual\"", "\"refinement_depth\"", "\"runtime_ms\""})
        CHECK(body.find(field) != std::string::npos);
    CHECK(body.find("\"equal\": true") != std::string::npos);
    CHECK(body.find("\"n_argument\": 3") != std::string::npos);
    std::remove(rep.c_str());
}

TEST_CASE("identities suites pass and gate the exit code") {
    CHECK(run("identities --suite jacobi").exit_code == 0);
    CHECK(run("identities --suite two_re").exit_code == 0);
    const RunResult all = run("identities --suite all");
    CHECK(all.exit_code == 0);
    CHECK(all.output.find("FAIL") == std::string::npos);
    CHECK(run("identities --suite nonsense").exit_code == 2);
}

TEST_CASE("config file composes with flags, flags winning") {
    const std::string cfg = tmp_path("cfg.txt");
    {
        std::ofstream out(cfg);
        out << "# scan tuning\n";
        out << "grid = 4\n";
        out << "depth = 3\n";
    }
    const std::string rep = tmp_path("vc.json");
    const RunResult r = run("verify --T 20 --report " + rep + " --config " + cfg +
                            " --depth 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("grid=4") != std::string::npos);
    CHECK(r.output.find("depth=5") != std::string::npos);
    std::remove(rep.c_str());

    // Same config through the environment fallback.
    setenv("ZV_CONFIG", cfg.c_str(), 1);
    const RunResult env = run("identities --suite jacobi");
    unsetenv("ZV_CONFIG");
    CHECK(env.exit_code == 0);
    CHECK(env.output.find("grid=4") != std::string::npos);
    std::remove(cfg.c_str());
}

TEST_CASE("invalid config values are rejected with a line-precise message") {
    const std::string cfg = tmp_path("bad.txt");
    {
        std::ofstream out(cfg);
        out << "grid = 8\n";
        out << "depth = banana\n";
    }
    const RunResult r = run("identities --suite jacobi --config " + cfg);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line 2") != std::string::npos);
    CHECK(r.output.find("depth") != std::string::npos);
    std::remove(cfg.c_str());
}

TEST_CASE("out-of-range parameters are rejected as input errors") {
    CHECK(run("identities --suite jacobi --crossing 1.5").exit_code == 2);
    CHECK(run("zeros --from 10 --to 5 --out /dev/null").exit_code == 2);
    CHECK(run("verify --T -3 --report /dev/null").exit_code == 2);
    CHECK(run("definitely-not-a-command").exit_code == 2);
}
