#include "doctest.h"

#include <fstream>
#include <sstream>

#include "twistder/cli.hpp"
#include "twistder/problem.hpp"

using namespace twistder;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "/tmp/" + name;
    std::ofstream f(path);
    f << text;
    return path;
}

const char* kEtaleProblem = R"(
[extension]
minpoly = s^2 - t
generator = s
automorphisms = ["s", "-s"]

[algebra]
n = 2
unit = ["1", "1"]
c[0][0] = ["1", "0"]
c[0][1] = ["0", "0"]
c[1][0] = ["0", "0"]
c[1][1] = ["0", "1"]

[cocycle]
P_inv = [["1", "1"], ["s", "-s"]]
)";

} // namespace

TEST_CASE("demo output is deterministic") {
    Run a = run({"demo", "etale-quadratic"});
    Run b = run({"demo", "etale-quadratic"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("result: PASS") != std::string::npos);

    Run f1 = run({"fuzz", "2", "42"});
    Run f2 = run({"fuzz", "2", "42"});
    CHECK(f1.code == 0);
    CHECK(f1.out == f2.out);
    CHECK(f1.out.find("2/2 pass") != std::string::npos);
}

TEST_CASE("every demo passes") {
    for (const char* name :
         {"etale-trivial", "etale-quadratic", "matrix-trivial", "quaternion-t-minus1",
          "dual-numbers"}) {
        CAPTURE(name);
        Run r = run({"demo", name});
        CHECK(r.code == 0);
        CHECK(r.out.find("result: PASS") != std::string::npos);
    }
}

TEST_CASE("exit codes") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"demo", "no-such-demo"}).code == 2);
    CHECK(run({"crosscheck", "--file", "/tmp/does-not-exist.prob"}).code == 2);
    CHECK(run({"help"}).code == 0);

    std::string path = write_temp("cli_etale.prob", kEtaleProblem);
    CHECK(run({"crosscheck", "--file", path}).code == 0);
    CHECK(run({"validate", "--file", path}).code == 0);
    CHECK(run({"lie", "--file", path}).code == 0);
    CHECK(run({"twist", "--file", path}).code == 0);
    CHECK(run({"extend", "--file", path}).code == 0);

    // corrupting one cocycle entry turns validate into a check failure
    std::string bad = kEtaleProblem;
    bad.replace(bad.find("[[\"1\", \"1\"]"), 11, "[[\"2\", \"1\"]");
    std::string bad_path = write_temp("cli_etale_bad.prob", bad);
    Run r = run({"validate", "--file", bad_path});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("golden problem files parse and pass") {
    for (const char* name : {"etale-quadratic.prob", "quaternion-t-minus1.prob",
                             "dual-numbers.prob"}) {
        CAPTURE(name);
        std::string path = std::string(TWISTDER_SOURCE_DIR) + "/demos/" + name;
        Run r = run({"crosscheck", "--file", path});
        CHECK(r.code == 0);
        CHECK(r.out.find("result: PASS") != std::string::npos);
    }
}

TEST_CASE("input errors carry line numbers") {
    // three automorphisms on a degree-2 extension
    std::string text = kEtaleProblem;
    text.replace(text.find("[\"s\", \"-s\"]"), 11, "[\"s\", \"-s\", \"s\"]");
    Run r1 = run({"validate", "--file", write_temp("cli_bad_aut.prob", text)});
    CHECK(r1.code == 2);
    CHECK(r1.err.find("line") != std::string::npos);

    // wrong P_inv shape
    std::string text2 = kEtaleProblem;
    text2.replace(text2.find("[[\"1\", \"1\"], [\"s\", \"-s\"]]"), 25, "[[\"1\", \"1\"]]");
    Run r2 = run({"validate", "--file", write_temp("cli_bad_shape.prob", text2)});
    CHECK(r2.code == 2);
    CHECK(r2.err.find("P_inv") != std::string::npos);

    // non-squarefree minimal polynomial
    std::string text3 = kEtaleProblem;
    text3.replace(text3.find("s^2 - t"), 7, "s^2 - 2*s + 1");
    Run r3 = run({"validate", "--file", write_temp("cli_bad_minpoly.prob", text3)});
    CHECK(r3.code == 2);
}
