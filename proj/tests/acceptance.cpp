// Acceptance suite: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "twistder/cli.hpp"
#include "twistder/demos.hpp"
#include "twistder/extend.hpp"
#include "twistder/parser.hpp"

#include "test_util.hpp"

using namespace twistder;
using namespace twistder::testutil;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << "criterion " << number << " (" << name << "): " << (pass ? "PASS" : "FAIL");
    if (!pass && !detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
    if (!pass) ++failures;
}

// 1. derivation Lie algebra dimensions of the standard catalog
void criterion1() {
    struct Case {
        QAlgebra a;
        std::size_t dim;
        const char* name;
    };
    std::vector<Case> cases;
    cases.push_back({split_etale(2), 0, "QxQ"});
    cases.push_back({split_etale(3), 0, "QxQxQ"});
    cases.push_back({matrix_algebra(2), 3, "M2"});
    cases.push_back({matrix_algebra(3), 8, "M3"});
    cases.push_back({dual_numbers_algebra(), 1, "Q[x]/(x^2)"});
    std::string detail;
    bool ok = true;
    for (const auto& c : cases) {
        std::size_t got = lie_algebra(c.a).dimension();
        if (got != c.dim) {
            ok = false;
            detail += std::string(c.name) + " gave dimension " + std::to_string(got) +
                      ", expected " + std::to_string(c.dim) + "; ";
        }
    }
    report(1, "Lie algebra dimensions", ok, detail);
}

// 2. solver route vs dual-number route on basis and random matrices
void criterion2() {
    bool ok = true;
    std::string detail;
    std::vector<std::pair<QAlgebra, const char*>> algebras{
        {split_etale(2), "QxQ"},
        {matrix_algebra(2), "M2"},
        {dual_numbers_algebra(), "Q[x]/(x^2)"}};
    for (const auto& [a, name] : algebras) {
        auto g = lie_algebra(a);
        for (const auto& b : g.basis())
            if (!dual_number_check(a, b)) {
                ok = false;
                detail += std::string(name) + ": basis matrix fails the dual-number check; ";
            }
        std::mt19937_64 rng(2);
        for (int it = 0; it < 50; ++it) {
            FMatrix m = random_fmatrix(rng, a.dim(), 1);
            if (dual_number_check(a, m) != g.contains(m)) {
                ok = false;
                detail += std::string(name) + ": routes disagree on a random matrix; ";
            }
        }
    }
    report(2, "dual-number route agrees with the solver", ok, detail);
}

// 3. the quadratic etale instance has the unique known extension
void criterion3() {
    ExtensionProblem p = demo_problem("etale-quadratic");
    auto space = formula_extension_space(p);
    FMatrix expect(2, 2, RatFunc());
    expect.at(1, 1) = parse_ratfunc("1/(2*t)");
    bool ok = space.dimension() == 0 && space.point() == expect &&
              affine_equal(space, direct_extension_space(p.b())) &&
              cross_validate(p).all_pass();
    report(3, "quadratic etale worked example", ok);
}

// 4. quaternion twist of M_2: dimension 3, verified representatives
void criterion4() {
    ExtensionProblem p = demo_problem("quaternion-t-minus1");
    auto space = formula_extension_space(p);
    std::vector<RatFunc> i_sq = p.b().multiply(p.b().basis_vector(1), p.b().basis_vector(1));
    bool form_ok = i_sq[0] == parse_ratfunc("t") && i_sq[1].is_zero() && i_sq[2].is_zero() &&
                   i_sq[3].is_zero();
    bool ok = form_ok && space.dimension() == 3 &&
              affine_equal(space, direct_extension_space(p.b())) &&
              verify_derivation(p.b(), space.point()) && cross_validate(p).all_pass();
    report(4, "quaternion twist of M_2", ok);
}

// 5. fuzz campaign through the CLI: 25 seeded instances under a minute
void criterion5() {
    std::ostringstream out, err;
    auto start = std::chrono::steady_clock::now();
    int code = run_cli({"fuzz", "25", "42"}, out, err);
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = code == 0 && out.str().find("25/25 pass") != std::string::npos && secs < 60.0;
    report(5, "25-instance fuzz under 60 s", ok,
           "exit " + std::to_string(code) + ", " + std::to_string(secs) + " s");
}

// 6. trivial cocycle reduces to the direct solver on A
void criterion6() {
    auto field = quadratic_field();
    bool ok = true;
    for (QAlgebra a : {split_etale(2), matrix_algebra(2), dual_numbers_algebra()}) {
        CocycleData triv(field, EMatrix::identity(a.dim(), field->zero(), field->one()));
        ExtensionProblem p(a, triv);
        auto formula = formula_extension_space(p);
        if (!affine_equal(formula, direct_extension_space(a)) || !formula.point().is_zero())
            ok = false;
    }
    report(6, "trivial cocycle collapse", ok);
}

// 7. negative controls fail loudly
void criterion7() {
    bool ok = true;
    std::string detail;

    auto write_temp = [](const char* name, const std::string& text) {
        std::string path = std::string("/tmp/") + name;
        std::ofstream f(path);
        f << text;
        return path;
    };
    const std::string base = R"(
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

    // corrupted cocycle entry: validate must report a failed check
    std::string bad_cocycle = base;
    bad_cocycle.replace(bad_cocycle.find("[[\"1\", \"1\"]"), 11, "[[\"2\", \"1\"]");
    {
        std::ostringstream out, err;
        int code = run_cli({"validate", "--file", write_temp("acc_bad_cocycle.prob", bad_cocycle)},
                           out, err);
        if (code != 1 || out.str().find("FAIL") == std::string::npos) {
            ok = false;
            detail += "corrupted cocycle exited " + std::to_string(code) + "; ";
        }
    }

    // non-squarefree minimal polynomial: rejected as an input error
    std::string bad_minpoly = base;
    bad_minpoly.replace(bad_minpoly.find("s^2 - t"), 7, "s^2 - 2*s + 1");
    {
        std::ostringstream out, err;
        int code = run_cli({"validate", "--file", write_temp("acc_bad_minpoly.prob", bad_minpoly)},
                           out, err);
        if (code != 2) {
            ok = false;
            detail += "non-squarefree minpoly exited " + std::to_string(code) + "; ";
        }
    }

    // perturbed extension matrix fails the exact Leibniz check
    {
        ExtensionProblem p = demo_problem("etale-quadratic");
        FMatrix bad = formula_extension_space(p).point();
        bad.at(0, 0) += RatFunc(1);
        if (verify_derivation(p.b(), bad)) {
            ok = false;
            detail += "perturbed matrix passed verify_derivation; ";
        }
    }

    report(7, "negative controls", ok, detail);
}

// 8. exact arithmetic spot checks at volume
void criterion8() {
    bool ok = true;
    std::string detail;
    auto field = quadratic_field();

    std::mt19937_64 rng(2024);
    for (int it = 0; it < 200; ++it) {
        ExtElem a = random_ext_elem(rng, field);
        ExtElem b = random_ext_elem(rng, field);
        if ((a * b).derive() != a.derive() * b + a * b.derive()) {
            ok = false;
            detail += "Leibniz rule failed on E; ";
            break;
        }
    }

    EMatrix id = EMatrix::identity(2, field->zero(), field->one());
    int done = 0;
    while (done < 50) {
        EMatrix m = random_ematrix(rng, field, 2);
        EMatrix inv;
        try {
            inv = matrix_inverse(m);
        } catch (const Error&) {
            continue;
        }
        if (m * inv != id || inv * m != id) {
            ok = false;
            detail += "matrix inverse round trip failed; ";
            break;
        }
        ++done;
    }

    for (int it = 0; it < 50; ++it) {
        EMatrix a = random_ematrix(rng, field, 2);
        EMatrix b = random_ematrix(rng, field, 2);
        if ((a * b).derive() != a.derive() * b + a * b.derive()) {
            ok = false;
            detail += "matrix product rule failed; ";
            break;
        }
    }

    report(8, "exact arithmetic at volume", ok, detail);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria pass\n";
    return 0;
}
