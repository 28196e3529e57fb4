#include "twistder/cli.hpp"

#include <random>

#include "twistder/demos.hpp"
#include "twistder/extend.hpp"
#include "twistder/problem.hpp"

namespace twistder {

namespace {

constexpr const char* kUsage =
    "usage: twistder <command> [--file PATH] [demo-name | N SEED]\n"
    "commands:\n"
    "  lie --file PATH         derivation Lie algebra of the algebra section\n"
    "  validate --file PATH    cocycle checks for the problem file\n"
    "  twist --file PATH       structure constants of the twisted form\n"
    "  extend --file PATH      affine space of extending derivations (formula route)\n"
    "  crosscheck --file PATH  formula route against the direct solver\n"
    "  demo NAME               crosscheck on a built-in instance\n"
    "  fuzz N SEED             N seeded random conjugation cocycles on M_2\n";

void print_report(const CheckReport& report, std::ostream& out) {
    for (const auto& item : report.items) {
        out << "[check] " << item.name << ": " << (item.pass ? "PASS" : "FAIL");
        if (!item.pass && !item.detail.empty()) out << " (" << item.detail << ")";
        out << "\n";
    }
}

void print_space(const AffineMatrixSpace<RatFunc>& space, std::ostream& out) {
    out << space.to_string();
}

int finish(const CheckReport& report, std::ostream& out) {
    bool ok = report.all_pass();
    out << "result: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

struct ParsedArgs {
    std::string command;
    std::string file;
    std::vector<std::string> positional;
};

ParsedArgs split_args(const std::vector<std::string>& args) {
    ParsedArgs p;
    if (args.empty()) throw Error("missing command");
    p.command = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--file") {
            if (i + 1 >= args.size()) throw Error("--file needs a path");
            p.file = args[++i];
        } else {
            p.positional.push_back(args[i]);
        }
    }
    return p;
}

int cmd_lie(const ParsedArgs& a, std::ostream& out) {
    auto pf = parse_problem_file(a.file);
    auto space = lie_algebra(pf.require_algebra());
    out << "derivation Lie algebra:\n";
    print_space(space, out);
    return 0;
}

int cmd_validate(const ParsedArgs& a, std::ostream& out) {
    auto pf = parse_problem_file(a.file);
    CocycleData cd = pf.require_cocycle();
    EAlgebra a_e = extend_to(pf.require_algebra(), cd.field());
    auto report = validate_cocycle(a_e, cd);
    print_report(report, out);
    return finish(report, out);
}

int cmd_twist(const ParsedArgs& a, std::ostream& out) {
    auto pf = parse_problem_file(a.file);
    CocycleData cd = pf.require_cocycle();
    TwistedForm form = build_twisted_form(pf.require_algebra(), cd);
    std::size_t n = form.b.dim();
    out << "twisted structure constants:\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out << "  w" << i << "*w" << j << " = [";
            for (std::size_t k = 0; k < n; ++k) {
                if (k) out << ", ";
                out << "\"" << form.b.c(i, j, k).to_string() << "\"";
            }
            out << "]\n";
        }
    out << "  unit = [";
    for (std::size_t k = 0; k < n; ++k) {
        if (k) out << ", ";
        out << "\"" << form.b.unit()[k].to_string() << "\"";
    }
    out << "]\n";
    return 0;
}

int cmd_extend(const ParsedArgs& a, std::ostream& out) {
    auto pf = parse_problem_file(a.file);
    ExtensionProblem p(pf.require_algebra(), pf.require_cocycle());
    auto space = formula_extension_space(p);
    out << "extension space:\n";
    print_space(space, out);
    if (space.is_empty()) {
        out << "result: FAIL (empty extension space on a valid cocycle)\n";
        return 1;
    }
    return 0;
}

CheckReport crosscheck_problem(const ExtensionProblem& p, std::ostream& out) {
    auto space = formula_extension_space(p);
    out << "extension space:\n";
    print_space(space, out);
    auto report = cross_validate(p);
    print_report(report, out);
    return report;
}

int cmd_crosscheck(const ParsedArgs& a, std::ostream& out) {
    auto pf = parse_problem_file(a.file);
    ExtensionProblem p(pf.require_algebra(), pf.require_cocycle());
    return finish(crosscheck_problem(p, out), out);
}

int cmd_demo(const ParsedArgs& a, std::ostream& out) {
    if (a.positional.size() != 1) throw Error("demo needs exactly one name");
    out << "demo " << a.positional[0] << "\n";
    ExtensionProblem p = demo_problem(a.positional[0]);
    return finish(crosscheck_problem(p, out), out);
}

int cmd_fuzz(const ParsedArgs& a, std::ostream& out) {
    if (a.positional.size() != 2) throw Error("fuzz needs N and SEED");
    unsigned long count = std::stoul(a.positional[0]);
    unsigned long long seed = std::stoull(a.positional[1]);
    std::mt19937_64 rng(seed);
    ExtFieldPtr field = quadratic_field();
    QAlgebra a2 = matrix_algebra(2);
    unsigned long passed = 0;
    for (unsigned long i = 0; i < count; ++i) {
        EMatrix q0 = random_conjugation_matrix(rng, field);
        bool ok = false;
        try {
            ExtensionProblem p(a2, conjugation_cocycle(field, q0));
            ok = cross_validate(p).all_pass();
        } catch (const Error&) {
            ok = false;
        }
        out << "instance " << i << ": " << (ok ? "PASS" : "FAIL") << "\n";
        if (ok) ++passed;
    }
    out << passed << "/" << count << " pass\n";
    out << "result: " << (passed == count ? "PASS" : "FAIL") << "\n";
    return passed == count ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        ParsedArgs a = split_args(args);
        if (a.command == "lie") return cmd_lie(a, out);
        if (a.command == "validate") return cmd_validate(a, out);
        if (a.command == "twist") return cmd_twist(a, out);
        if (a.command == "extend") return cmd_extend(a, out);
        if (a.command == "crosscheck") return cmd_crosscheck(a, out);
        if (a.command == "demo") return cmd_demo(a, out);
        if (a.command == "fuzz") return cmd_fuzz(a, out);
        if (a.command == "help" || a.command == "--help") {
            out << kUsage;
            return 0;
        }
        throw Error("unknown command '" + a.command + "'");
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace twistder
