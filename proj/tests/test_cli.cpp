// End-to-end checks of the command-line tool: exit codes, JSON round trips,
// and byte-level determinism across thread counts. Takes the binary path as
// argv[1].

#include <cstdio>
#include <iostream>
#include <string>

#include <json.hpp>

#include "cylhook/report.hpp"

namespace {

int g_failures = 0;

#define CLI_CHECK(cond)                                                          \
    do {                                                                         \
        if (!(cond)) {                                                           \
            std::cerr << "FAILED at " << __LINE__ << ": " #cond "\n";            \
            ++g_failures;                                                        \
        }                                                                        \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <cylhook-binary>\n";
        return 1;
    }
    const std::string bin = argv[1];

    // worked finite example
    {
        RunResult r = run(bin + " verify-naruse --lambda 2,2 --mu 1,0 --json");
        CLI_CHECK(r.exit_code == 0);
        auto j = nlohmann::ordered_json::parse(r.out);
        CLI_CHECK(j["f"] == "2");
        CLI_CHECK(j["rhs"]["num"] == "2");
        CLI_CHECK(j["rhs"]["den"] == "1");
        CLI_CHECK(j["equal"] == true);
    }

    // periodic series within tolerance; report JSON round-trips exactly
    {
        RunResult r = run(bin + " verify-cyl --lambda 2 --mu 0 --m 1 --ell 1 --window 60 --tol 1e-2 --json");
        CLI_CHECK(r.exit_code == 0);
        auto j = nlohmann::ordered_json::parse(r.out);
        CLI_CHECK(j["report"]["verdict"] == "ConvergedWithinTol");
        cylhook::VerificationReport rep = cylhook::report_from_json(j["report"]);
        CLI_CHECK(cylhook::report_to_json(rep) == j["report"]);
        CLI_CHECK(rep.lhs == cylhook::Rational(1));
    }

    // window too small for the tolerance: inconclusive, exit 3
    {
        RunResult r = run(bin + " verify-cyl --lambda 2 --mu 0 --m 1 --ell 1 --window 5 --tol 1e-9");
        CLI_CHECK(r.exit_code == 3);
    }

    // exhausted finite family: exact pass
    {
        RunResult r = run(bin + " verify-cyl --lambda 2,1 --mu 1,0 --m 2 --ell 2 --window 10 --tol 1e-6 --json");
        CLI_CHECK(r.exit_code == 0);
        auto j = nlohmann::ordered_json::parse(r.out);
        CLI_CHECK(j["report"]["verdict"] == "ExactPass");
        CLI_CHECK(j["report"]["exhausted"] == true);
    }

    // usage and validation failures exit 2
    CLI_CHECK(run(bin + " verify-naruse --lambda 2,2").exit_code == 2);
    CLI_CHECK(run(bin + " verify-cyl --lambda 3,1 --mu 0,0 --m 2 --ell 1 --window 5 --tol 1e-3").exit_code == 2);
    CLI_CHECK(run(bin + " tableaux --lambda 1,2 --mu 0,0 --ell 2").exit_code == 2);
    CLI_CHECK(run(bin + " formula --kind nonsense").exit_code == 2);
    CLI_CHECK(run(bin + " verify-cyl --lambda 2 --mu 0 --m 1 --ell 1 --tol nope").exit_code == 2);

    // tableaux listing
    {
        RunResult r = run(bin + " tableaux --lambda 2,2 --mu 1,0 --ell 2 --json");
        CLI_CHECK(r.exit_code == 0);
        auto j = nlohmann::ordered_json::parse(r.out);
        CLI_CHECK(j["count"] == 2);
        CLI_CHECK(j["tableaux"].size() == 2);
        CLI_CHECK(j["tableaux"][0]["entries"].size() == 3);
    }

    // excited strata
    {
        RunResult r = run(bin + " excited --lambda 2 --mu 0 --m 1 --ell 1 --window 4 --json");
        CLI_CHECK(r.exit_code == 0);
        auto j = nlohmann::ordered_json::parse(r.out);
        CLI_CHECK(j["truncated"] == true);
        CLI_CHECK(j["strata"].size() == 5);
        CLI_CHECK(j["strata"][0]["diagrams"].size() == 1);
    }

    // finite excited
    {
        RunResult r = run(bin + " excited --lambda 2,2 --mu 1,0 --finite --json");
        CLI_CHECK(r.exit_code == 0);
        auto j = nlohmann::ordered_json::parse(r.out);
        CLI_CHECK(j["count"] == 2);
    }

    // formula subcommands
    CLI_CHECK(run(bin + " formula --kind bar --n 3 --ell 2 --tol 1e-3").exit_code == 0);
    CLI_CHECK(run(bin + " formula --kind hook --ell 3 --m 2 --json").exit_code == 0);
    CLI_CHECK(run(bin + " formula --kind path-sum --ell 2 --m 2 --s 1 --json").exit_code == 0);
    CLI_CHECK(run(bin + " formula --kind path-sum-t --ell 2 --m 2 --s 1 --t 4 --trunc 20").exit_code == 0);

    // byte determinism across thread counts
    for (const std::string& cmd :
         {std::string(" verify-naruse --lambda 4,3,3,1 --mu 2,1 --json"),
          std::string(" verify-cyl --lambda 3,2 --mu 1,0 --m 2 --ell 2 --window 12 --tol 1e-4 --json"),
          std::string(" excited --lambda 3,2 --mu 1,0 --m 2 --ell 2 --window 6 --json")}) {
        RunResult one = run(bin + cmd + " --jobs 1");
        RunResult four = run(bin + cmd + " --jobs 4");
        CLI_CHECK(one.exit_code == four.exit_code);
        CLI_CHECK(one.out == four.out);
        CLI_CHECK(!one.out.empty());
    }

    // environment default for jobs
    {
        RunResult r = run("CYLHOOK_JOBS=3 " + bin + " verify-naruse --lambda 3,2 --mu 1 --json");
        CLI_CHECK(r.exit_code == 0);
    }

    // render golden
    {
        RunResult r = run(bin + " render --lambda 2 --m 1 --ell 1 --rows 0:2 --cols -1:3");
        CLI_CHECK(r.exit_code == 0);
        CLI_CHECK(r.out == "#####\n####.\n###..\n");
    }

    if (g_failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cerr << "test_cli: " << g_failures << " checks failed\n";
    return 1;
}
