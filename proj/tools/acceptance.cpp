// Runs the seven acceptance criteria and prints one line per criterion.
// Exit status is nonzero if any criterion fails.

#include "structcon/verify.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

using namespace structcon;

namespace {

struct Criterion {
    int number;
    const char* suite;
    double limit_seconds;  // wall clock, pinned
};

// Exact arithmetic throughout: every check is equality of rationals, so there
// is no numeric tolerance to pin beyond zero.
constexpr Criterion criteria[] = {
    {1, "paper-examples", 5.0},    {2, "mobius", 120.0},    {3, "unitriangular", 120.0},
    {4, "pipeline-vs-oracle", 600.0}, {5, "hall-littlewood", 180.0}, {6, "plethysm", 300.0},
    {7, "bridge", 60.0},
};

}  // namespace

int main(int argc, char** argv) {
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    int failed = 0;
    std::vector<std::string> details;
    for (const auto& c : criteria) {
        Report r = run_suite(c.suite, jobs);
        bool in_time = r.seconds < c.limit_seconds;
        bool ok = r.passed() && in_time;
        std::size_t bad = 0, checks = 0;
        for (const auto& k : r.cases) {
            checks += k.checks;
            if (!k.pass) {
                ++bad;
                details.push_back(std::string(c.suite) + "/" + k.id + ": " + k.detail);
            }
        }
        char line[256];
        std::snprintf(line, sizeof line, "criterion %d %-20s %s  %zu cases, %zu failed, %zu checks, %.2f s (limit %.0f s)%s",
                      c.number, c.suite, ok ? "PASS" : "FAIL", r.cases.size(), bad, checks, r.seconds,
                      c.limit_seconds, in_time ? "" : " TIME LIMIT EXCEEDED");
        std::cout << line << std::endl;
        if (verbose) std::cout << r.to_text();
        failed += !ok;
    }
    for (const auto& d : details) std::cout << "  failed case " << d << "\n";
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
