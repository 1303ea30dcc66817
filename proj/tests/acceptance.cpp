// One line per acceptance criterion. Usage: acceptance [corpus_dir]
#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "symext/suites.hpp"

using namespace symext;

namespace {
struct Criterion {
    int number;
    const char* suite;
    double limit_s;
};

// wall-clock limits in seconds
constexpr Criterion kCriteria[] = {
    {1, "forcing-theorem", 60},  {2, "symmetry-lemma", 30}, {3, "two-step-algebra", 60},
    {4, "factorization", 120},   {5, "product-reduced", 120}, {6, "quotient", 180},
    {7, "completion", 120},      {8, "lottery", 60},          {9, "determinism", 60},
};
}  // namespace

int main(int argc, char** argv) {
    SuiteOptions opt;
    opt.rank = 2;
    if (argc > 1) opt.corpus_dir = argv[1];
    int failed = 0;
    for (const auto& c : kCriteria) {
        auto t0 = std::chrono::steady_clock::now();
        SuiteResult r;
        std::string error;
        try {
            r = run_suite(c.suite, opt);
        } catch (const std::exception& e) {
            r.pass = false;
            error = e.what();
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = s < c.limit_s;
        bool ok = r.pass && in_time && error.empty();
        failed += !ok;
        std::printf("criterion %d %-17s %s  checks=%zu failures=%zu time=%.2fs limit=%.0fs%s%s\n", c.number, c.suite,
                    ok ? "PASS" : "FAIL", r.checks, r.failures, s, c.limit_s, in_time ? "" : " (over time)",
                    error.empty() ? "" : (" error: " + error).c_str());
        for (const auto& p : r.problems) std::printf("    problem: %s\n", p.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
