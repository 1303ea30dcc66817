#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace symext {

struct SuiteResult {
    std::string id;
    std::string title;
    bool pass = true;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> notes;     // deterministic facts (counts, bounds)
    std::vector<std::string> problems;  // first few failures

    void count(std::size_t n = 1) { checks += n; }
    void fail(const std::string& what);
    // count one check; record what on failure
    bool check(bool ok, const std::string& what);
};

struct SuiteOptions {
    std::string corpus_dir = "corpus";
    int rank = 2;
};

std::vector<std::string> suite_ids();
// Throws std::out_of_range for an unknown id.
SuiteResult run_suite(const std::string& id, const SuiteOptions& opt = {});

SuiteResult forcing_theorem_suite(int k);
SuiteResult symmetry_lemma_suite(int k);
SuiteResult two_step_algebra_suite();
SuiteResult factorization_suite(int k);
SuiteResult product_reduced_suite(int k);
SuiteResult quotient_suite(int k);
SuiteResult completion_suite(int k);
SuiteResult lottery_suite(int k);
// Every task of every corpus document run twice in-process; reports compared byte for byte.
SuiteResult determinism_suite(const std::string& corpus_dir);

}  // namespace symext
