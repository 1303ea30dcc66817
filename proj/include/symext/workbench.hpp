#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "symext/system.hpp"

namespace symext {

enum class ReportFormat { Text, Json };

// Exit codes
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // malformed document or a failed precondition
constexpr int kExitUnknownVerb = 2;
constexpr int kExitUnresolved = 3;
constexpr int kExitGuard = 4;

class UnknownVerb : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};
class UnresolvedReference : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};
class DocumentError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct RunOptions {
    ReportFormat format = ReportFormat::Text;
    int rank = 2;
    std::map<std::string, std::string> guards;  // key -> value overrides
    std::string corpus_dir = "corpus";
};

struct RunOutcome {
    std::string report;
    int exit_code = kExitOk;
    std::vector<std::string> verbs;
};

// Strips # line comments (outside strings) and parses the rest as JSON.
std::string strip_comments(const std::string& text);

// Resolved contents of a workbench document.
class Workbench {
   public:
    static Workbench parse(const std::string& text);
    static Workbench load(const std::string& path);

    const SymSystem& system(const std::string& id) const;
    NameId name(const std::string& ref, const Poset& P) const;
    std::size_t task_count() const;

    // Runs every task of the document.
    RunOutcome run(const RunOptions& opt) const;
    // Runs one verb with positional arguments (document ids, labels, formula text).
    RunOutcome run_verb(const std::string& verb, const std::vector<std::string>& args, const RunOptions& opt) const;

    struct Impl;

   private:
    std::shared_ptr<Impl> impl_;
};

RunOutcome run_file(const std::string& path, const RunOptions& opt);
// A suite outside any document.
RunOutcome run_suite_report(const std::string& id, const RunOptions& opt);

std::vector<std::string> workbench_verbs();

}  // namespace symext
