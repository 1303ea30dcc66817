#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "symext/guard.hpp"
#include "symext/suites.hpp"
#include "symext/workbench.hpp"

using namespace symext;

int main(int argc, char** argv) {
    CLI::App app{"symwork: finite-scale symmetric extension workbench"};
    std::string input;
    std::vector<std::string> rest;
    std::string report = "text";
    std::vector<std::string> guards;
    RunOptions opt;
    app.add_option("input", input, "workbench document, or 'suite' to run an acceptance suite")->required();
    app.add_option("command", rest, "optional verb and its arguments");
    app.add_option("--rank", opt.rank, "rank bound")->check(CLI::Range(0, 8));
    app.add_option("--guard", guards, "guard override key=value (max_names, max_poset, max_group, max_rank)");
    app.add_option("--report", report, "report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--corpus", opt.corpus_dir, "corpus directory for the determinism suite");
    CLI11_PARSE(app, argc, argv);

    opt.format = report == "json" ? ReportFormat::Json : ReportFormat::Text;
    for (const auto& g : guards) {
        auto eq = g.find('=');
        if (eq == std::string::npos) {
            std::cerr << "guard must be key=value: " << g << "\n";
            return kExitFailure;
        }
        opt.guards[g.substr(0, eq)] = g.substr(eq + 1);
    }

    RunOutcome out;
    try {
        if (input == "suite" && !std::filesystem::exists(input)) {
            if (rest.size() != 1) {
                std::cerr << "usage: symwork suite <id>\n";
                return kExitFailure;
            }
            out = run_suite_report(rest[0], opt);
        } else if (rest.empty()) {
            out = run_file(input, opt);
        } else {
            auto verbs = workbench_verbs();
            if (std::find(verbs.begin(), verbs.end(), rest[0]) == verbs.end()) {
                std::cerr << "unknown verb " << rest[0] << "\n";
                return kExitUnknownVerb;
            }
            Workbench w = Workbench::load(input);
            out = w.run_verb(rest[0], {rest.begin() + 1, rest.end()}, opt);
        }
    } catch (const GuardExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    std::cout << out.report;
    return out.exit_code;
}
