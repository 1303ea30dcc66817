#include <doctest.h>

#include "symext/guard.hpp"
#include "symext/workbench.hpp"

using namespace symext;

namespace {
const char* kDoc = R"({
  # comment with "quotes"
  "names": {"u": {"entries": [["a", "empty"], ["b", "empty"]]}, "hash": {"check": "{}"}},
  "formulas": {"eq": "x0 = x1"},
  "tasks": [
    {"verb": "validate", "system": "Ssym"},
    {"verb": "force", "system": "Ssym", "cond": "1", "formula": "eq", "names": ["u", "check:{{}}"]}
  ]
})";
}

TEST_CASE("comments are stripped outside strings") {
    CHECK(strip_comments("{\"a#b\": 1} # x\n") == "{\"a#b\": 1} \n");
    CHECK(strip_comments("\"\\\"#\"") == "\"\\\"#\"");
}

TEST_CASE("document tasks") {
    Workbench w = Workbench::parse(kDoc);
    CHECK(w.task_count() == 2);
    RunOutcome r = w.run({});
    CHECK(r.exit_code == kExitOk);
    CHECK(r.report.find("  valid\n") != std::string::npos);
    CHECK(r.report.find("  true (symmetric)\n") != std::string::npos);
    CHECK(r.report.find("machine: {") != std::string::npos);
    RunOptions j;
    j.format = ReportFormat::Json;
    CHECK(w.run(j).report.find("\"forces\": true") != std::string::npos);
}

TEST_CASE("verbs with positional arguments") {
    Workbench w = Workbench::parse(kDoc);
    auto r = w.run_verb("force", {"Ssym", "1", "x0 = x1", "u", "check:{{}}"}, {});
    CHECK(r.exit_code == kExitOk);
    CHECK(r.report.find("true") != std::string::npos);
    CHECK(w.run_verb("validate", {"Ssym"}, {}).report.find("valid") != std::string::npos);
}

TEST_CASE("exit codes") {
    Workbench w = Workbench::parse(kDoc);
    CHECK(w.run_verb("levitate", {}, {}).exit_code == kExitUnknownVerb);
    CHECK(w.run_verb("validate", {"Nowhere"}, {}).exit_code == kExitUnresolved);
    CHECK(w.run_verb("force", {"Ssym", "zz", "x0 = x0", "u"}, {}).exit_code == kExitUnresolved);
    RunOptions tight;
    tight.rank = 6;
    CHECK(w.run_verb("hs", {"Ssym"}, tight).exit_code == kExitGuard);
    RunOptions g;
    g.guards["max_poset"] = "2";
    Workbench p = Workbench::parse(R"({"posets": {"Q": {"labels": ["1", "a", "b"], "leq": [["a", "1"], ["b", "1"]], "top": "1"}},
        "groups": {"G": {"poset": "Q", "all": true}}, "filters": {"F": {"group": "G", "generators": ["all"]}},
        "systems": {"S": {"poset": "Q", "group": "G", "filter": "F"}}})");
    CHECK(p.run_verb("validate", {"S"}, g).exit_code == kExitGuard);
    CHECK(p.run_verb("validate", {"S"}, {}).exit_code == kExitOk);
    CHECK_THROWS_AS(Workbench::parse("{\"tasks\": ["), DocumentError);
    // guards are restored after a run
    CHECK(default_guards().max_poset == 64);
}

TEST_CASE("reports are repeatable") {
    Workbench w = Workbench::parse(kDoc);
    CHECK(w.run({}).report == w.run({}).report);
    CHECK(Workbench::parse(kDoc).run({}).report == w.run({}).report);
}
