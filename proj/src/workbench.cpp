#include "symext/workbench.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <set>
#include <sstream>

#include "symext/equivalence.hpp"
#include "symext/fixtures.hpp"
#include "symext/guard.hpp"
#include "symext/iteration.hpp"
#include "symext/quotient.hpp"
#include "symext/suites.hpp"

namespace symext {

using json = nlohmann::ordered_json;

std::string strip_comments(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool in_string = false, escape = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_string) {
            out += c;
            if (escape)
                escape = false;
            else if (c == '\\')
                escape = true;
            else if (c == '"')
                in_string = false;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            out += '\n';
            continue;
        }
        if (c == '"') in_string = true;
        out += c;
    }
    return out;
}

std::vector<std::string> workbench_verbs() {
    return {"validate", "force", "hs", "tenacious", "complete", "iterate", "product", "quotient", "equiv", "suite"};
}

namespace {

// Restores the guard settings on scope exit.
struct GuardScope {
    Guards saved = default_guards();
    ~GuardScope() { default_guards() = saved; }
};

void apply_guard(const std::string& key, long long v) {
    Guards& g = default_guards();
    if (key == "max_names")
        g.max_names = static_cast<std::uint64_t>(v);
    else if (key == "max_poset")
        g.max_poset = static_cast<int>(v);
    else if (key == "max_group")
        g.max_group = static_cast<int>(v);
    else if (key == "max_rank")
        g.max_rank = static_cast<int>(v);
    else
        throw DocumentError("unknown guard " + key);
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw DocumentError(where + ": missing field " + key);
    return j.at(key);
}

std::string str_field(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_string()) throw DocumentError(where + ": field " + key + " must be a string");
    return v.get<std::string>();
}

int cond_of(const Poset& P, const std::string& label) {
    try {
        return P.index(label);
    } catch (const std::out_of_range&) {
        throw UnresolvedReference("condition " + label);
    }
}

std::string generic_label(const SymSystem& S, int g) {
    return S.poset().label(S.poset().minimal_reps().at(g));
}

}  // namespace

struct Workbench::Impl {
    json doc;
    mutable std::map<std::string, std::shared_ptr<const Poset>> posets;
    mutable std::map<std::string, GroupPtr> groups;
    mutable std::map<std::string, SymSystem> systems;

    const json& block(const char* key) const {
        static const json empty = json::object();
        return doc.contains(key) ? doc.at(key) : empty;
    }

    std::shared_ptr<const Poset> poset(const std::string& id) const {
        auto it = posets.find(id);
        if (it != posets.end()) return it->second;
        const json& b = block("posets");
        std::shared_ptr<const Poset> out;
        if (!b.contains(id)) {
            if (id == "P3") out = std::make_shared<const Poset>(p3());
            else if (id == "seven") out = std::make_shared<const Poset>(seven());
            else if (id == "one") out = std::make_shared<const Poset>(one_point_poset());
            else throw UnresolvedReference("poset " + id);
        } else {
            const json& s = b.at(id);
            const std::string where = "poset " + id;
            if (s.contains("lottery")) {
                std::vector<Poset> parts;
                for (const auto& p : s.at("lottery")) parts.push_back(*poset(p.get<std::string>()));
                out = std::make_shared<const Poset>(lottery_sum(parts));
            } else {
                std::vector<std::string> labels = field(s, "labels", where).get<std::vector<std::string>>();
                auto index = [&](const std::string& l) {
                    auto f = std::find(labels.begin(), labels.end(), l);
                    if (f == labels.end()) throw UnresolvedReference("condition " + l + " in " + where);
                    return static_cast<int>(f - labels.begin());
                };
                std::vector<std::pair<int, int>> leq;
                if (s.contains("leq"))
                    for (const auto& e : s.at("leq")) leq.emplace_back(index(e.at(0)), index(e.at(1)));
                int top = index(str_field(s, "top", where));
                if (static_cast<int>(labels.size()) > default_guards().max_poset) throw GuardExceeded("poset size");
                out = std::make_shared<const Poset>(Poset(labels, leq, top));
            }
        }
        posets[id] = out;
        return out;
    }

    // automorphism id -> (poset id, permutation)
    Perm automorphism(const std::string& id, const std::string& poset_id) const {
        const json& b = block("automorphisms");
        if (!b.contains(id)) throw UnresolvedReference("automorphism " + id);
        const json& s = b.at(id);
        std::string pid = str_field(s, "poset", "automorphism " + id);
        if (pid != poset_id) throw DocumentError("automorphism " + id + " lives on poset " + pid);
        auto P = poset(pid);
        Perm pi = identity_perm(P->size());
        if (s.contains("map"))
            for (const auto& [from, to] : s.at("map").items()) pi[cond_of(*P, from)] = cond_of(*P, to.get<std::string>());
        if (!is_permutation(pi, P->size())) throw DocumentError("automorphism " + id + " is not a permutation");
        return pi;
    }

    std::pair<std::string, GroupPtr> group(const std::string& id) const {
        const json& b = block("groups");
        if (!b.contains(id)) throw UnresolvedReference("group " + id);
        const json& s = b.at(id);
        std::string pid = str_field(s, "poset", "group " + id);
        auto it = groups.find(id);
        if (it != groups.end()) return {pid, it->second};
        auto P = poset(pid);
        GroupPtr G;
        if (s.value("all", false)) {
            auto auts = poset_automorphisms(*P, static_cast<std::size_t>(default_guards().max_group) + 1);
            if (static_cast<int>(auts.size()) > default_guards().max_group) throw GuardExceeded("group order");
            G = std::make_shared<const Group>(Group::from_elements(P->size(), auts));
        } else {
            std::vector<Perm> gens;
            if (s.contains("generators"))
                for (const auto& a : s.at("generators")) gens.push_back(automorphism(a.get<std::string>(), pid));
            G = std::make_shared<const Group>(generate_group(*P, gens));
        }
        if (G->order() > default_guards().max_group) throw GuardExceeded("group order");
        groups[id] = G;
        return {pid, G};
    }

    std::vector<Bits> filter(const std::string& id, const std::string& group_id, const Group& G,
                             const std::string& pid) const {
        const json& b = block("filters");
        if (!b.contains(id)) throw UnresolvedReference("filter " + id);
        const json& s = b.at(id);
        if (str_field(s, "group", "filter " + id) != group_id)
            throw DocumentError("filter " + id + " belongs to another group");
        std::vector<Bits> gens;
        for (const auto& g : field(s, "generators", "filter " + id)) {
            if (g.is_string()) {
                std::string w = g.get<std::string>();
                if (w == "all") gens.push_back(G.all());
                else if (w == "trivial") gens.push_back(G.trivial());
                else throw DocumentError("filter " + id + ": unknown subgroup " + w);
                continue;
            }
            std::vector<int> elems;
            for (const auto& a : g) {
                int e = G.index_of(automorphism(a.get<std::string>(), pid));
                if (e < 0) throw DocumentError("filter " + id + ": element outside the group");
                elems.push_back(e);
            }
            gens.push_back(G.generated(elems));
        }
        return gens;
    }

    const SymSystem& system(const std::string& id) const {
        auto it = systems.find(id);
        if (it != systems.end()) return it->second;
        const json& b = block("systems");
        SymSystem out;
        if (!b.contains(id)) {
            auto ids = fixture_ids();
            if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw UnresolvedReference("system " + id);
            out = fixture(id);
        } else {
            const json& s = b.at(id);
            const std::string where = "system " + id;
            if (s.contains("fixture")) {
                try {
                    out = fixture(s.at("fixture").get<std::string>());
                } catch (const std::out_of_range&) {
                    throw UnresolvedReference("fixture " + s.at("fixture").get<std::string>());
                }
            } else if (s.contains("product")) {
                out = product(system(s.at("product").at(0)), system(s.at("product").at(1))).system;
            } else if (s.contains("two_step")) {
                const SymSystem& a = system(s.at("two_step").at(0));
                const SymSystem& c = system(s.at("two_step").at(1));
                out = two_step(a, check_stage(a, c)).system;
            } else {
                std::string pid = str_field(s, "poset", where);
                auto [gpid, G] = group(str_field(s, "group", where));
                if (gpid != pid) throw DocumentError(where + ": group and poset differ");
                auto gens = filter(str_field(s, "filter", where), s.at("group").get<std::string>(), *G, pid);
                out = SymSystem(poset(pid), G, gens);
            }
            out.set_name(id);
        }
        return systems.emplace(id, out).first->second;
    }

    NameId name(const std::string& ref, const Poset& P, int depth = 0) const {
        if (depth > 64) throw DocumentError("name definitions are cyclic");
        if (ref == "empty") return empty_name();
        if (ref.rfind("check:", 0) == 0) return check_name(P, hf_parse(ref.substr(6)));
        const json& b = block("names");
        if (!b.contains(ref)) throw UnresolvedReference("name " + ref);
        const json& s = b.at(ref);
        if (s.contains("check")) return check_name(P, hf_parse(s.at("check").get<std::string>()));
        if (s.contains("bullet")) {
            std::vector<NameId> xs;
            for (const auto& r : s.at("bullet")) xs.push_back(name(r.get<std::string>(), P, depth + 1));
            return bullet_name(P, xs);
        }
        if (s.contains("pair"))
            return bullet_pair(P, name(s.at("pair").at(0), P, depth + 1), name(s.at("pair").at(1), P, depth + 1));
        std::vector<NameEntry> e;
        for (const auto& en : field(s, "entries", "name " + ref))
            e.emplace_back(cond_of(P, en.at(0).get<std::string>()), name(en.at(1).get<std::string>(), P, depth + 1));
        return name_make(std::move(e));
    }

    FormulaPtr formula(const std::string& ref) const {
        const json& b = block("formulas");
        if (b.contains(ref)) return parse_formula(b.at(ref).get<std::string>());
        return parse_formula(ref);
    }
};

namespace {

struct TaskOutput {
    json result = json::object();
    std::vector<std::string> lines;
};

std::string names_text(const Poset& P, const std::vector<NameId>& xs, std::size_t limit) {
    std::string out;
    for (std::size_t i = 0; i < xs.size() && i < limit; ++i) out += (i ? ", " : "") + name_to_string(P, xs[i]);
    if (xs.size() > limit) out += ", ...";
    return out;
}

int task_rank(const json& t, const RunOptions& opt) { return t.value("rank", opt.rank); }

TaskOutput run_task(const Workbench::Impl& W, const json& t, const RunOptions& opt) {
    TaskOutput out;
    const std::string verb = t.value("verb", std::string());
    json& r = out.result;
    auto sys = [&](const char* key) -> const SymSystem& { return W.system(str_field(t, key, verb)); };
    if (verb == "validate") {
        const SymSystem& S = sys("system");
        Report rep = validate(S);
        r["valid"] = rep.ok;
        r["problems"] = rep.problems;
        out.lines.push_back(rep.ok ? "valid" : "invalid");
        for (const auto& p : rep.problems) out.lines.push_back("problem: " + p);
    } else if (verb == "force") {
        const SymSystem& S = sys("system");
        int p = cond_of(S.poset(), str_field(t, "cond", verb));
        FormulaPtr f = W.formula(str_field(t, "formula", verb));
        std::vector<NameId> args;
        if (t.contains("names"))
            for (const auto& n : t.at("names")) args.push_back(W.name(n.get<std::string>(), S.poset()));
        bool all_hs = std::all_of(args.begin(), args.end(), [&](NameId x) { return S.hs(x); });
        bool v = all_hs ? sym_forces(S, p, f, args) : S.forcer().forces_formula(p, f, args);
        r["forces"] = v;
        r["mode"] = all_hs ? "symmetric" : "poset";
        out.lines.push_back(std::string(v ? "true" : "false") + " (" + (all_hs ? "symmetric" : "poset, non-HS argument") + ")");
        if (!v) {
            int g = S.forcer().counter_generic(p, f, args);
            r["counter_generic"] = generic_label(S, g);
            out.lines.push_back("counter generic: cone above " + generic_label(S, g));
        }
    } else if (verb == "hs") {
        const SymSystem& S = sys("system");
        int k = task_rank(t, opt);
        const auto& V = S.hs_vectors(k);
        NameUniverse inv = hs_inventory(S, k);
        r["rank"] = k;
        r["value_vectors"] = V.vectors.size();
        r["inventory"] = inv.names.size();
        r["inventory_note"] = inv.note;
        json models = json::array();
        for (int g = 0; g < S.forcer().generic_count(); ++g) models.push_back(model_values(S, g, k).size());
        r["model_sizes"] = models;
        out.lines.push_back("rank " + std::to_string(k) + ": " + std::to_string(V.vectors.size()) +
                            " HS value vectors, " + std::to_string(inv.names.size()) + " HS names (" + inv.note + ")");
        out.lines.push_back("names: " + names_text(S.poset(), inv.names, 8));
        out.lines.push_back("model sizes: " + models.dump());
    } else if (verb == "tenacious") {
        const SymSystem& S = sys("system");
        bool ten = is_tenacious(S);
        CompletedSystem C = boolean_completion_system(S);
        TenaciousEquivalent TE = tenacious_equivalent(C);
        r["tenacious"] = ten;
        r["equivalent_conditions"] = TE.system.poset().size();
        r["equivalent_tenacious"] = is_tenacious(TE.system);
        std::vector<std::string> labels;
        for (int c = 0; c < TE.system.poset().size(); ++c) labels.push_back(TE.system.poset().label(c));
        r["equivalent_labels"] = labels;
        out.lines.push_back(ten ? "tenacious" : "not tenacious");
        out.lines.push_back("tenacious equivalent: " + std::to_string(TE.system.poset().size()) + " conditions, " +
                            (is_tenacious(TE.system) ? "tenacious" : "not tenacious"));
    } else if (verb == "complete") {
        const SymSystem& S = sys("system");
        int k = task_rank(t, opt);
        Completion C = completion(S, k);
        const SymSystem& H = C.orbit.system;
        r["rank"] = k;
        r["conditions"] = H.poset().size();
        r["group_order"] = H.group().order();
        r["core_order"] = H.filter().core().count();
        r["fragment"] = C.fragment_size;
        r["tenacious"] = is_tenacious(H);
        out.lines.push_back("rank " + std::to_string(k) + " approximation: " + std::to_string(H.poset().size()) +
                            " conditions, group " + std::to_string(H.group().order()) + ", core " +
                            std::to_string(H.filter().core().count()) + ", fragment " +
                            std::to_string(C.fragment_size));
        out.lines.push_back(is_tenacious(H) ? "tenacious" : "not tenacious");
    } else if (verb == "iterate") {
        const SymSystem& A = sys("base");
        const SymSystem& B = sys("stage");
        std::string wk = t.value("witness", std::string("full"));
        StageName stage = check_stage(A, B);
        TwoStep T = wk == "check" ? reduced_iteration(A, stage, check_witness(A, stage))
                  : wk == "full"  ? two_step(A, stage)
                                  : throw DocumentError("witness must be full or check");
        Report rep = validate(T.system);
        r["witness"] = wk;
        r["conditions"] = T.system.poset().size();
        r["pairs"] = T.pairs.size();
        r["group_order"] = T.system.group().order();
        r["generics"] = T.system.forcer().generic_count();
        r["valid"] = rep.ok;
        out.lines.push_back(wk + " witness: " + std::to_string(T.system.poset().size()) + " conditions, " +
                            std::to_string(T.pairs.size()) + " pairs, group " +
                            std::to_string(T.system.group().order()) + ", " +
                            std::to_string(T.system.forcer().generic_count()) + " generics, " +
                            (rep.ok ? "valid" : "invalid"));
    } else if (verb == "product") {
        ProductSystem Pr = product(sys("left"), sys("right"));
        Report rep = validate(Pr.system);
        r["conditions"] = Pr.system.poset().size();
        r["group_order"] = Pr.system.group().order();
        r["generics"] = Pr.system.forcer().generic_count();
        r["valid"] = rep.ok;
        out.lines.push_back(std::to_string(Pr.system.poset().size()) + " conditions, group " +
                            std::to_string(Pr.system.group().order()) + ", " +
                            std::to_string(Pr.system.forcer().generic_count()) + " generics, " +
                            (rep.ok ? "valid" : "invalid"));
    } else if (verb == "quotient") {
        const SymSystem& S0 = sys("system");
        const SymSystem& S1 = sys("super");
        const Poset& P = S0.poset();
        const Poset& Q = S1.poset();
        std::vector<int> e;
        if (t.contains("embed")) {
            for (const auto& l : t.at("embed")) e.push_back(cond_of(Q, l.get<std::string>()));
        } else {
            for (int p = 0; p < P.size(); ++p) e.push_back(cond_of(Q, P.label(p)));
        }
        if (static_cast<int>(e.size()) != P.size()) throw DocumentError("embedding must list every condition");
        int k = task_rank(t, opt);
        SubsystemReport sr = check_subsystem(S0, S1, e);
        r["complete_subsystem"] = sr.complete();
        if (!sr.complete()) {
            out.lines.push_back("not a complete subsystem");
            return out;
        }
        auto basis = default_respect_basis(S0, k);
        Quotient Qn = quotient_forcing_name(S0, S1.poset_ptr(), e, basis, t.value("max_fragment", 1));
        r["basis"] = [&] {
            json a = json::array();
            for (NameId x : basis) a.push_back(name_to_string(P, x));
            return a;
        }();
        json frags = json::array();
        for (const auto& fr : Qn.fragments) {
            json f = json::array();
            for (const auto& [x, y] : fr) f.push_back({name_to_string(P, x), name_to_string(P, y)});
            frags.push_back(f);
        }
        r["fragments"] = frags;
        json entries = json::array();
        for (const auto& en : Qn.entries) entries.push_back({P.label(en.p), Q.label(en.r), en.frag});
        r["psi_entries"] = entries;
        out.lines.push_back("complete subsystem; basis " + r["basis"].dump() + "; " +
                            std::to_string(Qn.entries.size()) + " psi entries");
        for (const auto& en : Qn.entries)
            out.lines.push_back("psi " + P.label(en.p) + " " + Q.label(en.r) + " fragment " + std::to_string(en.frag));
        json evals = json::array();
        for (int g0 = 0; g0 < S0.forcer().generic_count(); ++g0) {
            EvaluatedQuotient E = evaluate_quotient(Qn, g0);
            json conds = json::array();
            std::string line = "at " + generic_label(S0, g0) + ":";
            for (int c = 0; c < E.poset->size(); ++c) {
                conds.push_back({Q.label(E.r[c]), hf_to_string(E.frag[c])});
                line += " (" + Q.label(E.r[c]) + "," + hf_to_string(E.frag[c]) + ")";
            }
            evals.push_back({{"generic", generic_label(S0, g0)}, {"conditions", conds},
                             {"minimal", E.poset->minimal_reps().size()}});
            out.lines.push_back(line);
        }
        r["evaluated"] = evals;
    } else if (verb == "equiv") {
        const SymSystem& A = sys("left");
        const SymSystem& B = sys("right");
        std::string c = t.value("class", std::string("HS"));
        if (c != "HS" && c != "N") throw DocumentError("class must be HS or N");
        NameClass cls = c == "HS" ? NameClass::HS : NameClass::N;
        int k = task_rank(t, opt);
        r["class"] = c;
        r["rank"] = k;
        WeakEquivalence we = weakly_equivalent(A, B, k);
        r["weakly_equivalent"] = we.equivalent;
        auto W = find_equivalence(A, B, cls, k);
        r["found"] = W.has_value();
        out.lines.push_back(std::string("weakly equivalent at rank ") + std::to_string(k) + ": " +
                            (we.equivalent ? "yes" : "no"));
        if (!W) {
            out.lines.push_back("none at bounds (rank " + std::to_string(k) + ")");
            return out;
        }
        r["atom_map"] = W->atom_map;
        r["classes_left"] = W->class_s;
        r["classes_right"] = W->class_t;
        json table = json::array();
        const std::size_t limit = 12;
        for (std::size_t j = 0; j < W->inventory_s.size() && j < limit; ++j)
            table.push_back({name_to_string(A.poset(), W->inventory_s[j]),
                             name_to_string(B.poset(), W->i(W->inventory_s[j]))});
        r["i"] = table;
        json back = json::array();
        for (std::size_t j = 0; j < W->inventory_t.size() && j < limit; ++j)
            back.push_back({name_to_string(B.poset(), W->inventory_t[j]),
                            name_to_string(A.poset(), W->istar(W->inventory_t[j]))});
        r["istar"] = back;
        r["inventory"] = {W->inventory_s.size(), W->inventory_t.size()};
        out.lines.push_back(c + " witness over " + W->note + "; class map " + json(W->atom_map).dump());
        for (const auto& row : table) out.lines.push_back("i " + row[0].get<std::string>() + " -> " + row[1].get<std::string>());
        for (const auto& row : back) out.lines.push_back("i* " + row[0].get<std::string>() + " -> " + row[1].get<std::string>());
    } else if (verb == "suite") {
        SuiteOptions so;
        so.corpus_dir = opt.corpus_dir;
        so.rank = task_rank(t, opt);
        std::string id = str_field(t, "id", verb);
        auto ids = suite_ids();
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw UnresolvedReference("suite " + id);
        SuiteResult s = run_suite(id, so);
        r["suite"] = s.id;
        r["pass"] = s.pass;
        r["checks"] = s.checks;
        r["failures"] = s.failures;
        r["notes"] = s.notes;
        r["problems"] = s.problems;
        out.lines.push_back(std::string(s.pass ? "pass" : "FAIL") + " " + s.id + ": " + std::to_string(s.checks) +
                            " checks, " + std::to_string(s.failures) + " failures");
        for (const auto& n : s.notes) out.lines.push_back("note: " + n);
        for (const auto& p : s.problems) out.lines.push_back("problem: " + p);
    } else {
        throw UnknownVerb("unknown verb " + verb);
    }
    return out;
}

std::string task_heading(const json& t) {
    std::string h = t.value("verb", std::string("?"));
    for (const auto& [k, v] : t.items()) {
        if (k == "verb") continue;
        h += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    return h;
}

RunOutcome run_tasks(const Workbench::Impl* W, const std::vector<json>& tasks, const RunOptions& opt) {
    GuardScope scope;
    if (W && W->doc.contains("guards"))
        for (const auto& [k, v] : W->doc.at("guards").items()) apply_guard(k, v.get<long long>());
    for (const auto& [k, v] : opt.guards) {
        try {
            apply_guard(k, std::stoll(v));
        } catch (const std::invalid_argument&) {
            throw DocumentError("guard " + k + " needs an integer");
        }
    }
    RunOutcome out;
    json all = json::array();
    std::ostringstream text;
    static const Workbench::Impl empty_impl{};
    const Workbench::Impl& impl = W ? *W : empty_impl;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const json& t = tasks[i];
        json entry = {{"task", i + 1}, {"verb", t.value("verb", std::string())}};
        out.verbs.push_back(t.value("verb", std::string()));
        text << "task " << (i + 1) << ": " << task_heading(t) << "\n";
        int code = kExitOk;
        std::string error;
        try {
            TaskOutput o = run_task(impl, t, opt);
            entry["result"] = o.result;
            for (const auto& l : o.lines) text << "  " << l << "\n";
        } catch (const UnknownVerb& e) {
            code = kExitUnknownVerb;
            error = e.what();
        } catch (const UnresolvedReference& e) {
            code = kExitUnresolved;
            error = std::string("unresolved reference: ") + e.what();
        } catch (const GuardExceeded& e) {
            code = kExitGuard;
            error = e.what();
        } catch (const std::exception& e) {
            code = kExitFailure;
            error = e.what();
        }
        if (code != kExitOk) {
            entry["error"] = error;
            entry["exit_code"] = code;
            text << "  error: " << error << "\n";
            if (out.exit_code == kExitOk) out.exit_code = code;
        }
        all.push_back(entry);
    }
    json report = {{"tasks", all}, {"exit_code", out.exit_code}};
    if (opt.format == ReportFormat::Json) {
        out.report = report.dump(2) + "\n";
    } else {
        text << "machine: " << report.dump() << "\n";
        out.report = text.str();
    }
    return out;
}

}  // namespace

Workbench Workbench::parse(const std::string& text) {
    Workbench w;
    w.impl_ = std::make_shared<Impl>();
    try {
        w.impl_->doc = json::parse(strip_comments(text));
    } catch (const json::parse_error& e) {
        throw DocumentError(std::string("malformed document: ") + e.what());
    }
    if (!w.impl_->doc.is_object()) throw DocumentError("document must be an object");
    return w;
}

Workbench Workbench::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

const SymSystem& Workbench::system(const std::string& id) const { return impl_->system(id); }
NameId Workbench::name(const std::string& ref, const Poset& P) const { return impl_->name(ref, P); }
std::size_t Workbench::task_count() const {
    return impl_->doc.contains("tasks") ? impl_->doc.at("tasks").size() : 0;
}

RunOutcome Workbench::run(const RunOptions& opt) const {
    std::vector<json> tasks;
    if (impl_->doc.contains("tasks"))
        for (const auto& t : impl_->doc.at("tasks")) tasks.push_back(t);
    return run_tasks(impl_.get(), tasks, opt);
}

RunOutcome Workbench::run_verb(const std::string& verb, const std::vector<std::string>& args,
                               const RunOptions& opt) const {
    json t = {{"verb", verb}};
    auto need = [&](std::size_t n) {
        if (args.size() < n) throw DocumentError(verb + " needs " + std::to_string(n) + " arguments");
    };
    if (verb == "validate" || verb == "hs" || verb == "tenacious" || verb == "complete") {
        need(1);
        t["system"] = args[0];
    } else if (verb == "force") {
        need(3);
        t["system"] = args[0];
        t["cond"] = args[1];
        t["formula"] = args[2];
        t["names"] = std::vector<std::string>(args.begin() + 3, args.end());
    } else if (verb == "iterate") {
        need(2);
        t["base"] = args[0];
        t["stage"] = args[1];
        if (args.size() > 2) t["witness"] = args[2];
    } else if (verb == "product") {
        need(2);
        t["left"] = args[0];
        t["right"] = args[1];
    } else if (verb == "quotient") {
        need(2);
        t["system"] = args[0];
        t["super"] = args[1];
    } else if (verb == "equiv") {
        need(2);
        t["left"] = args[0];
        t["right"] = args[1];
        if (args.size() > 2) t["class"] = args[2];
    } else if (verb == "suite") {
        need(1);
        t["id"] = args[0];
    }
    return run_tasks(impl_.get(), {t}, opt);
}

RunOutcome run_file(const std::string& path, const RunOptions& opt) {
    try {
        return Workbench::load(path).run(opt);
    } catch (const std::exception& e) {
        RunOutcome out;
        out.exit_code = dynamic_cast<const GuardExceeded*>(&e) ? kExitGuard : kExitFailure;
        out.report = std::string("error: ") + e.what() + "\n";
        return out;
    }
}

RunOutcome run_suite_report(const std::string& id, const RunOptions& opt) {
    json t = {{"verb", "suite"}, {"id", id}};
    return run_tasks(nullptr, {t}, opt);
}

}  // namespace symext
