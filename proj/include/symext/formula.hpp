#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "symext/hf.hpp"

namespace symext {

struct Term {
    enum Kind { Slot, Var } kind = Slot;
    int slot = 0;
    std::string var;  // without the leading 'v'

    static Term make_slot(int i) { return Term{Slot, i, {}}; }
    static Term make_var(std::string name) { return Term{Var, 0, std::move(name)}; }
    bool operator==(const Term& o) const { return kind == o.kind && slot == o.slot && var == o.var; }
    std::string text() const { return kind == Slot ? "x" + std::to_string(slot) : "v" + var; }
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum Kind { In, Eq, Sub, Not, And, Or, Imp, Forall, Exists } kind = In;
    Term a, b;         // atoms
    std::string var;   // quantifiers: bound variable (without 'v')
    Term bound;        // quantifiers: the bounding term
    FormulaPtr l, r;   // Not and quantifiers use l
};

class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument("syntax error at position " + std::to_string(pos) + ": " + what), position(pos) {}
    std::size_t position;
};

FormulaPtr parse_formula(const std::string& text);
std::string to_string(const FormulaPtr& f);
bool same_formula(const FormulaPtr& a, const FormulaPtr& b);

FormulaPtr f_atom(Formula::Kind k, Term a, Term b);
FormulaPtr f_not(FormulaPtr x);
FormulaPtr f_bin(Formula::Kind k, FormulaPtr x, FormulaPtr y);
FormulaPtr f_quant(Formula::Kind k, std::string var, Term bound, FormulaPtr body);

std::set<std::string> free_vars(const FormulaPtr& f);
int max_slot(const FormulaPtr& f);
// Replace free occurrences of variable var by t.
FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const Term& t);
// Shift every slot index by offset.
FormulaPtr shift_slots(const FormulaPtr& f, int offset);

// Truth in the hereditarily finite sets. Throws on unassigned slots or unbound variables.
bool eval(const FormulaPtr& f, const std::vector<Hf>& slots, const std::map<std::string, Hf>& env = {});

}  // namespace symext
