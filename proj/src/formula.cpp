#include "symext/formula.hpp"

#include <algorithm>
#include <cctype>

namespace symext {

FormulaPtr f_atom(Formula::Kind k, Term a, Term b) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->a = std::move(a);
    f->b = std::move(b);
    return f;
}

FormulaPtr f_not(FormulaPtr x) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Not;
    f->l = std::move(x);
    return f;
}

FormulaPtr f_bin(Formula::Kind k, FormulaPtr x, FormulaPtr y) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->l = std::move(x);
    f->r = std::move(y);
    return f;
}

FormulaPtr f_quant(Formula::Kind k, std::string var, Term bound, FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->var = std::move(var);
    f->bound = std::move(bound);
    f->l = std::move(body);
    return f;
}

namespace {

struct Token {
    enum Kind { Ident, Sym, End } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
            out.push_back({Token::Sym, "->", i});
            i += 2;
            continue;
        }
        if (c == '(' || c == ')' || c == '.' || c == '=') {
            out.push_back({Token::Sym, std::string(1, c), i});
            ++i;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

bool is_keyword(const std::string& w) {
    return w == "in" || w == "sub" || w == "not" || w == "and" || w == "or" || w == "forall" || w == "exists";
}

struct Parser {
    std::vector<Token> toks;
    std::size_t k = 0;

    const Token& peek() const { return toks[k]; }
    bool at(const std::string& t) const { return toks[k].kind != Token::End && toks[k].text == t; }
    void expect(const std::string& t) {
        if (!at(t)) throw ParseError("expected '" + t + "'", peek().pos);
        ++k;
    }

    Term term() {
        const Token& t = peek();
        if (t.kind != Token::Ident || is_keyword(t.text)) throw ParseError("expected a term", t.pos);
        ++k;
        if (t.text[0] == 'x') {
            std::string d = t.text.substr(1);
            if (d.empty() || !std::all_of(d.begin(), d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw ParseError("slot must be 'x' followed by digits", t.pos);
            return Term::make_slot(std::stoi(d));
        }
        if (t.text[0] == 'v') return Term::make_var(t.text.substr(1));
        throw ParseError("term must start with 'x' or 'v'", t.pos);
    }

    FormulaPtr formula() {
        FormulaPtr l = disj();
        if (at("->")) {
            ++k;
            return f_bin(Formula::Imp, l, formula());
        }
        return l;
    }
    FormulaPtr disj() {
        FormulaPtr l = conj();
        while (at("or")) {
            ++k;
            l = f_bin(Formula::Or, l, conj());
        }
        return l;
    }
    FormulaPtr conj() {
        FormulaPtr l = unary();
        while (at("and")) {
            ++k;
            l = f_bin(Formula::And, l, unary());
        }
        return l;
    }
    FormulaPtr unary() {
        if (at("not")) {
            ++k;
            return f_not(unary());
        }
        if (at("forall") || at("exists")) {
            auto kind = at("forall") ? Formula::Forall : Formula::Exists;
            ++k;
            Term v = term();
            if (v.kind != Term::Var) throw ParseError("quantified variable must start with 'v'", toks[k - 1].pos);
            expect("in");
            Term b = term();
            expect(".");
            return f_quant(kind, v.var, b, formula());
        }
        if (at("(")) {
            ++k;
            FormulaPtr f = formula();
            expect(")");
            return f;
        }
        Term a = term();
        Formula::Kind kind;
        if (at("in")) kind = Formula::In;
        else if (at("=")) kind = Formula::Eq;
        else if (at("sub")) kind = Formula::Sub;
        else throw ParseError("expected 'in', '=' or 'sub'", peek().pos);
        ++k;
        return f_atom(kind, a, term());
    }
};

int level(const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Imp: return 1;
        case Formula::Or: return 2;
        case Formula::And: return 3;
        case Formula::Not: return 4;
        case Formula::Forall:
        case Formula::Exists: return 0;
        default: return 5;
    }
}

struct Printed {
    std::string text;
    bool open;  // ends with an unparenthesized quantifier
};

Printed print(const FormulaPtr& f);

std::string wrap(const Printed& p) { return "(" + p.text + ")"; }

// Operand that is followed by more text: must not be open and must bind at least as tight as min.
std::string left_operand(const FormulaPtr& f, int min) {
    Printed p = print(f);
    if (p.open || level(f) < min) return wrap(p);
    return p.text;
}

// Last operand: quantifiers may stay bare.
Printed right_operand(const FormulaPtr& f, int min) {
    Printed p = print(f);
    if (level(f) == 0) return p;
    if (level(f) < min) return {wrap(p), false};
    return p;
}

Printed print(const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::In: return {f->a.text() + " in " + f->b.text(), false};
        case Formula::Eq: return {f->a.text() + " = " + f->b.text(), false};
        case Formula::Sub: return {f->a.text() + " sub " + f->b.text(), false};
        case Formula::Not: {
            Printed c = right_operand(f->l, 4);
            return {"not " + c.text, c.open};
        }
        case Formula::And:
        case Formula::Or:
        case Formula::Imp: {
            int me = level(f);
            const char* op = f->kind == Formula::And ? " and " : f->kind == Formula::Or ? " or " : " -> ";
            int lmin = f->kind == Formula::Imp ? me + 1 : me;
            int rmin = f->kind == Formula::Imp ? me : me + 1;
            std::string l = left_operand(f->l, lmin);
            Printed r = right_operand(f->r, rmin);
            return {l + op + r.text, r.open};
        }
        case Formula::Forall:
        case Formula::Exists: {
            Printed body = print(f->l);
            return {std::string(f->kind == Formula::Forall ? "forall" : "exists") + " v" + f->var + " in " +
                        f->bound.text() + " . " + body.text,
                    true};
        }
    }
    return {"", false};
}

void collect_free(const FormulaPtr& f, std::set<std::string>& bound, std::set<std::string>& out) {
    auto term = [&](const Term& t) {
        if (t.kind == Term::Var && !bound.count(t.var)) out.insert(t.var);
    };
    switch (f->kind) {
        case Formula::In:
        case Formula::Eq:
        case Formula::Sub:
            term(f->a);
            term(f->b);
            break;
        case Formula::Not: collect_free(f->l, bound, out); break;
        case Formula::And:
        case Formula::Or:
        case Formula::Imp:
            collect_free(f->l, bound, out);
            collect_free(f->r, bound, out);
            break;
        case Formula::Forall:
        case Formula::Exists: {
            term(f->bound);
            bool had = bound.count(f->var);
            bound.insert(f->var);
            collect_free(f->l, bound, out);
            if (!had) bound.erase(f->var);
            break;
        }
    }
}

Hf term_value(const Term& t, const std::vector<Hf>& slots, const std::map<std::string, Hf>& env) {
    if (t.kind == Term::Slot) {
        if (t.slot < 0 || t.slot >= static_cast<int>(slots.size()))
            throw std::invalid_argument("unassigned slot x" + std::to_string(t.slot));
        return slots[t.slot];
    }
    auto it = env.find(t.var);
    if (it == env.end()) throw std::invalid_argument("unbound variable v" + t.var);
    return it->second;
}

bool eval_in(const FormulaPtr& f, const std::vector<Hf>& slots, std::map<std::string, Hf>& env) {
    switch (f->kind) {
        case Formula::In: return hf_contains(term_value(f->b, slots, env), term_value(f->a, slots, env));
        case Formula::Eq: return term_value(f->a, slots, env) == term_value(f->b, slots, env);
        case Formula::Sub: return hf_subset(term_value(f->a, slots, env), term_value(f->b, slots, env));
        case Formula::Not: return !eval_in(f->l, slots, env);
        case Formula::And: return eval_in(f->l, slots, env) && eval_in(f->r, slots, env);
        case Formula::Or: return eval_in(f->l, slots, env) || eval_in(f->r, slots, env);
        case Formula::Imp: return !eval_in(f->l, slots, env) || eval_in(f->r, slots, env);
        case Formula::Forall:
        case Formula::Exists: {
            Hf bound = term_value(f->bound, slots, env);
            auto saved = env.find(f->var) == env.end() ? std::optional<Hf>{} : std::optional<Hf>{env[f->var]};
            bool want = f->kind == Formula::Exists;
            bool result = !want;
            for (Hf y : hf_members(bound)) {
                env[f->var] = y;
                if (eval_in(f->l, slots, env) == want) {
                    result = want;
                    break;
                }
            }
            if (saved) env[f->var] = *saved;
            else env.erase(f->var);
            return result;
        }
    }
    return false;
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
    Parser p{tokenize(text)};
    FormulaPtr f = p.formula();
    if (p.peek().kind != Token::End) throw ParseError("unexpected '" + p.peek().text + "'", p.peek().pos);
    return f;
}

std::string to_string(const FormulaPtr& f) { return print(f).text; }

bool same_formula(const FormulaPtr& a, const FormulaPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Formula::In:
        case Formula::Eq:
        case Formula::Sub: return a->a == b->a && a->b == b->b;
        case Formula::Not: return same_formula(a->l, b->l);
        case Formula::And:
        case Formula::Or:
        case Formula::Imp: return same_formula(a->l, b->l) && same_formula(a->r, b->r);
        case Formula::Forall:
        case Formula::Exists: return a->var == b->var && a->bound == b->bound && same_formula(a->l, b->l);
    }
    return false;
}

std::set<std::string> free_vars(const FormulaPtr& f) {
    std::set<std::string> bound, out;
    collect_free(f, bound, out);
    return out;
}

int max_slot(const FormulaPtr& f) {
    auto t = [](const Term& x) { return x.kind == Term::Slot ? x.slot : -1; };
    switch (f->kind) {
        case Formula::In:
        case Formula::Eq:
        case Formula::Sub: return std::max(t(f->a), t(f->b));
        case Formula::Not: return max_slot(f->l);
        case Formula::And:
        case Formula::Or:
        case Formula::Imp: return std::max(max_slot(f->l), max_slot(f->r));
        case Formula::Forall:
        case Formula::Exists: return std::max(t(f->bound), max_slot(f->l));
    }
    return -1;
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const Term& t) {
    auto sub = [&](const Term& x) { return x.kind == Term::Var && x.var == var ? t : x; };
    switch (f->kind) {
        case Formula::In:
        case Formula::Eq:
        case Formula::Sub: return f_atom(f->kind, sub(f->a), sub(f->b));
        case Formula::Not: return f_not(substitute(f->l, var, t));
        case Formula::And:
        case Formula::Or:
        case Formula::Imp: return f_bin(f->kind, substitute(f->l, var, t), substitute(f->r, var, t));
        case Formula::Forall:
        case Formula::Exists: {
            if (f->var == var) return f_quant(f->kind, f->var, sub(f->bound), f->l);
            if (t.kind == Term::Var && t.var == f->var && free_vars(f->l).count(var))
                throw std::invalid_argument("substitution would capture v" + t.var);
            return f_quant(f->kind, f->var, sub(f->bound), substitute(f->l, var, t));
        }
    }
    return f;
}

FormulaPtr shift_slots(const FormulaPtr& f, int offset) {
    auto sh = [&](const Term& x) { return x.kind == Term::Slot ? Term::make_slot(x.slot + offset) : x; };
    switch (f->kind) {
        case Formula::In:
        case Formula::Eq:
        case Formula::Sub: return f_atom(f->kind, sh(f->a), sh(f->b));
        case Formula::Not: return f_not(shift_slots(f->l, offset));
        case Formula::And:
        case Formula::Or:
        case Formula::Imp: return f_bin(f->kind, shift_slots(f->l, offset), shift_slots(f->r, offset));
        case Formula::Forall:
        case Formula::Exists: return f_quant(f->kind, f->var, sh(f->bound), shift_slots(f->l, offset));
    }
    return f;
}

bool eval(const FormulaPtr& f, const std::vector<Hf>& slots, const std::map<std::string, Hf>& env) {
    std::map<std::string, Hf> e = env;
    return eval_in(f, slots, e);
}

}  // namespace symext
