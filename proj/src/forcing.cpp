#include "symext/forcing.hpp"

#include <stdexcept>

#include "symext/guard.hpp"

namespace symext {

std::vector<GenericFilter> enumerate_generics(const Poset& P) {
    std::vector<GenericFilter> out;
    for (int m : P.minimal_reps()) out.push_back({P.up(m), m, false});
    return out;
}

Hf interpret(NameId x, const Bits& G) {
    std::vector<Hf> m;
    for (auto [p, y] : name_entries(x))
        if (p < static_cast<int>(G.size()) && G.test(p)) m.push_back(interpret(y, G));
    return hf_make(std::move(m));
}

const char* rel_text(Rel r) {
    switch (r) {
        case Rel::In: return "in";
        case Rel::Eq: return "=";
        case Rel::Sub: return "sub";
    }
    return "?";
}

Forcer::Forcer(std::shared_ptr<const Poset> P) : P_(std::move(P)) {
    gens_ = enumerate_generics(*P_);
    through_.assign(P_->size(), {});
    for (int g = 0; g < generic_count(); ++g)
        for_each_bit(gens_[g].conds, [&](int p) { through_[p].push_back(g); });
    if (P_->size() <= 64) {
        down_.assign(P_->size(), 0);
        for (int p = 0; p < P_->size(); ++p)
            for_each_bit(P_->down(p), [&](int q) { down_[p] |= std::uint64_t{1} << q; });
    }
    value_memo_.resize(gens_.size());
}

Hf Forcer::value(NameId x, int g) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = value_memo_[g].find(x);
        if (it != value_memo_[g].end()) return it->second;
    }
    std::vector<Hf> m;
    const Bits& G = gens_[g].conds;
    for (auto [p, y] : name_entries(x)) {
        if (p >= P_->size()) throw std::out_of_range("name uses a condition outside the poset");
        if (G.test(p)) m.push_back(value(y, g));
    }
    Hf v = hf_make(std::move(m));
    std::lock_guard<std::mutex> lock(mu_);
    value_memo_[g].emplace(x, v);
    return v;
}

std::vector<Hf> Forcer::values(NameId x) {
    std::vector<Hf> out;
    for (int g = 0; g < generic_count(); ++g) out.push_back(value(x, g));
    return out;
}

std::uint64_t Forcer::dense_below(std::uint64_t D) const {
    const int n = P_->size();
    std::uint64_t meets = 0;
    for (int p = 0; p < n; ++p)
        if (down_[p] & D) meets |= std::uint64_t{1} << p;
    std::uint64_t out = 0;
    for (int p = 0; p < n; ++p)
        if ((down_[p] & ~meets) == 0) out |= std::uint64_t{1} << p;
    return out;
}

std::uint64_t Forcer::sub_mask(NameId x, NameId y) {
    std::uint64_t key = (static_cast<std::uint64_t>(x) << 32) | static_cast<std::uint32_t>(y);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = sub_memo_.find(key);
        if (it != sub_memo_.end()) return it->second;
    }
    const int n = P_->size();
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t out = all;
    for (auto [r, tau] : name_entries(x)) {
        std::uint64_t D = 0;
        for (int q = 0; q < n; ++q)
            if ((down_[q] & down_[r]) == 0) D |= std::uint64_t{1} << q;
        for (auto [r2, sigma] : name_entries(y)) D |= down_[r2] & eq_mask(tau, sigma);
        out &= dense_below(D);
        if (!out) break;
    }
    std::lock_guard<std::mutex> lock(mu_);
    sub_memo_.emplace(key, out);
    return out;
}

std::uint64_t Forcer::eq_mask(NameId x, NameId y) {
    return sub_mask(x, y) & sub_mask(y, x);
}

std::uint64_t Forcer::in_mask(NameId x, NameId y) {
    std::uint64_t key = (static_cast<std::uint64_t>(x) << 32) | static_cast<std::uint32_t>(y);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = in_memo_.find(key);
        if (it != in_memo_.end()) return it->second;
    }
    std::uint64_t E = 0;
    for (auto [r, sigma] : name_entries(y)) E |= down_[r] & eq_mask(x, sigma);
    std::uint64_t out = dense_below(E);
    std::lock_guard<std::mutex> lock(mu_);
    in_memo_.emplace(key, out);
    return out;
}

std::uint64_t Forcer::forcing_mask(Rel r, NameId x, NameId y) {
    if (P_->size() > 64) throw GuardExceeded("syntactic forcing needs at most 64 conditions");
    if (name_max_condition(x) >= P_->size() || name_max_condition(y) >= P_->size())
        throw std::out_of_range("name uses a condition outside the poset");
    switch (r) {
        case Rel::In: return in_mask(x, y);
        case Rel::Eq: return eq_mask(x, y);
        case Rel::Sub: return sub_mask(x, y);
    }
    return 0;
}

bool Forcer::forces(int p, Rel r, NameId x, NameId y) {
    P_->check_condition(p);
    return forcing_mask(r, x, y) >> p & 1;
}

bool Forcer::holds(Rel r, Hf a, Hf b) const {
    switch (r) {
        case Rel::In: return hf_contains(b, a);
        case Rel::Eq: return a == b;
        case Rel::Sub: return hf_subset(a, b);
    }
    return false;
}

bool Forcer::semantic_forces(int p, Rel r, NameId x, NameId y) {
    P_->check_condition(p);
    for (int g : through_[p])
        if (!holds(r, value(x, g), value(y, g))) return false;
    return true;
}

Bits Forcer::semantic_set(Rel r, NameId x, NameId y) {
    std::vector<char> ok(gens_.size());
    for (int g = 0; g < generic_count(); ++g) ok[g] = holds(r, value(x, g), value(y, g));
    Bits out(P_->size());
    for (int p = 0; p < P_->size(); ++p) {
        bool all = true;
        for (int g : through_[p]) all = all && ok[g];
        if (all) out.set(p);
    }
    return out;
}

int Forcer::counter_generic(int p, const FormulaPtr& f, const std::vector<NameId>& args) {
    P_->check_condition(p);
    if (!free_vars(f).empty()) throw std::invalid_argument("formula has free variables");
    for (int g : through_[p]) {
        std::vector<Hf> vals;
        for (NameId a : args) vals.push_back(value(a, g));
        if (!eval(f, vals)) return g;
    }
    return -1;
}

bool Forcer::forces_formula(int p, const FormulaPtr& f, const std::vector<NameId>& args) {
    return counter_generic(p, f, args) < 0;
}

void Forcer::clear_memo() {
    std::lock_guard<std::mutex> lock(mu_);
    sub_memo_.clear();
    in_memo_.clear();
}

bool forces_atomic(const Poset& P, int p, Rel r, NameId x, NameId y) {
    Forcer f(std::make_shared<const Poset>(P));
    return f.forces(p, r, x, y);
}

}  // namespace symext
