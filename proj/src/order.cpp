#include "symext/order.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "symext/guard.hpp"

namespace symext {

Guards& default_guards() {
    static Guards g;
    return g;
}

Poset::Poset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& leq, int top)
    : labels_(std::move(labels)), top_(top) {
    const int n = size();
    if (n == 0) throw std::invalid_argument("poset must be nonempty");
    if (top < 0 || top >= n) throw std::out_of_range("top is not a condition");
    below_.assign(n, Bits(n));
    for (int p = 0; p < n; ++p) below_[p].set(p);
    for (auto [p, q] : leq) {
        if (p < 0 || p >= n || q < 0 || q >= n) throw std::out_of_range("order pair names an unknown condition");
        below_[q].set(p);
    }
    for (int k = 0; k < n; ++k)
        for (int q = 0; q < n; ++q)
            if (below_[q].test(k)) below_[q] |= below_[k];
    finish();
}

Poset Poset::from_below(std::vector<std::string> labels, std::vector<Bits> below, int top) {
    Poset P;
    P.labels_ = std::move(labels);
    P.below_ = std::move(below);
    P.top_ = top;
    if (P.labels_.empty()) throw std::invalid_argument("poset must be nonempty");
    P.finish();
    return P;
}

void Poset::finish() {
    const int n = size();
    if (!below_[top_].all()) throw std::invalid_argument("top is not a maximum");
    above_.assign(n, Bits(n));
    for (int q = 0; q < n; ++q)
        for_each_bit(below_[q], [&](int p) { above_[p].set(q); });
    min_class_.assign(n, -1);
    for (int p = 0; p < n; ++p) {
        if (below_[p].is_subset_of(above_[p])) minimal_.push_back(p);
    }
    for (int m : minimal_) {
        if (min_class_[m] >= 0) continue;
        int c = static_cast<int>(reps_.size());
        reps_.push_back(m);
        for (int m2 : minimal_)
            if (equivalent(m, m2)) min_class_[m2] = c;
    }
}

Bits Poset::incompatible_with(int p) const {
    Bits out(labels_.size());
    for (int q = 0; q < size(); ++q)
        if (!compatible(p, q)) out.set(q);
    return out;
}

Bits Poset::up_closure(const Bits& s) const {
    Bits out(labels_.size());
    for_each_bit(s, [&](int p) { out |= above_[p]; });
    return out;
}

Bits Poset::down_closure(const Bits& s) const {
    Bits out(labels_.size());
    for_each_bit(s, [&](int p) { out |= below_[p]; });
    return out;
}

Bits Poset::dense_below(const Bits& D) const {
    Bits meets(labels_.size());
    for (int p = 0; p < size(); ++p)
        if (below_[p].intersects(D)) meets.set(p);
    Bits out(labels_.size());
    for (int p = 0; p < size(); ++p)
        if (below_[p].is_subset_of(meets)) out.set(p);
    return out;
}

bool Poset::is_dense(const Bits& D) const {
    for (int p = 0; p < size(); ++p)
        if (!below_[p].intersects(D)) return false;
    return true;
}

bool Poset::is_predense(const Bits& D) const {
    Bits reach = down_closure(D);
    for (int p = 0; p < size(); ++p)
        if (!below_[p].intersects(reach)) return false;
    return true;
}

int Poset::index(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::out_of_range("unknown condition '" + label + "'");
    return static_cast<int>(it - labels_.begin());
}

void Poset::check_condition(int p) const {
    if (p < 0 || p >= size()) throw std::out_of_range("unknown condition id " + std::to_string(p));
}

bool compatible(const Poset& P, int p, int q) {
    P.check_condition(p);
    P.check_condition(q);
    return P.compatible(p, q);
}

bool is_dense(const Poset& P, const Bits& D) {
    if (static_cast<int>(D.size()) != P.size()) throw std::invalid_argument("set is not over this poset");
    return P.is_dense(D);
}

bool is_predense(const Poset& P, const Bits& D) {
    if (static_cast<int>(D.size()) != P.size()) throw std::invalid_argument("set is not over this poset");
    return P.is_predense(D);
}

Bits regular_open_hull(const Poset& P, const Bits& U) {
    Bits cl = P.up_closure(U);
    Bits out(P.size());
    for (int p = 0; p < P.size(); ++p)
        if (P.down(p).is_subset_of(cl)) out.set(p);
    return out;
}

bool is_regular_open(const Poset& P, const Bits& U) {
    return P.down_closure(U) == U && regular_open_hull(P, U) == U;
}

namespace {

bool canonical_less(const Bits& a, const Bits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return members_of(a) < members_of(b);
}

Bits ro_complement(const Poset& P, const Bits& U) {
    Bits out(P.size());
    for (int p = 0; p < P.size(); ++p)
        if (!P.down(p).intersects(U)) out.set(p);
    return out;
}

}  // namespace

int BooleanAlgebra::index_of(const Bits& U) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), U, canonical_less);
    if (it == elements.end() || *it != U) return -1;
    return static_cast<int>(it - elements.begin());
}

std::vector<int> BooleanAlgebra::atoms() const {
    std::vector<int> out;
    for (int a = 0; a < size(); ++a) {
        if (a == zero) continue;
        bool atom = true;
        for (int b = 0; b < size() && atom; ++b)
            if (b != zero && b != a && leq(b, a)) atom = false;
        if (atom) out.push_back(a);
    }
    return out;
}

std::vector<int> BooleanAlgebra::nonzero_elements() const {
    std::vector<int> out;
    for (int a = 0; a < size(); ++a)
        if (a != zero) out.push_back(a);
    std::sort(out.begin(), out.end(), [&](int x, int y) {
        if (x == one) return y != one;
        if (y == one) return false;
        return x < y;
    });
    return out;
}

Poset BooleanAlgebra::nonzero_poset(const Poset& source) const {
    auto nz = nonzero_elements();
    const int n = static_cast<int>(nz.size());
    std::vector<std::string> labels;
    for (int a : nz) {
        if (a == one) {
            labels.push_back("1");
            continue;
        }
        std::string s = "{";
        bool first = true;
        for (int p : members_of(elements[a])) {
            if (!first) s += ",";
            s += source.label(p);
            first = false;
        }
        labels.push_back(s + "}");
    }
    std::vector<Bits> below(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq(nz[j], nz[i])) below[i].set(j);
    return Poset::from_below(std::move(labels), std::move(below), 0);
}

BooleanAlgebra boolean_completion(const Poset& P) {
    const Guards& g = default_guards();
    std::set<Bits, decltype(&canonical_less)> found(canonical_less);
    std::vector<Bits> work;
    auto add = [&](const Bits& U) {
        if (found.insert(U).second) {
            if (found.size() > g.max_names) throw GuardExceeded("Boolean completion size");
            work.push_back(U);
        }
    };
    add(P.empty_set());
    for (int p = 0; p < P.size(); ++p) add(regular_open_hull(P, P.down(p)));
    while (!work.empty()) {
        Bits U = work.back();
        work.pop_back();
        add(ro_complement(P, U));
        std::vector<Bits> snapshot(found.begin(), found.end());
        for (const Bits& V : snapshot) add(regular_open_hull(P, U | V));
    }
    BooleanAlgebra B;
    B.source_size = P.size();
    B.elements.assign(found.begin(), found.end());
    const int n = B.size();
    B.zero = B.index_of(P.empty_set());
    B.one = B.index_of(P.full_set());
    B.join.assign(n, std::vector<int>(n));
    B.meet.assign(n, std::vector<int>(n));
    B.complement.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        B.complement[a] = B.index_of(ro_complement(P, B.elements[a]));
        for (int b = 0; b < n; ++b) {
            B.join[a][b] = B.index_of(regular_open_hull(P, B.elements[a] | B.elements[b]));
            B.meet[a][b] = B.index_of(B.elements[a] & B.elements[b]);
        }
    }
    for (int p = 0; p < P.size(); ++p) B.embedding.push_back(B.index_of(regular_open_hull(P, P.down(p))));
    return B;
}

Poset lottery_sum(const std::vector<Poset>& parts) {
    if (parts.empty()) throw std::invalid_argument("lottery sum of an empty list");
    std::vector<std::string> labels{"1"};
    std::vector<std::pair<int, int>> leq;
    int offset = 1;
    for (std::size_t t = 0; t < parts.size(); ++t) {
        const Poset& Q = parts[t];
        for (int p = 0; p < Q.size(); ++p) {
            labels.push_back(std::to_string(t) + ":" + Q.label(p));
            leq.emplace_back(offset + p, 0);
            for (int q = 0; q < Q.size(); ++q)
                if (Q.leq(p, q)) leq.emplace_back(offset + p, offset + q);
        }
        offset += Q.size();
    }
    return Poset(std::move(labels), leq, 0);
}

int lottery_index(const std::vector<Poset>& parts, int tag, int p) {
    int offset = 1;
    for (int t = 0; t < tag; ++t) offset += parts.at(t).size();
    return offset + p;
}

Poset one_point_poset() { return Poset({"1"}, {}, 0); }

}  // namespace symext
