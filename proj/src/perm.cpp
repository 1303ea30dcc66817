#include "symext/perm.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "symext/guard.hpp"

namespace symext {

Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}

Perm inverse(const Perm& a) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
    return c;
}

bool is_permutation(const Perm& a, int n) {
    if (static_cast<int>(a.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int x : a) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

bool is_automorphism(const Poset& P, const Perm& a) {
    if (!is_permutation(a, P.size())) return false;
    if (a[P.top()] != P.top()) return false;
    for (int p = 0; p < P.size(); ++p)
        for (int q = 0; q < P.size(); ++q)
            if (P.leq(p, q) != P.leq(a[p], a[q])) return false;
    return true;
}

Perm swap_perm(int n, int i, int j) {
    Perm p = identity_perm(n);
    std::swap(p[i], p[j]);
    return p;
}

Group Group::closure(int degree, const std::vector<Perm>& gens) {
    const Guards& g = default_guards();
    std::set<Perm> found{identity_perm(degree)};
    std::deque<Perm> work{identity_perm(degree)};
    for (const Perm& x : gens)
        if (!is_permutation(x, degree)) throw std::invalid_argument("generator is not a permutation of the right degree");
    while (!work.empty()) {
        Perm x = work.front();
        work.pop_front();
        for (const Perm& s : gens) {
            Perm y = compose(s, x);
            if (found.insert(y).second) {
                if (static_cast<int>(found.size()) > g.max_group) throw GuardExceeded("group order");
                work.push_back(std::move(y));
            }
        }
    }
    return from_elements(degree, std::vector<Perm>(found.begin(), found.end()), gens);
}

Group Group::from_elements(int degree, std::vector<Perm> elems, std::vector<Perm> gens) {
    Group G;
    G.degree_ = degree;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    G.elems_ = std::move(elems);
    G.gens_ = std::move(gens);
    G.build();
    return G;
}

void Group::build() {
    const int n = order();
    if (n == 0 || elems_[0] != identity_perm(degree_)) throw std::invalid_argument("group must contain the identity");
    for (int i = 0; i < n; ++i) index_[elems_[i]] = i;
    table_.assign(static_cast<std::size_t>(n) * n, 0);
    inv_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int k = index_of(compose(elems_[i], elems_[j]));
            if (k < 0) throw std::invalid_argument("element set is not closed under composition");
            table_[static_cast<std::size_t>(i) * n + j] = k;
            if (k == 0) inv_[i] = j;
        }
    }
    subs_ = std::make_shared<SubgroupCache>();
}

int Group::index_of(const Perm& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

Bits Group::generated(const std::vector<int>& gens) const {
    Bits H = trivial();
    std::vector<int> work{0};
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (int s : gens) {
            int y = mul(s, x);
            if (!H.test(y)) {
                H.set(y);
                work.push_back(y);
            }
        }
    }
    return H;
}

bool Group::is_subgroup(const Bits& H) const {
    if (static_cast<int>(H.size()) != order() || !H.test(0)) return false;
    auto m = members_of(H);
    for (int a : m) {
        if (!H.test(inv_[a])) return false;
        for (int b : m)
            if (!H.test(mul(a, b))) return false;
    }
    return true;
}

Bits Group::conjugate(int pi, const Bits& H) const {
    Bits out(H.size());
    for_each_bit(H, [&](int h) { out.set(conj(pi, h)); });
    return out;
}

const std::vector<Bits>& Group::subgroups() const {
    std::call_once(subs_->once, [&] {
        const Guards& g = default_guards();
        std::vector<Bits> cyclic;
        for (int x = 0; x < order(); ++x) cyclic.push_back(generated({x}));
        std::set<Bits> found{trivial()};
        std::vector<Bits> work{trivial()};
        while (!work.empty()) {
            Bits H = work.back();
            work.pop_back();
            for (int x = 0; x < order(); ++x) {
                if (H.test(x)) continue;
                auto gens = members_of(H);
                gens.push_back(x);
                Bits J = generated(gens);
                if (found.insert(J).second) {
                    if (found.size() > g.max_names) throw GuardExceeded("subgroup lattice");
                    work.push_back(J);
                }
            }
        }
        std::vector<Bits> out(found.begin(), found.end());
        std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) {
            if (a.count() != b.count()) return a.count() < b.count();
            return members_of(a) < members_of(b);
        });
        subs_->subs = std::move(out);
    });
    return subs_->subs;
}

Group generate_group(const Poset& P, const std::vector<Perm>& gens) {
    for (const Perm& g : gens)
        if (!is_automorphism(P, g)) throw std::invalid_argument("generator is not an automorphism of the poset");
    return Group::closure(P.size(), gens);
}

Bits conjugate(const Group& G, int pi, const Bits& H) { return G.conjugate(pi, H); }

NormalFilter::NormalFilter(GroupPtr G, std::vector<Bits> gens) : G_(std::move(G)), gens_(std::move(gens)) {
    for (const Bits& H : gens_)
        if (!G_->is_subgroup(H)) throw std::invalid_argument("filter generator is not a subgroup of the ambient group");
    Bits plain = G_->all();
    for (const Bits& H : gens_) plain &= H;
    core_ = plain;
    for (int pi = 0; pi < G_->order(); ++pi) {
        Bits c = G_->conjugate(pi, plain);
        if (!plain.is_subset_of(c)) normal_ = false;
        core_ &= c;
    }
}

bool NormalFilter::contains(const Bits& H) const {
    if (!G_->is_subgroup(H)) throw std::invalid_argument("not a subgroup of the ambient group");
    return core_.is_subset_of(H);
}

bool filter_contains(const NormalFilter& F, const Bits& H) { return F.contains(H); }

bool is_normal_filter(const NormalFilter& F) { return F.generators_normal(); }

namespace {

struct IsoSearch {
    const Poset& P;
    const Poset& Q;
    std::size_t limit;
    std::vector<int> order, img;
    std::vector<char> used;
    std::vector<Perm> out;

    bool fits(int p, int q) const {
        if (P.down(p).count() != Q.down(q).count() || P.up(p).count() != Q.up(q).count()) return false;
        for (int k = 0; k < static_cast<int>(order.size()); ++k) {
            int p2 = order[k];
            if (img[p2] < 0) continue;
            if (P.leq(p, p2) != Q.leq(q, img[p2]) || P.leq(p2, p) != Q.leq(img[p2], q)) return false;
        }
        return true;
    }

    void run(std::size_t k) {
        if (out.size() >= limit) return;
        if (k == order.size()) {
            out.push_back(img);
            return;
        }
        int p = order[k];
        for (int q = 0; q < Q.size(); ++q) {
            if (used[q] || !fits(p, q)) continue;
            img[p] = q;
            used[q] = 1;
            run(k + 1);
            used[q] = 0;
            img[p] = -1;
        }
    }
};

}  // namespace

std::vector<Perm> poset_isomorphisms(const Poset& P, const Poset& Q, std::size_t limit) {
    if (P.size() != Q.size()) return {};
    IsoSearch s{P, Q, limit, {}, std::vector<int>(P.size(), -1), std::vector<char>(Q.size(), 0), {}};
    s.order.push_back(P.top());
    for (int p = 0; p < P.size(); ++p)
        if (p != P.top()) s.order.push_back(p);
    if (!s.fits(P.top(), Q.top())) return {};
    s.img[P.top()] = Q.top();
    s.used[Q.top()] = 1;
    s.run(1);
    std::sort(s.out.begin(), s.out.end());
    return s.out;
}

std::vector<Perm> poset_automorphisms(const Poset& P, std::size_t limit) { return poset_isomorphisms(P, P, limit); }

std::string perm_to_string(const Poset& P, const Perm& a) {
    std::string s = "{";
    bool first = true;
    for (int p = 0; p < P.size(); ++p) {
        if (a[p] == p) continue;
        if (!first) s += ", ";
        s += P.label(p) + "->" + P.label(a[p]);
        first = false;
    }
    return s + "}";
}

}  // namespace symext
